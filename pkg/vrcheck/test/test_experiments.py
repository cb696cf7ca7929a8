# Licensed with the 3-clause BSD license.  See LICENSE for details.
import logging
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from astropy.table import Table

from ..core import parse_profile
from ..experiments import (ExperimentConfig, ExperimentSummary,
                           count_weak_orders, enumerate_weak_orders,
                           enumerate_linear_orders, trial_rng,
                           generate_profile, iter_profiles, run_validation,
                           validate_sen_theorem, validate_pattanaik_theorems)
from ..exceptions import ExperimentConfigError, CapExceededError, InputError
from .profiles import CONDORCET, TIED_CYCLE


class TestEnumeration:
    def test_count_weak_orders(self):
        assert [count_weak_orders(m) for m in range(6)] == [
            1, 1, 3, 13, 75, 541]

    @pytest.mark.parametrize('m', [1, 2, 3, 4, 5])
    def test_enumerate_weak_orders(self, m):
        orders = enumerate_weak_orders(m)
        assert len(orders) == count_weak_orders(m)
        assert len(set(orders)) == len(orders)
        assert all(o.members == tuple(range(m)) for o in orders)

    def test_enumeration_order(self):
        orders = enumerate_weak_orders(3)
        # best class size 1 first, the all-indifferent order last
        assert orders[0].classes[0] == frozenset((0,))
        assert orders[-1].classes == (frozenset((0, 1, 2)),)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            enumerate_weak_orders(4, cap=74)

    def test_enumerate_linear_orders(self):
        orders = enumerate_linear_orders(3)
        assert len(orders) == 6
        assert all(o.is_linear for o in orders)


class TestExperimentConfig:
    @pytest.mark.parametrize('kwargs', [
        dict(mode='random'), dict(culture='impartial-anonymous'), dict(m=2),
        dict(n=0), dict(trials=0), dict(seed=-1), dict(seed=2**64)
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ExperimentConfigError):
            ExperimentConfig(**kwargs)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            ExperimentConfig(mode='exhaustive', m=4, n=5)
        # a configuration error is an input error
        with pytest.raises(InputError):
            ExperimentConfig(mode='exhaustive', m=3, n=3, cap=100)

    def test_universe_cap(self):
        # 102247563 weak orders on 10 alternatives
        with pytest.raises(CapExceededError):
            ExperimentConfig(m=10)
        with pytest.raises(CapExceededError):
            ExperimentConfig(m=4, culture='impartial-linear', cap=23)
        assert ExperimentConfig(m=10, culture='impartial-linear').m == 10
        assert ExperimentConfig(m=4, cap=75).profile_count == 1000

    def test_profile_count(self):
        assert ExperimentConfig(mode='exhaustive', m=3,
                                n=3).profile_count == 2197
        assert ExperimentConfig(mode='exhaustive', m=3, n=3,
                                culture='impartial-linear'
                                ).profile_count == 216
        assert ExperimentConfig(trials=17).profile_count == 17

    def test_alternatives(self):
        assert ExperimentConfig(m=4).alternatives.names == ('a', 'b', 'c',
                                                            'd')


class TestGeneration:
    def test_linear(self):
        config = ExperimentConfig(m=3, n=20, culture='impartial-linear')
        profile = generate_profile(config, trial_rng(1, 0))
        assert profile.n == 20
        assert all(len(o.classes) == 3 for o in profile)

    def test_deterministic(self):
        config = ExperimentConfig(m=4, n=5)
        a = generate_profile(config, trial_rng(99, 12))
        b = generate_profile(config, trial_rng(99, 12))
        assert a == b

    def test_weak_frequencies(self):
        n = 13000
        config = ExperimentConfig(m=3, n=n, trials=1)
        profile = generate_profile(config, trial_rng(5, 0))
        counts = Counter(profile.orderings)
        assert len(counts) == 13
        p = 1 / 13
        sigma = np.sqrt(p * (1 - p) / n)
        for count in counts.values():
            assert abs(count / n - p) < 4 * sigma

    def test_iter_profiles_exhaustive(self):
        config = ExperimentConfig(mode='exhaustive', m=3, n=2)
        indexed = list(iter_profiles(config))
        assert [i for i, p in indexed] == list(range(169))
        assert len({p for i, p in indexed}) == 169

    def test_iter_profiles_sample(self):
        config = ExperimentConfig(m=3, n=3, trials=10, seed=3)
        profiles = dict(iter_profiles(config))
        assert profiles[7] == generate_profile(config, trial_rng(3, 7))


class TestValidation:
    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_exhaustive_m3(self, n):
        config = ExperimentConfig(mode='exhaustive', m=3, n=n)
        summary = run_validation(config)
        assert summary.profiles == 13**n
        assert summary.violations == 0
        assert summary.counterexamples == []
        assert summary.sen_hypothesis_transitive > 0
        assert summary.pattanaik_hypothesis_nonempty > 0
        assert summary.nsm_triple_nonempty > 0
        # nothing asserted or logged for m = 3
        assert summary.nsm_all_profiles == 0

    def test_exhaustive_linear_vr_failures(self):
        config = ExperimentConfig(mode='exhaustive', m=3, n=3,
                                  culture='impartial-linear')
        summary = validate_sen_theorem(config)
        assert summary.theorems == ('sen',)
        assert summary.profiles == 216
        # the 12 Latin squares of order 3
        assert summary.profiles - summary.vr_all_profiles == 12
        assert Fraction(summary.profiles - summary.vr_all_profiles,
                        summary.profiles) == Fraction(1, 18)
        assert summary.violations == 0
        # every Latin square is a majority cycle
        assert summary.sen_hypothesis_transitive == 204
        assert summary.sen_other_intransitive == 12
        assert summary.sen_other_transitive == 0

    def test_sampled_linear_vr_failures(self):
        trials = 5000
        config = ExperimentConfig(m=3, n=3, trials=trials, seed=11,
                                  culture='impartial-linear')
        summary = validate_sen_theorem(config)
        p = 1 / 18
        sigma = np.sqrt(p * (1 - p) / trials)
        assert abs(summary.vr_failure_fraction - p) < 3 * sigma

    @pytest.mark.slow
    def test_sampled_m4_n5(self):
        config = ExperimentConfig(m=4, n=5, trials=100000, seed=2024)
        summary = run_validation(config)
        assert summary.profiles == 100000
        assert summary.violations == 0

    @pytest.mark.slow
    @pytest.mark.parametrize('n', [3, 5])
    @pytest.mark.parametrize('culture', ['impartial-weak',
                                         'impartial-linear'])
    def test_sampled_m4(self, n, culture):
        config = ExperimentConfig(m=4, n=n, trials=100000, seed=n,
                                  culture=culture)
        summary = run_validation(config)
        assert summary.profiles == 100000
        assert summary.violations == 0
        if culture == 'impartial-linear':
            assert summary.tie_counterexamples == []
            assert summary.pattanaik_ties_nonempty == 0

    def test_ties_not_asserted(self, tmp_path, caplog):
        caplog.set_level(logging.WARNING)
        fn = str(tmp_path / 'counterexamples.txt')
        config = ExperimentConfig(m=3, n=5, trials=10000, seed=31)
        summary = validate_pattanaik_theorems(config, counterexample_log=fn)
        assert summary.violations == 0
        assert summary.pattanaik_ties_empty > 0
        assert summary.nsm_triple_ties_empty > 0
        assert len(summary.tie_counterexamples) > 0
        with open(fn) as inf:
            text = inf.read()
        assert text.count('(ties, not asserted)') >= len(
            summary.tie_counterexamples)
        assert any(r.levelno == logging.WARNING
                   and 'Empty choice set with ties' in r.message
                   for r in caplog.records)
        assert not any(r.levelno >= logging.ERROR for r in caplog.records)

    def test_nsm_everywhere_logged(self, caplog):
        caplog.set_level(logging.INFO)
        config = ExperimentConfig(m=4, n=3, trials=2000, seed=8)
        summary = validate_pattanaik_theorems(config)
        assert summary.violations == 0
        assert summary.nsm_all_profiles > 0
        assert 1 <= len(summary.nsm_all_examples) <= 5
        index, text = summary.nsm_all_examples[0]
        assert text.startswith('# profile {}: NSM on every triple'
                               .format(index))
        assert parse_profile(text).alternatives.m == 4
        assert any('NSM on every triple' in r.message
                   for r in caplog.records)

    def test_unknown_theorem(self):
        with pytest.raises(ExperimentConfigError):
            run_validation(ExperimentConfig(trials=1), ('arrow',))

    def test_deterministic(self):
        config = ExperimentConfig(m=4, n=3, trials=300, seed=123)
        assert run_validation(config).counts() == \
            run_validation(config).counts()


class TestExperimentSummary:
    def test_split_and_merge(self):
        config = ExperimentConfig(m=4, n=3, trials=100, seed=77)
        profiles = list(iter_profiles(config))

        first = ExperimentSummary(config)
        second = ExperimentSummary(config)
        for i, p in profiles[:40]:
            first.record(i, p)
        for i, p in reversed(profiles[40:]):
            second.record(i, p)

        merged = second.merge(first)
        expected = run_validation(config)
        assert merged.counts() == expected.counts()
        assert merged.tie_counterexamples == expected.tie_counterexamples

    def test_merge_different(self):
        a = ExperimentSummary(ExperimentConfig(seed=1))
        b = ExperimentSummary(ExperimentConfig(seed=2))
        with pytest.raises(ValueError):
            a.merge(b)

    def test_record_condorcet(self):
        summary = ExperimentSummary(ExperimentConfig())
        violated = summary.record(0, parse_profile(CONDORCET))
        assert not violated
        assert summary.sen_other_intransitive == 1
        assert summary.vr_triples == 0
        assert summary.vr_failure_fraction == 1

    def test_record_tied_cycle(self, caplog):
        caplog.set_level(logging.WARNING)
        summary = ExperimentSummary(ExperimentConfig())
        violated = summary.record(4, parse_profile(TIED_CYCLE),
                                  logger=logging.getLogger('VRCheck'))
        assert not violated
        assert summary.violations == 0
        assert summary.counterexamples == []
        assert summary.pattanaik_ties_empty == 1
        assert summary.nsm_triple_ties_empty == 1
        assert summary.pattanaik_hypothesis_empty == 0
        assert summary.nsm_triple_empty == 0
        index, text = summary.tie_counterexamples[0]
        assert index == 4
        assert ('# profile 4: NSW on every triple, but C(S) is empty '
                '(ties, not asserted)') in text
        assert 'NSM on (a,b,c), but C(a,b,c) is empty' in text
        assert parse_profile(text) == parse_profile(TIED_CYCLE)
        assert [r.levelname for r in caplog.records] == ['WARNING']

    def test_violation_counters(self):
        # tie cases never count as violations
        summary = ExperimentSummary(ExperimentConfig())
        summary.nsm_triple_empty = 1
        assert summary.violations == 1
        summary = ExperimentSummary(ExperimentConfig())
        summary.nsm_triple_ties_empty = 1
        summary.pattanaik_ties_empty = 1
        assert summary.violations == 0

    def test_write_counterexamples(self, tmp_path):
        summary = ExperimentSummary(ExperimentConfig())
        summary.counterexamples.append(
            (3, '# profile 3: example\nalternatives: x y z\nx>y>z\n'))
        summary.tie_counterexamples.append(
            (1, '# profile 1: ties\nalternatives: x y z\nx=y>z\n'))
        fn = str(tmp_path / 'counterexamples.txt')
        summary.write_counterexamples(fn)
        summary.write_counterexamples(fn)
        with open(fn) as inf:
            text = inf.read()
        assert text.count('# profile 3') == 2
        assert text.count('# profile 1') == 2
        assert text.index('# profile 1') < text.index('# profile 3')

    def test_csv(self, tmp_path):
        config = ExperimentConfig(mode='exhaustive', m=3, n=1)
        summary = run_validation(config)
        fn = str(tmp_path / 'summary.csv')
        summary.write_csv(fn, append=True)
        summary.write_csv(fn, append=True)
        tab = Table.read(fn, format='ascii.csv')
        assert len(tab) == 2
        assert tab['profiles'][0] == 13
        assert tab['mode'][1] == 'exhaustive'
        assert tab['violations'][1] == 0

    def test_render(self):
        config = ExperimentConfig(mode='exhaustive', m=3, n=2)
        lines = run_validation(config).render().splitlines()
        assert lines[0] == ('exhaustive run: m=3, n=2, culture=impartial-weak'
                            ', seed=0, theorems=sen+pattanaik')
        assert lines[1] == 'profiles tested: 169'
        assert lines[-3].startswith('with ties (not asserted), NSB or NSW')
        assert lines[-1] == 'theorem violations: 0'

    def test_to_dict(self):
        config = ExperimentConfig(mode='exhaustive', m=3, n=1)
        d = run_validation(config).to_dict()
        assert d['config']['mode'] == 'exhaustive'
        assert d['theorems'] == ['sen', 'pattanaik']
        assert d['counts']['profiles'] == 13
        assert d['violations'] == 0
        assert d['tie_counterexamples'] == []
