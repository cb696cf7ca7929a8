# Licensed with the 3-clause BSD license.  See LICENSE for details.
"""Profile generation and theorem validation.

Two classical results are checked empirically:

* Sen: majority rule is transitive when, on every triple, the concerned
  individuals are value restricted and their number is odd.
* Pattanaik: the choice set of the full alternative set is non-empty
  when NSB holds on every triple, or NSW holds on every triple; and the
  choice set of a triple is non-empty when NSM holds on it.  NSM on
  every triple says nothing about larger sets, so profiles with m > 3
  and NSM everywhere are only logged.

Only implications are asserted.  Profiles where a hypothesis fails are
counted separately.

The choice-set implications are asserted on linear orders only.  With
ties, a triple can be NSM or NSW while its majority relation cycles,
e.g. a>c>b, b>a=c, a>c>b, c>b>a, b>a=c.  Such profiles go to their own
``*_ties_*`` counters and to ``tie_counterexamples``, logged at WARNING.

Sampled trial ``i`` draws from its own PCG64 stream,
``numpy.random.default_rng(SeedSequence(seed, spawn_key=(i,)))``, so
results do not depend on the order in which trials run.

"""

import os
import logging as pylogging
from dataclasses import dataclass, field, fields
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial

import numpy as np
from astropy.table import Table, vstack

from .core import AlternativeSet, WeakOrdering, Profile, enumerate_triples
from .core import format_profile
from .restrictions import ValueLabel, check_vr, check_nsvr
from .majority import social_relation
from .exceptions import ExperimentConfigError, CapExceededError
from .logging import ProgressBar
from . import util

__all__ = [
    'MODES',
    'CULTURES',
    'THEOREMS',
    'ExperimentConfig',
    'ExperimentSummary',
    'count_weak_orders',
    'enumerate_weak_orders',
    'enumerate_linear_orders',
    'trial_rng',
    'generate_profile',
    'iter_profiles',
    'run_validation',
    'validate_sen_theorem',
    'validate_pattanaik_theorems',
]

MODES = ('exhaustive', 'sample')
CULTURES = ('impartial-weak', 'impartial-linear')
THEOREMS = ('sen', 'pattanaik')
DEFAULT_CAP = 10**7

# stored example profiles for the NSM-everywhere log
MAX_EXAMPLES = 5


def count_weak_orders(m):
    """Number of weak orders on m alternatives (ordered Bell number)."""
    a = [1]
    for k in range(1, m + 1):
        a.append(sum(comb(k, i) * a[k - i] for i in range(1, k + 1)))
    return a[m]


def _ordered_partitions(items):
    if not items:
        yield ()
        return
    for size in range(1, len(items) + 1):
        for first in combinations(items, size):
            rest = tuple(a for a in items if a not in first)
            for tail in _ordered_partitions(rest):
                yield (frozenset(first),) + tail


def enumerate_weak_orders(m, cap=DEFAULT_CAP):
    """Every weak order on alternatives ``0 .. m-1``.

    Ordered by the size of the best class, then lexicographically by
    its members, recursively.

    Raises
    ------
    CapExceededError
        When there are more than ``cap`` weak orders.

    """

    count = count_weak_orders(m)
    if count > cap:
        raise CapExceededError(
            '{} weak orders on {} alternatives exceed the cap of {}'
            .format(count, m, cap))
    return [WeakOrdering(classes)
            for classes in _ordered_partitions(tuple(range(m)))]


def enumerate_linear_orders(m):
    return [WeakOrdering.linear(order) for order in permutations(range(m))]


@lru_cache(maxsize=16)
def _universe(m, culture):
    if culture == 'impartial-linear':
        return tuple(enumerate_linear_orders(m))
    return tuple(enumerate_weak_orders(m, cap=float('inf')))


def _universe_size(m, culture):
    if culture == 'impartial-linear':
        return factorial(m)
    return count_weak_orders(m)


@dataclass(frozen=True)
class ExperimentConfig:
    """Experiment parameters.

    Parameters
    ----------
    mode : string
        'exhaustive' (every profile of n orderings from the culture's
        universe) or 'sample'.

    n, m : int
        Individuals and alternatives.

    trials : int
        Profiles drawn in sample mode.

    seed : int
        64-bit seed.

    culture : string
        'impartial-weak' or 'impartial-linear'.

    cap : int
        Upper limit on the number of orderings in the culture's
        universe, and on the number of exhaustive profiles.

    """

    mode: str = 'sample'
    n: int = 3
    m: int = 3
    trials: int = 1000
    seed: int = 0
    culture: str = 'impartial-weak'
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.mode not in MODES:
            raise ExperimentConfigError(
                'mode must be one of {}: {}'.format(', '.join(MODES),
                                                    self.mode))
        if self.culture not in CULTURES:
            raise ExperimentConfigError(
                'culture must be one of {}: {}'.format(', '.join(CULTURES),
                                                       self.culture))
        if self.m < 3:
            raise ExperimentConfigError('m must be at least 3')
        if self.n < 1:
            raise ExperimentConfigError('n must be at least 1')
        if self.trials < 1:
            raise ExperimentConfigError('trials must be at least 1')
        if not 0 <= self.seed < 2**64:
            raise ExperimentConfigError('seed must be a 64-bit unsigned '
                                        'integer')
        universe = _universe_size(self.m, self.culture)
        if universe > self.cap:
            raise CapExceededError(
                '{} {} orders on {} alternatives exceed the cap of {}'
                .format(universe, self.culture.split('-')[1], self.m,
                        self.cap))
        if self.mode == 'exhaustive' and self.profile_count > self.cap:
            raise CapExceededError(
                '{}^{} = {} profiles exceed the cap of {}'.format(
                    universe, self.n, self.profile_count, self.cap))

    @property
    def profile_count(self):
        if self.mode == 'exhaustive':
            return _universe_size(self.m, self.culture)**self.n
        return self.trials

    @property
    def alternatives(self):
        return AlternativeSet.default(self.m)


def trial_rng(seed, trial):
    """PCG64 generator for one trial."""
    return np.random.default_rng(
        np.random.SeedSequence(seed, spawn_key=(trial,)))


def generate_profile(config, rng):
    """Impartial-culture profile.

    Parameters
    ----------
    config : ExperimentConfig

    rng : `~numpy.random.Generator`

    Returns
    -------
    profile : Profile
        ``config.n`` orderings drawn uniformly, with replacement, from
        the weak orders or the linear orders on ``config.m``
        alternatives.

    """

    orders = _universe(config.m, config.culture)
    picks = rng.integers(len(orders), size=config.n)
    return Profile(config.alternatives, tuple(orders[k] for k in picks))


def iter_profiles(config):
    """Yield ``(index, profile)`` for the configured universe."""
    if config.mode == 'exhaustive':
        alternatives = config.alternatives
        orders = _universe(config.m, config.culture)
        for i, orderings in enumerate(product(orders, repeat=config.n)):
            yield i, Profile(alternatives, orderings)
    else:
        for i in range(config.trials):
            yield i, generate_profile(config, trial_rng(config.seed, i))


_counters = (
    'profiles', 'triples', 'vr_triples', 'nsb_triples', 'nsm_triples',
    'nsw_triples', 'vr_all_profiles',
    'sen_hypothesis_transitive', 'sen_hypothesis_intransitive',
    'sen_other_transitive', 'sen_other_intransitive',
    'pattanaik_hypothesis_nonempty', 'pattanaik_hypothesis_empty',
    'nsm_triple_nonempty', 'nsm_triple_empty',
    'pattanaik_ties_nonempty', 'pattanaik_ties_empty',
    'nsm_triple_ties_nonempty', 'nsm_triple_ties_empty',
    'nsm_all_profiles', 'nsm_all_empty_choice',
)

_violation_counters = ('sen_hypothesis_intransitive',
                       'pattanaik_hypothesis_empty', 'nsm_triple_empty')


@dataclass
class ExperimentSummary:
    """Counters for one experiment configuration.

    Counters named ``*_hypothesis_*`` and ``nsm_triple_*`` split the
    profiles (or triples) satisfying a theorem hypothesis by outcome;
    ``sen_other_*`` count profiles outside the hypothesis.  The
    choice-set counters cover linear orderings; ``*_ties_*`` count the
    same cases when some ordering has ties, and are not asserted.
    ``counterexamples``, ``tie_counterexamples`` and ``nsm_all_examples``
    hold ``(index, profile text)`` pairs sorted by profile index.

    """

    config: ExperimentConfig
    theorems: tuple = THEOREMS
    profiles: int = 0
    triples: int = 0
    vr_triples: int = 0
    nsb_triples: int = 0
    nsm_triples: int = 0
    nsw_triples: int = 0
    vr_all_profiles: int = 0
    sen_hypothesis_transitive: int = 0
    sen_hypothesis_intransitive: int = 0
    sen_other_transitive: int = 0
    sen_other_intransitive: int = 0
    pattanaik_hypothesis_nonempty: int = 0
    pattanaik_hypothesis_empty: int = 0
    nsm_triple_nonempty: int = 0
    nsm_triple_empty: int = 0
    pattanaik_ties_nonempty: int = 0
    pattanaik_ties_empty: int = 0
    nsm_triple_ties_nonempty: int = 0
    nsm_triple_ties_empty: int = 0
    nsm_all_profiles: int = 0
    nsm_all_empty_choice: int = 0
    counterexamples: list = field(default_factory=list)
    tie_counterexamples: list = field(default_factory=list)
    nsm_all_examples: list = field(default_factory=list)

    @property
    def violations(self):
        return sum(getattr(self, k) for k in _violation_counters)

    @property
    def vr_failure_fraction(self):
        """Fraction of profiles with some triple failing VR."""
        if self.profiles == 0:
            return 0.0
        return 1 - self.vr_all_profiles / self.profiles

    def counts(self):
        return {k: getattr(self, k) for k in _counters}

    def merge(self, other):
        """Combined summary of two partial runs of one configuration."""
        if other.config != self.config:
            raise ValueError('Cannot merge summaries of different '
                             'configurations.')
        merged = ExperimentSummary(
            self.config, tuple(t for t in THEOREMS
                               if t in self.theorems or t in other.theorems))
        for k in _counters:
            setattr(merged, k, getattr(self, k) + getattr(other, k))
        merged.counterexamples = sorted(self.counterexamples
                                        + other.counterexamples)
        merged.tie_counterexamples = sorted(self.tie_counterexamples
                                            + other.tie_counterexamples)
        merged.nsm_all_examples = sorted(self.nsm_all_examples
                                         + other.nsm_all_examples
                                         )[:MAX_EXAMPLES]
        return merged

    def record(self, index, profile, logger=None):
        """Examine one profile and update the counters.

        Returns
        -------
        violated : bool
            ``True`` if the profile contradicts a theorem.

        """

        self.profiles += 1
        triples = enumerate_triples(profile.alternatives)
        vr = [check_vr(profile, t, 'concerned') for t in triples]
        nsvr = [check_nsvr(profile, t) for t in triples]
        self.triples += len(triples)
        self.vr_triples += sum(v.holds for v in vr)
        self.nsb_triples += sum(v[ValueLabel.BEST].holds for v in nsvr)
        self.nsm_triples += sum(v[ValueLabel.MEDIUM].holds for v in nsvr)
        self.nsw_triples += sum(v[ValueLabel.WORST].holds for v in nsvr)
        vr_all = all(v.holds for v in vr)
        self.vr_all_profiles += vr_all

        relation = social_relation(profile)
        problems = []
        ties = []

        if 'sen' in self.theorems:
            odd = all(profile.concerned_count(t) % 2 == 1 for t in triples)
            transitive = relation.transitive
            if vr_all and odd:
                if transitive:
                    self.sen_hypothesis_transitive += 1
                else:
                    self.sen_hypothesis_intransitive += 1
                    problems.append('VR with odd concerned counts on every '
                                    'triple, but intransitive')
            elif transitive:
                self.sen_other_transitive += 1
            else:
                self.sen_other_intransitive += 1

        if 'pattanaik' in self.theorems:
            choice = relation.maximal()
            nsb_all = all(v[ValueLabel.BEST].holds for v in nsvr)
            nsw_all = all(v[ValueLabel.WORST].holds for v in nsvr)
            if nsb_all or nsw_all:
                message = '{} on every triple, but C(S) is empty'.format(
                    'NSB' if nsb_all else 'NSW')
                if not all(o.is_linear for o in profile):
                    self.pattanaik_ties_nonempty += bool(choice)
                    self.pattanaik_ties_empty += not choice
                    if not choice:
                        ties.append(message)
                elif choice:
                    self.pattanaik_hypothesis_nonempty += 1
                else:
                    self.pattanaik_hypothesis_empty += 1
                    problems.append(message)

            for t, v in zip(triples, nsvr):
                if not v[ValueLabel.MEDIUM].holds:
                    continue
                nonempty = len(relation.maximal(t)) > 0
                name = t.format(profile.alternatives)
                message = 'NSM on {}, but C{} is empty'.format(name, name)
                if not all(o.is_linear for o in profile.restricted(t)):
                    self.nsm_triple_ties_nonempty += nonempty
                    self.nsm_triple_ties_empty += not nonempty
                    if not nonempty:
                        ties.append(message)
                elif nonempty:
                    self.nsm_triple_nonempty += 1
                else:
                    self.nsm_triple_empty += 1
                    problems.append(message)

            if (profile.alternatives.m > 3
                    and all(v[ValueLabel.MEDIUM].holds for v in nsvr)):
                self.nsm_all_profiles += 1
                self.nsm_all_empty_choice += len(choice) == 0
                if len(self.nsm_all_examples) < MAX_EXAMPLES:
                    names = ', '.join(profile.alternatives.name(a)
                                      for a in choice)
                    text = ('# profile {}: NSM on every triple, C(S) = {{{}}}'
                            '\n'.format(index, names)
                            + format_profile(profile))
                    self.nsm_all_examples.append((index, text))
                    if logger:
                        logger.info('NSM on every triple of profile {}, '
                                    'C(S) = {{{}}}'.format(index, names))

        if problems:
            text = ''.join('# profile {}: {}\n'.format(index, p)
                           for p in problems) + format_profile(profile)
            self.counterexamples.append((index, text))
            if logger:
                logger.error('Theorem violation:\n' + text)

        if ties:
            text = ''.join('# profile {}: {} (ties, not asserted)\n'
                           .format(index, p)
                           for p in ties) + format_profile(profile)
            self.tie_counterexamples.append((index, text))
            if logger:
                logger.warning('Empty choice set with ties:\n' + text)

        return len(problems) > 0

    def to_table(self):
        """One-row `~astropy.table.Table`: configuration and counters."""
        c = self.config
        row = {
            'mode': c.mode, 'm': c.m, 'n': c.n,
            'trials': self.profiles, 'seed': c.seed, 'culture': c.culture,
            'theorems': '+'.join(self.theorems),
        }
        row.update(self.counts())
        row['violations'] = self.violations
        return Table(rows=[list(row.values())], names=list(row.keys()))

    def write_csv(self, filename, append=False):
        """Write the summary row; with ``append``, after existing rows."""
        tab = self.to_table()
        if append and os.path.exists(filename):
            tab = vstack([Table.read(filename, format='ascii.csv'), tab])
        tab.write(filename, format='ascii.csv', overwrite=True)

    def write_counterexamples(self, filename):
        """Append counterexamples in the profile text format.

        Violations and tie cases are interleaved by profile index.

        """
        with open(filename, 'a') as outf:
            for index, text in sorted(self.counterexamples
                                      + self.tie_counterexamples):
                outf.write(text + '\n')

    def render(self):
        c = self.config
        lines = [
            '{} run: m={}, n={}, culture={}, seed={}, theorems={}'.format(
                c.mode, c.m, c.n, c.culture, c.seed,
                '+'.join(self.theorems)),
            'profiles tested: {}'.format(self.profiles),
            'triples: {} (VR {}, NSB {}, NSM {}, NSW {})'.format(
                self.triples, self.vr_triples, self.nsb_triples,
                self.nsm_triples, self.nsw_triples),
            'profiles with VR on all triples: {} (failing fraction {:.6f})'
            .format(self.vr_all_profiles, self.vr_failure_fraction),
        ]
        if 'sen' in self.theorems:
            lines.extend([
                'Sen hypothesis, transitive: {}'.format(
                    self.sen_hypothesis_transitive),
                'Sen hypothesis, intransitive: {}'.format(
                    self.sen_hypothesis_intransitive),
                'hypothesis false, transitive: {}'.format(
                    self.sen_other_transitive),
                'hypothesis false, intransitive: {}'.format(
                    self.sen_other_intransitive),
            ])
        if 'pattanaik' in self.theorems:
            lines.extend([
                'NSB or NSW on all triples, C(S) non-empty: {}'.format(
                    self.pattanaik_hypothesis_nonempty),
                'NSB or NSW on all triples, C(S) empty: {}'.format(
                    self.pattanaik_hypothesis_empty),
                'NSM triples, C(triple) non-empty: {}'.format(
                    self.nsm_triple_nonempty),
                'NSM triples, C(triple) empty: {}'.format(
                    self.nsm_triple_empty),
                'with ties (not asserted), NSB or NSW on all triples: '
                'C(S) non-empty {}, empty {}'.format(
                    self.pattanaik_ties_nonempty, self.pattanaik_ties_empty),
                'with ties (not asserted), NSM triples: C(triple) '
                'non-empty {}, empty {}'.format(
                    self.nsm_triple_ties_nonempty,
                    self.nsm_triple_ties_empty),
            ])
            if c.m > 3:
                lines.append(
                    'NSM on all triples (not asserted): {}, with empty '
                    'C(S): {}'.format(self.nsm_all_profiles,
                                      self.nsm_all_empty_choice))
        lines.append('theorem violations: {}'.format(self.violations))
        return '\n'.join(lines)

    def to_dict(self):
        c = self.config
        return {
            'config': {f.name: getattr(c, f.name) for f in fields(c)},
            'theorems': list(self.theorems),
            'counts': self.counts(),
            'violations': self.violations,
            'counterexamples': [text for index, text in self.counterexamples],
            'tie_counterexamples': [text for index, text
                                    in self.tie_counterexamples],
            'nsm_all_examples': [text for index, text
                                 in self.nsm_all_examples],
        }


def run_validation(config, theorems=THEOREMS, logger=None,
                   counterexample_log=None):
    """Validate theorem families over the configured profiles.

    Parameters
    ----------
    config : ExperimentConfig

    theorems : tuple of str, optional
        Any of 'sen', 'pattanaik'.

    logger : `~logging.Logger`, optional
        Progress, NSM-everywhere examples, and violations are logged
        here.

    counterexample_log : string, optional
        Append counterexample profiles to this file.

    Returns
    -------
    summary : ExperimentSummary

    """

    for theorem in theorems:
        if theorem not in THEOREMS:
            raise ExperimentConfigError('Unknown theorem: {}'
                                        .format(theorem))

    if logger is None:
        logger = pylogging.getLogger('VRCheck')

    summary = ExperimentSummary(config, tuple(theorems))
    logger.info('Testing {} {} profile{} (m={}, n={}, {}).'.format(
        config.profile_count, config.mode,
        '' if config.profile_count == 1 else 's', config.m, config.n,
        config.culture))

    with ProgressBar(config.profile_count, logger) as progress:
        for index, profile in iter_profiles(config):
            summary.record(index, profile, logger=logger)
            progress.update()

    if summary.violations > 0:
        logger.error('{} found.'.format(
            util.plural(summary.violations, 'theorem violation')))
    else:
        logger.info('No theorem violations.')
    if summary.tie_counterexamples:
        logger.warning('{} with ties and an empty choice set (not '
                       'asserted).'.format(util.plural(
                           len(summary.tie_counterexamples), 'profile')))

    if counterexample_log is not None and (summary.counterexamples
                                           or summary.tie_counterexamples):
        summary.write_counterexamples(counterexample_log)
        logger.info('Counterexamples appended to {}'.format(
            counterexample_log))

    return summary


def validate_sen_theorem(config, **kwargs):
    """Sen's transitivity theorem; see `run_validation`."""
    return run_validation(config, ('sen',), **kwargs)


def validate_pattanaik_theorems(config, **kwargs):
    """Pattanaik's choice-set theorems; see `run_validation`."""
    return run_validation(config, ('pattanaik',), **kwargs)
