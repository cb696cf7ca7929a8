# Licensed with the 3-clause BSD license.  See LICENSE for details.
import logging

import pytest

from ..vrcheck import VRCheck
from ..config import Config
from ..core import Triple
from ..exceptions import InputError
from .profiles import EXAMPLE, CONDORCET


@pytest.fixture
def vrc():
    with VRCheck() as vrc:
        yield vrc


@pytest.fixture
def example(vrc):
    return vrc.load_profile(text=EXAMPLE)


class TestVRCheck:
    def test_init(self):
        with VRCheck(config=Config(vr_scope='all')) as vrc:
            assert vrc.config['vr_scope'] == 'all'

    def test_kwargs(self):
        with VRCheck(cap=5) as vrc:
            assert vrc.config['cap'] == 5

    def test_disable_log(self):
        with VRCheck(disable_log=True) as vrc:
            assert vrc.logger.getEffectiveLevel() == logging.ERROR

    def test_debug(self):
        with VRCheck(debug=True) as vrc:
            assert vrc.logger.getEffectiveLevel() == logging.DEBUG

    def test_load_profile(self, capsys):
        with VRCheck() as vrc:
            profile = vrc.load_profile(text=EXAMPLE)
        assert profile.n == 5
        assert 'Read 5 orderings over 4 alternatives' in capsys.readouterr().err

    def test_load_profile_file(self, vrc, tmp_path):
        fn = tmp_path / 'example.txt'
        fn.write_text(EXAMPLE)
        assert vrc.load_profile(filename=str(fn)).n == 5

    def test_degenerate_warnings(self, capsys):
        with VRCheck() as vrc:
            vrc.load_profile(text='x>y\n')
        err = capsys.readouterr().err
        assert 'Single-individual profile' in err
        assert 'Fewer than three alternatives' in err

    def test_triple(self, vrc, example):
        assert vrc.triple(example, ['y', 'w', 'x']) == Triple((0, 1, 2))

    @pytest.mark.parametrize('names', [
        ['w', 'x'], ['w', 'x', 'q'], ['w', 'w', 'x'], ['w', 'x', 'y', 'z']
    ])
    def test_bad_triple(self, vrc, example, names):
        with pytest.raises(InputError):
            vrc.triple(example, names)

    def test_maps(self, vrc, example):
        rows = vrc.maps(example)
        assert [j for j, *rest in rows] == [1, 2, 3, 4, 5]
        j, ordering, pm, ppm = rows[3]
        assert pm[1] == frozenset((2, 3))
        assert ppm.m == 4

    def test_maps_triple(self, vrc, example):
        rows = vrc.maps(example, Triple((0, 1, 2)))
        j, ordering, pm, ppm = rows[2]
        assert ordering.classes == (frozenset((1,)), frozenset((2,)),
                                    frozenset((0,)))
        assert ppm.m == 3

    def test_restrictions(self, vrc, example):
        result = vrc.restrictions(example)
        assert result.vr_all
        assert result.reports[0].vr_scope == 'concerned'

    def test_restrictions_scope_from_config(self):
        with VRCheck(vr_scope='all') as vrc:
            profile = vrc.load_profile(text='x>y>z\nx=y=z\n')
            assert not vrc.restrictions(profile).vr_all
            assert vrc.restrictions(profile, vr_scope='concerned').vr_all

    def test_restrictions_bad_scope(self, vrc, example):
        with pytest.raises(InputError):
            vrc.restrictions(example, vr_scope='nobody')

    def test_restrictions_triple(self, vrc, example):
        result = vrc.restrictions(example, triple=Triple((0, 2, 3)))
        assert len(result.reports) == 1

    def test_social(self, capsys):
        with VRCheck() as vrc:
            example = vrc.load_profile(text=EXAMPLE)
            assert vrc.social(example).format_chain() == 'x=z > y > w'
            profile = vrc.load_profile(text=CONDORCET)
            assert not vrc.social(profile).transitive
        assert 'intransitive at (x,y,z)' in capsys.readouterr().err

    def test_choice(self, vrc, example):
        assert vrc.choice(example) == ['x', 'z']
        assert vrc.choice(example, ['w', 'y']) == ['y']

    def test_experiment_config(self):
        with VRCheck(trials=7, seed=3, culture='impartial-linear') as vrc:
            config = vrc.experiment_config(m=4, n=2)
            assert config.trials == 7
            assert config.seed == 3
            assert config.culture == 'impartial-linear'
            assert vrc.experiment_config(seed=9).seed == 9

    def test_validate(self, vrc):
        config = vrc.experiment_config(mode='exhaustive', m=3, n=2)
        summary = vrc.validate(config, ('sen',))
        assert summary.profiles == 169
        assert summary.violations == 0

    def test_generate(self, vrc):
        a = vrc.generate(m=4, n=5, seed=7)
        b = vrc.generate(m=4, n=5, seed=7)
        assert a == b
        assert a.alternatives.names == ('a', 'b', 'c', 'd')
        assert a.n == 5
