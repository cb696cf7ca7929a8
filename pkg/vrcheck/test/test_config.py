# Licensed with the 3-clause BSD license.  See LICENSE for details.
import argparse
import tempfile
import pytest

from ..config import Config


@pytest.fixture
def config_file():
    with tempfile.NamedTemporaryFile('w+') as f:
        f.write('''{
  "log": "/path/to/vrcheck.log",
  "vr_scope": "all",
  "cap": 1000,
  "seed": 42
}''')
        f.seek(0)
        yield f.name


class TestConfig:
    def test_init(self):
        config = Config(vr_scope='all')
        assert config['vr_scope'] == 'all'
        assert config['cap'] == 10**7
        assert config['culture'] == 'impartial-weak'

    def test_get(self):
        config = Config()
        assert config.get('counterexample_log') is None
        assert config.get('nonexistent', 3) == 3

    def test_from_args(self, config_file):
        parser = argparse.ArgumentParser()
        parser.add_argument('--config')
        parser.add_argument('--vr-scope', dest='vr_scope')
        parser.add_argument('--seed', type=int)
        parser.add_argument('--log')
        args = parser.parse_args(
            ['--vr-scope=concerned', '--log=a.log', '--config=' + config_file])
        config = Config.from_args(args)
        assert config['vr_scope'] == 'concerned'
        assert config['log'] == 'a.log'
        # not given on the command line, so taken from the file
        assert config['seed'] == 42
        assert config['cap'] == 1000

    def test_from_file(self, config_file):
        config = Config.from_file(config_file)
        assert config['log'] == '/path/to/vrcheck.log'
        assert config['vr_scope'] == 'all'
        assert config['trials'] == 1000

    def test_from_file_override(self, config_file):
        config = Config.from_file(config_file, seed=7)
        assert config['seed'] == 7

    def test_from_file_not_found(self):
        with pytest.raises(IOError):
            Config.from_file('/this_file_does_not_exist.config')

    def test_default_file(self, config_file, monkeypatch):
        monkeypatch.setattr(Config, 'DEFAULT_FILES', [config_file])
        config = Config.from_file()
        assert config['log'] == '/path/to/vrcheck.log'
        assert config['cap'] == 1000

    def test_no_default_file(self, monkeypatch):
        monkeypatch.setattr(Config, 'DEFAULT_FILES',
                            ['/this_file_does_not_exist.config'])
        config = Config.from_file(cap=5)
        assert config['cap'] == 5
        assert config['vr_scope'] == 'concerned'

    def test_update(self):
        config = Config()
        config.update(trials=10)
        assert config['trials'] == 10
