# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""config
=========

The configuration is a JSON-formatted file.  See ``_config_example``.
Command-line options override the file, the file overrides the
defaults.

"""

import os
import json

__all__ = ['Config']

_config_example = '''
{
  "log": "/path/to/vrcheck.log",
  "vr_scope": "concerned",
  "cap": 10000000,
  "seed": 0,
  "trials": 1000,
  "culture": "impartial-weak",
  "counterexample_log": "/path/to/counterexamples.txt"
}
'''

_defaults = {
    "log": "/dev/null",
    "vr_scope": "concerned",
    "cap": 10**7,
    "seed": 0,
    "trials": 1000,
    "culture": "impartial-weak",
    "counterexample_log": None
}


class Config:
    """VRCheck configuration.

    Controls the log file, the value restriction scope, and the
    experiment defaults.  Parameters are stored as object keys:
    ``Config['log']``, ``Config['cap']``, etc.

    Parameters
    ----------
    **kwargs
        Configuration parameters and values.

    """

    # list of default files in order of precedence
    DEFAULT_FILES = ['vrcheck.cfg', '.vrcheck.cfg',
                     os.path.expanduser('~/.config/vrcheck.config')]

    def __init__(self, **kwargs):
        self.config = dict(_defaults)
        self.config.update(kwargs)

    def __getitem__(self, k):
        return self.config[k]

    def get(self, k, default=None):
        return self.config.get(k, default)

    @classmethod
    def from_args(cls, args, **updates):
        """Initialize from command-line arguments.

        The configuration file specified by --config (or the default,
        if ``None``) is read first.

        Parameters
        ----------
        args : result from argparse.ArgumentParser.parse_args()
          Options checked: --config for a configuration file,
          --option, where option is a configuration item, replacing
          underscores with dashes.

        **updates
            Any other configuration items.  However, `args` will take
            precedence.

        Returns
        -------
        config : Config

        """

        config_file = getattr(args, 'config', None)

        for k in _defaults:
            v = getattr(args, k, None)
            if v is not None:
                updates[k] = v

        return cls.from_file(config_file, **updates)

    @classmethod
    def from_file(cls, filename=None, **kwargs):
        """Initialize from JSON-formatted file.

        Parameters
        ----------
        filename : string, optional
            Name of the file to read, or ``None`` for the default
            file (in order of precedence):
                {}
            If none of the default files exist, the built-in defaults
            are used.

        **kwargs
            Override saved parameters with these values.

        Returns
        -------
        config : Config

        """.format('\n                '.join(cls.DEFAULT_FILES))

        if filename is None:
            for default in cls.DEFAULT_FILES:
                if os.path.exists(default):
                    filename = default
                    break
            else:
                return cls(**kwargs)

        try:
            with open(filename) as f:
                config = json.load(f)
        except IOError:
            print(_config_example)
            raise

        config.update(**kwargs)

        return cls(**config)

    def update(self, **kwargs):
        self.config.update(**kwargs)
