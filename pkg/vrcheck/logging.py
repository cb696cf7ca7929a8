# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""Loggers for the vrcheck pipeline and experiment sweeps."""
import sys
import time
import logging

LOG_FORMAT = ('%(asctime)10s (%(dt).2f/%(dt0).2f) %(levelname)s: '
              '[%(funcName)s] %(message)s')
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class ElapsedFormatter(logging.Formatter):
    """Adds ``dt0``, seconds since the formatter was created, and ``dt``,
    seconds since the previous record, to each record."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.t0 = time.time()
        self.t_last = self.t0

    def format(self, record):
        record.dt0 = record.created - self.t0
        record.dt = record.created - self.t_last
        self.t_last = record.created
        return super().format(record)


def setup(filename='vrcheck.log', name='VRCheck', level=None):
    """Logger with elapsed-time console and file handlers.

    The console handler writes to stderr; stdout is reserved for
    rendered results.  Without ``level``, the logger passes DEBUG and
    both handlers emit INFO and above.

    The logger is not registered with `logging.getLogger`, so each
    `~vrcheck.VRCheck` session owns its handlers.

    """
    logger = logging.Logger(name)
    logger.setLevel(level if level else logging.DEBUG)

    formatter = ElapsedFormatter(LOG_FORMAT, DATE_FORMAT)
    for handler in (logging.StreamHandler(sys.stderr),
                    logging.FileHandler(filename)):
        if not level:
            handler.setLevel(logging.INFO)
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    return logger


class ProgressBar:
    """Sweep progress in tenths.

    Parameters
    ----------
    n : int
        Total number of steps.  An empty sweep is reported as one step.

    logger : logging.Logger, optional
        Report progress at INFO here, otherwise print to stderr.

    Examples
    --------
    with ProgressBar(config.profile_count, logger) as bar:
      for index, profile in iter_profiles(config):
        bar.update()

    """

    def __init__(self, n, logger=None):
        self.n = max(n, 1)
        self.logger = logger

    def __enter__(self):
        self.i = 0
        self.last_tenths = 0
        self._report(0)
        return self

    def __exit__(self, *args):
        pass

    def _report(self, tenths):
        msg = '#' * tenths + '-' * (10 - tenths)
        if self.logger:
            self.logger.info(msg)
        else:
            print(msg, file=sys.stderr)

    def update(self):
        self.i += 1
        tenths = int(self.i / self.n * 10)
        if tenths != self.last_tenths:
            self.last_tenths = tenths
            self._report(tenths)
