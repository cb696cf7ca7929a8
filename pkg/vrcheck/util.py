# Licensed with the 3-clause BSD license.  See LICENSE for details.
"""utility closet"""
from fractions import Fraction

import numpy as np

VALUE_COLUMNS = ('B', 'M', 'W')


def format_fraction(value):
    """Exact rational as text: "0", "1", "1/2"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def fraction_matrix(rows):
    """Nested lists of fraction strings from an object array."""
    return [[format_fraction(v) for v in row] for row in np.asarray(rows)]


def table_to_text(tab):
    """Full-width, full-length text rendering of an astropy Table."""
    return '\n'.join(tab.pformat(max_lines=-1, max_width=-1))


def plural(n, word):
    return '{} {}{}'.format(n, word, '' if n == 1 else 's')


def yes_no(flag):
    return 'yes' if flag else 'no'
