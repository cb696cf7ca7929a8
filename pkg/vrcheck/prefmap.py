# Licensed with the 3-clause BSD license.  See LICENSE for details.
"""Preference maps and possibility preference maps.

For alternative x_i of a weak ordering, let A_i be the set of
alternatives strictly preferred to x_i and B_i its indifference class
(x_i included).  The preference map entry is the set of ranking
positions the alternative may occupy::

    PM_i = {|A_i| + 1, ..., |A_i| + |B_i|}

and the possibility preference map spreads one unit of possibility
evenly over those positions::

    PPM[i, k] = 1 / |PM_i|  if k in PM_i, else 0

Entries are exact `~fractions.Fraction` values held in numpy object
arrays, so every threshold test (``== 0``, ``< 1``, ``== 1``) is exact.

"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from astropy.table import Table

from .core import WeakOrdering
from . import util

__all__ = [
    'PreferenceMap',
    'PossibilityPreferenceMap',
    'ValueAssignment',
    'preference_map',
    'possibility_preference_map',
    'ordering_ppm',
    'value_assignment_kind',
    'ordering_from_preference_map',
    'preference_map_from_ppm',
    'is_doubly_stochastic',
    'is_permutation_matrix',
    'render_pm',
    'render_ppm',
]


@dataclass(frozen=True)
class PreferenceMap:
    """Per-alternative sets of occupied ranking positions.

    Parameters
    ----------
    alternatives : tuple of int
        Row labels, in registry order.

    entries : tuple of frozenset of int
        ``entries[r]`` is the 1-based position set of
        ``alternatives[r]``.

    """

    alternatives: tuple
    entries: tuple

    @property
    def m(self):
        return len(self.alternatives)

    def __getitem__(self, alternative):
        return self.entries[self.alternatives.index(alternative)]


@dataclass(frozen=True, eq=False)
class PossibilityPreferenceMap:
    """m x m matrix of position-occupancy possibilities.

    Rows follow ``alternatives``; column ``k - 1`` is position ``k``.
    The matrix is a read-only numpy object array of Fractions.

    """

    alternatives: tuple
    matrix: np.ndarray

    @property
    def m(self):
        return len(self.alternatives)

    def __eq__(self, other):
        if not isinstance(other, PossibilityPreferenceMap):
            return NotImplemented
        return (self.alternatives == other.alternatives
                and self.matrix.tolist() == other.matrix.tolist())

    def row(self, alternative):
        return self.matrix[self.alternatives.index(alternative)]


class ValueAssignment(enum.Enum):
    STRICT = 'strict'
    NOT_STRICT = 'not-strict'
    EXCLUDED = 'excluded'


def preference_map(ordering):
    """Preference map of a weak ordering.

    Parameters
    ----------
    ordering : WeakOrdering

    Returns
    -------
    pm : PreferenceMap
        Rows in registry order of the ordering's alternatives.

    """

    positions = {}
    above = 0  # |A_i| for every member of the current class
    for c in ordering.classes:
        entry = frozenset(range(above + 1, above + len(c) + 1))
        for a in c:
            positions[a] = entry
        above += len(c)

    alternatives = ordering.members
    return PreferenceMap(alternatives,
                         tuple(positions[a] for a in alternatives))


def possibility_preference_map(pm):
    """Possibility preference map of a preference map.

    Parameters
    ----------
    pm : PreferenceMap

    Returns
    -------
    ppm : PossibilityPreferenceMap

    """

    m = pm.m
    matrix = np.full((m, m), Fraction(0), dtype=object)
    for r, entry in enumerate(pm.entries):
        share = Fraction(1, len(entry))
        for k in entry:
            matrix[r, k - 1] = share

    matrix.flags.writeable = False
    return PossibilityPreferenceMap(pm.alternatives, matrix)


@lru_cache(maxsize=4096)
def ordering_ppm(ordering):
    """Memoised ordering -> PM -> PPM."""
    return possibility_preference_map(preference_map(ordering))


def value_assignment_kind(ppm, i, k):
    """Kind of value the individual assigns alternative ``i`` at ``k``.

    Parameters
    ----------
    ppm : PossibilityPreferenceMap

    i : int
        1-based row (x_1 ... x_m).

    k : int
        1-based position (for triples: 1 best, 2 medium, 3 worst).

    Returns
    -------
    kind : ValueAssignment

    """

    m = ppm.m
    if not (1 <= i <= m and 1 <= k <= m):
        raise IndexError('PPM cell ({}, {}) out of range for m={}'
                         .format(i, k, m))

    value = ppm.matrix[i - 1, k - 1]
    if value == 1:
        return ValueAssignment.STRICT
    elif value == 0:
        return ValueAssignment.EXCLUDED
    return ValueAssignment.NOT_STRICT


def ordering_from_preference_map(pm):
    """Alternatives sharing a PM entry form one indifference class."""
    classes = {}
    for a, entry in zip(pm.alternatives, pm.entries):
        classes.setdefault(min(entry), set()).add(a)
    return WeakOrdering(tuple(frozenset(classes[k]) for k in sorted(classes)))


def preference_map_from_ppm(ppm):
    """PM recovered from the supports of the PPM rows."""
    entries = tuple(frozenset(int(k) + 1 for k in np.flatnonzero(row != 0))
                    for row in ppm.matrix)
    return PreferenceMap(ppm.alternatives, entries)


def is_doubly_stochastic(ppm):
    one = Fraction(1)
    return (all(s == one for s in ppm.matrix.sum(axis=1))
            and all(s == one for s in ppm.matrix.sum(axis=0)))


def is_permutation_matrix(ppm):
    return (all(v == 0 or v == 1 for v in ppm.matrix.flat)
            and is_doubly_stochastic(ppm))


def render_pm(pm, alternatives):
    """``name: {p,...}`` lines."""
    return '\n'.join(
        '{}: {{{}}}'.format(alternatives.name(a),
                            ','.join(str(k) for k in sorted(entry)))
        for a, entry in zip(pm.alternatives, pm.entries))


def ppm_table(ppm, alternatives):
    """PPM as an `~astropy.table.Table` of rational strings.

    Columns are B, M, W for triples, else the positions 1..m.

    """

    if ppm.m == 3:
        columns = util.VALUE_COLUMNS
    else:
        columns = [str(k) for k in range(1, ppm.m + 1)]

    tab = Table()
    tab['alt'] = [alternatives.name(a) for a in ppm.alternatives]
    for k, name in enumerate(columns):
        tab[name] = [util.format_fraction(v) for v in ppm.matrix[:, k]]
    return tab


def render_ppm(ppm, alternatives):
    return util.table_to_text(ppm_table(ppm, alternatives))
