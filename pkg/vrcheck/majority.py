# Licensed with the 3-clause BSD license.  See LICENSE for details.
"""Majority decision rule.

For alternatives x and y, with N(.) counting individuals:

* x R y iff N(x R_i y) >= N(y R_i x)
* x P y iff N(x R_i y) >  N(y R_i x)
* x I y iff N(x R_i y) == N(y R_i x)

The choice set C(S) holds the members of S socially at least as good as
every member of S.

"""

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import NamedTuple

import numpy as np
from astropy.table import Table

from .exceptions import EmptySubsetError
from . import util

__all__ = [
    'PairTally',
    'SocialRelation',
    'TransitivityCheck',
    'tally',
    'social_relation',
    'is_transitive',
    'choice_set',
]


@dataclass(frozen=True)
class PairTally:
    """Individual counts for the pair (x, y)."""

    x: int
    y: int
    n_xPy: int
    n_yPx: int
    n_xIy: int

    @property
    def n(self):
        return self.n_xPy + self.n_yPx + self.n_xIy

    @property
    def n_xRy(self):
        return self.n_xPy + self.n_xIy

    @property
    def n_yRx(self):
        return self.n_yPx + self.n_xIy

    @property
    def margin(self):
        """+1 for x P y, 0 for x I y, -1 for y P x."""
        return int(np.sign(self.n_xRy - self.n_yRx))


class TransitivityCheck(NamedTuple):
    transitive: bool
    violation: tuple  # (x, y, z) with x R y, y R z, not x R z; or None

    def __bool__(self):
        return self.transitive


def _resolve(profile, alternatives):
    """Indices for names or indices; indices must lie in ``0 .. m-1``."""
    names = profile.alternatives
    indices = tuple(a if isinstance(a, (int, np.integer)) else names.index(a)
                    for a in alternatives)
    for a in indices:
        if not 0 <= a < names.m:
            raise IndexError('Alternative index {} out of range.'.format(a))
    return indices


def tally(profile, x, y):
    """Count individual preferences between ``x`` and ``y``.

    Parameters
    ----------
    profile : Profile

    x, y : int or str
        Alternative indices or names.

    Returns
    -------
    tally : PairTally

    """

    x, y = _resolve(profile, (x, y))
    if x == y:
        raise ValueError('tally needs two different alternatives')

    xPy = yPx = 0
    for ordering in profile:
        rx, ry = ordering.rank[x], ordering.rank[y]
        if rx < ry:
            xPy += 1
        elif ry < rx:
            yPx += 1

    return PairTally(x, y, xPy, yPx, profile.n - xPy - yPx)


@dataclass(frozen=True, eq=False)
class SocialRelation:
    """Majority relation over ``members``.

    ``matrix[a, b]`` is +1 when a P b, 0 when a I b, -1 when b P a,
    indexed by alternative index (rows and columns outside ``members``
    are unused).

    """

    alternatives: object
    members: tuple
    matrix: np.ndarray

    complete = True

    def weakly_prefers(self, x, y):
        return self.matrix[x, y] >= 0

    def prefers(self, x, y):
        return self.matrix[x, y] > 0

    def indifferent(self, x, y):
        return self.matrix[x, y] == 0

    @property
    def transitivity(self):
        return is_transitive(self)

    @property
    def transitive(self):
        return self.transitivity.transitive

    @property
    def p_transitive(self):
        return all(not (self.prefers(x, y) and self.prefers(y, z))
                   or self.prefers(x, z)
                   for x, y, z in permutations(self.members, 3))

    @property
    def i_transitive(self):
        return all(not (self.indifferent(x, y) and self.indifferent(y, z))
                   or self.indifferent(x, z)
                   for x, y, z in permutations(self.members, 3))

    def maximal(self, subset=None):
        """Alternatives of ``subset`` (default: all members) socially at
        least as good as every alternative of ``subset``."""
        subset = self.members if subset is None else tuple(subset)
        return [x for x in subset
                if all(self.weakly_prefers(x, y) for y in subset)]

    def chain(self):
        """Indifference classes, best first; requires transitivity."""
        if not self.transitive:
            raise ValueError('Only a transitive relation forms a chain.')
        score = {x: sum(self.weakly_prefers(x, y) for y in self.members)
                 for x in self.members}
        levels = sorted(set(score.values()), reverse=True)
        return [[x for x in self.members if score[x] == s] for s in levels]

    def format_chain(self):
        name = self.alternatives.name
        return ' > '.join('='.join(name(x) for x in c) for c in self.chain())

    def table(self):
        """P / I / P^-1 matrix as an `~astropy.table.Table`."""
        symbols = {1: 'P', 0: 'I', -1: 'P^-1'}
        name = self.alternatives.name
        tab = Table()
        tab['alt'] = [name(x) for x in self.members]
        for y in self.members:
            tab[name(y)] = ['' if x == y else symbols[self.matrix[x, y]]
                            for x in self.members]
        return tab

    def render(self):
        check = self.transitivity
        if check.transitive:
            lines = [self.format_chain()]
        else:
            lines = [util.table_to_text(self.table())]
        lines.append('transitive: ' + util.yes_no(check.transitive))
        if not check.transitive:
            lines.append('violation: ({})'.format(
                ','.join(self.alternatives.name(a) for a in check.violation)))
        lines.append('P-transitive: ' + util.yes_no(self.p_transitive))
        lines.append('I-transitive: ' + util.yes_no(self.i_transitive))
        return '\n'.join(lines)

    def to_dict(self):
        name = self.alternatives.name
        check = self.transitivity
        pairs = []
        for x, y in combinations(self.members, 2):
            relation = {1: 'P', 0: 'I', -1: 'P^-1'}[self.matrix[x, y]]
            pairs.append([name(x), relation, name(y)])
        return {
            'alternatives': [name(x) for x in self.members],
            'pairs': pairs,
            'transitive': check.transitive,
            'violation': (None if check.violation is None
                          else [name(a) for a in check.violation]),
            'p_transitive': self.p_transitive,
            'i_transitive': self.i_transitive,
            'chain': ([[name(x) for x in c] for c in self.chain()]
                      if check.transitive else None),
        }


def social_relation(profile, subset=None):
    """Majority relation of the profile.

    Parameters
    ----------
    profile : Profile

    subset : list of int or str, optional
        Restrict to these alternatives.

    Returns
    -------
    relation : SocialRelation

    """

    m = profile.alternatives.m
    members = (tuple(range(m)) if subset is None
               else tuple(sorted(set(_resolve(profile, subset)))))

    # ranks[j, a] is the class position of alternative a for individual j
    ranks = np.array([[o.rank[a] for a in range(m)] for o in profile])
    matrix = np.zeros((m, m), int)
    for x, y in combinations(members, 2):
        xPy = np.count_nonzero(ranks[:, x] < ranks[:, y])
        yPx = np.count_nonzero(ranks[:, y] < ranks[:, x])
        matrix[x, y] = np.sign(xPy - yPx)
        matrix[y, x] = -matrix[x, y]

    return SocialRelation(profile.alternatives, members, matrix)


def is_transitive(relation):
    """R-transitivity over every ordered triple of members.

    Returns
    -------
    check : TransitivityCheck
        With the first violating (x, y, z) in lexicographic index order,
        or ``None``.

    """

    for x, y, z in permutations(relation.members, 3):
        if (relation.weakly_prefers(x, y) and relation.weakly_prefers(y, z)
                and not relation.weakly_prefers(x, z)):
            return TransitivityCheck(False, (x, y, z))
    return TransitivityCheck(True, None)


def choice_set(profile, subset=None):
    """Majority choice set C(S).

    Parameters
    ----------
    profile : Profile

    subset : list of int or str, optional
        S; default is the full alternative set.

    Returns
    -------
    choice : list of int
        Sorted alternative indices; may be empty.

    """

    if subset is not None and len(subset) == 0:
        raise EmptySubsetError('The choice set needs a non-empty subset.')
    return social_relation(profile, subset).maximal()
