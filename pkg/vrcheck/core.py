# Licensed with the 3-clause BSD license.  See LICENSE for details.
"""Alternatives, weak orderings, and preference profiles.

A weak ordering is stored as an ordered partition of alternative
indices into indifference classes, best class first.  All objects are
immutable after construction.

Profile text format::

    # comment
    alternatives: w x y z
    w=x>y>z
    x=w>z>y

The header is optional; without it the registry is inferred from the
first ordering line in order of first appearance.

"""

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from string import ascii_lowercase

from .exceptions import (ProfileParseError, UnknownAlternativeError,
                         NoTriplesError)

__all__ = [
    'AlternativeSet',
    'WeakOrdering',
    'Profile',
    'Triple',
    'parse_ordering',
    'format_ordering',
    'restrict_to_triple',
    'is_concerned',
    'enumerate_triples',
    'parse_profile',
    'read_profile',
    'format_profile',
]

_name_pattern = re.compile(r'^[^\s>=#,:]+$')
_separator_pattern = re.compile(r'\s*([>=])\s*')


@dataclass(frozen=True)
class AlternativeSet:
    """Ordered registry of alternative names.

    Parameters
    ----------
    names : tuple of str
        Distinct, non-empty names; the position in the tuple is the
        alternative's index.

    """

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, 'names', names)
        if len(names) < 2:
            raise ValueError('At least two alternatives are required.')
        for name in names:
            if not isinstance(name, str) or not _name_pattern.match(name):
                raise ValueError('Invalid alternative name: {!r}'.format(name))
        if len(set(names)) != len(names):
            raise ValueError('Alternative names must be unique: {}'
                             .format(' '.join(names)))

    @classmethod
    def default(cls, m):
        """Registry ``a, b, c, ...`` (``a1, a2, ...`` beyond 26)."""
        if m <= len(ascii_lowercase):
            return cls(tuple(ascii_lowercase[:m]))
        return cls(tuple('a{}'.format(i + 1) for i in range(m)))

    @cached_property
    def _lookup(self):
        return {name: i for i, name in enumerate(self.names)}

    @property
    def m(self):
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._lookup

    def index(self, name):
        """Index of alternative ``name``."""
        try:
            return self._lookup[name]
        except KeyError:
            raise UnknownAlternativeError(
                'Unknown alternative: {}'.format(name)) from None

    def indices(self, names):
        return tuple(self.index(name) for name in names)

    def name(self, i):
        return self.names[i]


@dataclass(frozen=True)
class WeakOrdering:
    """Ordered partition into indifference classes, best class first.

    Parameters
    ----------
    classes : tuple of frozenset of int
        Non-empty, pairwise disjoint sets of alternative indices.

    """

    classes: tuple

    def __post_init__(self):
        classes = tuple(frozenset(c) for c in self.classes)
        object.__setattr__(self, 'classes', classes)
        seen = set()
        for c in classes:
            if len(c) == 0:
                raise ValueError('Empty indifference class.')
            if seen & c:
                raise ValueError('Alternative listed in two classes.')
            seen |= c

    @classmethod
    def from_ranks(cls, ranks):
        """Build from a mapping (or sequence) of alternative -> rank.

        Lower ranks are better; equal ranks are indifferent.

        """
        if not isinstance(ranks, dict):
            ranks = dict(enumerate(ranks))
        levels = sorted(set(ranks.values()))
        return cls(tuple(frozenset(a for a, r in ranks.items() if r == level)
                         for level in levels))

    @classmethod
    def linear(cls, order):
        """Strict ordering, best first."""
        return cls(tuple(frozenset((a,)) for a in order))

    @cached_property
    def rank(self):
        """Mapping alternative -> class position (0 = best)."""
        return {a: k for k, c in enumerate(self.classes) for a in c}

    @cached_property
    def members(self):
        return tuple(sorted(self.rank))

    @property
    def is_linear(self):
        return all(len(c) == 1 for c in self.classes)

    def __len__(self):
        return len(self.rank)

    def prefers(self, x, y):
        """x P y"""
        return self.rank[x] < self.rank[y]

    def indifferent(self, x, y):
        """x I y"""
        return self.rank[x] == self.rank[y]

    def weakly_prefers(self, x, y):
        """x R y"""
        return self.rank[x] <= self.rank[y]


@dataclass(frozen=True)
class Triple:
    """Three distinct alternative indices in registry order."""

    indices: tuple

    def __post_init__(self):
        indices = tuple(self.indices)
        object.__setattr__(self, 'indices', indices)
        if len(indices) != 3:
            raise ValueError('A triple has exactly three alternatives.')
        if not (indices[0] < indices[1] < indices[2]):
            raise ValueError('Triple indices must be strictly increasing: {}'
                             .format(indices))

    @classmethod
    def from_names(cls, alternatives, names):
        """Canonical triple from three registered names, any order."""
        indices = alternatives.indices(names)
        if len(set(indices)) != 3:
            raise ValueError('A triple has exactly three distinct '
                             'alternatives.')
        return cls(tuple(sorted(indices)))

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return 3

    def __getitem__(self, k):
        return self.indices[k]

    def names(self, alternatives):
        return tuple(alternatives.name(i) for i in self.indices)

    def format(self, alternatives):
        return '({})'.format(','.join(self.names(alternatives)))


@dataclass(frozen=True)
class Profile:
    """One weak ordering per individual over a shared registry.

    Parameters
    ----------
    alternatives : AlternativeSet

    orderings : tuple of WeakOrdering
        Each ordering must cover every registered alternative.

    """

    alternatives: AlternativeSet
    orderings: tuple

    def __post_init__(self):
        orderings = tuple(self.orderings)
        object.__setattr__(self, 'orderings', orderings)
        if len(orderings) == 0:
            raise ValueError('A profile needs at least one individual.')
        everything = tuple(range(self.alternatives.m))
        for j, ordering in enumerate(orderings):
            if ordering.members != everything:
                raise ValueError(
                    'Ordering of individual {} does not cover the '
                    'alternative set.'.format(j + 1))

    @property
    def n(self):
        return len(self.orderings)

    def __len__(self):
        return len(self.orderings)

    def __iter__(self):
        return iter(self.orderings)

    @property
    def is_degenerate(self):
        """Single-individual profile."""
        return self.n < 2

    def restricted(self, t):
        """Orderings restricted to triple ``t``."""
        return [restrict_to_triple(ordering, t) for ordering in self.orderings]

    def concerned_count(self, t):
        return sum(is_concerned(o) for o in self.restricted(t))

    def relabel(self, permutation):
        """Rename alternative ``i`` as alternative ``permutation[i]``.

        The registry names move with the alternatives, so rendered
        output is unchanged while all indices are permuted.

        """
        names = [None] * self.alternatives.m
        for i, p in enumerate(permutation):
            names[p] = self.alternatives.name(i)
        orderings = tuple(
            WeakOrdering(tuple(frozenset(permutation[a] for a in c)
                               for c in ordering.classes))
            for ordering in self.orderings)
        return Profile(AlternativeSet(tuple(names)), orderings)

    def permute_individuals(self, order):
        return Profile(self.alternatives,
                       tuple(self.orderings[j] for j in order))


def parse_ordering(text, alternatives):
    """Parse "w=x>y>z" syntax.

    Parameters
    ----------
    text : string
        Alternative names separated by ">" (strict) and "=" (indifferent).

    alternatives : AlternativeSet
        Every registered alternative must appear exactly once.

    Returns
    -------
    ordering : WeakOrdering

    """

    parts = _separator_pattern.split(text.strip())
    tokens = parts[0::2]
    separators = parts[1::2]

    for k, token in enumerate(tokens):
        if token == '':
            between_strict = (0 < k < len(tokens) - 1
                              and separators[k - 1] == '>'
                              and separators[k] == '>')
            if between_strict:
                raise ProfileParseError('empty class in "{}"'.format(text))
            raise ProfileParseError(
                'malformed separator sequence in "{}"'.format(text))

    classes = [[tokens[0]]]
    for sep, token in zip(separators, tokens[1:]):
        if sep == '>':
            classes.append([token])
        else:
            classes[-1].append(token)

    seen = set()
    for token in tokens:
        if token not in alternatives:
            raise ProfileParseError('unknown alternative "{}"'.format(token))
        if token in seen:
            raise ProfileParseError(
                'alternative "{}" listed more than once'.format(token))
        seen.add(token)

    missing = [name for name in alternatives if name not in seen]
    if missing:
        raise ProfileParseError('missing alternative{} {}'.format(
            '' if len(missing) == 1 else 's', ', '.join(missing)))

    return WeakOrdering(tuple(frozenset(alternatives.indices(c))
                              for c in classes))


def format_ordering(ordering, alternatives):
    """Canonical "=/>" form: class members in registry order."""
    return '>'.join('='.join(alternatives.name(a) for a in sorted(c))
                    for c in ordering.classes)


@lru_cache(maxsize=65536)
def restrict_to_triple(ordering, t):
    """Project a weak ordering onto the three alternatives of ``t``.

    Relative preferences are preserved; classes left empty by the
    projection are dropped.

    """

    rank = ordering.rank
    for a in t:
        if a not in rank:
            raise IndexError('Alternative index {} is not in the ordering.'
                             .format(a))

    keep = frozenset(t)
    return WeakOrdering(tuple(c & keep for c in ordering.classes if c & keep))


def is_concerned(ordering):
    """``False`` iff the individual is indifferent between everything."""
    return len(ordering.classes) > 1


def enumerate_triples(alternatives):
    """All canonical triples, in lexicographic order."""
    if alternatives.m < 3:
        raise NoTriplesError('{} alternatives form no triples.'
                             .format(alternatives.m))
    return [Triple(t) for t in combinations(range(alternatives.m), 3)]


def _strip_comment(line):
    return line.split('#', 1)[0].strip()


def parse_profile(text):
    """Parse the profile text format.

    Returns
    -------
    profile : Profile

    Raises
    ------
    ProfileParseError
        With the 1-based line number of the offending line.

    """

    alternatives = None
    orderings = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = _strip_comment(line)
        if line == '':
            continue

        if line.lower().startswith('alternatives:'):
            if alternatives is not None or orderings:
                raise ProfileParseError(
                    'the alternatives header must precede all orderings',
                    line=lineno)
            names = line.split(':', 1)[1].split()
            try:
                alternatives = AlternativeSet(tuple(names))
            except ValueError as exc:
                raise ProfileParseError(str(exc), line=lineno) from None
            continue

        if alternatives is None:
            names = []
            for token in _separator_pattern.split(line)[0::2]:
                if token and token not in names:
                    names.append(token)
            try:
                alternatives = AlternativeSet(tuple(names))
            except ValueError as exc:
                raise ProfileParseError(str(exc), line=lineno) from None

        try:
            orderings.append(parse_ordering(line, alternatives))
        except ProfileParseError as exc:
            raise ProfileParseError(str(exc), line=lineno) from None

    if not orderings:
        raise ProfileParseError('profile contains no orderings')

    return Profile(alternatives, tuple(orderings))


def read_profile(filename):
    """Read a profile file; see `parse_profile`."""
    with open(filename) as inf:
        return parse_profile(inf.read())


def format_profile(profile, header=True):
    """Profile text format, with the alternatives header."""
    lines = []
    if header:
        lines.append('alternatives: ' + ' '.join(profile.alternatives))
    lines.extend(format_ordering(o, profile.alternatives) for o in profile)
    return '\n'.join(lines) + '\n'
