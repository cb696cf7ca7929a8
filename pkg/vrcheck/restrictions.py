# Licensed with the 3-clause BSD license.  See LICENSE for details.
"""Value restriction and not-strict value restriction on triples.

Both conditions are decided from the table of maxima over individuals
of the triple PPMs,

    T[i, k] = max_j PPM_j[i, k],

* value restriction (VR): some cell of T is 0.  Column k = 1, 2, 3 gives
  the not-best (NB), not-medium (NM), and not-worst (NW) patterns.
* not-strict value restriction: some cell of column k is below 1, for
  the not-strict best (NSB), medium (NSM), and worst (NSW) patterns.

Per triple, NW is sometimes called single-peaked, NB single-caved, and
NM two-group-separated; see `ValueLabel.alias`.  These are facts about
one triple, not about an axis over the whole alternative set.

VR is evaluated over concerned individuals by default.  An individual
indifferent between all three alternatives has every PPM entry equal to
1/3 and would otherwise block VR.  ``scope='all'`` keeps every
individual.  NSVR always uses every individual; unconcerned individuals
cannot block a "< 1" test.

The ``classical_*`` oracles decide the same conditions directly from
the preference relations without building any PPM.

"""

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from astropy.table import Table

from .core import enumerate_triples, is_concerned, restrict_to_triple
from .prefmap import ordering_ppm
from .exceptions import VacuousTableError
from . import util

__all__ = [
    'ValueLabel',
    'SCOPES',
    'TriplePPM',
    'VRVerdict',
    'NSVRVerdict',
    'RestrictionReport',
    'ProfileRestrictions',
    'triple_ppms',
    'minmax_table',
    'check_vr',
    'check_nsvr',
    'classical_vr_oracle',
    'classical_nsvr_oracle',
    'restriction_report',
    'profile_restrictions',
]

SCOPES = ('concerned', 'all')


class ValueLabel(enum.IntEnum):
    """Triple positions: best = 1, medium = 2, worst = 3."""

    BEST = 1
    MEDIUM = 2
    WORST = 3

    @property
    def column(self):
        return util.VALUE_COLUMNS[self - 1]

    @property
    def vr_name(self):
        return 'N' + self.column

    @property
    def nsvr_name(self):
        return 'NS' + self.column

    @property
    def alias(self):
        return {ValueLabel.BEST: 'single-caved',
                ValueLabel.MEDIUM: 'two-group-separated',
                ValueLabel.WORST: 'single-peaked'}[self]


class TriplePPM(NamedTuple):
    individual: int  # 1-based
    ppm: object


@dataclass(frozen=True)
class VRVerdict:
    """VR verdict.

    ``witnesses`` holds every (alternative, ValueLabel) pair taken by no
    scoped individual, ordered by label then alternative.

    """

    holds: bool
    witnesses: tuple
    vacuous: bool = False


@dataclass(frozen=True)
class NSVRVerdict:
    """Not-strict verdict for one label.

    ``witnesses`` are the alternatives strictly ``label`` for no
    individual; ``values`` their table maxima (empty from the oracle).

    """

    label: ValueLabel
    holds: bool
    witnesses: tuple
    values: tuple = field(default=(), compare=False)


def _check_scope(scope):
    if scope not in SCOPES:
        raise ValueError('scope must be one of {}: {}'
                         .format(', '.join(SCOPES), scope))


def triple_ppms(profile, t, scope='all'):
    """Individuals' 3 x 3 PPMs over triple ``t``.

    Parameters
    ----------
    profile : Profile

    t : Triple

    scope : string, optional
        'all' individuals, or only 'concerned' ones.

    Returns
    -------
    ppms : list of TriplePPM
        Retained individuals with their original 1-based ids; may be
        empty.

    """

    _check_scope(scope)
    ppms = []
    for j, ordering in enumerate(profile.orderings, 1):
        restricted = restrict_to_triple(ordering, t)
        if scope == 'concerned' and not is_concerned(restricted):
            continue
        ppms.append(TriplePPM(j, ordering_ppm(restricted)))
    return ppms


def minmax_table(ppms):
    """Cellwise maximum over individuals.

    Parameters
    ----------
    ppms : list of PossibilityPreferenceMap or TriplePPM

    Returns
    -------
    table : numpy object array of Fraction

    Raises
    ------
    VacuousTableError
        For an empty list.

    """

    if len(ppms) == 0:
        raise VacuousTableError('No individuals in scope.')

    matrices = [getattr(p, 'ppm', p).matrix for p in ppms]
    return np.stack(matrices).max(axis=0)


def _vacuous_vr(t):
    return VRVerdict(True, tuple((a, label) for label in ValueLabel
                                 for a in t), vacuous=True)


def _vr_from_table(t, table):
    witnesses = tuple((t[r], label) for label in ValueLabel
                      for r in range(3) if table[r, label - 1] == 0)
    return VRVerdict(len(witnesses) > 0, witnesses)


def _nsvr_from_table(t, table):
    verdicts = {}
    for label in ValueLabel:
        column = table[:, label - 1]
        rows = [r for r in range(3) if column[r] < 1]
        verdicts[label] = NSVRVerdict(
            label, len(rows) > 0, tuple(t[r] for r in rows),
            values=tuple(column[r] for r in rows))
    return verdicts


def check_vr(profile, t, scope='concerned'):
    """Value restriction on a triple.

    Parameters
    ----------
    profile : Profile

    t : Triple

    scope : string, optional
        'concerned' or 'all'.

    Returns
    -------
    verdict : VRVerdict
        With no individual in scope, VR holds vacuously with all nine
        witnesses.

    """

    try:
        table = minmax_table(triple_ppms(profile, t, scope))
    except VacuousTableError:
        return _vacuous_vr(t)

    return _vr_from_table(t, table)


def check_nsvr(profile, t):
    """Not-strict value restriction on a triple, every individual.

    Returns
    -------
    verdicts : dict
        `ValueLabel` -> `NSVRVerdict`, in label order.

    """
    return _nsvr_from_table(t, minmax_table(triple_ppms(profile, t, 'all')))


def _scoped(profile, t, scope):
    _check_scope(scope)
    restricted = [restrict_to_triple(o, t) for o in profile.orderings]
    if scope == 'concerned':
        restricted = [o for o in restricted if is_concerned(o)]
    return restricted


def classical_vr_oracle(profile, t, scope='concerned'):
    """Value restriction from the preference relations.

    Alternative ``a`` can be best for an individual when nothing in the
    triple is strictly preferred to it, worst when it is strictly
    preferred to nothing, and medium unless it is strictly above both
    others or strictly below both others.

    """

    restricted = _scoped(profile, t, scope)
    taken = set()
    for o in restricted:
        for a in t:
            others = [b for b in t if b != a]
            above = sum(o.prefers(b, a) for b in others)
            below = sum(o.prefers(a, b) for b in others)
            if above == 0:
                taken.add((a, ValueLabel.BEST))
            if below == 0:
                taken.add((a, ValueLabel.WORST))
            if above < 2 and below < 2:
                taken.add((a, ValueLabel.MEDIUM))

    witnesses = tuple((a, label) for label in ValueLabel for a in t
                      if (a, label) not in taken)
    return VRVerdict(len(witnesses) > 0, witnesses,
                     vacuous=len(restricted) == 0)


def classical_nsvr_oracle(profile, t):
    """Not-strict value restriction from the preference relations."""
    strict = set()
    for o in _scoped(profile, t, 'all'):
        for a in t:
            others = [b for b in t if b != a]
            above = sum(o.prefers(b, a) for b in others)
            below = sum(o.prefers(a, b) for b in others)
            if below == 2:
                strict.add((a, ValueLabel.BEST))
            elif above == 2:
                strict.add((a, ValueLabel.WORST))
            elif above == 1 and below == 1:
                strict.add((a, ValueLabel.MEDIUM))

    verdicts = {}
    for label in ValueLabel:
        witnesses = tuple(a for a in t if (a, label) not in strict)
        verdicts[label] = NSVRVerdict(label, len(witnesses) > 0, witnesses)
    return verdicts


@dataclass(frozen=True, eq=False)
class RestrictionReport:
    """VR and NSVR facts for one triple.

    ``minmax_values`` is the table over the VR scope (``None`` when VR
    is vacuous); ``nsvr_values`` is the table over every individual.

    """

    triple: object
    n: int
    concerned_count: int
    vr_scope: str
    vr: VRVerdict
    nsvr: dict
    minmax_values: object
    nsvr_values: object

    @property
    def odd_concerned(self):
        return self.concerned_count % 2 == 1

    def vr_line(self, alternatives):
        if not self.vr.holds:
            return 'VR: FAILS'
        witnesses = ', '.join('{}({})'.format(label.vr_name,
                                              alternatives.name(a))
                              for a, label in self.vr.witnesses)
        vacuous = ' (vacuous: no concerned individuals)' \
            if self.vr.vacuous else ''
        return 'VR: HOLDS{} [{}]'.format(vacuous, witnesses)

    def nsvr_lines(self, alternatives):
        lines = []
        for label, verdict in self.nsvr.items():
            if verdict.holds:
                witnesses = ', '.join(
                    '{}:{}'.format(alternatives.name(a),
                                   util.format_fraction(v))
                    for a, v in zip(verdict.witnesses, verdict.values))
                lines.append('{}: HOLDS [{}]'.format(label.nsvr_name,
                                                     witnesses))
            else:
                lines.append('{}: FAILS'.format(label.nsvr_name))
        return lines

    def table(self, alternatives):
        values = (self.nsvr_values if self.minmax_values is None
                  else self.minmax_values)
        tab = Table()
        tab['alt'] = [alternatives.name(a) for a in self.triple]
        for k, name in enumerate(util.VALUE_COLUMNS):
            tab[name] = [util.format_fraction(v) for v in values[:, k]]
        return tab

    def render(self, alternatives):
        lines = ['triple {}: {}, {} concerned'.format(
            self.triple.format(alternatives),
            util.plural(self.n, 'individual'), self.concerned_count)]
        lines.append(util.table_to_text(self.table(alternatives)))
        lines.append(self.vr_line(alternatives))
        lines.extend(self.nsvr_lines(alternatives))
        return '\n'.join(lines)

    def to_dict(self, alternatives):
        name = alternatives.name
        return {
            'triple': list(self.triple.names(alternatives)),
            'n': self.n,
            'concerned_count': self.concerned_count,
            'vr_scope': self.vr_scope,
            'vr': {
                'holds': self.vr.holds,
                'vacuous': self.vr.vacuous,
                'witnesses': [[name(a), label.vr_name]
                              for a, label in self.vr.witnesses],
            },
            'nsvr': {
                label.nsvr_name: {
                    'holds': verdict.holds,
                    'witnesses': [[name(a), util.format_fraction(v)]
                                  for a, v in zip(verdict.witnesses,
                                                  verdict.values)],
                } for label, verdict in self.nsvr.items()
            },
            'minmax_values': (None if self.minmax_values is None
                              else util.fraction_matrix(self.minmax_values)),
            'nsvr_values': util.fraction_matrix(self.nsvr_values),
        }


def restriction_report(profile, t, vr_scope='concerned'):
    """Full VR/NSVR report for triple ``t``."""
    _check_scope(vr_scope)
    everyone = triple_ppms(profile, t, 'all')
    nsvr_values = minmax_table(everyone)
    concerned = triple_ppms(profile, t, 'concerned')
    scoped = concerned if vr_scope == 'concerned' else everyone

    if scoped:
        minmax_values = minmax_table(scoped)
        vr = _vr_from_table(t, minmax_values)
    else:
        minmax_values = None
        vr = _vacuous_vr(t)

    return RestrictionReport(
        triple=t, n=profile.n, concerned_count=len(concerned),
        vr_scope=vr_scope, vr=vr, nsvr=_nsvr_from_table(t, nsvr_values),
        minmax_values=minmax_values, nsvr_values=nsvr_values)


@dataclass(frozen=True, eq=False)
class ProfileRestrictions:
    """Per-triple reports and profile-level flags."""

    reports: tuple

    @property
    def vr_all(self):
        return all(r.vr.holds for r in self.reports)

    def nsvr_all(self, label):
        return all(r.nsvr[label].holds for r in self.reports)

    @property
    def nsb_all(self):
        return self.nsvr_all(ValueLabel.BEST)

    @property
    def nsm_all(self):
        return self.nsvr_all(ValueLabel.MEDIUM)

    @property
    def nsw_all(self):
        return self.nsvr_all(ValueLabel.WORST)

    @property
    def odd_concerned_all(self):
        return all(r.odd_concerned for r in self.reports)

    def flags(self):
        return {
            'vr_all_triples': self.vr_all,
            'nsb_all_triples': self.nsb_all,
            'nsm_all_triples': self.nsm_all,
            'nsw_all_triples': self.nsw_all,
            'odd_concerned_all_triples': self.odd_concerned_all,
        }

    def summary_lines(self):
        return [
            'VR on all triples: ' + util.yes_no(self.vr_all),
            'NSB on all triples: ' + util.yes_no(self.nsb_all),
            'NSM on all triples: ' + util.yes_no(self.nsm_all),
            'NSW on all triples: ' + util.yes_no(self.nsw_all),
            'odd concerned count on all triples: '
            + util.yes_no(self.odd_concerned_all),
        ]


def profile_restrictions(profile, vr_scope='concerned'):
    """Reports for every triple of the profile's alternative set."""
    return ProfileRestrictions(tuple(
        restriction_report(profile, t, vr_scope)
        for t in enumerate_triples(profile.alternatives)))
