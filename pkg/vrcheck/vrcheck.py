# Licensed with the 3-clause BSD license.  See LICENSE for details.
from logging import ERROR, DEBUG

from . import logging, core, prefmap, restrictions, majority, experiments, util
from .core import Triple, parse_profile, read_profile
from .experiments import ExperimentConfig
from .exceptions import InputError
from .config import Config


class VRCheck:
    """Preference profile diagnostics under majority rule.

    Parameters
    ----------
    config : vrcheck.config.Config, optional
        Use this configuration set.

    logger_name : string, optional
        Name of the logger.

    save_log : bool, optional
        Set to ``True`` to write the log to the log file.

    disable_log : bool, optional
        Set to ``True`` to disable normal logging; also sets
        ``save_log=False``.

    debug : bool, optional
        Log debugging messages.

    **kwargs
        If ``config`` is ``None``, pass these additional keyword
        arguments to ``Config`` initialization.

    """

    def __init__(self, config=None, logger_name='VRCheck', save_log=False,
                 disable_log=False, debug=False, **kwargs):
        self.config = Config(**kwargs) if config is None else config
        self.config.update(**kwargs)
        self.debug = debug

        if disable_log:
            save_log = False
            level = ERROR
        elif self.debug:
            level = DEBUG
        else:
            level = None

        fn = self.config['log'] if save_log else '/dev/null'
        self.logger = logging.setup(filename=fn, level=level, name=logger_name)

    def __enter__(self):
        return self

    def __exit__(self, *args):
        for handler in self.logger.handlers:
            handler.close()

    def load_profile(self, filename=None, text=None):
        """Read a profile from a file or from text.

        Parameters
        ----------
        filename : string, optional
            Profile file name.

        text : string, optional
            Profile text, used when ``filename`` is ``None``.

        Returns
        -------
        profile : `~vrcheck.core.Profile`

        """

        if filename is not None:
            profile = read_profile(filename)
            source = filename
        else:
            profile = parse_profile(text)
            source = 'text'

        self.logger.info('Read {} over {} from {}.'.format(
            util.plural(profile.n, 'ordering'),
            util.plural(profile.alternatives.m, 'alternative'), source))
        if profile.is_degenerate:
            self.logger.warning('Single-individual profile: majority '
                                'rule analyses are degenerate.')
        if profile.alternatives.m < 3:
            self.logger.warning('Fewer than three alternatives: no triples '
                                'to restrict.')
        return profile

    def triple(self, profile, names):
        """Canonical triple from three alternative names."""
        if len(names) != 3:
            raise InputError('A triple needs three alternatives: {}'
                             .format(','.join(names)))
        try:
            return Triple.from_names(profile.alternatives, names)
        except ValueError as exc:
            raise InputError(str(exc)) from None

    def maps(self, profile, triple=None):
        """Per-individual orderings, PMs, and PPMs.

        Parameters
        ----------
        profile : Profile

        triple : Triple, optional
            Restrict every ordering to this triple first.

        Returns
        -------
        rows : list of tuple
            ``(individual, ordering, pm, ppm)``, individuals 1-based.

        """

        rows = []
        for j, ordering in enumerate(profile, 1):
            if triple is not None:
                ordering = core.restrict_to_triple(ordering, triple)
            pm = prefmap.preference_map(ordering)
            rows.append((j, ordering, pm,
                         prefmap.possibility_preference_map(pm)))
        self.logger.debug('Computed {} preference maps.'.format(len(rows)))
        return rows

    def restrictions(self, profile, vr_scope=None, triple=None):
        """VR and NSVR reports.

        Parameters
        ----------
        profile : Profile

        vr_scope : string, optional
            'concerned' or 'all'; default from the configuration.

        triple : Triple, optional
            Report only this triple.

        Returns
        -------
        result : `~vrcheck.restrictions.ProfileRestrictions`

        """

        vr_scope = self.config['vr_scope'] if vr_scope is None else vr_scope
        if vr_scope not in restrictions.SCOPES:
            raise InputError('VR scope must be concerned or all: {}'
                             .format(vr_scope))

        if triple is None:
            result = restrictions.profile_restrictions(profile, vr_scope)
        else:
            result = restrictions.ProfileRestrictions(
                (restrictions.restriction_report(profile, triple, vr_scope),))

        self.logger.info('VR ({} scope) holds on {} of {} triples.'.format(
            vr_scope, sum(r.vr.holds for r in result.reports),
            len(result.reports)))
        return result

    def social(self, profile):
        """Majority relation of the profile."""
        relation = majority.social_relation(profile)
        check = relation.transitivity
        if check.transitive:
            self.logger.info('Social relation is transitive.')
        else:
            self.logger.info('Social relation is intransitive at ({}).'
                             .format(','.join(profile.alternatives.name(a)
                                              for a in check.violation)))
        return relation

    def choice(self, profile, subset=None):
        """Choice set names for ``subset`` (default: every alternative)."""
        choice = majority.choice_set(profile, subset)
        names = [profile.alternatives.name(a) for a in choice]
        if not names:
            self.logger.info('Empty choice set.')
        return names

    def experiment_config(self, mode='sample', m=3, n=3, trials=None,
                          seed=None, culture=None, cap=None):
        """ExperimentConfig with defaults from the configuration."""
        return ExperimentConfig(
            mode=mode, m=m, n=n,
            trials=self.config['trials'] if trials is None else trials,
            seed=self.config['seed'] if seed is None else seed,
            culture=self.config['culture'] if culture is None else culture,
            cap=self.config['cap'] if cap is None else cap)

    def validate(self, config, theorems=experiments.THEOREMS,
                 counterexample_log=None):
        """Run the theorem-validation harness.

        Parameters
        ----------
        config : `~vrcheck.experiments.ExperimentConfig`

        theorems : tuple of str, optional
            'sen' and/or 'pattanaik'.

        counterexample_log : string, optional
            Append counterexamples here; default from the
            configuration.

        Returns
        -------
        summary : `~vrcheck.experiments.ExperimentSummary`

        """

        if counterexample_log is None:
            counterexample_log = self.config['counterexample_log']
        return experiments.run_validation(
            config, theorems, logger=self.logger,
            counterexample_log=counterexample_log)

    def generate(self, m=3, n=3, seed=None, culture=None):
        """Random impartial-culture profile (trial 0 of ``seed``)."""
        config = self.experiment_config(m=m, n=n, seed=seed,
                                        culture=culture, trials=1)
        profile = experiments.generate_profile(
            config, experiments.trial_rng(config.seed, 0))
        self.logger.info('Generated {} profile, m={}, n={}, seed={}.'
                         .format(config.culture, m, n, config.seed))
        return profile
