# Licensed with the 3-clause BSD license.  See LICENSE for details.
"""vrcheck command-line interface.

Exit status: 0 on success, 1 on input errors, 2 on invariant or
theorem violations.

"""

import sys
import json
import argparse

from .vrcheck import VRCheck
from .config import Config
from .core import format_ordering, format_profile
from .experiments import MODES, CULTURES, THEOREMS
from .prefmap import render_pm, render_ppm
from .restrictions import SCOPES
from .exceptions import InputError, InvariantViolation, UsageError
from . import util

__all__ = ['run', 'main']

SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _names(text):
    return [name.strip() for name in text.split(',') if name.strip()]


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON configuration file')
    common.add_argument('--log', help='log file')
    common.add_argument('--format', choices=('text', 'json'), default='text')
    common.add_argument('--debug', action='store_true')
    common.add_argument('--quiet', action='store_true',
                        help='log errors only')

    reader = argparse.ArgumentParser(add_help=False)
    reader.add_argument('--input', default='-',
                        help='profile file, or - for stdin')

    parser = _Parser(prog='vrcheck', description=(
        'Value restriction, not-strict value restriction, and majority '
        'rule diagnostics for weak-ordering profiles.'))
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    for command in ('show-pm', 'show-ppm'):
        sub = subparsers.add_parser(command, parents=[common, reader],
                                    help='per-individual preference maps')
        sub.add_argument('--triple', type=_names,
                         help='restrict to three alternatives: a,b,c')

    sub = subparsers.add_parser('restrictions', parents=[common, reader],
                                help='VR and NSVR per triple')
    sub.add_argument('--triple', type=_names)
    sub.add_argument('--vr-scope', dest='vr_scope', choices=SCOPES,
                     help='individuals entering VR (default: concerned)')

    subparsers.add_parser('social', parents=[common, reader],
                          help='majority relation and transitivity')

    sub = subparsers.add_parser('choice-set', parents=[common, reader],
                                help='majority choice set')
    sub.add_argument('--subset', type=_names,
                     help='alternatives a,b,... (default: all)')

    sub = subparsers.add_parser('validate', parents=[common],
                                help='theorem-validation experiments')
    sub.add_argument('--mode', choices=MODES, default='sample')
    sub.add_argument('--m', type=int, default=3)
    sub.add_argument('--n', type=int, default=3)
    sub.add_argument('--trials', type=int)
    sub.add_argument('--seed', type=int)
    sub.add_argument('--culture', choices=CULTURES)
    sub.add_argument('--cap', type=int)
    sub.add_argument('--theorem', choices=THEOREMS + ('both',),
                     default='both')
    sub.add_argument('--csv', help='append the summary row to this file')
    sub.add_argument('--counterexample-log', dest='counterexample_log')

    sub = subparsers.add_parser('gen', parents=[common],
                                help='random impartial-culture profile')
    sub.add_argument('--m', type=int, default=3)
    sub.add_argument('--n', type=int, default=3)
    sub.add_argument('--seed', type=int)
    sub.add_argument('--culture', choices=CULTURES)
    sub.add_argument('--cap', type=int)
    sub.add_argument('--output', help='write here instead of stdout')

    return parser


def _load(vrc, args):
    if args.input == '-':
        return vrc.load_profile(text=sys.stdin.read())
    try:
        return vrc.load_profile(filename=args.input)
    except OSError as exc:
        raise InputError('cannot read {}: {}'.format(
            args.input, exc.strerror)) from None


def _triple(vrc, profile, args):
    if getattr(args, 'triple', None) is None:
        return None
    return vrc.triple(profile, args.triple)


def _show_maps(vrc, args):
    profile = _load(vrc, args)
    triple = _triple(vrc, profile, args)
    alternatives = profile.alternatives
    rows = vrc.maps(profile, triple)
    pm_only = args.command == 'show-pm'

    if args.format == 'json':
        individuals = []
        for j, ordering, pm, ppm in rows:
            entry = {'individual': j,
                     'ordering': format_ordering(ordering, alternatives)}
            if pm_only:
                entry['pm'] = {alternatives.name(a): sorted(e)
                               for a, e in zip(pm.alternatives, pm.entries)}
            else:
                entry['alternatives'] = [alternatives.name(a)
                                         for a in ppm.alternatives]
                entry['ppm'] = util.fraction_matrix(ppm.matrix)
            individuals.append(entry)
        return {'triple': (None if triple is None
                           else list(triple.names(alternatives))),
                'individuals': individuals}

    blocks = []
    for j, ordering, pm, ppm in rows:
        body = (render_pm(pm, alternatives) if pm_only
                else render_ppm(ppm, alternatives))
        blocks.append('individual {}: {}\n{}'.format(
            j, format_ordering(ordering, alternatives), body))
    return '\n\n'.join(blocks)


def _restrictions(vrc, args):
    profile = _load(vrc, args)
    triple = _triple(vrc, profile, args)
    result = vrc.restrictions(profile, vr_scope=args.vr_scope, triple=triple)
    alternatives = profile.alternatives
    if args.format == 'json':
        return {
            'vr_scope': result.reports[0].vr_scope,
            'triples': [r.to_dict(alternatives) for r in result.reports],
            'summary': result.flags(),
        }
    blocks = [r.render(alternatives) for r in result.reports]
    blocks.append('\n'.join(result.summary_lines()))
    return '\n\n'.join(blocks)


def _social(vrc, args):
    relation = vrc.social(_load(vrc, args))
    if args.format == 'json':
        return relation.to_dict()
    return relation.render()


def _choice_set(vrc, args):
    profile = _load(vrc, args)
    choice = vrc.choice(profile, args.subset)
    subset = list(profile.alternatives) if args.subset is None \
        else args.subset
    if args.format == 'json':
        return {'subset': subset, 'choice_set': choice}
    return '{' + ', '.join(choice) + '}'


def _validate(vrc, args):
    config = vrc.experiment_config(
        mode=args.mode, m=args.m, n=args.n, trials=args.trials,
        seed=args.seed, culture=args.culture, cap=args.cap)
    theorems = THEOREMS if args.theorem == 'both' else (args.theorem,)
    summary = vrc.validate(config, theorems,
                           counterexample_log=args.counterexample_log)
    if args.csv is not None:
        summary.write_csv(args.csv, append=True)

    if args.format == 'json':
        output = summary.to_dict()
    else:
        output = summary.render()

    if summary.violations > 0:
        _emit(output, args)
        raise InvariantViolation('{} found'.format(
            util.plural(summary.violations, 'theorem violation')))
    return output


def _gen(vrc, args):
    profile = vrc.generate(m=args.m, n=args.n, seed=args.seed,
                           culture=args.culture)
    text = format_profile(profile)
    if args.output is not None:
        with open(args.output, 'w') as outf:
            outf.write(text)
    if args.format == 'json':
        return {'alternatives': list(profile.alternatives),
                'orderings': [format_ordering(o, profile.alternatives)
                              for o in profile]}
    return text.rstrip('\n')


_commands = {
    'show-pm': _show_maps,
    'show-ppm': _show_maps,
    'restrictions': _restrictions,
    'social': _social,
    'choice-set': _choice_set,
    'validate': _validate,
    'gen': _gen,
}


def _emit(output, args):
    if args.format == 'json':
        payload = {'schema_version': SCHEMA_VERSION, 'command': args.command}
        payload.update(output)
        print(json.dumps(payload, indent=2))
    else:
        print(output)


def run(argv=None):
    """Run one command.

    Parameters
    ----------
    argv : list of str, optional
        Command-line arguments, default ``sys.argv[1:]``.

    Returns
    -------
    status : int

    """

    try:
        args = _parser().parse_args(argv)
        config = Config.from_args(args)
        vrc = VRCheck(config=config, save_log=args.log is not None,
                      disable_log=args.quiet, debug=args.debug)
    except (InputError, IOError, ValueError) as exc:
        print('vrcheck: error: {}'.format(exc), file=sys.stderr)
        return 1

    with vrc:
        try:
            output = _commands[args.command](vrc, args)
        except InvariantViolation as exc:
            vrc.logger.error(str(exc))
            return 2
        except InputError as exc:
            print('vrcheck: error: {}'.format(exc), file=sys.stderr)
            return 1

        _emit(output, args)
    return 0


def main():
    sys.exit(run())
