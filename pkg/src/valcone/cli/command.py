# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.

import json

from valcone import checks, classify, configfile, cones, invariants, oracle, polyparse, valuation_core
from valcone.cli import token
from valcone.cli.exceptions import INVALID_INPUT, NEGATIVE_RESULT, SUCCESS, CommandError
from valcone.exceptions import ConeError


class CommandToken(token.Token):
    """CommandToken: a Token which grabs one of the command words.

    Returns the Command subclass corresponding to the command. (A class
    object, not an instance of it.)

    Class field:

    verb_map -- a dict mapping words to Command subclasses.
    """

    prompt = 'command'

    verb_map = None

    def __init__(self):
        # The verb_map only needs to be initialized the first time a
        # CommandToken is created.
        if CommandToken.verb_map is None:
            CommandToken.verb_map = {}
            for cmd in command_list:
                for verb in [cmd.name] + cmd.synonyms:
                    CommandToken.verb_map[verb] = cmd

    def accept(self, source):
        val = source.pop_word(self)
        val = val.lower()
        cmdclass = CommandToken.verb_map.get(val)
        if not cmdclass:
            raise CommandError('Unknown command: "' + val + '".' +
                               ' (Type "valcone help" for a list of commands.)')
        return cmdclass


class Command:
    """Command: represents a possible command. Each subclass of Command
    represents one command (ClassifyCmd, ConeCmd, etc).

    Class fields:

    name -- the basic command word
    synonyms -- a list of alternate words which are accepted for the command
    description -- one-line description of the command
    help -- more detailed help for the command

    Methods:

    perform() -- carry out the command
    assert_done() -- ensure that the input has been exhausted
    """

    name = '<unknown>'
    synonyms = []
    description = '<unknown>'
    help = None

    def __repr__(self):
        return '<Command \'' + self.name + '\'>'

    def perform(self, source):
        """perform(source) -> int or None

        Carry out the command, and return the exit code (None meaning
        success). Each Command subclass must override this.
        """
        raise NotImplementedError('command \'' + self.name + '\'')

    def assert_done(self, source):
        """assert_done(source) -> None

        Ensure that the input has been exhausted. If it has not, raise a
        CommandError.
        """

        if not source.is_empty():
            val = ' '.join(source.drain())
            raise CommandError('Unexpected stuff after your command: "' + val + '".')


def output_format(opts):
    """output_format(opts) -> 'json' or 'text'
    """
    if opts.get('--json') and opts.get('--text'):
        raise CommandError('Choose one of --json and --text')
    if opts.get('--text'):
        return 'text'
    return 'json'


def emit(obj):
    print(configfile.dump_json(obj))


FORMAT_OPTIONS = {'--json': token.FLAG, '--text': token.FLAG}


class ClassifyCmd(Command):
    name = 'classify'
    description = 'Classify a valuation as special or not, and its sign at infinity'
    help = """
"classify FILE"
"classify FILE --text"
"classify FILE --truncations"

Decide whether the valuation is special, evaluate the non-positivity
criterion, and report the nef divisor and the generators of the cone of
curves when the criterion holds. The status is negative,
boundary_non_positive, or not_non_positive.

With --truncations, report every sub-valuation nu_1 ... nu_n as well.
"""

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        opts = token.OptionsToken(dict(FORMAT_OPTIONS, **{'--truncations': token.FLAG})).accept(source)
        self.assert_done(source)
        fmt = output_format(opts)

        if opts.get('--truncations'):
            reports = classify.sub_valuation_reports(cfg)
            if fmt == 'json':
                emit([report.as_json() for report in reports])
            else:
                for (pos, report) in enumerate(reports):
                    print('# nu_' + str(pos + 1))
                    print(report.as_text())
            return

        report = classify.classify_at_infinity(cfg)
        if fmt == 'json':
            emit(report.as_json())
        else:
            print(report.as_text())


class FromMcvCmd(Command):
    name = 'from-mcv'
    synonyms = ['frommcv']
    description = 'Build a configuration file from maximal contact values'
    help = """
"from-mcv --delta D --point-kind KIND --mcv B0,B1,...,BTOP"
"from-mcv ... --f1 I --m0 I --m1 I -o FILE"

Rebuild the configuration of infinitely near points with the given
maximal contact values (the last value is the inverse volume), with the
given incidences of F1, M0, M1. The configuration is written to FILE,
or printed if -o is not given. The point kind is omitted for delta 0.
"""

    options = {
        '--delta': token.int_value,
        '--point-kind': token.choice_value(valuation_core.SPECIAL, valuation_core.GENERAL),
        '--mcv': token.mcv_value,
        '--f1': token.int_value,
        '--m0': token.int_value,
        '--m1': token.int_value,
        '-o': token.word_value,
    }

    def perform(self, source):
        opts = token.OptionsToken(self.options).accept(source)
        self.assert_done(source)
        for key in ['--delta', '--mcv']:
            if key not in opts:
                raise CommandError('from-mcv needs ' + key)

        cfg = invariants.configuration_from_mcv(
            opts['--delta'], opts.get('--point-kind'), opts['--mcv'],
            i_F1=opts.get('--f1', 1), i_M0=opts.get('--m0', 0), i_M1=opts.get('--m1'))
        if '-o' in opts:
            configfile.write_configuration(cfg, opts['-o'])
        else:
            emit(configfile.serialize_configuration(cfg))


class ConeCmd(Command):
    name = 'cone'
    synonyms = ['ne']
    description = 'List the generators of the cone of curves'
    help = """
"cone FILE"
"cone FILE --text"

List the classes of the strict transforms of F1, M0 (and M1) and the
exceptional curves, which generate the cone of curves when the
non-positivity criterion holds. When it fails, exit with status 2.
"""

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        opts = token.OptionsToken(FORMAT_OPTIONS).accept(source)
        self.assert_done(source)
        try:
            gens = cones.curve_cone_generators(cfg)
        except ConeError as ex:
            if ex.rule == 'E_NOT_NPI':
                raise CommandError(str(ex), NEGATIVE_RESULT)
            raise
        print_generators(gens, output_format(opts))


class DualConeCmd(Command):
    name = 'dual-cone'
    synonyms = ['dualcone']
    description = 'List the generators of the dual cone'
    help = """
"dual-cone FILE"
"dual-cone FILE --text"

List F*, M* and the Lambda classes (special valuations), or the Theta,
Delta, Gamma and Upsilon classes (non-special valuations).
"""

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        opts = token.OptionsToken(FORMAT_OPTIONS).accept(source)
        self.assert_done(source)
        print_generators(cones.dual_cone_generators(cfg), output_format(opts))


class NefCmd(Command):
    name = 'nef'
    description = 'Pair the nef divisor with the generators of the cone of curves'
    help = """
"nef FILE"

Print the intersection of Lambda_n (or Delta_n) with each generator of
the cone of curves. Exit with status 2 when the criterion fails.
"""

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        self.assert_done(source)
        try:
            table = classify.nef_pairing_table(cfg)
        except ConeError as ex:
            if ex.rule == 'E_NA':
                raise CommandError(str(ex), NEGATIVE_RESULT)
            raise
        emit([{'label': lab, 'pairing': val} for (lab, val) in table])


class DualGraphCmd(Command):
    name = 'dual-graph'
    synonyms = ['dualgraph', 'dot']
    description = 'Print the dual graph of the exceptional divisors in DOT form'

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        self.assert_done(source)
        print(valuation_core.dual_graph(cfg).to_dot())


class InvariantsCmd(Command):
    name = 'invariants'
    synonyms = ['inv']
    description = 'Print multiplicities, maximal contact values, a, b, c'
    help = """
"invariants FILE"

Print the multiplicities of the curvette at E_n, the maximal contact
values, the characteristic exponents, the values a, b, c of the curvette
at M0, F1, M1, and the inverse volume.
"""

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        self.assert_done(source)
        mcv = invariants.maximal_contact_values(cfg)
        res = invariants.abc_values(cfg).as_json()
        res['multiplicities'] = list(valuation_core.multiplicity_vector(cfg, cfg.n))
        res['mcv'] = mcv.as_json()
        res['characteristic_exponents'] = list(mcv.characteristic_exponents())
        res['n'] = cfg.n
        emit(res)


def realize(cfg, opts):
    """realize(cfg, opts) -> LocalModel

    Realize from the --model file if there is one, else from --seed (or
    $VALCONE_SEED).
    """
    path = opts.get('--model')
    if path is None:
        return oracle.realize_model(cfg, configfile.seed_from_environment(opts.get('--seed')))
    if '--seed' in opts:
        raise CommandError('Choose one of --seed and --model')
    try:
        with open(path, 'r') as fl:
            obj = json.load(fl)
        case = obj['chart_case']
        params = dict((pl['point'], oracle.as_qq(pl['parameter']))
                      for pl in obj['placements'] if pl['placed'] == 'free')
    except (OSError, ValueError, KeyError, TypeError) as ex:
        raise CommandError('Cannot read model ' + path + ': ' + str(ex))
    if case != oracle.chart_case(cfg):
        raise CommandError('Model ' + path + ' is for chart case ' + str(case))
    return oracle.realize_model(cfg, obj.get('seed'), params)


class RealizeCmd(Command):
    name = 'realize'
    synonyms = ['model']
    description = 'Place the configuration in coordinates and print the model'
    help = """
"realize FILE"
"realize FILE --seed N"

Print the placements of p_2 ... p_n as JSON. The output can be given to
"value" with --model.
"""

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        opts = token.OptionsToken({'--seed': token.int_value}).accept(source)
        self.assert_done(source)
        emit(realize(cfg, opts).as_json())


class ValueCmd(Command):
    name = 'value'
    synonyms = ['nu']
    description = 'Compute the value of a polynomial'
    help = """
"value FILE --poly POLY"
"value FILE --poly POLY --chart local --seed N"
"value FILE --poly POLY --model MODELFILE"

Print nu(POLY). In the chart at infinity (the default) POLY is in x and
y; in the local chart it is in u and v.
"""

    options = {
        '--poly': token.word_value,
        '--chart': token.choice_value(polyparse.INFINITY, polyparse.LOCAL),
        '--seed': token.int_value,
        '--model': token.word_value,
    }

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        opts = token.OptionsToken(self.options).accept(source)
        self.assert_done(source)
        if '--poly' not in opts:
            raise CommandError('value needs --poly')
        chart = opts.get('--chart', polyparse.INFINITY)
        poly = polyparse.parse(opts['--poly'], chart)
        model = realize(cfg, opts)
        if chart == polyparse.LOCAL:
            print(oracle.local_value(model, poly))
        else:
            print(oracle.infinity_value(model, poly))


class WitnessCmd(Command):
    name = 'witness'
    description = 'Search for a polynomial refuting non-positivity or negativity'
    help = """
"witness FILE"
"witness FILE --mode zero --max-multiple 4 --max-bidegree 6,6 --seed N"

Search polynomials through multiples of the configuration for one with
positive value (--mode positive, the default) or a nonconstant one with
value 0 (--mode zero). Exit with status 2 if none is found within the
bounds.
"""

    options = {
        '--mode': token.choice_value(oracle.POSITIVE, oracle.ZERO),
        '--max-multiple': token.int_value,
        '--max-bidegree': token.pair_value,
        '--seed': token.int_value,
    }

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        opts = token.OptionsToken(self.options).accept(source)
        self.assert_done(source)
        seed = configfile.seed_from_environment(opts.get('--seed'))
        model = oracle.realize_model(cfg, seed)
        res = oracle.witness_search(model, opts.get('--mode', oracle.POSITIVE),
                                    opts.get('--max-multiple', 6), opts.get('--max-bidegree', (8, 8)),
                                    seed)
        emit(res.as_json())
        if not res.found:
            return NEGATIVE_RESULT


class CheckCmd(Command):
    name = 'check'
    description = 'Run every consistency check on a configuration'
    help = """
"check FILE"
"check FILE --seed N --samples N --no-oracle --text"

Run the lattice checks and the oracle checks, and report each as pass,
fail or skip. Exit with status 1 if any check fails.
"""

    options = dict(FORMAT_OPTIONS, **{
        '--seed': token.int_value,
        '--samples': token.int_value,
        '--no-oracle': token.FLAG,
    })

    def perform(self, source):
        cfg = token.ConfigToken().accept(source)
        opts = token.OptionsToken(self.options).accept(source)
        self.assert_done(source)
        report = checks.run_checks(cfg, configfile.seed_from_environment(opts.get('--seed')),
                                   samples=opts.get('--samples', 10),
                                   with_oracle=not opts.get('--no-oracle'))
        if output_format(opts) == 'json':
            emit(report.as_json())
        else:
            print(report.as_text())
        if not report.ok():
            return INVALID_INPUT


class HelpCmd(Command):
    name = 'help'
    synonyms = ['?']
    description = 'Show this list'
    help = """
"help"
List all available commands.

"help COMMAND"
Show some help on the given command.
"""

    def perform(self, source):
        if not source.is_empty():
            cmdclass = CommandToken().accept(source)
            self.assert_done(source)

            cmd = cmdclass()

            extra = ''
            if cmd.synonyms:
                extra = ' ("' + '", "'.join(cmd.synonyms) + '")'
            print('Command "' + cmd.name + '"' + extra + ':')

            helptext = cmd.help
            if not helptext:
                helptext = cmd.description + '.'
            print()
            print(helptext.strip())
            return SUCCESS

        self.assert_done(source)

        maxlen = 1 + max([len(cmd.name) for cmd in command_list])
        for cmd in command_list:
            print((cmd.name + ':').ljust(maxlen), cmd.description)


def print_generators(gens, fmt):
    if fmt == 'json':
        emit(gens.as_json())
        return
    for (lab, cls) in gens:
        print(lab + ': ' + str(cls))


# All the Command subclasses defined above. This list is used to
# make the CommandToken.verb_map table, and also when listing the
# help commands.
command_list = [
    HelpCmd,
    ClassifyCmd,
    FromMcvCmd,
    InvariantsCmd,
    DualGraphCmd,
    DualConeCmd,
    ConeCmd,
    NefCmd,
    RealizeCmd,
    ValueCmd,
    WitnessCmd,
    CheckCmd,
]
