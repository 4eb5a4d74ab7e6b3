"""
Command line front end.

Each subcommand prints plain text by default and a JSON document with ``--json``.
Domain errors exit with status 1 and a JSON body ``{"error", "code", "message"}`` on stderr;
usage errors exit with status 2.

Usage examples
--------------

.. code-block:: console

    $ snailcalc canon "B A^2 Z B A^3 Z"
    B^2 A^2 Z
    $ snailcalc decompose 7 26
    B^3 A B^2 A
    $ snailcalc linking "B A B A B A^2 B A B^5 A B^3 A^2"
    {"p1": -2, "p3": 2}
"""
import argparse
import io
import json
import logging
import sys

from marshmallow import ValidationError

from . import __version__, arrowtree, euclid, projmat, skeleton, snailgeom, wordcalc
from ._util import dumps, load_settings, safe_int
from .errors import ErrorCodes, InputUnreadable, SnailCalcError

logger = logging.getLogger(__name__)


def _word(text):
    return wordcalc.parse_word(text)


def _emit(out, args, text, js):
    if args.json:
        out.write(dumps(js) + '\n')
    else:
        out.write(text + '\n')


def _write_svg(out, path, document):
    if path == '-':
        out.write(document)
    else:
        with io.open(path, 'w', encoding='utf-8') as f:
            f.write(document)
        logger.info('wrote %s', path)


def cmd_canon(args, settings, out):
    c = wordcalc.canonicalize(_word(args.word), fuel_factor=settings.fuel_factor)
    _emit(out, args, wordcalc.format_form(c), wordcalc.CanonicalFormSchema().dump(c))


def cmd_compose(args, settings, out):
    forms = [wordcalc.canonicalize(_word(text), fuel_factor=settings.fuel_factor) for text in args.words]
    c = forms[0]
    for other in forms[1:]:
        c = wordcalc.compose(c, other, fuel_factor=settings.fuel_factor)
    _emit(out, args, wordcalc.format_form(c), wordcalc.CanonicalFormSchema().dump(c))


def cmd_matrix(args, settings, out):
    m = wordcalc.phi(_word(args.word))
    _emit(out, args, str(m), projmat.matrix_json(m))


def cmd_classify(args, settings, out):
    cls = wordcalc.classify(_word(args.word))
    js = wordcalc.trace_class_json(cls)
    text = ' '.join('{}={}'.format(k, js[k]) for k in sorted(js) if k != 'class')
    _emit(out, args, '{} {}'.format(cls.kind, text).strip(), js)


def cmd_decompose(args, settings, out):
    w = euclid.decompose_to_word(args.n, args.p)
    seq = euclid.characteristic_sequences(args.n, args.p)
    js = euclid.CharacteristicSequenceSchema().dump(seq)
    js.update(word=wordcalc.format_word(w), matrix=projmat.matrix_json(wordcalc.phi(w)))
    _emit(out, args, wordcalc.format_word(w), js)


def cmd_factor(args, settings, out):
    m = projmat.make(args.a, args.b, args.c, args.d)
    w = euclid.factor_positive_matrix(m)
    _emit(out, args, wordcalc.format_word(w), {'word': wordcalc.format_word(w), 'matrix': projmat.matrix_json(m)})


def cmd_euclid(args, settings, out):
    t = euclid.euclid_trace(args.q0, args.q1)
    period, holds = euclid.period_identity(t)
    js = euclid.EuclidTraceSchema().dump(t)
    js.update(period=period, period_identity=holds)
    text = 'coefficients {} orders {} d {} period {}'.format(
        list(t.coefficients), list(t.orders), t.d, period)
    _emit(out, args, text, js)


def cmd_snail(args, settings, out):
    s = snailgeom.build_snail(args.n, args.p)
    if args.svg:
        _write_svg(out, args.svg, snailgeom.render_svg(s, scale=settings.svg_scale, margin=settings.svg_margin))
        if args.svg == '-':
            return
    connected, count = snailgeom.components(s)
    js = snailgeom.snail_json(s)
    js.update(connected=connected, components=count)
    text = 'SN({}; {}): {} arcs, {} component(s), marked {}'.format(
        s.n, s.p, sum(1 for a in s.arcs if not a.degenerate), count, ' '.join(str(z) for z in s.marked))
    if s.green_end is not None and s.segment is None:
        split = snailgeom.split_colors(s.n, s.p)
        text += ', green SN({}; {}), red SN({}; {})'.format(split.green[0], split.green[1], split.red[0], split.red[1])
    _emit(out, args, text, js)


def cmd_tree(args, settings, out):
    w = _word(args.word)
    tree = arrowtree.build_tree(w)
    if args.svg:
        _write_svg(out, args.svg, arrowtree.render_tree_svg(tree, scale=settings.svg_scale,
                                                            margin=settings.svg_margin))
        if args.svg == '-':
            return
    aw = tree.leaves
    lg, lr, rg, rr = arrowtree.letter_counts(aw)
    text = '{}\n[[{}, {}], [{}, {}]]'.format(arrowtree.format_arrow_word(aw, ansi=args.ansi), lg, lr, rg, rr)
    _emit(out, args, text, arrowtree.arrow_word_json(aw))


def cmd_linking(args, settings, out):
    p1, p3 = wordcalc.linking_numbers(_word(args.word))
    out.write(dumps({'p1': safe_int(p1), 'p3': safe_int(p3)}) + '\n')


def cmd_code(args, settings, out):
    if args.decode:
        w = wordcalc.code_to_word(wordcalc.parse_code(args.text))
        _emit(out, args, wordcalc.format_word(w), {'word': wordcalc.format_word(w)})
    else:
        code = wordcalc.word_to_code(_word(args.text))
        _emit(out, args, wordcalc.format_code(code), {'code': wordcalc.format_code(code)})


def cmd_perm(args, settings, out):
    if args.word:
        perm = wordcalc.mod2_class(_word(args.word))
        _emit(out, args, str(perm), {'images': list(perm.images)})
        return
    rows = projmat.permutation_table()
    text = '\n'.join('{:<7} {}  {:<6} {}'.format(r.word, r.permutation, r.short_word, r.z_form) for r in rows)
    js = [{'word': r.word, 'images': list(r.permutation.images), 'short_word': r.short_word, 'z_form': r.z_form}
          for r in rows]
    _emit(out, args, text, js)


def _load_json(path):
    try:
        with io.open(path, encoding='utf-8') as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise InputUnreadable('{}: {}'.format(path, e))
    try:
        return json.loads(text)
    except ValueError as e:
        raise ValidationError('Not JSON: {}'.format(e))


def cmd_skeleton(args, settings, out):
    data = _load_json(args.file)
    cs = skeleton.CrossingSequenceSchema().load(data)
    if args.action == 'reduce':
        reduced = skeleton.reduce(cs)
        js = skeleton.CrossingSequenceSchema().dump(reduced)
        text = dumps(js)
    else:
        cls = skeleton.recognize(cs)
        js = skeleton.skeleton_class_json(cls)
        text = repr(cls)
    _emit(out, args, text, js)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='snailcalc', description='Mapping classes of the plane with three marked points.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--verbose', '-v', action='store_true', help='log at DEBUG level')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--json', action='store_true', help='print JSON')
        p.set_defaults(func=func)
        return p

    p = command('canon', cmd_canon, 'canonical form of a word')
    p.add_argument('word')
    p = command('compose', cmd_compose, 'canonical form of a product of words')
    p.add_argument('words', nargs='+', metavar='word')
    p = command('matrix', cmd_matrix, 'turbulence matrix of a word')
    p.add_argument('word')
    p = command('classify', cmd_classify, 'trace classification of a word')
    p.add_argument('word')
    p = command('decompose', cmd_decompose, 'positive word sending (1, 1) to (n, p)')
    p.add_argument('n', type=int)
    p.add_argument('p', type=int)
    p = command('factor', cmd_factor, 'factor a positive matrix into A and B')
    for name in 'abcd':
        p.add_argument(name, type=int)
    p = command('euclid', cmd_euclid, 'Euclidean algorithm trace')
    p.add_argument('q0', type=int)
    p.add_argument('q1', type=int)
    p = command('snail', cmd_snail, 'build (and draw) the snail SN(n; p)')
    p.add_argument('n', type=int)
    p.add_argument('p', type=int)
    p.add_argument('--svg', metavar='FILE', help="write an SVG drawing ('-' for stdout)")
    p = command('tree', cmd_tree, 'arrow word and inner tree of a positive word')
    p.add_argument('word')
    p.add_argument('--svg', metavar='FILE', help="write an SVG drawing ('-' for stdout)")
    p.add_argument('--ansi', action='store_true', help='colour arrows with terminal escapes')
    p = command('linking', cmd_linking, 'linking numbers of a class fixing the marked points')
    p.add_argument('word')
    p = command('code', cmd_code, 'circulation code of a word')
    p.add_argument('text')
    p.add_argument('--decode', action='store_true', help='read a code and print its word')
    p = command('perm', cmd_perm, 'induced permutation of the marked points')
    p.add_argument('word', nargs='?')
    p = command('skeleton', cmd_skeleton, 'reduce or recognize a crossing sequence file')
    p.add_argument('action', choices=['reduce', 'recognize'])
    p.add_argument('file')
    return parser


def run(argv=None, out=None, err=None):
    """
    Run one command.

    :return: The exit status.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        settings = load_settings()
        logging.basicConfig(stream=err, level='DEBUG' if args.verbose else settings.log_level)
        args.func(args, settings, out)
    except SnailCalcError as e:
        logger.debug('%s failed: %s', args.command, e)
        err.write(dumps(e.to_json()) + '\n')
        return 1
    except ValidationError as e:
        err.write(dumps({
            'error': 'InvalidInput', 'code': ErrorCodes.invalid_input.code, 'message': str(e.messages),
        }) + '\n')
        return 1
    return 0


def main():
    sys.exit(run())
