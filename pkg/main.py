"""
Command-line front end: law checking, enumeration, tuple operations,
path conversions and multinomial words

JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 domain or validation failure, 2 parse or usage error.
"""

import functools
import logging
import sys

import click

from clopen.closure import closure, interior
from clopen.lattice import ClopenLattice, enumerate_clopen, rank_profile, to_dot
from clopen.tuples import classify, dual
from config import DEFAULT_MAX_CANDIDATES, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_WORD_BUDGET
from errors import DocumentError, QuantaleError, QuantaleLoadError
from geometry.path import ensure_valid_path, path_to_tuple, tuple_to_path, validate_path
from geometry.svg import render_svg
from multinomial.embedding import LEFT, RIGHT, adjoint_approx, christoffel, iota_v
from multinomial.words import word_leq
from quantale.finite import builtin
from quantale.laws import EXHAUSTIVE, LAWS, SAMPLED, verify_laws
from quantale.report import ReportGenerator
from schema import DocumentParser, dumps, parse_v, path_to_dict, tuple_to_dict

logger = logging.getLogger("clopen")

reporter = ReportGenerator()
parser = DocumentParser()


def handle_errors(command):
    """Map library errors onto exit codes"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except DocumentError as e:
            logger.debug("document rejected", exc_info=True)
            reporter.print_error(str(e))
            sys.exit(2)
        except QuantaleError as e:
            logger.debug("%s failed", command.__name__, exc_info=True)
            reporter.print_error(str(e))
            sys.exit(1)

    return wrapper


def unwrap(result):
    value, error = result
    if error is not None:
        raise error
    return value


def emit(data):
    click.echo(dumps(data))


@click.group()
@click.option("--verbose", is_flag=True, help="Debug logging on stderr")
def cli(verbose):
    """Clopen lattices over mix star-autonomous quantales"""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


# quantale

@cli.group()
def quantale():
    """Quantale tables and law checks"""


@quantale.command("check")
@click.argument("source")
@click.option("--samples", default=DEFAULT_SAMPLES, show_default=True, help="Cases per law on infinite carriers")
@click.option("--seed", default=DEFAULT_SEED, show_default=True)
@click.option("--law", "laws", multiple=True, type=click.Choice(LAWS + ("oplus_table",)), help="Check only this law, repeatable")
@click.option("--summary/--no-summary", default=True, help="Colour summary on stderr")
@handle_errors
def quantale_check(source, samples, seed, summary, laws):
    """Verify every law on a builtin, a table file or 'interval'"""
    q = unwrap(parser.parse_quantale(source, validate=False))
    if q.is_finite and not q.is_lattice():
        raise QuantaleLoadError("lattice", (), f"{source}: the order is not a lattice")
    mode = EXHAUSTIVE if q.is_finite else SAMPLED
    report = verify_laws(q, mode=mode, seed=seed, samples=samples, laws=laws or None)
    emit(report.to_dict(q))
    if summary:
        reporter.print_law_summary(report, q)
    if not report.passed:
        sys.exit(1)


@quantale.command("builtin")
@click.argument("name")
@handle_errors
def quantale_builtin(name):
    """Print the table document of a builtin quantale"""
    emit(builtin(name).to_document())


# lattice

@cli.group()
def lattice():
    """The lattice of clopen tuples"""


@lattice.command("enum")
@click.option("--quantale", "source", required=True, help="Builtin name or table file")
@click.option("--d", "d", required=True, type=int)
@click.option("--hasse", "hasse_out", type=click.Path(dir_okay=False, writable=True), help="Write the Hasse diagram as DOT")
@click.option("--verify-ops", is_flag=True, help="Compare join/meet with brute-force bounds")
@click.option("--elements", "show_elements", is_flag=True, help="Include the tuples in the output")
@click.option("--max-candidates", default=DEFAULT_MAX_CANDIDATES, show_default=True)
@click.option("--workers", default=1, show_default=True)
@handle_errors
def lattice_enum(source, d, hasse_out, verify_ops, show_elements, max_candidates, workers):
    """Enumerate L^d(Q) for a finite carrier"""
    q = unwrap(parser.parse_quantale(source))
    result = enumerate_clopen(
        q, d, max_candidates=max_candidates, workers=workers, hasse=bool(hasse_out), verify_ops=verify_ops
    )
    out = {"count": result.count}
    if show_elements:
        out["elements"] = [tuple_to_dict(f)["entries"] for f in result.elements]
    if hasse_out:
        with open(hasse_out, "w") as f:
            f.write(to_dot(result))
        out["covers"] = [list(edge) for edge in result.covers]
        out["ranks"] = rank_profile(result)
    if verify_ops:
        out["verification"] = result.verification
    emit(out)
    if verify_ops and (result.verification["join_mismatches"] or result.verification["meet_mismatches"]):
        reporter.print_error("lattice operations disagree with brute-force bounds")
        sys.exit(1)


# tuple

@cli.group("tuple")
def tuple_group():
    """Operations on tuples"""


def _unary(name, op):
    @tuple_group.command(name, help=f"{name.capitalize()} of a tuple")
    @click.option("--in", "source", required=True, type=click.Path(exists=True, dir_okay=False))
    @handle_errors
    def command(source):
        f = unwrap(parser.parse_tuple_file(source))
        emit(op(f))

    return command


_unary("closure", lambda f: tuple_to_dict(closure(f)))
_unary("interior", lambda f: tuple_to_dict(interior(f)))
_unary("classify", lambda f: classify(f).to_dict())
_unary("dual", lambda f: tuple_to_dict(dual(f)))


def _binary(kind):
    @tuple_group.command(kind, help=f"Lattice {kind} of two clopen tuples")
    @click.option("--in", "sources", required=True, nargs=2, type=click.Path(exists=True, dir_okay=False))
    @handle_errors
    def command(sources):
        f, g = (unwrap(parser.parse_tuple_file(s)) for s in sources)
        emit(tuple_to_dict(ClopenLattice(f.quantale, f.d).lattice_op(kind, f, g)))

    return command


_binary("join")
_binary("meet")


# path

@cli.group()
def path():
    """Paths and their tuples"""


@path.command("to-tuple")
@click.option("--in", "source", required=True, type=click.Path(exists=True, dir_okay=False))
@handle_errors
def path_to_tuple_command(source):
    """Clopen tuple of a path"""
    p = unwrap(parser.parse_path_file(source))
    emit(tuple_to_dict(path_to_tuple(p)))


@path.command("from-tuple")
@click.option("--in", "source", required=True, type=click.Path(exists=True, dir_okay=False))
@handle_errors
def path_from_tuple_command(source):
    """Path of a clopen interval tuple"""
    f = unwrap(parser.parse_tuple_file(source))
    emit(path_to_dict(tuple_to_path(f)))


@path.command("validate")
@click.option("--in", "source", required=True, type=click.Path(exists=True, dir_okay=False))
@handle_errors
def path_validate_command(source):
    """Report endpoint, monotonicity and canonical-form violations"""
    p = unwrap(parser.parse_path_file(source))
    report = validate_path(p)
    emit(report.to_dict())
    if not report.valid:
        sys.exit(1)


@path.command("render")
@click.option("--in", "source", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--proj", default="1,2", show_default=True, help="Axes i,j of the projection")
@click.option("--svg", "svg_out", type=click.Path(dir_okay=False, writable=True), help="Output file, stdout if omitted")
@handle_errors
def path_render_command(source, proj, svg_out):
    """SVG drawing of a path projection"""
    try:
        i, j = (int(part) for part in proj.split(","))
    except ValueError:
        raise DocumentError(f"bad projection {proj!r}, expected i,j") from None
    p = unwrap(parser.parse_path_file(source))
    ensure_valid_path(p)
    svg = render_svg(p.canonical(), i, j)
    if svg_out:
        with open(svg_out, "w") as f:
            f.write(svg)
    else:
        click.echo(svg, nl=False)


# word

@cli.group()
def word():
    """Multinomial words"""


@word.command("leq")
@click.argument("u")
@click.argument("w")
@click.option("--v", "v", help="Multiplicities, e.g. 2,1")
@click.option("--budget", default=DEFAULT_WORD_BUDGET, show_default=True)
@handle_errors
def word_leq_command(u, w, v, budget):
    """Whether w is reachable from u by rewriting ab into ba, a < b"""
    first = unwrap(parser.parse_word(u, v))
    second = unwrap(parser.parse_word(w, v))
    emit({"u": str(first), "w": str(second), "leq": word_leq(first, second, budget)})


@word.command("embed")
@click.argument("w", required=False)
@click.option("--v", "v", help="Multiplicities, e.g. 2,1")
@click.option("--in", "source", type=click.Path(exists=True, dir_okay=False), help='Word document {"v": [...], "word": "..."}')
@handle_errors
def word_embed_command(w, v, source):
    """Tuple of the staircase path of a word"""
    if (w is None) == (source is None):
        raise click.UsageError("give either a word or --in, not both")
    if source is not None:
        if v is not None:
            raise click.UsageError("--v comes from the document when --in is used")
        word_value = unwrap(parser.parse_word_file(source))
    else:
        word_value = unwrap(parser.parse_word(w, v))
    emit(tuple_to_dict(iota_v(word_value)))


@word.command("adjoint")
@click.argument("direction", type=click.Choice([LEFT, RIGHT]))
@click.option("--v", "v", required=True, help="Multiplicities, e.g. 2,1")
@click.option("--in", "source", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--budget", default=DEFAULT_WORD_BUDGET, show_default=True)
@handle_errors
def word_adjoint_command(direction, v, source, budget):
    """Left or right adjoint of a clopen interval tuple, as a word"""
    f = unwrap(parser.parse_tuple_file(source))
    result = adjoint_approx(direction, parse_v(v), f, budget)
    emit(result.to_dict())


@word.command("christoffel")
@click.argument("n", type=int)
@click.argument("m", type=int)
@click.option("--budget", default=DEFAULT_WORD_BUDGET, show_default=True)
@handle_errors
def word_christoffel_command(n, m, budget):
    """Lower and upper Christoffel words of L(n, m)"""
    lower, upper = christoffel(n, m, budget)
    emit({"lower": str(lower), "upper": str(upper)})


def run(argv=None):
    """Run the command line and return its exit code"""
    try:
        rv = cli.main(args=argv, prog_name="clopen", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        return 1
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    return rv if isinstance(rv, int) else 0


def main():
    cli()


if __name__ == "__main__":
    main()
