"""Command-line interface.

Exit status: 0 on success (whatever the verdict), 1 for unreadable or
invalid input, 2 when the automaton's language is not factor-closed and so
describes no monomial algebra.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    AlgebraError,
    AlgebraElement,
    decompose_word,
    element_triples,
    ideal_intersection_witness,
    parse_element,
)
from .automaton import (
    AutomatonError,
    NotFactorClosedError,
    accepted_words,
    build_factor_automaton,
    count_sequence,
    minimize,
    require_factor_closed,
    reverse_dfa,
    to_dot,
)
from .classify import (
    ResourceLimitError,
    Verdict,
    classify,
    growth,
    hilbert_series,
    is_prime,
)
from .presentation import (
    Presentation,
    PresentationError,
    format_word,
    normalize,
    parse_source,
    parse_word,
    reverse_presentation,
)
from .structure import choose_pivot, class_structure

EXIT_INPUT = 1
EXIT_NOT_MONOMIAL = 2


class CliError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    return parse_source(text)


def _minimal(source):
    if isinstance(source, Presentation):
        return minimize(build_factor_automaton(normalize(source)))
    return minimize(source)


def _algebra(source):
    """Minimal automaton of an input that must describe a monomial algebra."""
    m = _minimal(source)
    try:
        require_factor_closed(m)
    except NotFactorClosedError as exc:
        raise CliError(str(exc), EXIT_NOT_MONOMIAL) from None
    if m.initial not in m.accepting:
        raise CliError("the automaton accepts no words", EXIT_NOT_MONOMIAL)
    return m


def _emit(args, payload, text):
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _pivot(m, state):
    if state is not None:
        if not 0 <= state < m.state_count:
            raise CliError(f"state {state} out of range")
        return state
    return choose_pivot(class_structure(m))


def cmd_classify(args):
    report = classify(_load(args.path))
    _emit(args, report.to_dict(), report.to_text())
    if report.verdict is Verdict.NOT_MONOMIAL_LANGUAGE:
        print(
            "error: language is not factor-closed; its rejected words do not "
            "generate a monomial ideal",
            file=sys.stderr,
        )
        return EXIT_NOT_MONOMIAL
    return 0


def cmd_basis(args):
    m = _algebra(_load(args.path))
    words = list(accepted_words(m, args.max_len))
    _emit(args, {"words": [format_word(w, "") for w in words]},
          "\n".join(format_word(w) for w in words))
    return 0


def cmd_count(args):
    counts = count_sequence(_minimal(_load(args.path)), args.max_len)
    _emit(args, {"counts": counts}, " ".join(map(str, counts)))
    return 0


def cmd_hilbert(args):
    series = hilbert_series(_algebra(_load(args.path)))
    _emit(args, series.to_dict(), str(series))
    return 0


def cmd_growth(args):
    g = growth(_algebra(_load(args.path)))
    _emit(args, g.to_dict(), str(g))
    return 0


def cmd_prime(args):
    result = is_prime(_algebra(_load(args.path)))
    if result is True:
        _emit(args, {"prime": True, "witness": None}, "prime")
    else:
        u, v = result
        _emit(
            args,
            {"prime": False, "witness": {"u": format_word(u, ""), "v": format_word(v, "")}},
            f"not prime: u = {format_word(u)}, v = {format_word(v)}",
        )
    return 0


def cmd_decompose(args):
    m = _algebra(_load(args.path))
    q = _pivot(m, args.state)
    b, x = decompose_word(m, q, parse_word(args.word, m.alphabet))
    _emit(
        args,
        {"state": q, "b": format_word(b, ""), "x": format_word(x, "")},
        f"b = {format_word(b)} ; x = {format_word(x)}",
    )
    return 0


def cmd_witness(args):
    m = _algebra(_load(args.path))
    q = _pivot(m, args.state)
    z = parse_element(args.element, m)
    v, r = ideal_intersection_witness(m, q, z)
    result = AlgebraElement.word(m, v) * z * AlgebraElement.word(m, r)
    _emit(
        args,
        {"state": q, "v": format_word(v, ""), "r": format_word(r, ""), "result": element_triples(result)},
        f"v = {format_word(v)} ; r = {format_word(r)} ; result = {result}",
    )
    return 0


def cmd_dot(args):
    dot = to_dot(_minimal(_load(args.path)))
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(dot)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        _emit(args, {"dot": dot}, dot)
    return 0


def cmd_reverse(args):
    source = _load(args.path)
    if isinstance(source, Presentation):
        text = normalize(reverse_presentation(source)).to_text()
    else:
        text = minimize(reverse_dfa(source)).to_text()
    _emit(args, {"text": text}, text)
    return 0


def cmd_minimize(args):
    m = _minimal(_load(args.path))
    payload = {
        "letters": list(m.alphabet),
        "states": m.state_count,
        "initial": m.initial,
        "accepting": sorted(m.accepting),
        "transitions": [list(row) for row in m.transitions],
    }
    _emit(args, payload, m.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="automalg",
        description="Prime monomial and automaton algebras: primitive or PI.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("path", help="presentation or automaton file")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "full classification report")
    add("basis", cmd_basis, "nonzero words up to a length").add_argument(
        "--max-len", type=int, required=True)
    add("count", cmd_count, "number of nonzero words per length").add_argument(
        "--max-len", type=int, required=True)
    add("hilbert", cmd_hilbert, "Hilbert series as a reduced rational function")
    add("growth", cmd_growth, "growth type and GK dimension")
    add("prime", cmd_prime, "primeness, with a witness when not prime")
    p = add("decompose", cmd_decompose, "split a word as (state-subalgebra word, avoiding word)")
    p.add_argument("--state", type=int)
    p.add_argument("--word", required=True)
    p = add("witness", cmd_witness, "multiply an element into the state subalgebra")
    p.add_argument("--state", type=int)
    p.add_argument("--element", required=True, help='e.g. "1/1 x; -2/3 y x"')
    add("dot", cmd_dot, "GraphViz rendering of the minimal automaton").add_argument("--out")
    add("reverse", cmd_reverse, "presentation or automaton of the opposite algebra")
    add("minimize", cmd_minimize, "canonical minimal automaton")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_len", 0) < 0:
        parser.error("--max-len must be nonnegative")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotFactorClosedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_MONOMIAL
    except (PresentationError, AutomatonError, AlgebraError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
