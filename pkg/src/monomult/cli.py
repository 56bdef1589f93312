"""Command line front-end.

Structured JSON goes to stdout, diagnostics to stderr. Exit codes:
0 success, 1 verification failure, 2 usage/parse/hypothesis error,
3 resource cap or budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decompose, formulas, graphs, hilbert, parsing
from .errors import (
    HypothesisViolatedError,
    MonomultError,
    ParseError,
    ResourceLimitError,
)
from .ideal import format_monomial, intersect_all, power, special_power
from .verify import SCOPES, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_ideal(args):
    spec = parsing.parse_ideal_spec(_read(args.file))
    names = args.ideal or list(spec.ideals)[-1:]
    if not names:
        raise ParseError("the file declares no ideal")
    ideals = [spec.ideal(name) for name in names]
    I = intersect_all(ideals)
    echo = {
        "file": args.file,
        "ring": list(spec.variables),
        "ideals": {name: [format_monomial(g, spec.variables) for g in spec.ideals[name]]
                   for name in names},
        "ideal": _gens(I, spec.variables),
    }
    return spec, I, echo


def _display_order(gens):
    # Descending lex reads naturally: x1 terms first.
    return sorted(gens, reverse=True)


def _gens(I, names):
    return [format_monomial(g, names) for g in _display_order(I.gens)]


def _component_doc(comp, names):
    gens = _display_order(comp.ideal.gens)
    return {
        "support": [names[i] for i in comp.support],
        "height": comp.height,
        "irreducible": comp.is_irreducible,
        "generators": _gens(comp.ideal, names),
        "exponents": [list(g) for g in gens],
    }


def cmd_decompose(args):
    spec, I, echo = _load_ideal(args)
    names = spec.variables
    pd = decompose.primary_decomposition(I)
    irr = decompose.irreducible_decomposition(I)
    mult = hilbert.multiplicity(I)
    return {
        "input": echo,
        "method": "splitting",
        "h": pd.height,
        "r": len(pd.min_height_components()),
        "base_mult": mult,
        "value": mult,
        "hypothesis": formulas.check_hypothesis(pd),
        "components": [_component_doc(c, names) for c in pd],
        "irreducible_components": [
            {"support": [names[i] for i in q.support], "exponents": list(q.exponents)}
            for q in irr],
    }


def cmd_hilbert(args):
    spec, I, echo = _load_ideal(args)
    J = power(special_power(I, args.special), args.power)
    summary = hilbert.hilbert_summary(J)
    hp = hilbert.hilbert_polynomial(summary)
    echo.update(power=args.power, special=args.special)
    return {
        "input": echo,
        "method": "engine",
        "k_poly": list(summary.k_poly.coeffs),
        "q_poly": list(summary.q_poly.coeffs),
        "dim": summary.dim,
        "mult": summary.mult,
        "value": summary.mult,
        "hilbert_coeffs": list(summary.hilbert_coeffs),
        "hilbert_polynomial": [str(c) for c in hp.coeffs],
    }


def cmd_mult(args):
    spec, I, echo = _load_ideal(args)
    report = formulas.compute_mult(I, args.special, args.power, args.method)
    echo.update(power=args.power, special=args.special)
    return {
        "input": echo,
        "method": report.method,
        "applicable": report.applicable,
        "h": report.h,
        "r": report.r,
        "base_mult": report.base_mult,
        "value": report.value,
    }


def _load_graph(args):
    gspec = parsing.parse_graph_spec(_read(args.file))
    echo = {"file": args.file, "vertices": list(gspec.vertices),
            "weights": list(gspec.weights), "arcs": [f"{a}->{b}" for a, b in gspec.arcs]}
    return gspec, gspec.to_graph(), echo


def cmd_graph_mult(args):
    gspec, D, echo = _load_graph(args)
    echo.update(power=args.power, special=args.special)
    names = gspec.vertices
    alpha, r, minimum = graphs.alpha_and_r(D.underlying)
    base = graphs.mult_oriented_closed(D, 1, 1)
    if args.method == "closed":
        value, method = graphs.mult_oriented_closed(D, args.special, args.power), formulas.CLOSED_FORM
    else:
        value = formulas.engine_mult(graphs.edge_ideal(D), args.special, args.power)
        method = formulas.ENGINE_FALLBACK
    return {
        "input": echo,
        "method": method,
        "h": alpha,
        "r": r,
        "base_mult": base,
        "value": value,
        "edge_ideal": _gens(graphs.edge_ideal(D), names),
        "minimum_covers": [[names[v] for v in c] for c in minimum],
    }


def cmd_covers(args):
    gspec, D, echo = _load_graph(args)
    names = gspec.vertices
    directed = not args.undirected_l1
    alpha, r, _ = graphs.alpha_and_r(D.underlying)

    def label(vs):
        return [names[v] for v in sorted(vs)]

    strong = []
    for c in graphs.strong_vertex_covers(D, directed=directed):
        part = graphs.cover_partition(D, c, directed)
        strong.append({
            "cover": label(c), "l1": label(part.l1), "l2": label(part.l2), "l3": label(part.l3),
            "component": _gens(graphs.cover_ideal(D, c, directed), names) if c else [],
        })
    echo["l1_convention"] = "directed" if directed else "undirected"
    return {
        "input": echo,
        "method": "covers",
        "h": alpha,
        "r": r,
        "edge_ideal": _gens(graphs.edge_ideal(D), names),
        "minimal_covers": [label(c) for c in graphs.minimal_vertex_covers(D.underlying)],
        "strong_covers": strong,
    }


def cmd_verify(args):
    report = run_verify(args.scope, args.seed, args.budget)
    doc = {"input": {"scope": args.scope, "seed": args.seed, "budget": args.budget},
           "method": "verify", **report.to_dict()}
    if report.budget_exhausted:
        return doc, EXIT_RESOURCE
    return doc, (EXIT_OK if report.ok else EXIT_FAIL)


def _render_text(doc, out):
    def emit(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                emit(f"{prefix}{k}.", v) if isinstance(v, dict) else emit(f"{prefix}{k}", v)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                emit(f"{prefix}[{i}].", item)
        else:
            if isinstance(value, list):
                value = ", ".join("{" + ", ".join(map(str, v)) + "}" if isinstance(v, list)
                                  else str(v) for v in value)
            print(f"{prefix.rstrip('.')}: {value}", file=out)
    emit("", doc)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monomult",
        description="Monomial ideal decompositions, Hilbert series and multiplicities of powers.")
    parser.add_argument("--text", action="store_true", help="human-readable output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def ideal_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="ideal specification file, or - for stdin")
        p.add_argument("--ideal", action="append", metavar="NAME",
                       help="ideal to use (repeat to intersect several); default: last declared")
        return p

    def powers(p):
        p.add_argument("--power", "-s", type=int, default=1, metavar="S")
        p.add_argument("--special", "-m", type=int, default=1, metavar="M")

    ideal_cmd("decompose", "primary and irreducible decomposition")
    powers(ideal_cmd("hilbert", "Hilbert series data of R/(I^{m})^s"))
    p = ideal_cmd("mult", "multiplicity of R/(I^{m})^s")
    powers(p)
    p.add_argument("--method", choices=("closed", "components", "engine"), default="closed")

    p = sub.add_parser("graph-mult", help="multiplicity for a weighted oriented graph")
    p.add_argument("file")
    powers(p)
    p.add_argument("--method", choices=("closed", "engine"), default="closed")

    p = sub.add_parser("covers", help="minimal and strong vertex covers")
    p.add_argument("file")
    p.add_argument("--undirected-l1", action="store_true",
                   help="use the undirected L1 variant (comparison only)")

    p = sub.add_parser("verify", help="run the seeded verification suites")
    p.add_argument("--scope", choices=SCOPES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    return parser


COMMANDS = {
    "decompose": cmd_decompose,
    "hilbert": cmd_hilbert,
    "mult": cmd_mult,
    "graph-mult": cmd_graph_mult,
    "covers": cmd_covers,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("power", "special"):
        if getattr(args, flag, 1) < 1:
            parser.error(f"--{flag} must be >= 1")
    status = EXIT_OK
    try:
        result = COMMANDS[args.command](args)
        if isinstance(result, tuple):
            result, status = result
    except (ParseError, HypothesisViolatedError, OSError) as exc:
        print(f"monomult: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"monomult: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except MonomultError as exc:
        print(f"monomult: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.text:
        _render_text(result, out)
    else:
        json.dump(result, out, indent=2)
        out.write("\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
