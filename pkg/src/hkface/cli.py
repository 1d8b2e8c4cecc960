"""Command-line front end: ``hkface <command> --family cycle:5`` and friends."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .audit import smirnov_audit
from .complex import ComplexError, Graph, SimplicialComplex, edge_ideal_complex, h_vector, is_shellable
from .engine import ehk_of_powers, exponent_vector, ghk_polynomial, hilbert_coefficients, multiplicity_e0
from .inputs import InputError, exact, parse_exponents, parse_input
from .limits import PowerTable, TableError, all_limits, dim1_check, dim2_closed_forms, predicted_ehk
from .oracle import BudgetExceeded, EnumerationBudget, cross_validate

EXIT_INPUT = 2
EXIT_MISMATCH = 1
EXIT_BUDGET = 3


class CommandError(Exception):
    def __init__(self, message: str, pointer: str = "", code: int = EXIT_INPUT):
        super().__init__(message)
        self.pointer = pointer
        self.code = code


def _source(args) -> str:
    if bool(args.family) == bool(args.input):
        raise CommandError("give exactly one of --family or --input")
    return args.family or args.input


def _complex(args) -> SimplicialComplex:
    obj = parse_input(_source(args))
    if isinstance(obj, Graph):
        return edge_ideal_complex(obj)
    if not isinstance(obj, SimplicialComplex):
        raise CommandError("expected a complex, graph or family, got a power table", "/")
    return obj


def _exponents(args, c: SimplicialComplex) -> tuple[int, ...]:
    v = parse_exponents(args.v) if args.v else None
    return exponent_vector(c, v)


def _tsv(rows: Sequence[Sequence]) -> str:
    return "\n".join("\t".join(str(x) for x in row) for row in rows)


def cmd_hk(args):
    c = _complex(args)
    v = _exponents(args, c)
    p = ghk_polynomial(c, v)
    if args.format == "json":
        return {
            "d": c.dimension,
            "v": list(v),
            "binomial_form": p.binomial_form(),
            "expanded": p.expanded(),
            "terms": p.to_json(),
        }
    if args.format == "tsv":
        return _tsv([("q_degree", "k_degree", "coefficient")] + [(a, b, exact(x)) for a, b, x in p.sorted_terms()])
    return f"{p.binomial_form()}\nexpanded: {p.expanded()}"


def cmd_coeffs(args):
    c = _complex(args)
    t = hilbert_coefficients(c, _exponents(args, c))
    if args.format == "json":
        return t.to_json()
    rows = [(i, str(e), exact(L)) for i, (e, L) in enumerate(zip(t.e, t.limits))]
    if args.format == "tsv":
        return _tsv([("i", "e_i(q)", "L_i")] + rows)
    lines = [f"d = {t.dimension}"]
    lines += [f"e_{i}(q) = {e}    L_{i} = {L}" for i, e, L in rows]
    lines.append(f"e_HK(J^k) = {t.ehk_powers}")
    return "\n".join(lines)


def cmd_ehk(args):
    c = _complex(args)
    v = _exponents(args, c)
    values = [(k, ehk_of_powers(c, v, k)) for k in range(args.kmin, args.kmax + 1)]
    if args.format == "json":
        return {"e0": multiplicity_e0(c, v), "d": c.dimension, "ehk": {str(k): exact(x) for k, x in values}}
    if args.format == "tsv":
        return _tsv([("k", "e_HK")] + [(k, exact(x)) for k, x in values])
    return "\n".join(f"e_HK(J^{k}) = {exact(x)}" for k, x in values)


def cmd_audit(args):
    c = _complex(args)
    report = smirnov_audit(c, _exponents(args, c), assume_cm=args.assume_cm, max_facets=args.max_facets)
    if args.format == "json":
        return report.to_json()
    fields = report.to_json()
    fields.pop("coefficients")
    if args.format == "tsv":
        return _tsv([("field", "value")] + [(k, json.dumps(v)) for k, v in fields.items()])
    return "\n".join(f"{k}: {v}" for k, v in fields.items())


def cmd_verify(args):
    c = _complex(args)
    budget = EnumerationBudget(args.budget) if args.budget else EnumerationBudget.from_env()
    result = cross_validate(c, _exponents(args, c), args.qmax, args.kmax, budget, args.threads)
    if args.format == "json":
        out = result.to_json()
    elif args.format == "tsv":
        out = _tsv(
            [("q", "k", "closed_form", "count", "match")]
            + [(p.q, p.k, exact(p.expected), p.counted, int(p.match)) for p in result.points]
        )
    else:
        lines = [result.summary()]
        lines += [f"MISMATCH q={p.q} k={p.k}: closed form {p.expected}, count {p.counted}" for p in result.mismatches]
        out = "\n".join(lines)
    return out, (0 if result.ok else EXIT_MISMATCH)


def cmd_limits(args):
    if not args.input:
        raise CommandError("limits needs --input with a PowerTable JSON file")
    t = parse_input(args.input)
    if not isinstance(t, PowerTable):
        raise CommandError("limits expects a PowerTable document", "/")
    L = all_limits(t)
    lo = max(1, t.r - t.d + 1)
    predicted = {n: predicted_ehk(t, L, n) for n in range(lo, t.r + 4)}
    out = {
        "d": t.d,
        "r": t.r,
        "limits": [exact(x) for x in L],
        "predicted_ehk": {str(n): exact(x) for n, x in predicted.items()},
        "assumptions": list(t.assumptions),
    }
    if t.d == 2:
        out["dim2_closed_forms"] = [exact(x) for x in dim2_closed_forms(t)]
    if t.d == 1:
        chk = dim1_check(t)
        out["dim1_check"] = {"value": exact(chk.value), "consistent": chk.consistent}
    if args.format == "json":
        return out
    rows = [(f"L_{i}", x) for i, x in enumerate(out["limits"])]
    rows += [(f"e_HK(I^{n})", x) for n, x in out["predicted_ehk"].items()]
    if "dim1_check" in out:
        rows.append(("dim1_check", out["dim1_check"]["value"] + ("" if out["dim1_check"]["consistent"] else " VIOLATION")))
    if args.format == "tsv":
        return _tsv([("quantity", "value")] + rows)
    return "\n".join(f"{k} = {x}" for k, x in rows)


def cmd_family(args):
    c = _complex(args)
    if args.format == "json":
        return c.to_json()
    if args.format == "tsv":
        return _tsv([("facet",)] + [(",".join(map(str, f)),) for f in c.facets])
    shell = is_shellable(c, args.max_facets)
    return "\n".join(
        [
            f"vertices: {c.num_vertices}",
            f"facets: {[list(f) for f in c.facets]}",
            f"d: {c.dimension}",
            f"h-vector: {list(h_vector(c).h)}",
            f"shellable: {shell.status}",
        ]
    )


COMMANDS = {
    "hk": (cmd_hk, "closed-form l(R/(J^[q])^k)"),
    "coeffs": (cmd_coeffs, "Hilbert-Samuel coefficients e_i(J^[q]) and limits"),
    "ehk": (cmd_ehk, "e_HK(J^k) for a range of k"),
    "audit": (cmd_audit, "stability and conjecture audit"),
    "verify": (cmd_verify, "cross-check the closed form against brute-force counts"),
    "limits": (cmd_limits, "limit formulas on a PowerTable JSON file"),
    "family": (cmd_family, "emit a named complex as JSON"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hkface", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--family", help="family spec, e.g. cycle:5, bipartite:2,3")
        p.add_argument("--input", help="JSON input file")
        p.add_argument("--v", help="exponent vector, e.g. 1,1,2,1 (default all ones)")
        p.add_argument("--format", choices=("json", "tsv", "text"), default="json" if name == "family" else "text")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--max-facets", type=int, default=12, help="shellability search cap")
        if name == "ehk":
            p.add_argument("--kmin", type=int, default=1)
            p.add_argument("--kmax", type=int, default=5)
        if name == "verify":
            p.add_argument("--qmax", type=int, default=3)
            p.add_argument("--kmax", type=int, default=3)
            p.add_argument("--budget", type=int, help="lattice point budget (or HKFACE_BUDGET)")
        if name == "audit":
            p.add_argument("--assume-cm", action="store_true", help="treat the face ring as Cohen-Macaulay")
    return parser


def _error(message: str, pointer: str = "") -> None:
    print(json.dumps({"error": message, "pointer": pointer}), file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        result = handler(args)
    except (CommandError, InputError, ComplexError) as exc:
        _error(str(exc), getattr(exc, "pointer", ""))
        return getattr(exc, "code", EXIT_INPUT)
    except TableError as exc:
        _error(str(exc))
        return EXIT_INPUT
    except BudgetExceeded as exc:
        _error(str(exc))
        return EXIT_BUDGET
    status = 0
    if isinstance(result, tuple):
        result, status = result
    if isinstance(result, (dict, list)):
        print(json.dumps(result, indent=2))
    else:
        print(result)
    return status


if __name__ == "__main__":
    sys.exit(main())
