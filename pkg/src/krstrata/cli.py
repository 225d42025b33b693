"""Command-line frontend.  Output is deterministic: sorted keys, sorted rows.

Exit codes: 0 success, 2 usage or malformed input, 3 window exceeded,
4 internal invariant failure (two computations disagreed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any

from krstrata import __version__
from krstrata.alcove import PermDatum, enumerate_perm, is_permissible_oracle
from krstrata.bruhat import covering_relations, total_length, word_label
from krstrata.config import InvariantError, KRError, WindowError
from krstrata.prank import (
    InertUnitaryConfig,
    RamifiedUnitaryConfig,
    SplitUnitaryConfig,
    SymplecticConfig,
    newton_vector,
)
from krstrata.reports import (
    density_report,
    hb_report,
    prank0_dimension,
    product_index_set,
    stratum_table,
)
from krstrata.weyl import GL, GU, ExtAffineElement, FrobeniusTuple, GroupFlavor, GSp

EXIT_USAGE, EXIT_WINDOW, EXIT_INVARIANT = 2, 3, 4


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ parsing

def parse_tuple(text: str) -> FrobeniusTuple:
    """Parse ``w=[2,1];l=[1,0];w=[1,2];l=[0,1]`` into a Frobenius tuple."""
    tokens = [tok.strip() for tok in text.strip().split(";") if tok.strip()]
    if not tokens or len(tokens) % 2:
        raise UsageError(f"malformed tuple {text!r}: expected w=[..];l=[..] pairs")
    elements = []
    for wtok, ltok in zip(tokens[::2], tokens[1::2]):
        if not (wtok.startswith("w=") and ltok.startswith("l=")):
            raise UsageError(f"malformed component {wtok};{ltok}")
        try:
            w, lam = json.loads(wtok[2:]), json.loads(ltok[2:])
            if not (isinstance(w, list) and isinstance(lam, list)):
                raise ValueError("not a list")
            if not all(type(a) is int for a in w + lam):
                raise ValueError("entries must be integers")
            elements.append(ExtAffineElement(tuple(w), tuple(lam)))
        except (ValueError, KRError) as exc:
            raise UsageError(f"malformed component {wtok};{ltok}: {exc}") from None
    try:
        return FrobeniusTuple(elements)
    except KRError as exc:
        raise UsageError(str(exc)) from None


def _flavor(kind: str, n: int) -> GroupFlavor:
    return {"gsp": GSp, "gl": GL, "gu": GU}[kind](n)


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} --flavor {args.flavor} needs {', '.join(missing)}")


def _datum(args) -> PermDatum:
    kind = {"gu-ramified": "gu"}.get(args.flavor, args.flavor)
    if kind == "gl":
        _require(args, "r")
        return PermDatum(GL(args.n), args.e, args.r)
    if args.r is not None:
        raise UsageError("--r only applies to --flavor gl")
    return PermDatum(_flavor(kind, args.n), args.e)


# --------------------------------------------------------------- formatting

def _element_json(x: ExtAffineElement) -> dict:
    return {"w": list(x.w), "l": list(x.lam)}


def _fraction(q: Fraction) -> str:
    return str(q)


def envelope(command: str, parameters: dict, rows: list[dict]) -> dict:
    return {
        "command": command,
        "engine_version": __version__,
        "parameters": parameters,
        "rows": rows,
    }


def render_json(env: dict) -> str:
    return json.dumps(env, sort_keys=True, indent=2) + "\n"


def render_csv(env: dict) -> str:
    rows = env["rows"]
    keys = sorted({k for row in rows for k in row})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(keys)
    for row in rows:
        writer.writerow(
            [json.dumps(row[k], sort_keys=True) if isinstance(row.get(k), (list, dict)) else _csv_scalar(row.get(k)) for k in keys]
        )
    return buf.getvalue()


def _csv_scalar(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_dot(nodes: list[tuple[str, str]], edges: list[tuple[str, str]], name: str) -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for node_id, label in nodes:
        lines.append(f'  "{node_id}" [label="{label}"];')
    for lo, hi in edges:
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- commands

def cmd_enum_perm(args) -> tuple[dict, str | None]:
    d = _datum(args)
    flavor = d.flavor
    perm = enumerate_perm(d)
    disagree = [x for x in perm if not is_permissible_oracle(x, d)]
    if disagree:
        raise InvariantError(f"lattice oracle rejects {', '.join(map(str, disagree))}")
    coxeter = flavor.kind in ("GL", "GSp")
    rows = []
    for t in product_index_set(perm, args.f):
        rows.append(
            {
                "index": str(t),
                "components": [_element_json(x) for x in t],
                "length": total_length(t, flavor) if coxeter else None,
                "oracle_agrees": True,
            }
        )
    params = {"flavor": args.flavor, "e": args.e, "n": args.n, "r": args.r, "f": args.f}
    return envelope("enum-perm", params, rows), None


def _prank_setup(args):
    f = args.f
    if args.flavor == "gsp":
        cfg = SymplecticConfig(e=args.e, f=f, n=args.n)
        return cfg, enumerate_perm(cfg.datum), GSp(args.n)
    if args.flavor in ("gu", "gu-ramified"):
        cfg = RamifiedUnitaryConfig(e0=args.e, f=f, n=args.n)
        return cfg, enumerate_perm(cfg.datum), None
    if args.flavor == "gu-inert":
        _require(args, "r")
        cfg = InertUnitaryConfig(e=args.e, f0=f, n=args.n)
        return cfg, enumerate_perm(PermDatum(GL(args.n), args.e, args.r)), GL(args.n)
    if args.flavor in ("gu-split", "gl"):
        _require(args, "r")
        cfg = SplitUnitaryConfig(e=args.e, f0=f, n=args.n, r=args.r)
        return cfg, enumerate_perm(cfg.datum), GL(args.n)
    raise UsageError(f"unknown flavor {args.flavor}")


def _stratum_row(rec, flavor) -> dict:
    return {
        "index": str(rec.index),
        "components": [_element_json(x) for x in rec.index],
        "words": [word_label(x, flavor) for x in rec.index] if flavor is not None else None,
        "prank": rec.prank,
        "length": rec.length,
        "is_maximal": rec.is_maximal if flavor is not None else None,
    }


def cmd_prank_table(args):
    cfg, perm, flavor = _prank_setup(args)
    table = stratum_table(product_index_set(perm, args.f), cfg, flavor)
    params = {"flavor": args.flavor, "e": args.e, "n": args.n, "r": args.r, "f": args.f}
    return envelope("prank-table", params, [_stratum_row(rec, flavor) for rec in table]), None


def cmd_poset(args):
    if args.flavor not in ("gsp", "gl", "gu-split", "gu-inert"):
        raise UsageError("poset needs a flavor with a Bruhat order: gsp, gl, gu-inert or gu-split")
    cfg, perm, flavor = _prank_setup(args)
    index = product_index_set(perm, args.f)
    table = stratum_table(index, cfg, flavor)
    edges = covering_relations(index, flavor)
    params = {"flavor": args.flavor, "e": args.e, "n": args.n, "r": args.r, "f": args.f}
    if args.format == "dot":
        nodes = [
            (str(rec.index), f"{', '.join(word_label(x, flavor) for x in rec.index)}\\nl={rec.length} p={rec.prank}")
            for rec in table
        ]
        return None, render_dot(nodes, [(str(a), str(b)) for a, b in edges], f"poset-{args.flavor}")
    rows = [_stratum_row(rec, flavor) for rec in table]
    cover = {str(rec.index): [] for rec in table}
    for a, b in edges:
        cover[str(b)].append(str(a))
    for row in rows:
        row["covers"] = cover[row["index"]]
    return envelope("poset", params, rows), None


def cmd_density(args):
    rep = density_report(args.e, args.f, args.n)
    if rep.dense != (args.f == 1) or not rep.maxima_are_translations:
        raise InvariantError(f"density verdict {rep.dense} disagrees for e={args.e}, f={args.f}, n={args.n}")
    row = {
        "dense": rep.dense,
        "maximal_per_component": [_element_json(x) for x in rep.maximal_per_component],
        "maximal_tuples": rep.maximal_tuples,
        "diagonal_tuples": rep.diagonal_tuples,
    }
    env = envelope("density", {"e": args.e, "f": args.f, "n": args.n}, [row])
    text = f"dense: {'true' if rep.dense else 'false'}\n"
    return env, text


def cmd_prank0(args):
    res = prank0_dimension(args.n, args.r)
    if not res.consistent:
        raise InvariantError(f"maximum {res.dimension} differs from closed form {res.closed_form}")
    row = {
        "dimension": res.dimension,
        "witness": list(res.witness),
        "explicit_witness": list(res.explicit_witness),
        "closed_form": res.closed_form,
    }
    return envelope("prank0", {"n": args.n, "r": args.r}, [row]), f"{res.dimension}\n"


def cmd_hb(args):
    rep = hb_report(args.g)
    flavor = GSp(1)
    tuples = lambda ts: [str(t) for t in ts]  # noqa: E731
    row = {
        "g": rep.g,
        "prank_values": rep.prank_values,
        "ordinary": tuples(rep.ordinary),
        "maximal": tuples(rep.maximal),
        "maximal_count": len(rep.maximal),
        "maximal_lengths": rep.maximal_lengths,
        "prank0_components": tuples(rep.prank0_components),
        "prank0_covered": rep.prank0_covered,
        "closure_intersection": tuples(rep.intersection),
        "closure_intersection_prank0": rep.intersection_prank0,
        "strata": [_stratum_row(rec, flavor) for rec in rep.strata],
    }
    return envelope("hb", {"g": args.g}, [row]), None


def cmd_newton(args):
    t = parse_tuple(args.tuple)
    res = newton_vector(t)
    row = {
        "nu": [[_fraction(q) for q in v] for v in res.nu],
        "zero_multiplicity": res.zero_multiplicity,
        "N": res.N,
    }
    return envelope("newton", {"tuple": str(t)}, [row]), None


# --------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="krstrata", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, flavors, formats=("json", "csv")):
        sp.add_argument("--flavor", required=True, choices=flavors)
        sp.add_argument("--e", type=int, required=True, help="ramification index (e_0 for gu)")
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--r", type=int)
        sp.add_argument("--f", type=int, default=1, help="size of the Frobenius orbit")
        sp.add_argument("--format", choices=formats, default=formats[0])

    common(sub.add_parser("enum-perm", help="list permissible index tuples"), ["gsp", "gu", "gu-ramified", "gl"])
    common(
        sub.add_parser("prank-table", help="p-rank and length per stratum"),
        ["gsp", "gu", "gu-ramified", "gu-inert", "gu-split", "gl"],
    )
    common(
        sub.add_parser("poset", help="closure relations between strata"),
        ["gsp", "gl", "gu-inert", "gu-split"],
        formats=("dot", "json"),
    )
    sp = sub.add_parser("density", help="is the ordinary locus dense (symplectic case)")
    for name in ("e", "f", "n"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp = sub.add_parser("prank0", help="dimension of the p-rank 0 locus (split unitary, F_0 = Q)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp = sub.add_parser("hb", help="inert Hilbert-Blumenthal report")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp = sub.add_parser("newton", help="Newton vector of a Frobenius tuple")
    sp.add_argument("--tuple", required=True, help="e.g. 'w=[2,1];l=[1,0]'")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    for sp in sub.choices.values():
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
    return p


COMMANDS = {
    "enum-perm": cmd_enum_perm,
    "prank-table": cmd_prank_table,
    "poset": cmd_poset,
    "density": cmd_density,
    "prank0": cmd_prank0,
    "hb": cmd_hb,
    "newton": cmd_newton,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        env, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"krstrata: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WindowError as exc:
        print(f"krstrata: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_WINDOW
    except InvariantError as exc:
        print(f"krstrata: invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (KRError, ValueError) as exc:
        print(f"krstrata: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "text" or args.format == "dot":
        out = text
    elif args.format == "csv":
        out = render_csv(env)
    else:
        out = render_json(env)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
