"""Command-line interface.

Exit codes: 0 success, 1 input error (bad file, infeasible request,
graph outside the supported class), 2 contract violation (a guarantee
that should always hold failed; always a bug), 3 resource limit hit.
All output is deterministic: identical inputs and seeds give
byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .composition import (detect_strip_decomposition, parse_composition,
                          serialize_composition)
from .dimacs import (parse_colouring, parse_graph, serialize_colouring,
                     serialize_graph)
from .errors import ContractViolationError, InputError, ResourceLimitError
from .exact import InfeasibleAtBudget, exact_chromatic, exact_clique_number
from .fractional import compute_overlaps, fractional_chromatic
from .generators import gen_circular_interval, gen_composition
from .graphs import verify_colouring
from .interval import serialize_rep
from .pipeline import colour_quasi_line, compute_bounds


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _format_fraction(x) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _format_classes(fc) -> str:
    lines = []
    for s, w in fc.classes:
        members = ",".join(str(v + 1) for v in sorted(s))
        lines.append(f"w={_format_fraction(w)} S={{{members}}}")
    return "\n".join(lines) + "\n"


def _cmd_colour(args) -> int:
    text = _read(args.file)
    if args.composition:
        comp = parse_composition(text)
        g = comp.graph
        target = comp
    else:
        g = parse_graph(text)
        target = g
    colouring = colour_quasi_line(target)
    budget = args.budget
    if budget is not None and colouring.palette_size > budget:
        raise InfeasibleAtBudget(budget)
    if args.dump_stages:
        _dump_stages(args.dump_stages, target)
    sys.stdout.write(serialize_colouring(colouring))
    return 0


def _dump_stages(directory: str, target) -> None:
    from .composition import StripComposition, normalize
    from .hubcolour import contract
    from .rounding import round_all

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    if isinstance(target, StripComposition):
        comp = normalize(target)
        g = comp.graph
    else:
        comp = None
        g = target
    bounds, fc = compute_bounds(g)
    (out / "bounds.txt").write_text(
        f"omega {bounds.omega}\nchi_f {_format_fraction(bounds.chi_f)}\n"
        f"t {bounds.t}\n", encoding="utf-8")
    (out / "fractional.txt").write_text(_format_classes(fc), encoding="utf-8")
    if comp is not None:
        overlaps = compute_overlaps(fc, comp)
        lines = [f"e{e} {_format_fraction(w)}" for e, w in enumerate(overlaps.values)]
        (out / "overlaps.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
        rounded = round_all(fc, comp, bounds)
        after = compute_overlaps(rounded, comp)
        lines = [f"e{e} {_format_fraction(w)}" for e, w in enumerate(after.values)]
        (out / "overlaps_rounded.txt").write_text("\n".join(lines) + "\n",
                                                  encoding="utf-8")
        contraction = contract(comp, after)
        hp = contraction.hprime
        lines = [f"multigraph {hp.n} {len(hp.edges)}"]
        lines.extend(f"a {u + 1} {v + 1}" for u, v in hp.edges)
        (out / "hprime.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


def _cmd_chif(args) -> int:
    g = parse_graph(_read(args.file))
    chi_f, fc = fractional_chromatic(g)
    sys.stdout.write(f"chi_f = {_format_fraction(chi_f)}\n")
    sys.stdout.write(_format_classes(fc))
    return 0


def _cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    colouring = parse_colouring(_read(args.colouring), g.n)
    if verify_colouring(g, colouring):
        sys.stdout.write("valid\n")
        return 0
    sys.stdout.write("invalid: a monochromatic edge exists\n")
    return 1


def _cmd_oracle(args) -> int:
    g = parse_graph(_read(args.file))
    if args.quantity == "chi":
        chi, witness = exact_chromatic(g, budget=args.budget)
        sys.stdout.write(f"chi = {chi}\n")
        sys.stdout.write(serialize_colouring(witness))
    else:
        sys.stdout.write(f"omega = {exact_clique_number(g)}\n")
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "composition":
        comp = gen_composition(args.seed, h_size=args.h_size,
                               h_extra_edges=args.h_extra_edges,
                               nontrivial_edges=args.nontrivial,
                               strip_length=(args.strip_min, args.strip_max),
                               end_clique_sizes=(args.end_min, args.end_max))
        sys.stdout.write(serialize_composition(comp))
    else:
        g, rep = gen_circular_interval(args.seed, args.n,
                                       arc_length=(args.arc_min, args.arc_max))
        sys.stdout.write(serialize_graph(g))
        for line in serialize_rep(rep).splitlines():
            sys.stdout.write(f"c {line}\n")
    return 0


def _cmd_decompose(args) -> int:
    g = parse_graph(_read(args.file))
    comp = detect_strip_decomposition(g)
    if comp is None:
        sys.stdout.write("no decomposition found\n")
        return 1
    sys.stdout.write(serialize_composition(comp))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quasiline",
                                description="Colour quasi-line graphs with at "
                                            "most floor(chi_f + 3 sqrt(chi_f)) colours.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("colour", help="colour a graph or composition file")
    c.add_argument("file")
    c.add_argument("--composition", action="store_true",
                   help="treat the file as a strip composition")
    c.add_argument("--budget", type=int, default=None)
    c.add_argument("--dump-stages", default=None, metavar="DIR")
    c.set_defaults(func=_cmd_colour)

    f = sub.add_parser("chif", help="exact fractional chromatic number")
    f.add_argument("file")
    f.set_defaults(func=_cmd_chif)

    v = sub.add_parser("verify", help="verify a colouring file against a graph")
    v.add_argument("graph")
    v.add_argument("colouring")
    v.set_defaults(func=_cmd_verify)

    o = sub.add_parser("oracle", help="exact chi or omega")
    o.add_argument("quantity", choices=["chi", "omega"])
    o.add_argument("file")
    o.add_argument("--budget", type=int, default=None)
    o.set_defaults(func=_cmd_oracle)

    g = sub.add_parser("gen", help="seeded instance generators")
    gsub = g.add_subparsers(dest="kind", required=True)
    gc = gsub.add_parser("composition")
    gc.add_argument("--seed", type=int, required=True)
    gc.add_argument("--h-size", type=int, default=3)
    gc.add_argument("--h-extra-edges", type=int, default=2)
    gc.add_argument("--nontrivial", type=int, default=1)
    gc.add_argument("--strip-min", type=int, default=6)
    gc.add_argument("--strip-max", type=int, default=9)
    gc.add_argument("--end-min", type=int, default=1)
    gc.add_argument("--end-max", type=int, default=3)
    gc.set_defaults(func=_cmd_gen, kind="composition")
    gi = gsub.add_parser("circular")
    gi.add_argument("--seed", type=int, required=True)
    gi.add_argument("--n", type=int, default=12)
    gi.add_argument("--arc-min", type=int, default=2)
    gi.add_argument("--arc-max", type=int, default=4)
    gi.set_defaults(func=_cmd_gen, kind="circular")

    d = sub.add_parser("decompose", help="best-effort strip decomposition")
    d.add_argument("file")
    d.set_defaults(func=_cmd_decompose)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, InfeasibleAtBudget) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except ContractViolationError as exc:
        sys.stderr.write(f"contract violation (bug): {exc}\n")
        return 2
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return 3
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
