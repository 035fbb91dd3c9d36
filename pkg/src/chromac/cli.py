"""Command-line interface.

Canonical data goes to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 failed verification, 2 unreadable input, 3 size cap
exceeded, 4 invariant not applicable to the input.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Iterator

from .bases import is_triangular_with_unit_diagonal, matrix_to_text, star_family, transition_matrix
from .chromatic import (DEFAULT_MAX_COLORINGS, DEFAULT_MAX_EDGES, DEFAULT_MAX_VERTICES,
                        beta_table, cmf, cmf_by_enumeration, egdp, specialize_csf,
                        specialize_egdp)
from .errors import CapExceededError, NotApplicableError
from .graphs import (GraphFormatError, WeightedGraph, all_labeled_trees,
                     counterexample_pair, parse_graph, random_forest, serialize_graph)
from .hopf import (antipode, coproduct, egdp_convolution, recover_egdp_hopf,
                   recover_stats, symbolic_counting_image)
from .recovery import recover_egdp_explicit
from .algebra import MacMahonElement

import itertools


def _load_graph(path: str) -> WeightedGraph:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}")
    return parse_graph(text)


def cmd_compute(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    if args.truncate is not None and args.invariant != "cmf":
        raise NotApplicableError("--truncate applies only to the cmf invariant")
    if args.invariant == "cmf":
        element = cmf(g, max_edges=args.max_edges)
        if args.truncate is not None:
            print(element.truncate(args.truncate).to_text())
        else:
            print(element.to_text())
    elif args.invariant == "wcsf":
        print(specialize_csf(cmf(g, max_edges=args.max_edges), "weight").to_text())
    elif args.invariant == "csf":
        print(specialize_csf(cmf(g, max_edges=args.max_edges), "cardinality").to_text())
    elif args.invariant == "beta":
        table = beta_table(g, max_edges=args.max_edges)
        print(MacMahonElement(g.r + 1, table).to_text())
    elif args.invariant == "egdp":
        print(egdp(g, max_vertices=args.max_vertices).to_text())
    elif args.invariant in ("wgdp", "gdp"):
        print(specialize_egdp(egdp(g, max_vertices=args.max_vertices), args.invariant).to_text())
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(args.invariant)
    return 0


def cmd_hopf(args: argparse.Namespace) -> int:
    element = cmf(_load_graph(args.path), max_edges=args.max_edges)
    if args.op == "coproduct":
        print(coproduct(element).to_text())
    elif args.op == "antipode":
        print(antipode(element).to_text())
    elif args.op == "phi":
        print(symbolic_counting_image(element).to_text())
    elif args.op == "gamma":
        print(egdp_convolution(element).to_text())
    elif args.op == "stats":
        try:
            stats = recover_stats(element)
        except ValueError as exc:
            raise NotApplicableError(str(exc))
        w = ",".join(str(c) for c in stats.weight)
        print(f"n={stats.n} e={stats.e} w={w} c={stats.c}")
    else:  # pragma: no cover
        raise ValueError(args.op)
    return 0


def _weight_assignments(n: int, weight_max: int, r: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    single = list(itertools.product(range(1, weight_max + 1), repeat=r))
    yield from itertools.product(single, repeat=n)


def _check_forest(g: WeightedGraph) -> str | None:
    """Verify both recovery routes against the subset expansion; returns an
    error description or None."""
    expected = egdp(g)
    element = cmf(g)
    recovered = recover_egdp_hopf(element)
    if recovered != expected:
        return "hopf route mismatch"
    if g.r == 1:
        table = beta_table(g)
        explicit = recover_egdp_explicit(table, g.n, g.total_weight[0], g.edge_count)
        if explicit != expected:
            return "explicit route mismatch"
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    checked = 0
    if args.mode == "exhaustive":
        for n in range(1, args.n_max + 1):
            for edges in all_labeled_trees(n):
                for weights in _weight_assignments(n, args.weight_max, args.r):
                    g = WeightedGraph(n, weights, edges, args.r)
                    failure = _check_forest(g)
                    if failure is not None:
                        print(f"FAIL: {failure}", file=sys.stderr)
                        print(serialize_graph(g), end="")
                        print("RESULT: FAIL")
                        return 1
                    checked += 1
    else:
        rng = random.Random(args.seed)
        for _ in range(args.trials):
            n = rng.randint(1, args.n_max)
            g = random_forest(n, args.weight_max, args.r, seed=rng.randrange(2 ** 32))
            failure = _check_forest(g)
            if failure is not None:
                print(f"FAIL: {failure}", file=sys.stderr)
                print(serialize_graph(g), end="")
                print("RESULT: FAIL")
                return 1
            checked += 1
    print(f"mode: {args.mode}")
    print(f"checked: {checked} forests")
    print("RESULT: PASS")
    return 0


def cmd_counterexample(args: argparse.Namespace) -> int:
    t1, t2 = counterexample_pair()
    cmf1, cmf2 = cmf(t1), cmf(t2)
    wcsf_equal = specialize_csf(cmf1, "weight") == specialize_csf(cmf2, "weight")
    csf_equal = specialize_csf(cmf1, "cardinality") == specialize_csf(cmf2, "cardinality")
    wgdp1 = specialize_egdp(egdp(t1), "wgdp")
    wgdp2 = specialize_egdp(egdp(t2), "wgdp")
    coeff1 = wgdp1.coefficient({"x": 4, "y": 3})
    coeff2 = wgdp2.coefficient({"x": 4, "y": 3})
    trunc_distinct = cmf1.truncate(2) != cmf2.truncate(2)
    print(f"wCSF equal: {'yes' if wcsf_equal else 'no'}")
    print(f"CSF equal: {'yes' if csf_equal else 'no'}")
    print(f"wGDP x^4 y^3 coefficient: {coeff1} vs {coeff2}")
    print(f"CMF(k=2) distinct: {'yes' if trunc_distinct else 'no'}")
    ok = wcsf_equal and csf_equal and coeff1 != coeff2 and trunc_distinct
    return 0 if ok else 1


def cmd_bases_check(args: argparse.Namespace) -> int:
    all_ok = True
    for n in range(1, args.n_max + 1):
        for w in range(1, args.weight_max + 1):
            matrix = transition_matrix(star_family, (n, w))
            ok = is_triangular_with_unit_diagonal(matrix)
            all_ok = all_ok and ok
            status = "ok" if ok else "FAIL"
            print(f"multidegree ({n},{w}): size {len(matrix)} {status}")
            if args.show_matrices and matrix:
                print(matrix_to_text(matrix))
    print(f"RESULT: {'PASS' if all_ok else 'FAIL'}")
    return 0 if all_ok else 1


def cmd_random_forest(args: argparse.Namespace) -> int:
    g = random_forest(args.n, args.max_weight, args.r, seed=args.seed)
    print(serialize_graph(g), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromac",
        description="Chromatic MacMahon symmetric functions of weighted graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="invariants of a graph file")
    compute.add_argument("path")
    compute.add_argument("--invariant", required=True,
                         choices=["cmf", "wcsf", "csf", "beta", "egdp", "wgdp", "gdp"])
    compute.add_argument("--truncate", type=int, default=None, metavar="K",
                         help="expand the cmf in K colors")
    compute.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    compute.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    compute.set_defaults(func=cmd_compute)

    hopf = sub.add_parser("hopf", help="Hopf-structure computations on the cmf")
    hopf.add_argument("path")
    hopf.add_argument("--op", required=True,
                      choices=["coproduct", "antipode", "phi", "gamma", "stats"])
    hopf.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    hopf.set_defaults(func=cmd_hopf)

    verify = sub.add_parser("verify", help="check both EGDP recovery routes on forests")
    verify.add_argument("--mode", choices=["exhaustive", "random"], default="random")
    verify.add_argument("--n-max", type=int, default=5)
    verify.add_argument("--weight-max", type=int, default=2)
    verify.add_argument("--r", type=int, default=1)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=cmd_verify)

    counter = sub.add_parser("counterexample",
                             help="two weighted trees with equal wCSF but different wGDP")
    counter.set_defaults(func=cmd_counterexample)

    bases = sub.add_parser("bases", help="chromatic basis checks")
    bases_sub = bases.add_subparsers(dest="bases_command", required=True)
    check = bases_sub.add_parser("check", help="star-family transition matrices")
    check.add_argument("--n-max", type=int, default=4)
    check.add_argument("--weight-max", type=int, default=6)
    check.add_argument("--show-matrices", action="store_true")
    check.set_defaults(func=cmd_bases_check)

    forest = sub.add_parser("random-forest", help="emit a random weighted forest")
    forest.add_argument("--n", type=int, required=True)
    forest.add_argument("--max-weight", type=int, default=4)
    forest.add_argument("--r", type=int, default=1)
    forest.add_argument("--seed", type=int, default=0)
    forest.set_defaults(func=cmd_random_forest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotApplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
