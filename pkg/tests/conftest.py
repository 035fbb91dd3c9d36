"""Shared fixtures: the weight-swapped path pair, a deterministic graph
corpus, weight patterns for exhaustive tree sweeps, and Hopf-axiom
checkers used by both the unit and acceptance suites."""

from __future__ import annotations

import random

import pytest

from chromac import (MacMahonElement, TensorElement, VectorPartition,
                     WeightedGraph, antipode, coproduct, counterexample_pair,
                     cycle_graph, path_graph, star_graph)


acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def t1():
    return counterexample_pair()[0]


@pytest.fixture(scope="session")
def t2():
    return counterexample_pair()[1]


def weight_patterns(n: int, max_weight: int) -> list[tuple[int, ...]]:
    """Deterministic scalar weight assignments covering [1, max_weight]."""
    patterns = {
        tuple([1] * n),
        tuple((i % max_weight) + 1 for i in range(n)),
        tuple(max_weight - (i % max_weight) for i in range(n)),
    }
    return sorted(patterns)


def random_simple_graph(rng: random.Random, n: int, r: int = 1,
                        max_weight: int = 4, density: float = 0.4) -> WeightedGraph:
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n)
                  if rng.random() < density)
    weights = tuple(tuple(rng.randint(1, max_weight) for _ in range(r)) for _ in range(n))
    return WeightedGraph(n, weights, edges, r)


@pytest.fixture(scope="session")
def corpus() -> list[WeightedGraph]:
    """Fixed list of >= 200 graphs with n <= 6: paths, cycles, stars,
    random graphs, plus a few two-dimensional weightings."""
    graphs: list[WeightedGraph] = []
    for n in range(1, 7):
        for pattern in weight_patterns(n, 4):
            graphs.append(path_graph(pattern))
    for n in range(3, 7):
        for pattern in weight_patterns(n, 4):
            graphs.append(cycle_graph(pattern))
    for n in range(2, 7):
        for pattern in weight_patterns(n, 4):
            graphs.append(star_graph(pattern[0], pattern[1:]))
    rng = random.Random(20260814)
    while len(graphs) < 200:
        graphs.append(random_simple_graph(rng, rng.randint(1, 6)))
    for seed in range(8):
        rng2 = random.Random(seed)
        graphs.append(random_simple_graph(rng2, rng2.randint(1, 5), r=2, max_weight=3))
    return graphs


def random_element(rng: random.Random, width: int = 2,
                   max_terms: int = 3, max_coord: int = 2) -> MacMahonElement:
    terms: dict[VectorPartition, int] = {}
    for _ in range(rng.randint(0, max_terms)):
        parts = []
        for _ in range(rng.randint(0, 3)):
            vec = (0,) * width
            while not any(vec):
                vec = tuple(rng.randint(0, max_coord) for _ in range(width))
            parts.append(vec)
        p = VectorPartition.of(parts, width=width)
        terms[p] = terms.get(p, 0) + rng.randint(-5, 5)
    return MacMahonElement(width, terms)


# ---------------------------------------------------------------------------
# Hopf axiom checkers

TripleTerms = dict[tuple[VectorPartition, VectorPartition, VectorPartition], int]


def _basis(p: VectorPartition) -> MacMahonElement:
    return MacMahonElement.power_sum(p)


def double_coproduct_left(element: MacMahonElement) -> TripleTerms:
    """(coproduct (x) id) after coproduct, as a triple-tensor term map."""
    acc: TripleTerms = {}
    for (left, right), c in coproduct(element).terms.items():
        for (a, b), c2 in coproduct(_basis(left)).terms.items():
            key = (a, b, right)
            acc[key] = acc.get(key, 0) + c * c2
    return {k: v for k, v in acc.items() if v}


def double_coproduct_right(element: MacMahonElement) -> TripleTerms:
    """(id (x) coproduct) after coproduct."""
    acc: TripleTerms = {}
    for (left, right), c in coproduct(element).terms.items():
        for (a, b), c2 in coproduct(_basis(right)).terms.items():
            key = (left, a, b)
            acc[key] = acc.get(key, 0) + c * c2
    return {k: v for k, v in acc.items() if v}


def antipode_convolution(element: MacMahonElement) -> MacMahonElement:
    """Multiply after (antipode (x) id) after coproduct; the antipode law
    says this equals the coefficient of the empty partition times 1."""
    acc = MacMahonElement.zero(element.width)
    for (left, right), c in coproduct(element).terms.items():
        acc = acc + c * (antipode(_basis(left)) * _basis(right))
    return acc


def counit(element: MacMahonElement) -> int:
    return element.coefficient(VectorPartition(element.width, ()))


def coproduct_respects_product(a: MacMahonElement, b: MacMahonElement) -> bool:
    lhs = coproduct(a * b)
    terms: dict[tuple[VectorPartition, VectorPartition], int] = {}
    for (l1, r1), c1 in coproduct(a).terms.items():
        for (l2, r2), c2 in coproduct(b).terms.items():
            key = (l1.concat(l2), r1.concat(r2))
            terms[key] = terms.get(key, 0) + c1 * c2
    return lhs == TensorElement(a.width, terms)
