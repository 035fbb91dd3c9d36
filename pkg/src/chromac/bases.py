"""Chromatic bases of the positive-part algebra from families of
connected weighted graphs.

A family assigns to each feasible (size, weight) pair a connected
weighted graph.  Multiplying CMFs over the parts of a vector partition
and expanding in the power-sum basis gives a transition matrix; for
tree-shaped families it is triangular with entries +-1 on the diagonal
under the canonical partition order, so the family CMFs form a basis.
"""

from __future__ import annotations

from typing import Callable

from .algebra import MacMahonElement, VectorPartition, partitions_of
from .chromatic import cmf
from .graphs import (WeightedGraph, connected_components, disjoint_union,
                     single_vertex, star_graph)

Family = Callable[[int, int], WeightedGraph]


def star_family(n: int, w: int) -> WeightedGraph:
    """Star with center weight w - n + 1 and n - 1 leaves of weight 1."""
    if n < 1:
        raise ValueError("need n >= 1")
    if w < n:
        raise ValueError(f"total weight {w} is below the vertex count {n}; "
                         "every vertex needs weight >= 1")
    if n == 1:
        return single_vertex(w)
    return star_graph(w - n + 1, [1] * (n - 1))


def realizable_partitions(multidegree: tuple[int, int]) -> list[VectorPartition]:
    """Vector partitions of (N, W) whose parts (n_i, w_i) all satisfy
    w_i >= n_i >= 1, i.e. are sizes and weights of connected weighted
    graphs.  Sorted by length, then lexicographically; every subset type
    of every graph of this multidegree is such a partition."""
    n, w = multidegree
    if n < 0 or w < 0:
        raise ValueError("multidegree coordinates must be >= 0")
    if n == 0 or w < n:
        return []
    found = [p for p in partitions_of((n, w), positive_parts=True)
             if all(part[1] >= part[0] for part in p.parts)]
    return sorted(found, key=VectorPartition.sort_key)


def family_graph(family: Family, partition: VectorPartition) -> WeightedGraph:
    """Disjoint union of family members, one per part of the partition."""
    graph = WeightedGraph(0, (), (), 1)
    for size, weight in partition.parts:
        member = family(size, weight)
        if member.r != 1:
            raise ValueError("family members must have scalar weights")
        if member.n != size or member.total_weight != (weight,):
            raise ValueError(f"family graph for part ({size},{weight}) has "
                             f"{member.n} vertices and weight {member.total_weight}")
        if len(connected_components(member, member.edges)) != 1:
            raise ValueError(f"family graph for part ({size},{weight}) is not connected")
        graph = disjoint_union(graph, member)
    return graph


def transition_matrix(family: Family, multidegree: tuple[int, int]) -> list[list[int]]:
    """Square matrix of family-product CMFs in the power-sum basis.

    Row i holds the coefficients of cmf(family graph of partition i) on
    the realizable partitions of the multidegree, in canonical order.
    """
    index = realizable_partitions(multidegree)
    position = {p: j for j, p in enumerate(index)}
    matrix: list[list[int]] = []
    for partition in index:
        element: MacMahonElement = cmf(family_graph(family, partition))
        row = [0] * len(index)
        for support, coeff in element.terms.items():
            if support not in position:
                raise RuntimeError(f"CMF support {support} outside the realizable partitions")
            row[position[support]] = coeff
        matrix.append(row)
    return matrix


def is_triangular_with_unit_diagonal(matrix: list[list[int]]) -> bool:
    """True iff the matrix is upper triangular in the canonical order with
    every diagonal entry +1 or -1 (hence unimodularly invertible)."""
    for i, row in enumerate(matrix):
        if len(row) != len(matrix):
            raise ValueError("matrix is not square")
        if abs(row[i]) != 1:
            return False
        if any(row[j] != 0 for j in range(i)):
            return False
    return True


def matrix_to_text(matrix: list[list[int]]) -> str:
    return "\n".join("\t".join(str(entry) for entry in row) for row in matrix)
