"""Closed-form recovery of the EGDP of a forest from its subset-type table.

For a forest with n vertices, total weight w and e edges, the number of
vertex subsets A with ext(A) = a, |A| = b, wt(A) = c, int(A) = d is a
signed binomial sum over the subset-type table: each type Lambda
contributes (-1)^(n - len(Lambda)) times a coefficient that sums over
sub-partitions of multidegree (b, c).  The engine of the cancellation
is the identity  sum_k C(P, k) (-1)^(k + q) C(k, q) = [P == q],
implemented below both literally and as the indicator it equals.
"""

from __future__ import annotations

from .algebra import (LaurentPolynomial, VectorPartition, choose,
                      partition_binomial, partitions_of)
from .errors import NotApplicableError


def signed_binomial_sum_literal(set_size: int, q: int) -> int:
    """sum over k of C(set_size, k) (-1)^(k+q) C(k, q), term by term."""
    if set_size < 0:
        raise ValueError("set size must be >= 0")
    total = 0
    for k in range(set_size + 1):
        sign = -1 if (k + q) & 1 else 1
        total += sign * choose(set_size, k) * choose(k, q)
    return total


def signed_binomial_sum(set_size: int, q: int) -> int:
    """Closed form of the literal sum: 1 if set_size == q else 0."""
    if set_size < 0:
        raise ValueError("set size must be >= 0")
    return 1 if set_size == q else 0


def recovery_coefficient(partition: VectorPartition, a: int, b: int, c: int, d: int,
                         *, n: int, e: int) -> int:
    """Contribution of one subset type to the count of vertex subsets with
    statistics (ext, size, weight, internal) = (a, b, c, d)."""
    if partition.width != 2:
        raise NotApplicableError("the explicit route requires scalar weights (width 2 types)")
    if min(a, b, c, d) < 0:
        raise ValueError("statistics must be >= 0")
    if b == 0 and c == 0:
        candidates = [VectorPartition(2, ())]
    else:
        candidates = partitions_of((b, c), positive_parts=True)
    sign = -1 if (e - a) & 1 else 1
    total = 0
    for omega in candidates:
        multiplicity = partition_binomial(partition, omega)
        if multiplicity == 0:
            continue
        inside = choose(b - omega.length, d)
        if inside == 0:
            continue
        outside_top = n - partition.length + omega.length - b
        if outside_top < 0:
            continue  # cannot happen when partition is a subset type
        total += multiplicity * inside * choose(outside_top, e - a - d)
    return sign * total


def recover_egdp_explicit(table: dict[VectorPartition, int], n: int,
                          total_weight: int, e: int) -> LaurentPolynomial:
    """Assemble the EGDP of a forest from its subset-type table.

    Equivalent to summing count * (-1)^(n - length) * recovery_coefficient
    over the table for every statistics tuple, but organized per type:
    each sub-partition of a type lands directly in its (b, c) bucket.
    """
    grid: dict[tuple[int, int, int, int], int] = {}
    for partition, count in table.items():
        if partition.width != 2:
            raise NotApplicableError("the explicit route requires scalar weights (width 2 types)")
        if partition.grade != (n, total_weight):
            raise ValueError(f"type {partition} does not have multidegree ({n},{total_weight})")
        type_sign = -1 if (n - partition.length) & 1 else 1
        base = count * type_sign
        # sub-multisets of the parts, with the product of per-part binomials
        subsets: list[tuple[int, int, int, int]] = [(0, 0, 0, 1)]  # (b, c, length, multiplicity)
        for part, m in partition.multiplicities().items():
            extended = []
            for b0, c0, l0, mult in subsets:
                for take in range(m + 1):
                    extended.append((b0 + take * part[0], c0 + take * part[1],
                                     l0 + take, mult * choose(m, take)))
            subsets = extended
        for b0, c0, l0, mult in subsets:
            inside_top = b0 - l0
            outside_top = n - partition.length + l0 - b0
            if inside_top < 0 or outside_top < 0:
                continue
            for d in range(0, min(e, inside_top) + 1):
                inside = choose(inside_top, d)
                contribution = base * mult * inside
                for a in range(max(0, e - d - outside_top), e - d + 1):
                    outside = choose(outside_top, e - a - d)
                    sign = -1 if (e - a) & 1 else 1
                    key = (a, b0, c0, d)
                    grid[key] = grid.get(key, 0) + sign * contribution * outside
    terms: dict[tuple[int, ...], int] = {}
    total = 0
    for key in sorted(grid):
        value = grid[key]
        if value < 0:
            a, b0, c0, d = key
            raise ValueError(f"negative reconstructed coefficient {value} at "
                             f"(ext,size,weight,internal)=({a},{b0},{c0},{d}); "
                             "the table is not a forest subset-type table for these parameters")
        if value:
            terms[key] = value
            total += value
    if total != 2 ** n:
        raise ValueError(f"reconstructed coefficients sum to {total}, expected 2^{n}; "
                         "the table is not a forest subset-type table for these parameters")
    return LaurentPolynomial(("w", "x", "y", "z"), terms)
