"""Exact arithmetic for MacMahon symmetric functions in the power-sum basis.

A vector partition is an unordered multiset of nonzero vectors in N^m,
kept in canonical form (parts sorted in descending lexicographic order).
Elements of the algebra are finite integer linear combinations of
power-sum basis symbols indexed by vector partitions; products multiply
basis symbols by concatenating partitions.  Truncations to finitely many
colors land in a Laurent polynomial ring, which is also represented
sparsely with exact integer coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

Vector = tuple[int, ...]
Exponents = tuple[int, ...]


def choose(a: int, b: int) -> int:
    """Binomial coefficient, 0 when b < 0 or b > a.  Requires a >= 0."""
    if a < 0:
        raise ValueError(f"negative top in binomial coefficient: {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


# ---------------------------------------------------------------------------
# Vector partitions


@dataclass(frozen=True)
class VectorPartition:
    """Canonical multiset of nonzero vectors in N^width.

    Parts are stored sorted in descending lexicographic order, so two
    partitions are equal iff their part multisets are equal.
    """

    width: int
    parts: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("partition width must be >= 1")
        for part in self.parts:
            if len(part) != self.width:
                raise ValueError(f"part {part} does not have width {self.width}")
            if any(c < 0 for c in part):
                raise ValueError(f"part {part} has a negative coordinate")
            if not any(part):
                raise ValueError("zero vectors are not allowed as parts")
        ordered = tuple(sorted(self.parts, reverse=True))
        if ordered != self.parts:
            object.__setattr__(self, "parts", ordered)

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]], width: int | None = None) -> VectorPartition:
        """Canonicalize an iterable of parts; width is required when empty."""
        tuples = tuple(tuple(p) for p in parts)
        if width is None:
            if not tuples:
                raise ValueError("width is required for the empty partition")
            width = len(tuples[0])
        return cls(width, tuples)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def grade(self) -> Vector:
        """Coordinatewise sum of the parts (the multidegree)."""
        total = [0] * self.width
        for part in self.parts:
            for i, c in enumerate(part):
                total[i] += c
        return tuple(total)

    def multiplicities(self) -> dict[Vector, int]:
        counts: dict[Vector, int] = {}
        for part in self.parts:
            counts[part] = counts.get(part, 0) + 1
        return counts

    def restrict(self, positions: Iterable[int]) -> VectorPartition:
        """Sub-partition made of the parts at the given positions."""
        return VectorPartition(self.width, tuple(self.parts[i] for i in positions))

    def concat(self, other: VectorPartition) -> VectorPartition:
        if self.width != other.width:
            raise ValueError("cannot concatenate partitions of different widths")
        return VectorPartition(self.width, self.parts + other.parts)

    def sort_key(self) -> tuple:
        """Total order used everywhere: grade, then length, then parts."""
        return (self.grade, self.length, self.parts)

    def __str__(self) -> str:
        inner = ",".join("(" + ",".join(str(c) for c in part) + ")" for part in self.parts)
        return f"[{inner}]"


_partition_cache: dict[tuple[tuple[int, ...], bool], tuple[VectorPartition, ...]] = {}


def partitions_of(target: Iterable[int], positive_parts: bool = True) -> list[VectorPartition]:
    """All vector partitions of the target vector, in deterministic order.

    With positive_parts=True only parts with every coordinate >= 1 are
    used; otherwise any nonzero vector in N^width is allowed.  Partitions
    come out with parts descending, ordered lexicographically descending
    as sequences.
    """
    goal = tuple(target)
    if any(c < 0 for c in goal):
        raise ValueError(f"target has a negative coordinate: {goal}")
    if not any(goal):
        raise ValueError("target must not be the zero vector")
    cached = _partition_cache.get((goal, positive_parts))
    if cached is not None:
        return list(cached)
    width = len(goal)

    ranges = [range(c, -1, -1) for c in goal]

    def candidates() -> Iterator[Vector]:
        def rec(prefix: tuple[int, ...]) -> Iterator[Vector]:
            if len(prefix) == width:
                yield prefix
                return
            for c in ranges[len(prefix)]:
                yield from rec(prefix + (c,))

        for vec in rec(()):
            if positive_parts and not all(c >= 1 for c in vec):
                continue
            if any(vec):
                yield vec

    pool = list(candidates())
    results: list[VectorPartition] = []

    def extend(remaining: Vector, start: int, acc: list[Vector]) -> None:
        if not any(remaining):
            results.append(VectorPartition(width, tuple(acc)))
            return
        for i in range(start, len(pool)):
            part = pool[i]
            if all(p <= r for p, r in zip(part, remaining)):
                acc.append(part)
                extend(tuple(r - p for r, p in zip(remaining, part)), i, acc)
                acc.pop()

    extend(goal, 0, [])
    _partition_cache[(goal, positive_parts)] = tuple(results)
    return results


def partition_binomial(lam: VectorPartition, omega: VectorPartition) -> int:
    """Product over distinct parts of C(multiplicity in lam, multiplicity in omega)."""
    if lam.width != omega.width:
        raise ValueError("partition widths differ")
    lam_counts = lam.multiplicities()
    result = 1
    for part, m in omega.multiplicities().items():
        result *= choose(lam_counts.get(part, 0), m)
        if result == 0:
            return 0
    return result


# ---------------------------------------------------------------------------
# Laurent polynomials


@dataclass(frozen=True)
class LaurentPolynomial:
    """Sparse Laurent polynomial with integer coefficients.

    Terms map exponent tuples (one slot per variable, possibly negative)
    to nonzero coefficients.  Operations require identical variable
    tuples on both operands.
    """

    variables: tuple[str, ...]
    terms: dict[Exponents, int]

    def __post_init__(self) -> None:
        pruned = {e: c for e, c in self.terms.items() if c != 0}
        for e in pruned:
            if len(e) != len(self.variables):
                raise ValueError(f"exponent tuple {e} does not match variables {self.variables}")
        object.__setattr__(self, "terms", pruned)

    @classmethod
    def zero(cls, variables: Iterable[str]) -> LaurentPolynomial:
        return cls(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Iterable[str], value: int) -> LaurentPolynomial:
        names = tuple(variables)
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def monomial(cls, variables: Iterable[str], exponents: Iterable[int],
                 coefficient: int = 1) -> LaurentPolynomial:
        return cls(tuple(variables), {tuple(exponents): coefficient})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str, power: int = 1) -> LaurentPolynomial:
        names = tuple(variables)
        exps = [0] * len(names)
        exps[names.index(name)] = power
        return cls(names, {tuple(exps): 1})

    def _check_ring(self, other: LaurentPolynomial) -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        self._check_ring(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(self.variables, terms)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        if isinstance(other, int):
            return LaurentPolynomial(self.variables,
                                     {e: c * other for e, c in self.terms.items()})
        self._check_ring(other)
        terms: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentPolynomial(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPolynomial:
        if exponent < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms.items()
                if c in (1, -1):
                    coeff = c if exponent % 2 else 1
                    return LaurentPolynomial(
                        self.variables, {tuple(x * exponent for x in e): coeff})
            raise ValueError("negative powers only for unit monomials")
        result = LaurentPolynomial.constant(self.variables, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def coefficient(self, exponents: dict[str, int]) -> int:
        key = tuple(exponents.get(name, 0) for name in self.variables)
        return self.terms.get(key, 0)

    def substitute_one(self, names: Iterable[str]) -> LaurentPolynomial:
        """Set the given variables to 1, keeping the ambient variable tuple."""
        drop = {self.variables.index(name) for name in names}
        terms: dict[Exponents, int] = {}
        for e, c in self.terms.items():
            key = tuple(0 if i in drop else x for i, x in enumerate(e))
            terms[key] = terms.get(key, 0) + c
        return LaurentPolynomial(self.variables, terms)

    def rename(self, mapping: dict[str, str], new_variables: Iterable[str]) -> LaurentPolynomial:
        """Move terms into a new ring; unmapped variables must not occur."""
        names = tuple(new_variables)
        slots: list[int | None] = []
        for old in self.variables:
            slots.append(names.index(mapping[old]) if old in mapping else None)
        terms: dict[Exponents, int] = {}
        for e, c in self.terms.items():
            key = [0] * len(names)
            for i, x in enumerate(e):
                if slots[i] is None:
                    if x != 0:
                        raise ValueError(f"variable {self.variables[i]} still occurs")
                else:
                    key[slots[i]] += x
            k = tuple(key)
            terms[k] = terms.get(k, 0) + c
        return LaurentPolynomial(names, terms)

    def shift(self, name: str, amount: int) -> LaurentPolynomial:
        """Multiply by name**amount (exponent shift, possibly negative)."""
        idx = self.variables.index(name)
        terms = {}
        for e, c in self.terms.items():
            key = list(e)
            key[idx] += amount
            terms[tuple(key)] = c
        return LaurentPolynomial(self.variables, terms)

    def min_exponent(self, name: str) -> int:
        """Smallest exponent of name across terms; 0 for the zero polynomial."""
        idx = self.variables.index(name)
        if not self.terms:
            return 0
        return min(e[idx] for e in self.terms)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Graded order: total degree ascending, then exponents descending."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-x for x in item[0])))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = [f"{coeff:+d}"]
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            pieces.append(" ".join(factors))
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()


# ---------------------------------------------------------------------------
# MacMahon elements


def truncation_variables(width: int, colors: int) -> tuple[str, ...]:
    """Variable names for the k-color truncation: per color one cardinality
    variable x_j and one weight variable per weight coordinate."""
    if width < 2:
        raise ValueError("truncation needs width >= 2 (cardinality plus weights)")
    r = width - 1
    names: list[str] = []
    for j in range(1, colors + 1):
        names.append(f"x{j}")
        if r == 1:
            names.append(f"y{j}")
        else:
            names.extend(f"y{i}_{j}" for i in range(1, r + 1))
    return tuple(names)


@dataclass(frozen=True)
class MacMahonElement:
    """Integer linear combination of power-sum basis symbols p_Lambda."""

    width: int
    terms: dict[VectorPartition, int]

    def __post_init__(self) -> None:
        pruned = {p: c for p, c in self.terms.items() if c != 0}
        for p in pruned:
            if p.width != self.width:
                raise ValueError(f"partition width {p.width} does not match element width {self.width}")
        object.__setattr__(self, "terms", pruned)

    @classmethod
    def zero(cls, width: int) -> MacMahonElement:
        return cls(width, {})

    @classmethod
    def one(cls, width: int) -> MacMahonElement:
        return cls(width, {VectorPartition(width, ()): 1})

    @classmethod
    def power_sum(cls, partition: VectorPartition, coefficient: int = 1) -> MacMahonElement:
        return cls(partition.width, {partition: coefficient})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, partition: VectorPartition) -> int:
        return self.terms.get(partition, 0)

    def support(self) -> list[VectorPartition]:
        return sorted(self.terms, key=VectorPartition.sort_key)

    def _check_width(self, other: MacMahonElement) -> None:
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")

    def __add__(self, other: MacMahonElement) -> MacMahonElement:
        self._check_width(other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, 0) + c
        return MacMahonElement(self.width, terms)

    def __neg__(self) -> MacMahonElement:
        return MacMahonElement(self.width, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: MacMahonElement) -> MacMahonElement:
        return self + (-other)

    def __mul__(self, other: MacMahonElement | int) -> MacMahonElement:
        if isinstance(other, int):
            return MacMahonElement(self.width, {p: c * other for p, c in self.terms.items()})
        self._check_width(other)
        terms: dict[VectorPartition, int] = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                key = p1.concat(p2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return MacMahonElement(self.width, terms)

    __rmul__ = __mul__

    def truncate(self, colors: int) -> LaurentPolynomial:
        """Expand in the k-color variables: each part contributes a sum of
        one monomial per color, and a basis symbol multiplies its parts."""
        if colors < 0:
            raise ValueError("number of colors must be >= 0")
        names = truncation_variables(self.width, colors)
        block = self.width  # variables per color: x_j plus the weight slots
        part_cache: dict[Vector, LaurentPolynomial] = {}

        def part_poly(part: Vector) -> LaurentPolynomial:
            poly = part_cache.get(part)
            if poly is None:
                terms: dict[Exponents, int] = {}
                for j in range(colors):
                    exps = [0] * len(names)
                    exps[j * block] = part[0]
                    for i in range(1, self.width):
                        exps[j * block + i] = part[i]
                    terms[tuple(exps)] = 1
                poly = LaurentPolynomial(names, terms)
                part_cache[part] = poly
            return poly

        total = LaurentPolynomial.zero(names)
        for partition, coeff in self.terms.items():
            product = LaurentPolynomial.constant(names, coeff)
            for part in partition.parts:
                product = product * part_poly(part)
            total = total + product
        return total

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for partition in self.support():
            coeff = self.terms[partition]
            inner = ",".join("(" + ",".join(str(c) for c in part) + ")"
                             for part in partition.parts)
            lines.append(f"{coeff:+d} * p[{inner}]")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()

    def map_coefficients(self, fn: Callable[[int], int]) -> MacMahonElement:
        return MacMahonElement(self.width, {p: fn(c) for p, c in self.terms.items()})


# ---------------------------------------------------------------------------
# Tensor squares


@dataclass(frozen=True)
class TensorElement:
    """Integer combination of basis tensors p_Lambda (x) p_Omega."""

    width: int
    terms: dict[tuple[VectorPartition, VectorPartition], int]

    def __post_init__(self) -> None:
        pruned = {k: c for k, c in self.terms.items() if c != 0}
        for left, right in pruned:
            if left.width != self.width or right.width != self.width:
                raise ValueError("tensor factor width does not match element width")
        object.__setattr__(self, "terms", pruned)

    @classmethod
    def zero(cls, width: int) -> TensorElement:
        return cls(width, {})

    def __add__(self, other: TensorElement) -> TensorElement:
        if self.width != other.width:
            raise ValueError("width mismatch")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return TensorElement(self.width, terms)

    def __neg__(self) -> TensorElement:
        return TensorElement(self.width, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def __mul__(self, scalar: int) -> TensorElement:
        return TensorElement(self.width, {k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def swap(self) -> TensorElement:
        terms: dict[tuple[VectorPartition, VectorPartition], int] = {}
        for (left, right), c in self.terms.items():
            key = (right, left)
            terms[key] = terms.get(key, 0) + c
        return TensorElement(self.width, terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"

        def fmt(p: VectorPartition) -> str:
            inner = ",".join("(" + ",".join(str(c) for c in part) + ")" for part in p.parts)
            return f"p[{inner}]"

        keys = sorted(self.terms, key=lambda k: (k[0].sort_key(), k[1].sort_key()))
        return "\n".join(f"{self.terms[k]:+d} * {fmt(k[0])} (x) {fmt(k[1])}" for k in keys)

    def __str__(self) -> str:
        return self.to_text()


def tensor_product(left: MacMahonElement, right: MacMahonElement) -> TensorElement:
    if left.width != right.width:
        raise ValueError("width mismatch")
    terms: dict[tuple[VectorPartition, VectorPartition], int] = {}
    for p1, c1 in left.terms.items():
        for p2, c2 in right.terms.items():
            key = (p1, p2)
            terms[key] = terms.get(key, 0) + c1 * c2
    return TensorElement(left.width, terms)
