"""CMF, subset-type tables, EGDP and their specializations."""

from __future__ import annotations

import math
import random

import pytest

from chromac import (CapExceededError, LaurentPolynomial, MacMahonElement,
                     NotApplicableError, VectorPartition, WeightedGraph,
                     beta_table, cmf, cmf_by_enumeration, cycle_graph, egdp,
                     egdp_variables, path_graph, single_vertex,
                     specialize_csf, specialize_egdp, star_graph)

from conftest import random_simple_graph


def vp(*parts):
    return VectorPartition.of(parts, width=len(parts[0]) if parts else 2)


def p_(*parts):
    return MacMahonElement.power_sum(vp(*parts))


# ---------------------------------------------------------------------------
# CMF


def test_cmf_single_vertex():
    assert cmf(single_vertex(3)) == p_((1, 3))


def test_cmf_edge():
    expected = p_((1, 2), (1, 1)) - p_((2, 3))
    assert cmf(path_graph([1, 2])) == expected


def test_cmf_empty_graph():
    g = WeightedGraph(0, (), (), 1)
    assert cmf(g) == MacMahonElement.one(2)


def test_cmf_of_forest_has_signed_nonnegative_coefficients():
    g = path_graph([2, 1, 3])
    element = cmf(g)
    for partition, coeff in element.terms.items():
        sign = -1 if (g.n - partition.length) & 1 else 1
        assert coeff * sign > 0


def test_cmf_multiplicative_over_disjoint_union():
    from chromac import disjoint_union
    rng = random.Random(3)
    for _ in range(10):
        a = random_simple_graph(rng, rng.randint(0, 4))
        b = random_simple_graph(rng, rng.randint(0, 4))
        assert cmf(disjoint_union(a, b)) == cmf(a) * cmf(b)


def test_cmf_respects_edge_cap(t1):
    with pytest.raises(CapExceededError):
        cmf(t1, max_edges=3)


# ---------------------------------------------------------------------------
# Subset-type tables


def test_beta_table_row_sums(t1):
    table = beta_table(t1)
    assert sum(table.values()) == 2 ** t1.edge_count
    by_length: dict[int, int] = {}
    for partition, count in table.items():
        assert count > 0
        by_length[partition.length] = by_length.get(partition.length, 0) + count
    for length, total in by_length.items():
        assert total == math.comb(t1.edge_count, t1.n - length)
    assert by_length[3] == 6


def test_beta_table_matches_cmf_signs(t1):
    table = beta_table(t1)
    element = cmf(t1)
    assert set(table) == set(element.terms)
    for partition, count in table.items():
        sign = -1 if (t1.n - partition.length) & 1 else 1
        assert element.coefficient(partition) == sign * count


def test_beta_table_rejects_cycles():
    with pytest.raises(ValueError, match="cycle"):
        beta_table(cycle_graph([1, 1, 1]))


# ---------------------------------------------------------------------------
# CSF specializations


def test_specialize_edge_weight_only():
    element = cmf(path_graph([1, 2]))
    expected = (MacMahonElement.power_sum(VectorPartition.of([(2,), (1,)]))
                - MacMahonElement.power_sum(VectorPartition.of([(3,)])))
    assert specialize_csf(element, "weight") == expected


def test_specialize_edge_cardinality_only():
    element = cmf(path_graph([1, 2]))
    expected = (MacMahonElement.power_sum(VectorPartition.of([(1,), (1,)]))
                - MacMahonElement.power_sum(VectorPartition.of([(2,)])))
    assert specialize_csf(element, "cardinality") == expected


def test_specialize_merges_collisions():
    element = p_((1, 2)) + p_((1, 1))
    merged = specialize_csf(element, "cardinality")
    assert merged == 2 * MacMahonElement.power_sum(VectorPartition.of([(1,)]))


def test_specialize_drops_zero_parts():
    element = MacMahonElement.power_sum(vp((0, 1)))
    projected = specialize_csf(element, "cardinality")
    assert projected == MacMahonElement.one(1)


def test_specialize_rejects_bad_mode():
    with pytest.raises(ValueError):
        specialize_csf(p_((1, 1)), "color")


def test_wcsf_counterexample(t1, t2):
    assert specialize_csf(cmf(t1), "weight") == specialize_csf(cmf(t2), "weight")
    assert specialize_csf(cmf(t1), "cardinality") == specialize_csf(cmf(t2), "cardinality")
    assert cmf(t1) != cmf(t2)


# ---------------------------------------------------------------------------
# EGDP


def test_egdp_edge_golden():
    names = egdp_variables(1)
    expected = LaurentPolynomial(names, {
        (0, 0, 0, 0): 1,   # empty set
        (1, 1, 1, 0): 1,   # the weight-1 endpoint
        (1, 1, 2, 0): 1,   # the weight-2 endpoint
        (0, 2, 3, 1): 1,   # both endpoints
    })
    assert egdp(path_graph([1, 2])) == expected


def test_egdp_counts_subsets(t1):
    poly = egdp(t1)
    assert sum(poly.terms.values()) == 2 ** t1.n
    assert poly.coefficient({"w": 3, "x": 2, "y": 4}) == 1


def test_egdp_complement_symmetry():
    rng = random.Random(53)
    for _ in range(20):
        g = random_simple_graph(rng, rng.randint(0, 6))
        n, w, e = g.n, g.total_weight[0], g.edge_count
        poly = egdp(g)
        for (a, b, c, d), coeff in poly.terms.items():
            mirrored = (a, n - b, w - c, e - a - d)
            assert poly.terms.get(mirrored) == coeff


def test_egdp_weight_specialization_identity():
    rng = random.Random(59)
    for _ in range(20):
        g = random_simple_graph(rng, rng.randint(0, 6))
        names = egdp_variables(1)
        y = LaurentPolynomial.variable(names, "y")
        product = LaurentPolynomial.constant(names, 1)
        for weight in g.weights:
            product = product * (LaurentPolynomial.constant(names, 1) + y ** weight[0])
        assert egdp(g).substitute_one(["w", "x", "z"]) == product


def test_egdp_respects_vertex_cap(t1):
    with pytest.raises(CapExceededError):
        egdp(t1, max_vertices=3)


def test_egdp_multiweight_variables():
    g = WeightedGraph(2, ((1, 2), (2, 1)), ((0, 1),), r=2)
    poly = egdp(g)
    assert poly.variables == ("w", "x", "y1", "y2", "z")
    assert poly.coefficient({}) == 1
    assert poly.coefficient({"x": 2, "y1": 3, "y2": 3, "z": 1}) == 1


# ---------------------------------------------------------------------------
# Degree-polynomial specializations


def test_wgdp_edge_golden():
    poly = specialize_egdp(egdp(path_graph([1, 2])), "wgdp")
    names = ("x", "y", "z")
    x = LaurentPolynomial.variable(names, "x")
    y = LaurentPolynomial.variable(names, "y")
    z = LaurentPolynomial.variable(names, "z")
    one = LaurentPolynomial.constant(names, 1)
    assert poly == one + x * y + (x ** 2) * y + (x ** 3) * z


def test_gdp_edge_golden():
    poly = specialize_egdp(egdp(path_graph([1, 2])), "gdp")
    names = ("x", "y", "z")
    x = LaurentPolynomial.variable(names, "x")
    y = LaurentPolynomial.variable(names, "y")
    z = LaurentPolynomial.variable(names, "z")
    one = LaurentPolynomial.constant(names, 1)
    assert poly == one + 2 * x * y + (x ** 2) * z


def test_wgdp_counterexample(t1, t2):
    wgdp1 = specialize_egdp(egdp(t1), "wgdp")
    wgdp2 = specialize_egdp(egdp(t2), "wgdp")
    assert wgdp1.coefficient({"x": 4, "y": 3}) == 1
    assert wgdp2.coefficient({"x": 4, "y": 3}) == 2
    assert specialize_egdp(egdp(t1), "gdp") == specialize_egdp(egdp(t2), "gdp")


def test_wgdp_requires_scalar_weights():
    g = WeightedGraph(2, ((1, 2), (2, 1)), ((0, 1),), r=2)
    with pytest.raises(NotApplicableError):
        specialize_egdp(egdp(g), "wgdp")
    specialize_egdp(egdp(g), "gdp")  # the unweighted projection is fine


def test_specialize_egdp_rejects_other_rings():
    poly = LaurentPolynomial.constant(("a", "b"), 1)
    with pytest.raises(NotApplicableError):
        specialize_egdp(poly, "gdp")
    with pytest.raises(ValueError):
        specialize_egdp(egdp(path_graph([1])), "egdp")


# ---------------------------------------------------------------------------
# Coloring enumeration oracle


def test_truncated_cmf_of_edge_with_one_color_vanishes():
    element = cmf(path_graph([1, 2]))
    assert element.truncate(1).is_zero()
    assert cmf_by_enumeration(path_graph([1, 2]), 1).is_zero()


def test_oracle_agrees_on_small_graphs():
    graphs = [
        single_vertex(2),
        path_graph([1, 2, 1]),
        cycle_graph([2, 1, 3]),
        star_graph(2, [1, 1, 1]),
        WeightedGraph(3, ((1, 2), (2, 1), (1, 1)), ((0, 1), (1, 2)), r=2),
    ]
    for g in graphs:
        for colors in range(4):
            assert cmf(g).truncate(colors) == cmf_by_enumeration(g, colors)


def test_oracle_respects_coloring_cap():
    g = path_graph([1] * 10)
    with pytest.raises(CapExceededError):
        cmf_by_enumeration(g, 3, max_colorings=100)
