import warnings
from itertools import product

import pytest

from oddbouquet.composition import build_from_k, cycle_parts
from oddbouquet.polyarith import ONE
from oddbouquet.ringinv import h_closed_form, multiplicity
from oddbouquet.srcomplex import (
    FVector,
    SimplicialComplex,
    f_vector,
    facets_brute_force,
    facets_closed_form,
    h_from_f,
    verify_decomposition,
)
from oddbouquet.toric import Monomial, initial_monomials

SWEEP_KS = [
    (1,), (2,), (3,),
    (1, 1), (2, 1), (2, 2), (3, 1), (3, 2),
    (1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 2, 1),
    (1, 1, 1, 1),
    # cycle order matters for facet enumeration, so cover non-descending orders
    (1, 2), (1, 3), (2, 3), (1, 2, 1), (2, 1, 2),
]


def test_single_cycle_is_full_simplex():
    c = build_from_k([1])
    cx = facets_closed_form(c)
    assert cx.facets == (frozenset({0, 1, 2}),)


def test_worked_example_facets():
    c = build_from_k([3, 2, 1])
    cx = facets_closed_form(c)
    assert len(cx.facets) == 18
    assert all(len(f) == 13 for f in cx.facets)
    # every facet keeps exactly one cycle whole; group sizes follow the pivot
    by_pivot = {1: 0, 2: 0, 3: 0}
    for f in cx.facets:
        whole = [
            i
            for i in range(1, 4)
            if cycle_parts(c, i).odd | cycle_parts(c, i).even <= f
        ]
        assert len(whole) == 1
        by_pivot[whole[0]] += 1
    assert by_pivot == {1: 2, 2: 4, 3: 12}


def test_all_triangle_facets_match_pattern():
    # with only triangles, each facet picks a pivot j, one odd edge from every
    # earlier cycle, keeps the odd pairs of cycles j..n-1, and the even edges
    # of cycles 2..j; the odd pair of cycle n and even edge of cycle 1 always sit inside
    c = build_from_k([1, 1, 1])
    expected = set()
    for j in range(1, 4):
        z_choices = [
            [{c.flat_index(i, 1)}, {c.flat_index(i, 3)}] for i in range(1, j)
        ]
        for zs in product(*z_choices):
            facet = set()
            for z in zs:
                facet |= z
            for i in range(j, 3):
                facet |= {c.flat_index(i, 1), c.flat_index(i, 3)}
            for i in range(2, j + 1):
                facet.add(c.flat_index(i, 2))
            facet |= {c.flat_index(3, 1), c.flat_index(3, 3), c.flat_index(1, 2)}
            expected.add(frozenset(facet))
    assert facets_closed_form(c).facet_sets == expected


def test_closed_form_matches_brute_force():
    for k in SWEEP_KS:
        c = build_from_k(k)
        closed = facets_closed_form(c)
        brute = facets_brute_force(initial_monomials(c), c.edge_count)
        assert closed.facet_sets == brute.facet_sets, k


def test_closed_form_counts_and_sizes():
    for k in SWEEP_KS:
        c = build_from_k(k)
        cx = facets_closed_form(c)
        assert len(cx.facets) == multiplicity(c), k
        assert all(len(f) == c.vertex_count for f in cx.facets), k


def test_closed_form_families_never_overlap():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for k in SWEEP_KS:
            facets_closed_form(build_from_k(k))


def test_brute_force_no_generators():
    cx = facets_brute_force([], 4)
    assert cx.facets == (frozenset({0, 1, 2, 3}),)


def test_brute_force_guards():
    with pytest.raises(ValueError, match="too large"):
        facets_brute_force([], 19)
    with pytest.raises(ValueError, match="squarefree"):
        facets_brute_force([Monomial.from_map({0: 2})], 3)


def test_simplicial_complex_validates():
    with pytest.raises(ValueError):
        SimplicialComplex(3, (frozenset({0}), frozenset({0, 1})))
    with pytest.raises(ValueError):
        SimplicialComplex(2, (frozenset({5}),))


def test_f_vector_full_simplex():
    cx = SimplicialComplex(3, (frozenset({0, 1, 2}),))
    assert f_vector(cx).counts == (1, 3, 3, 1)


def test_f_vector_examples():
    c = build_from_k([1, 1])
    fv = f_vector(facets_closed_form(c))
    assert fv.counts[0] == 1
    assert fv.counts[1] == 6
    c = build_from_k([3, 2, 1])
    fv = f_vector(facets_closed_form(c))
    assert fv.counts[0] == 1
    assert fv.counts[1] == 15
    assert fv.max_cardinality == 13
    assert fv.counts[13] == 18


def test_h_from_f_full_simplex():
    for ground in (3, 7):
        cx = SimplicialComplex(ground, (frozenset(range(ground)),))
        assert h_from_f(f_vector(cx), ground) == ONE


def test_h_from_f_examples():
    c = build_from_k([1, 1, 1])
    h = h_from_f(f_vector(facets_closed_form(c)), c.vertex_count)
    assert h.coeffs == (1, 2, 3, 1)
    c = build_from_k([3, 2, 1])
    h = h_from_f(f_vector(facets_closed_form(c)), c.vertex_count)
    assert h.coeffs == (1, 2, 3, 4, 4, 3, 1)


def test_h_from_f_dimension_guard():
    fv = FVector(counts=(1, 3, 3, 1))
    with pytest.raises(ValueError, match="dimension mismatch"):
        h_from_f(fv, 2)


def test_complex_route_agrees_with_formula():
    for k in SWEEP_KS:
        c = build_from_k(k)
        h = h_from_f(f_vector(facets_closed_form(c)), c.vertex_count)
        assert h == h_closed_form(c), k


def test_face_counts_predict_monomial_counts():
    # third route: the number of degree-d monomials outside the ideal equals
    # sum over face cardinalities i of (faces of size i) * C(d-1, i-1)
    from math import comb

    from oddbouquet.toric import standard_monomial_count

    for k in [(1, 1), (2, 1), (1, 1, 1), (3, 2, 1)]:
        c = build_from_k(k)
        fv = f_vector(facets_closed_form(c))
        for d in range(5):
            if d == 0:
                expected = 1
            else:
                expected = sum(
                    fv.counts[i] * comb(d - 1, i - 1)
                    for i in range(1, len(fv.counts))
                )
            assert standard_monomial_count(c, d) == expected, (k, d)


def test_decomposition_small_cases():
    rep = verify_decomposition(build_from_k([2, 1]))
    assert rep.ok
    assert rep.facet_count == 4
    assert rep.cone_family_size == 3
    assert rep.join_family_size == 1
    assert verify_decomposition(build_from_k([3, 2, 1])).ok


def test_decomposition_single_cycle():
    assert verify_decomposition(build_from_k([2])).ok
    assert verify_decomposition(build_from_k([4])).ok


def test_decomposition_longer_later_cycle():
    # only cycle 1 needs to be extendable; later cycles may be longer
    assert verify_decomposition(build_from_k([2, 3])).ok
    assert verify_decomposition(build_from_k([2, 3, 1])).ok


def test_decomposition_sweep():
    for k in SWEEP_KS:
        if k[0] >= 2:
            assert verify_decomposition(build_from_k(k)).ok, k


def test_decomposition_requires_long_first_cycle():
    with pytest.raises(ValueError, match="not extendable"):
        verify_decomposition(build_from_k([1, 1]))
    with pytest.raises(ValueError, match="not extendable"):
        verify_decomposition(build_from_k([1, 2]))
