import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from edgering import (
    Fundamental,
    RegularVertex,
    SupportForm,
    bridge_graph,
    complete_graph,
    cycle_graph,
    enumerate_fundamental_sets,
    facet_sort_key,
    facets,
    is_fundamental,
    is_regular_vertex,
    members,
    regular_vertices,
    support_form,
    vset,
)
from helpers import (
    brute_fundamental,
    brute_fundamental_sets,
    brute_regular_vertex,
    connected_nonbipartite_graphs,
    random_connected_nonbipartite,
)


# ---------------------------------------------------------------------------
# regular vertices

def test_regular_vertices_bridge2(bridge2):
    assert regular_vertices(bridge2) == [1, 2, 5, 6, 7, 8]
    assert not is_regular_vertex(bridge2, 3)
    assert not is_regular_vertex(bridge2, 4)
    assert is_regular_vertex(bridge2, 7)


def test_regular_vertices_small():
    assert regular_vertices(complete_graph(3)) == []
    assert regular_vertices(cycle_graph(5)) == []
    assert regular_vertices(complete_graph(4)) == [1, 2, 3, 4]


def test_regular_vertex_out_of_range(bridge2):
    with pytest.raises(ValueError, match="out of range"):
        is_regular_vertex(bridge2, 9)
    with pytest.raises(ValueError, match="out of range"):
        is_regular_vertex(bridge2, 0)


def test_bridge1_vertex7_regular_but_not_fundamental(bridge1):
    # deleting 7 leaves the two triangles, so 7 is regular; but {7} spans a
    # bipartite piece whose leftover components are single edges, so it is
    # not fundamental
    assert is_regular_vertex(bridge1, 7)
    assert not is_fundamental(bridge1, vset([7]))


@given(connected_nonbipartite_graphs())
@settings(max_examples=40)
def test_regular_vertices_match_brute_force(g):
    for v in range(1, g.d + 1):
        assert is_regular_vertex(g, v) == brute_regular_vertex(g, v)


# ---------------------------------------------------------------------------
# fundamental sets

def test_fundamental_sets_bridge2(bridge2):
    got = [members(t) for t in enumerate_fundamental_sets(bridge2)]
    assert got == [
        (1,), (1, 5, 7, 8), (1, 6, 7, 8),
        (2,), (2, 5, 7, 8), (2, 6, 7, 8),
        (3,), (3, 4), (4,), (5,), (6,),
    ]
    assert is_fundamental(bridge2, vset([1]))
    assert not is_fundamental(bridge2, vset([7, 8]))
    assert not is_fundamental(bridge2, vset([1, 2]))


def test_fundamental_sets_small():
    assert [members(t) for t in enumerate_fundamental_sets(complete_graph(3))] == [
        (1,), (2,), (3,),
    ]
    assert [members(t) for t in enumerate_fundamental_sets(cycle_graph(5))] == [
        (1, 3), (1, 4), (2, 4), (2, 5), (3, 5),
    ]


def test_is_fundamental_rejects_bad_sets(bridge2):
    with pytest.raises(ValueError, match="empty"):
        is_fundamental(bridge2, 0)
    with pytest.raises(ValueError, match="within"):
        is_fundamental(bridge2, 1 << 8)


def test_fundamental_enumeration_is_lexicographic(bridge2):
    got = [members(t) for t in enumerate_fundamental_sets(bridge2)]
    assert got == sorted(got)


@given(connected_nonbipartite_graphs(max_d=6))
@settings(max_examples=30)
def test_fundamental_sets_match_brute_force(g):
    assert [members(t) for t in enumerate_fundamental_sets(g)] == brute_fundamental_sets(g)


def test_fundamental_predicate_matches_brute_on_random_subsets():
    rng = random.Random(5)
    for _ in range(30):
        g = random_connected_nonbipartite(rng, 7, 0.35)
        for _ in range(20):
            t = vset(rng.sample(range(1, 8), rng.randint(1, 4)))
            assert is_fundamental(g, t) == brute_fundamental(g, frozenset(members(t)))


# ---------------------------------------------------------------------------
# support forms

def test_support_form_regular_vertex(bridge2):
    form = support_form(bridge2, RegularVertex(7))
    assert form.coeffs == (0, 0, 0, 0, 0, 0, 1, 0)
    assert form.denom == 1
    assert form.value((1, 1, 0, 0, 0, 0, 0, 0)) == 0
    assert form.value((0, 0, 1, 0, 0, 0, 1, 0)) == 1


def test_support_form_fundamental_exhausting():
    form = support_form(complete_graph(3), Fundamental(vset([1])))
    assert form.coeffs == (-1, 1, 1)
    assert form.denom == 2
    assert form.value((0, 1, 1)) == 1
    assert form.value((1, 1, 0)) == 0


def test_support_form_fundamental_not_exhausting(bridge2):
    form = support_form(bridge2, Fundamental(vset([1])))
    assert form.coeffs == (-1, 1, 1, 0, 0, 0, 0, 0)
    assert form.denom == 1
    assert form.value((0, 0, 1, 0, 0, 0, 1, 0)) == 1


def test_support_form_validates(bridge2):
    with pytest.raises(ValueError, match="not regular"):
        support_form(bridge2, RegularVertex(3))
    with pytest.raises(ValueError, match="not a fundamental set"):
        support_form(bridge2, Fundamental(vset([7, 8])))
    with pytest.raises(TypeError, match="descriptor"):
        support_form(bridge2, "vertex 7")


def test_support_form_type_invariants():
    with pytest.raises(ValueError, match="denominator"):
        SupportForm((1, 0), 3)
    with pytest.raises(ValueError, match="zero form"):
        SupportForm((0, 0), 1)
    assert SupportForm((1, -1), 2).value((1, 0)) == Fraction(1, 2)


# ---------------------------------------------------------------------------
# the facet list

def test_facets_bridge2(bridge2):
    fs = facets(bridge2)
    assert len(fs) == 17
    assert fs[:6] == [RegularVertex(v) for v in (1, 2, 5, 6, 7, 8)]
    assert Fundamental(vset([3, 4])) in fs
    assert fs == sorted(fs, key=facet_sort_key)


def test_facets_small():
    assert facets(complete_graph(3)) == [Fundamental(1 << (v - 1)) for v in (1, 2, 3)]
    assert len(facets(cycle_graph(5))) == 5
    assert len(facets(complete_graph(4))) == 8


def test_facets_rejects_disconnected_and_bipartite():
    from edgering import Graph

    with pytest.raises(ValueError, match="not connected"):
        facets(Graph(4, ((1, 2), (3, 4))))
    with pytest.raises(ValueError, match="bipartite"):
        facets(cycle_graph(4))


def test_fundamental_repr_shows_vertices():
    f = Fundamental(vset([7, 8]))
    assert repr(f) == "Fundamental({7, 8})"
    assert f.vertices == (7, 8)


@given(connected_nonbipartite_graphs(max_d=6))
@settings(max_examples=30)
def test_facet_forms_support_the_generators(g):
    # every supporting form is nonnegative on all edge vectors and vanishes
    # on at least one
    from edgering import edge_vector

    for f in facets(g):
        form = support_form(g, f)
        values = [form.value(edge_vector(e, g.d)) for e in g.edges]
        assert all(v >= 0 for v in values)
        assert any(v == 0 for v in values)
        assert any(v == 1 for v in values)
