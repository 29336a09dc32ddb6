import pytest
from hypothesis import given, strategies as st

from chordhom.chordio import parse_pd
from chordhom.complexes import HomologyResult
from chordhom.errors import ArcCountError, InvalidDiagram, OrientationAmbiguous
from chordhom.fixtures import load_graph, graph_metadata, load_pd
from chordhom.khovanov import (
    B_SMOOTHING,
    LinkDiagram,
    a_state,
    check_planar,
    circle_graphs,
    crossing_signs,
    extreme_khovanov,
    extreme_khovanov_from_graphs,
    jmin,
    pretzel_pd,
    smoothing_circles,
    state_graph,
)
from chordhom.naive import to_elementary

import kh_oracle

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
HOPF_NEG = "X(4,1,3,2) X(2,3,1,4)"
HOPF_POS = "X(1,3,2,4) X(3,1,4,2)"

KNOWN = [TREFOIL, FIGURE_EIGHT, HOPF_NEG, HOPF_POS, "X(1,1,2,2)", "X(2,1,1,2)"]


def test_trefoil():
    d = parse_pd(TREFOIL)
    assert crossing_signs(d) == (0, 3)
    g = jmin(d)
    assert (g.p, g.n, g.k, g.j_min) == (0, 3, 3, -9)
    kh = extreme_khovanov(d)
    assert kh.summary() == "j_min = -9; Kh^{-3,-9} = Z"


def test_trefoil_mirror():
    m = parse_pd(TREFOIL).mirror()
    assert crossing_signs(m) == (3, 0)
    assert jmin(m).k == 2
    assert extreme_khovanov(m).summary() == "j_min = 1; Kh^{0,1} = Z"


@pytest.mark.parametrize("pd", KNOWN)
def test_mirror_swaps_signs(pd):
    d = parse_pd(pd)
    p, n = crossing_signs(d)
    assert crossing_signs(d.mirror()) == (n, p)
    assert d.mirror().mirror() == d


@pytest.mark.parametrize("pd, expected", [(FIGURE_EIGHT, "j_min = -5; Kh^{-2,-5} = Z"),
                                           (HOPF_NEG, "j_min = -6; Kh^{-2,-6} = Z"),
                                           (HOPF_POS, "j_min = 0; Kh^{0,0} = Z"),
                                           ("X(1,1,2,2)", "j_min = -1; Kh^{0,-1} = Z")])
def test_known_extreme_groups(pd, expected):
    assert extreme_khovanov(parse_pd(pd)).summary() == expected


def test_unknot_conventions():
    d = parse_pd("")
    assert a_state(d).k == 1
    assert extreme_khovanov(d).summary() == "j_min = -1; Kh^{0,-1} = Z"
    kink = parse_pd("X(1,1,2,2)")
    assert crossing_signs(kink) == (1, 0)
    assert a_state(kink).k == 2


def oracle_circles(pd, state):
    return kh_oracle.circles(pd, state)


@pytest.mark.parametrize("pd", KNOWN)
def test_circle_count_against_traversal_oracle(pd):
    d = parse_pd(pd)
    c = d.n_crossings
    assert a_state(d).k == oracle_circles(d.crossings, (0,) * c)
    assert len(smoothing_circles(d, [B_SMOOTHING] * c)) == oracle_circles(d.crossings, (1,) * c)


@given(st.lists(st.integers(1, 4), min_size=2, max_size=4))
def test_alternating_pretzel_state_count(twists):
    d = pretzel_pd(twists)
    c = d.n_crossings
    a = len(smoothing_circles(d))
    b = len(smoothing_circles(d, [B_SMOOTHING] * c))
    assert a == oracle_circles(d.crossings, (0,) * c)
    # reduced alternating diagrams: s_A + s_B = c + 2
    assert a + b == c + 2


@given(st.lists(st.integers(-4, 4).filter(bool), min_size=1, max_size=4))
def test_pretzel_is_valid_diagram(twists):
    d = pretzel_pd(twists)
    check_planar(d)
    assert d.n_crossings == sum(map(abs, twists))
    p, n = crossing_signs(d)
    assert p + n == d.n_crossings
    state = a_state(d)
    assert state.k == oracle_circles(d.crossings, (0,) * d.n_crossings)
    circle_graphs(state)  # bipartite by construction


@pytest.mark.parametrize("pd", KNOWN)
def test_extreme_kh_matches_state_sum_oracle(pd):
    d = parse_pd(pd)
    _, n = crossing_signs(d)
    ours = extreme_khovanov(d).groups
    assert ours == to_elementary(kh_oracle.extreme_kh_groups(d.crossings, n))


@given(st.lists(st.integers(-3, 3).filter(bool), min_size=1, max_size=3))
def test_pretzel_kh_matches_state_sum_oracle(twists):
    d = pretzel_pd(twists)
    _, n = crossing_signs(d)
    assert extreme_khovanov(d).groups == to_elementary(kh_oracle.extreme_kh_groups(d.crossings, n))


@pytest.mark.parametrize("pd", KNOWN + ["pretzel"])
def test_free_loop(pd):
    d = pretzel_pd([2, -3, 2]) if pd == "pretzel" else parse_pd(pd)
    e = d.with_free_loop()
    g, h = jmin(d), jmin(e)
    assert h.k == g.k + 1
    assert h.j_min == g.j_min - 1
    assert extreme_khovanov(e).groups == extreme_khovanov(d).groups


def test_pretzel_3_4_5_m5():
    d = pretzel_pd([3, 4, 5, -5])
    assert d == load_pd("pretzel_3_4_5_-5")
    g = jmin(d)
    assert (g.p, g.n, g.k, g.j_min) == (12, 5, 7, -5)
    kh = extreme_khovanov(d)
    assert kh.groups == HomologyResult.sphere(-5)
    assert kh.summary() == "j_min = -5; Kh^{-5,-5} = Z"
    # A-adequate: the circle graph is empty
    assert state_graph(a_state(d)).n == 0
    assert not any(a_state(d).same_circle)


def test_dprime_graph_gives_same_groups():
    meta = graph_metadata("star4+tree13")
    g = load_graph("star4+tree13")
    n, p, k = meta["negative"], meta["positive"], meta["circles"]
    kh = extreme_khovanov_from_graphs([g], n, p - 2 * n - k)
    assert kh.j_min == -5
    assert kh.groups == extreme_khovanov(pretzel_pd([3, 4, 5, -5])).groups


def test_pretzel_rejects():
    with pytest.raises(ValueError):
        pretzel_pd([])
    with pytest.raises(ValueError):
        pretzel_pd([2, 0])


def test_arc_count_error():
    with pytest.raises(ArcCountError):
        LinkDiagram(((1, 2, 3, 4),))
    with pytest.raises(ArcCountError):
        LinkDiagram(((0, 0, 1, 1),))


def test_orientation_ambiguous():
    with pytest.raises(OrientationAmbiguous):
        crossing_signs(parse_pd("X(1,1,3,3)"))
    # arcs consecutive, but the under-strand at the last crossing runs backwards
    with pytest.raises(OrientationAmbiguous):
        crossing_signs(parse_pd("X(1,4,2,6) X(3,5,4,1) X(6,2,5,3)"))


def test_non_planar_rejected():
    with pytest.raises(InvalidDiagram):
        a_state(parse_pd("X(1,2,3,4) X(1,2,5,6) X(3,4,5,6)"))
