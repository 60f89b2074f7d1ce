import pytest
from hypothesis import given, settings

from conftest import SD_SOURCES, four_regular_multigraphs, nx_isomorphic
from subdub import (
    MultiGraph,
    PreconditionError,
    SdCertificate,
    Subdivision,
    Twin,
    UsageError,
    are_isomorphic,
    bipartition,
    condense,
    is_k_regular,
    line_graph,
    recognize,
    subdivided_double,
)
from subdub import generators as G
from subdub.subdouble import NO_TWIN_PAIRING, NOT_4_REGULAR, NOT_BIPARTITE


def _twin_property(s):
    for v in range(s.source.n):
        a, b = s.twin(v, 0), s.twin(v, 1)
        assert s.graph.neighbor_multiset(a) == s.graph.neighbor_multiset(b)
        assert s.graph.mult(a, b) == 0


@pytest.mark.parametrize("name", sorted(SD_SOURCES) + ["octahedron"])
def test_construction_invariants(name):
    g = SD_SOURCES.get(name) or G.octahedron()
    s = subdivided_double(g)
    assert (s.graph.n, s.graph.m) == (4 * g.n, 8 * g.n)
    assert s.graph.n == 2 * g.n + g.m
    assert is_k_regular(s.graph, 4)
    assert bipartition(s.graph) is not None
    _twin_property(s)
    labels = set(s.labels)
    assert labels == {Twin(v, c) for v in range(g.n) for c in (0, 1)} | {Subdivision(e) for e in range(g.m)}


def test_subdivision_adjacency():
    g = G.complete(5)
    s = subdivided_double(g)
    for e, (u, v) in enumerate(g.edges):
        x = s.subdivision(e)
        assert sorted(s.graph.neighbor_multiset(x)) == sorted([2 * u, 2 * u + 1, 2 * v, 2 * v + 1])


def test_loop_gives_double_edges():
    s = subdivided_double(G.bouquet(2))
    for e in range(2):
        x = s.subdivision(e)
        assert s.graph.mult(x, s.twin(0, 0)) == 2 and s.graph.mult(x, s.twin(0, 1)) == 2


def test_folkman_size():
    s = subdivided_double(G.complete(5))
    assert (s.graph.n, s.graph.m) == (20, 40)


def test_construction_identities():
    assert are_isomorphic(subdivided_double(G.bouquet(2)).graph, G.doubled_cycle(4))
    assert are_isomorphic(subdivided_double(G.dipole(4)).graph, G.complete_bipartite(4, 4))
    # cross-check with an independent isomorphism routine
    assert nx_isomorphic(subdivided_double(G.dipole(4)).graph, G.complete_bipartite(4, 4))
    assert nx_isomorphic(subdivided_double(G.bouquet(2)).graph, G.doubled_cycle(4))


def test_non_4_regular_rejected_with_vertex():
    with pytest.raises(PreconditionError, match="vertex 0 has degree 3"):
        subdivided_double(G.complete(4))


@pytest.mark.parametrize("name", sorted(SD_SOURCES) + ["octahedron"])
def test_recognize_round_trip(name):
    g = SD_SOURCES.get(name) or G.octahedron()
    s = subdivided_double(g)
    cert, reason = recognize(s.graph)
    assert reason is None
    assert are_isomorphic(cert.underlying, g)
    assert are_isomorphic(condense(s.graph, cert), g)
    rebuilt = subdivided_double(cert.underlying).graph
    assert are_isomorphic(rebuilt, s.graph)
    for a, b in cert.pairing:
        assert s.graph.neighbor_multiset(a) == s.graph.neighbor_multiset(b)


def test_recognize_circulant_twins_are_opposite():
    cert, _ = recognize(G.circulant(16, [1, 7]))
    assert all(b - a == 8 for a, b in cert.pairing)
    assert are_isomorphic(cert.underlying, G.doubled_cycle(4))


@pytest.mark.parametrize(
    "g, reason",
    [
        (G.circulant(18, [1, 8]), NOT_BIPARTITE),
        (G.complete(5), NOT_BIPARTITE),
        (G.petersen(), NOT_4_REGULAR),
        (G.complete(4), NOT_4_REGULAR),
        # bipartite and 4-regular, but no two vertices share a neighbourhood
        (G.circulant(16, [1, 3]), NO_TWIN_PAIRING),
    ],
    ids=["C18_1_8", "K5", "petersen", "K4", "C16_1_3"],
)
def test_recognize_failures(g, reason):
    assert recognize(g) == (None, reason)


def test_k44_prefers_side_a_and_ascending_pairs():
    cert, _ = recognize(G.complete_bipartite(4, 4))
    assert cert.twin_side == frozenset({0, 1, 2, 3})
    assert cert.pairing == ((0, 1), (2, 3))
    assert are_isomorphic(condense(G.complete_bipartite(4, 4), cert), G.dipole(4))


def test_condense_bouquet_keeps_loops():
    s = subdivided_double(G.bouquet(2))
    cert, _ = recognize(s.graph)
    out = condense(s.graph, cert)
    assert out.n == 1 and out.edges == ((0, 0), (0, 0))


def test_recognize_disconnected_union():
    a = subdivided_double(G.complete(5)).graph
    b = subdivided_double(G.dipole(4)).graph
    union = MultiGraph(a.n + b.n, list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges])
    cert, reason = recognize(union)
    assert reason is None
    expected = MultiGraph(7, list(G.complete(5).edges) + [(5, 6)] * 4)
    assert are_isomorphic(cert.underlying, expected)


def test_condense_rejects_bad_certificate():
    s = subdivided_double(G.complete(5))
    cert, _ = recognize(s.graph)
    bad = SdCertificate(cert.twin_side, ((0, 2), (1, 3)) + cert.pairing[2:], cert.subdivision_map, cert.underlying)
    with pytest.raises(UsageError):
        condense(s.graph, bad)


def _pairable(g, side):
    classes = {}
    for v in side:
        classes.setdefault(g.neighbor_multiset(v), []).append(v)
    return all(len(c) % 2 == 0 for c in classes.values())


@pytest.mark.parametrize(
    "g",
    [subdivided_double(x).graph for x in SD_SOURCES.values()]
    + [G.circulant(16, [1, 3]), G.complete_bipartite(4, 4), G.circulant(16, [1, 7]), line_graph(G.petersen())],
)
def test_pairing_criterion_matches_recognition(g):
    sides = bipartition(g)
    if sides is None or not is_k_regular(g, 4):
        assert recognize(g)[0] is None
        return
    expected = _pairable(g, sides[0]) or _pairable(g, sides[1])
    assert (recognize(g)[0] is not None) == expected


@settings(max_examples=40, deadline=None)
@given(four_regular_multigraphs(max_n=6))
def test_round_trip_on_random_multigraphs(g):
    s = subdivided_double(g)
    _twin_property(s)
    cert, reason = recognize(s.graph)
    assert reason is None
    assert are_isomorphic(condense(s.graph, cert), g)


def test_certificate_json_shape():
    cert, _ = recognize(subdivided_double(G.bouquet(2)).graph)
    doc = cert.to_json()
    assert doc == {
        "twin_side": [0, 1],
        "pairing": [[0, 1]],
        "subdivision_map": [[2, 0], [3, 1]],
        "underlying": {"n": 1, "edges": [[0, 0], [0, 0]]},
    }
