import pytest
from hypothesis import given

from corona_spectra.algebra import Matrix
from corona_spectra.digraph import (
    Digraph,
    DigraphError,
    adjacency,
    complement,
    complete,
    cycle,
    degree_profile,
    disjoint_union,
    empty,
    from_adjacency,
    incidence_of,
    is_bipartite,
    is_strongly_connected,
    is_symmetric,
    is_tournament,
    join,
    line_digraph,
    make_family,
    matrix_of,
    out_regularity,
    path,
    strongly_connected_components,
    structural_predicates,
    transpose,
    underlying_graph,
)

from conftest import digraphs


def test_construction_validates():
    assert Digraph(3, ((1, 2), (0, 1))).arcs == ((0, 1), (1, 2))
    for bad in [((0, 0),), ((0, 3),), ((0, 1), (0, 1))]:
        with pytest.raises(DigraphError):
            Digraph(3, bad)
    with pytest.raises(DigraphError):
        Digraph(-1)


def test_families():
    assert path(3).arcs == ((0, 1), (1, 2))
    assert cycle(3).arcs == ((0, 1), (1, 2), (2, 0))
    assert empty(4).m == 0
    assert complete(3).m == 6
    assert make_family("path", 1).m == 0
    with pytest.raises(DigraphError):
        make_family("cycle", 1)
    with pytest.raises(DigraphError):
        make_family("path", 0)
    with pytest.raises(DigraphError):
        make_family("star", 3)


def test_matrices_of_path():
    d = path(3)
    assert matrix_of(d, "A") == Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert matrix_of(d, "L") == Matrix([[1, -1, 0], [0, 1, -1], [0, 0, 0]])
    assert matrix_of(d, "Q") == Matrix([[1, 1, 0], [0, 1, 1], [0, 0, 0]])
    assert matrix_of(d, "Din") == Matrix.diag([0, 1, 1])
    with pytest.raises(DigraphError):
        matrix_of(d, "B")


def test_operations():
    assert join(empty(1), empty(2)).m == 4
    assert disjoint_union(cycle(2), path(2)).arcs == ((0, 1), (1, 0), (2, 3))
    assert line_digraph(cycle(3)) == Digraph(3, ((0, 1), (1, 2), (2, 0)))
    assert underlying_graph(cycle(2)).edges == ((0, 1),)


def test_predicates():
    assert is_symmetric(cycle(2)) and not is_symmetric(cycle(3))
    assert is_tournament(path(2)) and not is_tournament(path(3))
    assert out_regularity(cycle(4)) == 1 and out_regularity(path(2)) is None
    assert is_bipartite(cycle(4)) and not is_bipartite(cycle(3))
    assert is_strongly_connected(cycle(5)) and not is_strongly_connected(path(2))
    flags = structural_predicates(complete(3))
    assert flags.is_symmetric and flags.out_regular == 2 and not flags.is_bipartite


def test_scc_of_two_cycles_with_bridge():
    d = Digraph(5, ((0, 1), (1, 0), (1, 2), (2, 3), (3, 4), (4, 2)))
    comps = sorted(sorted(c) for c in strongly_connected_components(d))
    assert comps == [[0, 1], [2, 3, 4]]


def _reach(d):
    n = d.n
    r = [[i == j for j in range(n)] for i in range(n)]
    for u, v in d.arcs:
        r[u][v] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                r[i][j] = r[i][j] or (r[i][k] and r[k][j])
    return r


@given(digraphs(max_n=7))
def test_scc_matches_transitive_closure(d):
    r = _reach(d)
    comps = strongly_connected_components(d)
    assert sorted(v for c in comps for v in c) == list(range(d.n))
    label = {v: k for k, c in enumerate(comps) for v in c}
    for u in range(d.n):
        for v in range(d.n):
            assert (label[u] == label[v]) == (r[u][v] and r[v][u])
    assert is_strongly_connected(d) == all(all(row) for row in r)


@given(digraphs())
def test_transpose_and_complement_involutions(d):
    assert transpose(transpose(d)) == d
    assert complement(complement(d)) == d
    assert matrix_of(transpose(d), "A") == matrix_of(d, "A").T
    j_minus_i = Matrix.all_ones(d.n) - Matrix.identity(d.n)
    assert matrix_of(complement(d), "A") == j_minus_i - matrix_of(d, "A")
    assert matrix_of(d, "antiA") == Matrix.all_ones(d.n) - matrix_of(d, "A")


@given(digraphs())
def test_degree_sums(d):
    prof = degree_profile(d)
    assert sum(prof.out_degrees) == sum(prof.in_degrees) == d.m
    assert matrix_of(d, "L").row_sums() == [0] * d.n
    assert sum(underlying_graph(d).degrees()) == 2 * underlying_graph(d).m


@given(digraphs())
def test_adjacency_round_trip(d):
    assert from_adjacency(adjacency(d).tolist()) == d


@given(digraphs(max_n=5))
def test_incidence_identities(d):
    b_in, b_out = incidence_of(d, "B_in"), incidence_of(d, "B_out")
    if d.m:
        assert b_out @ b_in.T == matrix_of(d, "A")
        assert b_in @ b_in.T == matrix_of(d, "Din")
        assert b_out @ b_out.T == matrix_of(d, "Dout")
        assert b_in.T @ b_out == matrix_of(line_digraph(d), "A")
    g = underlying_graph(d)
    if g.m:
        b, n = incidence_of(d, "B_underlying"), incidence_of(d, "N_oriented")
        assert b @ b.T == g.signless_laplacian()
        assert n @ n.T == g.laplacian()
