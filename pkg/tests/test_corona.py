import pytest
from hypothesis import given
from hypothesis import strategies as st

from corona_spectra.algebra import LAMBDA, Matrix, charpoly, numeric_roots
from corona_spectra.corona import (
    COROLLARY_NAMES,
    CoronaKind,
    HypothesisError,
    arc_corona,
    arc_corona_charpoly,
    arc_corona_charpoly_closed,
    build_corona,
    copy_count,
    kron_schur_block,
    kron_schur_charpoly,
    strong_connectivity_predictions,
    vertex_corona,
    vertex_corona_charpoly,
    vertex_corona_spectrum_outregular,
)
from corona_spectra.digraph import (
    Digraph,
    DigraphError,
    complete,
    cycle,
    empty,
    is_strongly_connected,
    matrix_of,
    path,
)

from conftest import digraphs, int_matrices

lam = LAMBDA
kinds = st.sampled_from("ALQ")
directions = st.sampled_from(["forward", "backward", "symmetric"])


@st.composite
def symmetric_digraphs(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs = [a for p, k in zip(pairs, keep) if k for a in (p, p[::-1])]
    return Digraph(n, tuple(arcs))


def direct(d, kind):
    return charpoly(matrix_of(d, kind))


def test_vertex_corona_labeling():
    g = vertex_corona(cycle(3), path(2), "fwd")
    assert g.n == 9 and g.m == 12
    # copy of P_2 at vertex 1 sits at 4 and 7
    assert {(4, 7), (1, 4), (1, 7)} <= g.arc_set()


def test_arc_corona_labeling_and_examples():
    p2, p1 = path(2), path(1)
    assert arc_corona(p2, p1, "forward").arcs == ((0, 1), (0, 2), (2, 1))
    assert direct(arc_corona(p2, p1, "forward"), "A") == lam**3
    assert direct(arc_corona(p2, p1, "backward"), "A") == lam**3 - 1
    assert direct(arc_corona(cycle(2), p1, "symmetric"), "A") == (lam - 2) * (lam + 1) ** 2
    assert arc_corona(empty(3), cycle(2), "forward") == empty(3)


def test_copy_count_and_kind_aliases():
    assert CoronaKind("arc", "sym") == CoronaKind("arc", "symmetric")
    assert copy_count(cycle(2), CoronaKind("arc", "symmetric")) == 1
    assert copy_count(cycle(2), CoronaKind("arc", "forward")) == 2
    assert copy_count(cycle(2), CoronaKind("vertex", "forward")) == 2
    with pytest.raises(ValueError):
        CoronaKind("edge", "fwd")
    with pytest.raises(ValueError):
        CoronaKind("arc", "sideways")
    with pytest.raises(DigraphError):
        vertex_corona(empty(0), path(1), "fwd")


def test_kron_schur_on_cycle_and_path():
    m1, m2 = matrix_of(cycle(3), "A"), matrix_of(path(2), "A")
    b1 = Matrix.identity(3)
    b2 = Matrix.identity(3)
    explicit = charpoly(kron_schur_block(m1, m2, b1, b2))
    assert kron_schur_charpoly(m1, m2, b1, b2) == explicit
    assert kron_schur_charpoly(m1, m2, b1, b2, -1) == charpoly(kron_schur_block(m1, m2, b1, b2, -1))
    with pytest.raises(ValueError):
        kron_schur_charpoly(m1, m2, b1, b2, 2)
    with pytest.raises(ValueError):
        kron_schur_charpoly(m1, m2, Matrix([[], [], []], 0), Matrix([], 3))


def test_spectrum_triangle():
    desc = vertex_corona_spectrum_outregular(path(1), cycle(2), "A")
    roots = sorted((round(z.real, 9), k) for z, k in numeric_roots(desc.expand()))
    assert roots == [(-1.0, 2), (2.0, 1)]


def test_spectrum_hypotheses():
    with pytest.raises(HypothesisError):
        vertex_corona_spectrum_outregular(path(2), path(3), "A")
    with pytest.raises(HypothesisError):
        vertex_corona_spectrum_outregular(path(2), empty(2), "A")


def test_spectrum_irrational_eigenvalues_grouped():
    sym_path = Digraph(3, ((0, 1), (1, 0), (1, 2), (2, 1)))  # eigenvalues 0 and +-sqrt(2)
    desc = vertex_corona_spectrum_outregular(sym_path, cycle(2), "A")
    assert len(desc.paired) == 1 and desc.grouped[0][0] == lam**2 - 2
    assert desc.expand() == vertex_corona_charpoly(sym_path, cycle(2), "A")


def test_closed_form_outcomes():
    out = arc_corona_charpoly_closed(cycle(2), path(1), "symmetric", "A")
    assert out.ok and out.corollary == "symmetric-regular-A"
    assert out.polynomial == (lam - 2) * (lam + 1) ** 2
    assert arc_corona_charpoly_closed(cycle(3), path(1), "forward", "A").status == "no-closed-form"
    forced = arc_corona_charpoly_closed(path(3), path(1), "backward", "A", corollary="backward-symmetric-A")
    assert forced.status == "hypothesis-failed" and "symmetric" in forced.reason
    wrong = arc_corona_charpoly_closed(cycle(2), path(1), "forward", "L", corollary="symmetric-regular-L")
    assert wrong.status == "hypothesis-failed"
    with pytest.raises(ValueError):
        arc_corona_charpoly_closed(cycle(2), path(1), "forward", "L", corollary="nope")


def test_tournament_corollary_pinned():
    out = arc_corona_charpoly_closed(path(2), path(1), "backward", "A")
    assert out.corollary == "backward-tournament-A" and out.polynomial == lam**3 - 1


@given(digraphs(max_n=3), digraphs(max_n=2), kinds, directions)
def test_vertex_theorem_matches_direct(d1, d2, kind, direction):
    got = vertex_corona_charpoly(d1, d2, kind, direction)
    assert got == direct(vertex_corona(d1, d2, direction), kind)


@given(digraphs(max_n=3), digraphs(max_n=2), kinds, directions)
def test_arc_theorem_matches_direct(d1, d2, kind, direction):
    g = arc_corona(d1, d2, direction)
    if g.n > 10:
        return
    assert arc_corona_charpoly(d1, d2, direction, kind) == direct(g, kind)


@given(digraphs(max_n=4), digraphs(max_n=2), kinds, directions)
def test_closed_forms_agree_with_theorem(d1, d2, kind, direction):
    out = arc_corona_charpoly_closed(d1, d2, direction, kind)
    assert out.status in ("ok", "no-closed-form")
    if out.ok:
        assert out.polynomial == arc_corona_charpoly(d1, d2, direction, kind)
    for name in COROLLARY_NAMES:
        forced = arc_corona_charpoly_closed(d1, d2, direction, kind, corollary=name)
        assert forced.status in ("ok", "hypothesis-failed")


@given(digraphs(max_n=3), st.sampled_from([cycle(2), cycle(3), complete(3)]), kinds)
def test_spectrum_expands_to_charpoly(d1, d2, kind):
    desc = vertex_corona_spectrum_outregular(d1, d2, kind)
    assert desc.expand() == vertex_corona_charpoly(d1, d2, kind)


@given(symmetric_digraphs(), symmetric_digraphs(max_n=2), kinds, st.sampled_from(["vertex", "arc"]))
def test_symmetric_factors_give_real_roots(d1, d2, kind, op):
    g = build_corona(d1, d2, CoronaKind(op, "symmetric"))
    if g.n > 10:
        return
    for z, _ in numeric_roots(direct(g, kind), tol=1e-10):
        assert abs(z.imag) < 1e-6


@given(symmetric_digraphs(), digraphs(max_n=2), kinds)
def test_symmetric_d1_forward_equals_backward(d1, d2, kind):
    if d1.n + d1.m * d2.n > 10:
        return
    assert arc_corona_charpoly(d1, d2, "forward", kind) == arc_corona_charpoly(d1, d2, "backward", kind)


@given(digraphs(max_n=4), digraphs(max_n=3), st.sampled_from(["vertex", "arc"]), directions)
def test_connectivity_prediction(d1, d2, op, direction):
    kind = CoronaKind(op, direction)
    assert strong_connectivity_predictions(d1, d2, kind) == is_strongly_connected(build_corona(d1, d2, kind))


@given(int_matrices(max_n=3), int_matrices(max_n=2), st.data())
def test_kron_schur_matches_block(m1, m2, data):
    n1 = m1.rows
    r = data.draw(st.integers(1, 2))
    vals = st.integers(-2, 2)
    b1 = Matrix([[data.draw(vals) for _ in range(r)] for _ in range(n1)], r)
    b2 = Matrix([[data.draw(vals) for _ in range(n1)] for _ in range(r)], n1)
    sign = data.draw(st.sampled_from([1, -1]))
    assert kron_schur_charpoly(m1, m2, b1, b2, sign) == charpoly(kron_schur_block(m1, m2, b1, b2, sign))
