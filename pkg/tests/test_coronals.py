import pytest
from hypothesis import given
from hypothesis import strategies as st

from corona_spectra import coronals
from corona_spectra.algebra import LAMBDA, Matrix, Polynomial, RationalFunction, charpoly, coronal
from corona_spectra.coronals import (
    ConstantRowSum,
    DirectedPath,
    FormulaError,
    FullSideBipartite,
    JoinOutRegular,
    PartitionError,
    SemiRegularBipartite,
    charpoly_affine,
    complement_charpoly,
    complement_charpoly_outregular,
    complement_coronal,
    coronal_affine,
    coronal_constant_rowsum,
    coronal_equitable,
    coronal_path,
    coronal_two_blocks,
    parse_family_spec,
    validate_partition,
)
from corona_spectra.digraph import complement, cycle, matrix_of, out_regularity, path

from conftest import digraphs, int_matrices

lam = LAMBDA


def R(num, den=None):
    return RationalFunction(num, den)


def test_path_examples():
    assert coronal_path(2, "A") == R(2 * lam + 1, lam**2)
    assert coronal_path(2, "Q") == R(2, lam - 1)
    assert coronal_path(1, "A") == R(1, lam)


@pytest.mark.parametrize("n", range(1, 11))
def test_path_geometric_sum(n):
    expected = R(sum((k * lam**k for k in range(1, n + 1)), Polynomial()), lam ** (n + 1))
    assert coronal_path(n, "A") == expected
    assert coronal_path(n, "A") == coronal(matrix_of(path(n), "A"))
    assert coronal_path(n, "Q") == coronal(matrix_of(path(n), "Q"))


def test_constant_rowsum():
    assert coronal_constant_rowsum(3, 1) == R(3, lam - 1)
    assert coronal_constant_rowsum(3, 1) == coronal(matrix_of(cycle(3), "A"))
    with pytest.raises(ValueError):
        coronal_constant_rowsum(0, 1)


def test_complement_outregular_cycle():
    f = charpoly(matrix_of(cycle(3), "A"))
    assert complement_charpoly_outregular(f, 3, 1, "A") == lam**3 - 1
    assert complement_charpoly_outregular(f, 3, 1, "A") == charpoly(matrix_of(complement(cycle(3)), "A"))


def test_complement_outregular_rejects_wrong_degree():
    f = charpoly(matrix_of(path(3), "A"))
    with pytest.raises(FormulaError):
        complement_charpoly_outregular(f, 3, 1, "A")


def test_star_equitable():
    star = Matrix([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    assert coronal_equitable(star, [[0], [1, 2]]) == R(3 * lam + 4, lam**2 - 2)
    assert coronal_equitable(star, [[0], [1, 2]]) == coronal(star)


def test_partition_errors_are_specific():
    star = Matrix([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    with pytest.raises(PartitionError, match="vertex 1 in block 0"):
        validate_partition(star, [[0, 1], [2]])
    with pytest.raises(PartitionError, match="exactly once"):
        validate_partition(star, [[0], [1]])
    with pytest.raises(PartitionError, match="nonempty"):
        validate_partition(star, [[0, 1, 2], []])


def test_two_blocks_matches_general():
    q = Matrix([[0, 2], [1, 0]])
    assert coronal_two_blocks(1, 2, q) == coronals.coronal_from_quotient([1, 2], q)


def test_parameter_validation():
    with pytest.raises(ValueError):
        coronals.coronal_join_outregular([(2, 2)], "A")
    with pytest.raises(ValueError):
        coronals.coronal_join_outregular([], "A")
    with pytest.raises(ValueError):
        coronal_path(3, "L")
    with pytest.raises(ValueError):
        FullSideBipartite(2, 2, 1).coronal("Q")
    with pytest.raises(ValueError):
        coronal_affine(R(1, lam), 0, 1, 1)


def test_parse_family_spec():
    assert parse_family_spec("path:4") == DirectedPath(4)
    assert parse_family_spec("rowsum:5,2") == ConstantRowSum(5, 2)
    assert parse_family_spec("join:3,1;2,0") == JoinOutRegular(((3, 1), (2, 0)))
    assert parse_family_spec("semireg:1,2,2,1") == SemiRegularBipartite(1, 2, 2, 1)
    assert parse_family_spec("fullside:2,2,3") == FullSideBipartite(2, 2, 3)
    for bad in ["path", "path:x", "join:1", "cube:3", "rowsum:1"]:
        with pytest.raises(ValueError):
            parse_family_spec(bad)


families = st.one_of(
    st.builds(DirectedPath, st.integers(1, 7)),
    st.integers(1, 7).flatmap(lambda n: st.builds(ConstantRowSum, st.just(n), st.integers(0, n - 1))),
    st.lists(
        st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))), min_size=1, max_size=3
    ).map(lambda ps: JoinOutRegular(tuple(ps))),
    st.tuples(st.integers(1, 3), st.integers(1, 3)).flatmap(
        lambda t: st.builds(SemiRegularBipartite, st.just(t[0]), st.just(t[1]), st.integers(0, t[1]), st.integers(0, t[0]))
    ),
    st.tuples(st.integers(1, 3), st.integers(1, 3)).flatmap(
        lambda t: st.builds(FullSideBipartite, st.just(t[0]), st.just(t[1]), st.integers(0, t[0] * t[1]))
    ),
)


@given(families, st.sampled_from("AQ"))
def test_family_formula_matches_realization(fam, kind):
    if isinstance(fam, FullSideBipartite) and kind == "Q":
        kind = "A"
    d = fam.realize()
    assert fam.coronal(kind) == coronal(matrix_of(d, kind))


@given(int_matrices(max_n=4), st.integers(-2, 2).filter(bool), st.integers(-2, 2), st.integers(-2, 2))
def test_affine_identity(m, a, b, c):
    n = m.rows
    target = m.scale(a) + Matrix.all_ones(n).scale(b) + Matrix.identity(n).scale(c)
    chi = coronal(m)
    assert charpoly_affine(charpoly(m), chi, a, b, c, n) == charpoly(target)
    try:
        got = coronal_affine(chi, a, b, c)
    except FormulaError:
        return  # a - b*chi vanishes, so the coronal of the target has no closed form here
    assert got == coronal(target)


@given(digraphs(max_n=6), st.sampled_from("AQ"))
def test_complement_coronal_involution(d, kind):
    chi = coronal(matrix_of(d, kind))
    comp = complement_coronal(chi, d.n, kind)
    assert comp == coronal(matrix_of(complement(d), kind))
    assert complement_coronal(comp, d.n, kind) == chi


@given(digraphs(max_n=6), st.sampled_from("ALQ"))
def test_complement_charpoly(d, kind):
    m = matrix_of(d, kind)
    chi = None if kind == "L" else coronal(m)
    assert complement_charpoly(charpoly(m), chi, d.n, kind) == charpoly(matrix_of(complement(d), kind))


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))), st.sampled_from("AQ"))
def test_outregular_complement_agrees_with_general_form(nr, kind):
    n, r = nr
    d = ConstantRowSum(n, r).realize()
    assert out_regularity(d) == r
    m = matrix_of(d, kind)
    f = charpoly(m)
    assert complement_charpoly_outregular(f, n, r, kind) == complement_charpoly(f, coronal(m), n, kind)
