"""Vertex and arc coronas of digraphs and their characteristic polynomials.

Labeling conventions:

* vertex corona: D1 keeps indices ``0..n1-1``; vertex ``j`` (0-based) of the
  copy of D2 attached to vertex ``i`` is ``i + n1*(j+1)``.
* arc corona: copy ``c`` (one per arc of D1 in canonical order, or one per
  underlying edge for the symmetric variant) puts vertex ``j`` of D2 at
  ``n1 + c*n2 + j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal, Optional

from .algebra import (
    LAMBDA,
    Matrix,
    Polynomial,
    RationalFunction,
    block,
    charpoly,
    coronal,
    kron,
    rational_roots,
)
from .digraph import (
    Digraph,
    DigraphError,
    is_strongly_connected,
    is_symmetric,
    is_tournament,
    matrix_of,
    out_regularity,
    underlying_graph,
)

Operation = Literal["vertex", "arc"]
Direction = Literal["forward", "backward", "symmetric"]
MatrixKind = Literal["A", "L", "Q"]

DIRECTIONS = ("forward", "backward", "symmetric")
MATRIX_KINDS = ("A", "L", "Q")
_DIR_ALIASES = {"fwd": "forward", "bwd": "backward", "sym": "symmetric"}


class CoronaError(ArithmeticError):
    """A corona formula failed its polynomial or divisibility postcondition."""


class HypothesisError(ValueError):
    """A factor digraph does not satisfy the structural hypothesis of a formula."""


@dataclass(frozen=True)
class CoronaKind:
    operation: Operation
    direction: Direction

    def __post_init__(self):
        if self.operation not in ("vertex", "arc"):
            raise ValueError(f"unknown corona operation {self.operation!r}")
        object.__setattr__(self, "direction", normalize_direction(self.direction))


def normalize_direction(direction: str) -> Direction:
    d = _DIR_ALIASES.get(direction, direction)
    if d not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    return d


def _check_kind(kind: str) -> None:
    if kind not in MATRIX_KINDS:
        raise ValueError(f"matrix kind must be A, L or Q; got {kind!r}")


def _check_factors(d1: Digraph, d2: Digraph) -> None:
    if d1.n < 1 or d2.n < 1:
        raise DigraphError("corona factors must have at least one vertex")


# -- constructions -----------------------------------------------------


def vertex_corona(d1: Digraph, d2: Digraph, direction: str) -> Digraph:
    direction = normalize_direction(direction)
    _check_factors(d1, d2)
    n1, n2 = d1.n, d2.n
    arcs = list(d1.arcs)
    for i in range(n1):
        label = [i + n1 * (j + 1) for j in range(n2)]
        arcs.extend((label[a], label[b]) for a, b in d2.arcs)
        for w in label:
            if direction != "backward":
                arcs.append((i, w))
            if direction != "forward":
                arcs.append((w, i))
    return Digraph(n1 + n1 * n2, tuple(arcs))


def arc_corona(d1: Digraph, d2: Digraph, direction: str) -> Digraph:
    """Arc corona; with no arcs (or edges) in D1 this is D1 itself."""
    direction = normalize_direction(direction)
    _check_factors(d1, d2)
    n1, n2 = d1.n, d2.n
    pairs = underlying_graph(d1).edges if direction == "symmetric" else d1.arcs
    arcs = list(d1.arcs)
    for c, (u, v) in enumerate(pairs):
        base = n1 + c * n2
        arcs.extend((base + a, base + b) for a, b in d2.arcs)
        for w in range(base, base + n2):
            if direction == "forward":
                arcs += [(u, w), (w, v)]
            elif direction == "backward":
                arcs += [(v, w), (w, u)]
            else:
                arcs += [(u, w), (w, u), (v, w), (w, v)]
    return Digraph(n1 + len(pairs) * n2, tuple(arcs))


def build_corona(d1: Digraph, d2: Digraph, kind: CoronaKind) -> Digraph:
    fn = vertex_corona if kind.operation == "vertex" else arc_corona
    return fn(d1, d2, kind.direction)


def copy_count(d1: Digraph, kind: CoronaKind) -> int:
    if kind.operation == "vertex":
        return d1.n
    if kind.direction == "symmetric":
        return underlying_graph(d1).m
    return d1.m


# -- the Kronecker-Schur engine ---------------------------------------


def _check_kron_schur(m1: Matrix, m2: Matrix, b1: Matrix, b2: Matrix, sign: int) -> int:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not (m1.is_square() and m2.is_square()):
        raise ValueError("M1 and M2 must be square")
    n1, r = b1.shape
    if n1 != m1.rows or b2.shape != (r, n1):
        raise ValueError(f"B1 must be {m1.rows}xr and B2 rx{m1.rows}; got {b1.shape} and {b2.shape}")
    if r == 0:
        raise ValueError("B1 and B2 need at least one column/row (r >= 1)")
    return r


def kron_schur_block(m1: Matrix, m2: Matrix, b1: Matrix, b2: Matrix, sign: int = 1) -> Matrix:
    """The explicit block matrix [[M1, s(1^T x B1)], [s(1 x B2), M2 x I_r]]."""
    r = _check_kron_schur(m1, m2, b1, b2, sign)
    n2 = m2.rows
    upper = kron(Matrix.all_ones(1, n2), b1).scale(sign)
    lower = kron(Matrix.ones(n2), b2).scale(sign)
    return block([[m1, upper], [lower, kron(m2, Matrix.identity(r))]])


def kron_schur_charpoly(m1: Matrix, m2: Matrix, b1: Matrix, b2: Matrix, sign: int = 1) -> Polynomial:
    """[f_M2]^r * det(lambda*I - M1 - chi_M2 * B1 B2), cleared to a polynomial."""
    r = _check_kron_schur(m1, m2, b1, b2, sign)
    f2 = charpoly(m2)
    chi2 = coronal(m2)
    det = _char_det(m1, [(chi2, b1 @ b2)])
    out = _clear(det * f2**r, "Kronecker-Schur determinant")
    expected = m1.rows + r * m2.rows
    if out.degree != expected or not out.is_monic():
        raise CoronaError(f"expected a monic polynomial of degree {expected}, got {out}")
    return out


def _char_det(m1: Matrix, terms) -> RationalFunction:
    """det(lambda*I - M1 - sum_t coeff_t * C_t) over the rational-function field."""
    n = m1.rows
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = RationalFunction(LAMBDA if i == j else 0) - m1[i, j]
            for coeff, c in terms:
                if c[i, j]:
                    e = e - coeff * c[i, j]
            row.append(e)
        rows.append(row)
    return Matrix(rows, n).det()


def _clear(val, what: str) -> Polynomial:
    if isinstance(val, Polynomial):
        return val
    val = RationalFunction._coerce(val)
    if not val.is_polynomial():
        raise CoronaError(f"{what} did not reduce to a polynomial: {val}")
    return val.num


def _shift(kind: str, amount: int) -> Polynomial:
    """lambda - amount for L/Q, plain lambda for A."""
    return Polynomial([0 if kind == "A" else -amount, 1])


# -- vertex corona -----------------------------------------------------


def vertex_corona_charpoly(d1: Digraph, d2: Digraph, kind: str, direction: str = "symmetric") -> Polynomial:
    """Characteristic polynomial of the A, L or Q matrix of a vertex corona."""
    _check_kind(kind)
    _check_factors(d1, d2)
    direction = normalize_direction(direction)
    n1, n2 = d1.n, d2.n
    m1, m2 = matrix_of(d1, kind), matrix_of(d2, kind)
    f1, f2 = charpoly(m1), charpoly(m2)
    if direction != "symmetric":
        # block triangular: only the out-degree shifts survive
        if direction == "forward":
            f1 = f1.compose(_shift(kind, n2))
        else:
            f2 = f2.compose(_shift(kind, 1))
        return f1 * f2**n1
    if kind == "A":
        out = f2**n1 * f1(LAMBDA - coronal(m2))
    elif kind == "L":
        arg = RationalFunction(Polynomial([0, -(n2 + 1), 1]), Polynomial([-1, 1]))
        out = f2.compose(_shift("L", 1)) ** n1 * f1(arg)
    else:
        chi = coronal(m2)(_shift("Q", 1))
        out = f2.compose(_shift("Q", 1)) ** n1 * f1(LAMBDA - n2 - chi)
    res = _clear(out, f"vertex corona {kind}-characteristic polynomial")
    if res.degree != n1 * (1 + n2):
        raise CoronaError(f"degree {res.degree} differs from {n1 * (1 + n2)}")
    return res


@dataclass(frozen=True)
class SpectrumDescription:
    """Factored spectrum of a symmetric vertex corona with an out-regular D2.

    ``inherited`` holds (factor, multiplicity) pairs coming from D2.
    ``paired`` holds one monic quadratic per rational eigenvalue of D1's
    matrix (listed again for repeated eigenvalues); its two roots are the
    corona eigenvalues attached to that eigenvalue.
    ``grouped`` covers the eigenvalues of D1 that are not rational: each
    entry is (g, h) where g is a monic factor of D1's characteristic
    polynomial and h the product of the quadratics over the roots of g,
    which has rational coefficients even though each quadratic does not.
    """

    inherited: tuple[tuple[Polynomial, int], ...]
    paired: tuple[tuple[Polynomial, int], ...]
    grouped: tuple[tuple[Polynomial, Polynomial], ...] = field(default=())

    def expand(self) -> Polynomial:
        out = Polynomial([1])
        for p, k in self.inherited + self.paired:
            out = out * p**k
        for _, h in self.grouped:
            out = out * h
        return out


def _pair_parts(kind: str, n2: int, r: int) -> tuple[Polynomial, Polynomial]:
    """(P, S) with the quadratic for eigenvalue mu equal to P - mu*S."""
    if kind == "A":
        return Polynomial([-n2, -r, 1]), Polynomial([-r, 1])
    if kind == "L":
        return Polynomial([0, -(n2 + 1), 1]), Polynomial([-1, 1])
    return Polynomial([2 * r * n2, -(n2 + 2 * r + 1), 1]), Polynomial([-(2 * r + 1), 1])


def vertex_corona_spectrum_outregular(d1: Digraph, d2: Digraph, kind: str) -> SpectrumDescription:
    _check_kind(kind)
    _check_factors(d1, d2)
    r = out_regularity(d2)
    if r is None:
        raise HypothesisError("D2 must be out-regular")
    if not is_strongly_connected(d2):
        raise HypothesisError("D2 must be strongly connected")
    n1, n2 = d1.n, d2.n
    f2 = charpoly(matrix_of(d2, kind))
    if kind == "A":
        base, simple = f2, Polynomial([-r, 1])
    else:
        base = f2.compose(_shift(kind, 1))
        simple = Polynomial([-(1 if kind == "L" else 2 * r + 1), 1])
    q, rem = divmod(base, simple)
    if rem:
        raise CoronaError("the simple eigenvalue of D2 did not divide out")
    inherited = ((q, n1),) if q.degree > 0 else ()

    p_part, s_part = _pair_parts(kind, n2, r)
    rest = charpoly(matrix_of(d1, kind))
    paired = []
    for mu in rational_roots(rest):
        lin = Polynomial([-mu, 1])
        while True:
            quo, rm = divmod(rest, lin)
            if rm:
                break
            rest = quo
            paired.append((p_part - s_part * mu, 1))
    grouped = ()
    if rest.degree > 0:
        h = _clear(s_part ** rest.degree * rest(RationalFunction(p_part, s_part)), "grouped quadratics")
        grouped = ((rest, h),)
    return SpectrumDescription(inherited, tuple(paired), grouped)


# -- arc corona --------------------------------------------------------


def _arc_terms(d1: Digraph, d2: Digraph, direction: str, kind: str):
    """(M1 shifted, coupling coefficient, coupling matrix, f2 shifted, copies)."""
    n2 = d2.n
    m1 = matrix_of(d1, kind)
    m2 = matrix_of(d2, kind)
    f2, chi2 = charpoly(m2), coronal(m2)
    adj1 = matrix_of(d1, "A")
    g1 = underlying_graph(d1)
    if direction == "symmetric":
        coupling, copies, step = g1.signless_laplacian(), g1.m, 2
        extra = g1.degree_matrix()
    elif direction == "forward":
        coupling, copies, step = adj1, d1.m, 1
        extra = matrix_of(d1, "Dout")
    else:
        coupling, copies, step = adj1.T, d1.m, 1
        extra = matrix_of(d1, "Din")
    if kind == "A":
        return m1, chi2, coupling, f2, copies
    shift = _shift(kind, step)
    return m1 + extra.scale(n2), chi2(shift), coupling, f2.compose(shift), copies


def arc_corona_charpoly(d1: Digraph, d2: Digraph, direction: str, kind: str) -> Polynomial:
    """[f2 shifted]^copies * det(lambda*I - M1' - chi' * C) for the arc corona."""
    _check_kind(kind)
    _check_factors(d1, d2)
    direction = normalize_direction(direction)
    m1, chi, coupling, f2, copies = _arc_terms(d1, d2, direction, kind)
    det = _char_det(m1, [(chi, coupling)])
    res = _clear(det * f2**copies, f"{direction} arc corona {kind}-characteristic polynomial")
    expected = d1.n + copies * d2.n
    if res.degree != expected or not res.is_monic():
        raise CoronaError(f"expected a monic polynomial of degree {expected}, got {res}")
    return res


# -- closed forms for special D1 ---------------------------------------


@dataclass(frozen=True)
class ClosedFormOutcome:
    """Result of ``arc_corona_charpoly_closed``.

    ``status`` is "ok" (``polynomial`` set), "no-closed-form" (nothing
    applies to this direction, kind and D1) or "hypothesis-failed" (a
    requested corollary does not apply to D1).
    """

    status: Literal["ok", "no-closed-form", "hypothesis-failed"]
    corollary: Optional[str] = None
    polynomial: Optional[Polynomial] = None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _hyp_symmetric(d1: Digraph) -> Optional[str]:
    return None if is_symmetric(d1) else "D1 is not symmetric"


def _hyp_tournament(d1: Digraph) -> Optional[str]:
    return None if is_tournament(d1) else "D1 is not a tournament"


def _hyp_out_regular(d1: Digraph) -> Optional[str]:
    return None if out_regularity(d1) is not None else "D1 is not out-regular"


def _hyp_symmetric_regular(d1: Digraph) -> Optional[str]:
    return _hyp_symmetric(d1) or _hyp_out_regular(d1)


def _a_data(d: Digraph):
    m = matrix_of(d, "A")
    return charpoly(m), coronal(m)


def _closed_backward_symmetric_a(d1, d2):
    f1, _ = _a_data(d1)
    f2, chi = _a_data(d2)
    return f2**d1.m * (1 + chi) ** d1.n * f1(LAMBDA / (1 + chi))


def _closed_backward_tournament_a(d1, d2):
    f1, chi1 = _a_data(d1)
    f2, chi2 = _a_data(d2)
    s = (LAMBDA + chi2) / (1 - chi2)
    return f2**d1.m * (1 - chi2) ** (d1.n - 1) * f1(s) * (1 - chi2 - chi2 * chi1(s))


def _closed_symmetric_regular_a(d1, d2):
    r = out_regularity(d1)
    f1, _ = _a_data(d1)
    f2, chi = _a_data(d2)
    # one copy of D2 per edge, and a symmetric r-regular D1 has r*n1/2 edges
    return f2 ** (r * d1.n // 2) * (1 + chi) ** d1.n * f1((LAMBDA - chi * r) / (1 + chi))


def _closed_laplacian(step: int):
    def formula(d1, d2):
        r, n1, n2 = out_regularity(d1), d1.n, d2.n
        f1 = charpoly(matrix_of(d1, "L"))
        f2 = charpoly(matrix_of(d2, "L")).compose(Polynomial([-step, 1]))
        ratio = RationalFunction(Polynomial([-(n2 + step), 1]), Polynomial([-step, 1]))
        arg = RationalFunction(Polynomial([0, -(r * n2 + step), 1]), Polynomial([-(n2 + step), 1]))
        return f2 ** (r * n1 // step) * ratio**n1 * f1(arg)

    return formula


def _closed_signless(step: int):
    def formula(d1, d2):
        r, n1, n2 = out_regularity(d1), d1.n, d2.n
        f1 = charpoly(matrix_of(d1, "Q"))
        m2 = matrix_of(d2, "Q")
        shift = Polynomial([-step, 1])
        f2, chi = charpoly(m2).compose(shift), coronal(m2)(shift)
        # the forward form keeps an r*chi term that the symmetric one absorbs
        top = LAMBDA - r * n2 + (chi * r if step == 1 else 0)
        return f2 ** (r * n1 // step) * (1 + chi) ** n1 * f1(top / (1 + chi))

    return formula


@dataclass(frozen=True)
class Corollary:
    name: str
    direction: Direction
    kind: MatrixKind
    hypothesis: Callable[[Digraph], Optional[str]]
    formula: Callable[[Digraph, Digraph], object]


# selection order matters: the symmetric case is tried before the tournament case
COROLLARIES: tuple[Corollary, ...] = (
    Corollary("backward-symmetric-A", "backward", "A", _hyp_symmetric, _closed_backward_symmetric_a),
    Corollary("backward-tournament-A", "backward", "A", _hyp_tournament, _closed_backward_tournament_a),
    Corollary("symmetric-regular-A", "symmetric", "A", _hyp_symmetric_regular, _closed_symmetric_regular_a),
    Corollary("forward-outregular-L", "forward", "L", _hyp_out_regular, _closed_laplacian(1)),
    Corollary("symmetric-regular-L", "symmetric", "L", _hyp_symmetric_regular, _closed_laplacian(2)),
    Corollary("forward-outregular-Q", "forward", "Q", _hyp_out_regular, _closed_signless(1)),
    Corollary("symmetric-regular-Q", "symmetric", "Q", _hyp_symmetric_regular, _closed_signless(2)),
)
COROLLARY_NAMES = tuple(c.name for c in COROLLARIES)


def arc_corona_charpoly_closed(
    d1: Digraph, d2: Digraph, direction: str, kind: str, corollary: Optional[str] = None
) -> ClosedFormOutcome:
    """Closed-form arc corona characteristic polynomial when D1 is special.

    Without ``corollary`` the first applicable closed form for the
    direction and kind is used. Naming one forces it; if D1 then fails
    its hypothesis the outcome is "hypothesis-failed".
    """
    _check_kind(kind)
    _check_factors(d1, d2)
    direction = normalize_direction(direction)
    if corollary is not None:
        chosen = [c for c in COROLLARIES if c.name == corollary]
        if not chosen:
            raise ValueError(f"unknown corollary {corollary!r}")
        cor = chosen[0]
        if (cor.direction, cor.kind) != (direction, kind):
            return ClosedFormOutcome("hypothesis-failed", cor.name, reason=f"{cor.name} is for {cor.direction} {cor.kind}")
        why = cor.hypothesis(d1)
        if why:
            return ClosedFormOutcome("hypothesis-failed", cor.name, reason=why)
        return ClosedFormOutcome("ok", cor.name, _evaluate(cor, d1, d2))
    reasons = []
    for cor in COROLLARIES:
        if (cor.direction, cor.kind) != (direction, kind):
            continue
        why = cor.hypothesis(d1)
        if why:
            reasons.append(why)
            continue
        return ClosedFormOutcome("ok", cor.name, _evaluate(cor, d1, d2))
    reason = "; ".join(reasons) or f"no closed form for {direction} arc corona, kind {kind}"
    return ClosedFormOutcome("no-closed-form", reason=reason)


def _evaluate(cor: Corollary, d1: Digraph, d2: Digraph) -> Polynomial:
    res = _clear(cor.formula(d1, d2), cor.name)
    copies = underlying_graph(d1).m if cor.direction == "symmetric" else d1.m
    expected = d1.n + copies * d2.n
    if res.degree != expected or not res.is_monic():
        raise CoronaError(f"{cor.name}: expected a monic polynomial of degree {expected}, got {res}")
    return res


# -- connectivity ------------------------------------------------------


def strong_connectivity_predictions(d1: Digraph, d2: Digraph, kind: CoronaKind) -> bool:
    """Whether the corona is strongly connected, decided from D1 alone."""
    _check_factors(d1, d2)
    if kind.operation == "vertex":
        # copies only point one way unless the corona is symmetric
        return kind.direction == "symmetric" and is_strongly_connected(d1)
    if kind.direction == "forward":
        return is_strongly_connected(d1)
    return underlying_graph(d1).is_connected()
