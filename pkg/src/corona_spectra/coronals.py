"""Closed-form coronals and complement characteristic polynomials.

Every function here takes numeric family parameters rather than a digraph.
Deciding whether a concrete digraph belongs to a family is left to
``digraph.structural_predicates`` and ``validate_partition``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence, Union

from .algebra import LAMBDA, Matrix, Polynomial, RationalFunction, as_fraction
from .digraph import Digraph

CoronalKind = Literal["A", "Q"]


class FormulaError(ArithmeticError):
    """A closed form failed its algebraic postcondition or got invalid parameters."""


class PartitionError(ValueError):
    pass


def _lin(c0, c1) -> Polynomial:
    return Polynomial([c0, c1])


def _require_polynomial(r: RationalFunction, what: str) -> Polynomial:
    if not r.is_polynomial():
        raise FormulaError(f"{what} did not reduce to a polynomial: {r}")
    return r.num


def _check_kind(kind: str, allowed: str) -> None:
    if kind not in allowed:
        raise ValueError(f"kind must be one of {', '.join(allowed)}; got {kind!r}")


# -- constant row sums and affine maps ---------------------------------


def coronal_constant_rowsum(n: int, t) -> RationalFunction:
    """Coronal n/(lambda - t) of an n x n matrix whose rows all sum to t."""
    if n < 1:
        raise ValueError("n must be positive")
    return RationalFunction(n, _lin(-as_fraction(t), 1))


def coronal_affine(chi: RationalFunction, a, b, c) -> RationalFunction:
    """Coronal of a*M + b*J + c*I from the coronal of M."""
    a, b, c = as_fraction(a), as_fraction(b), as_fraction(c)
    if a == 0:
        raise ValueError("a must be nonzero")
    s = chi(_lin(-c / a, 1 / a))
    denom = a - b * s
    if denom.is_zero():
        raise FormulaError("a - b*chi((lambda-c)/a) vanishes identically")
    return s / denom


def charpoly_affine(f: Polynomial, chi: RationalFunction, a, b, c, n: int) -> Polynomial:
    """Characteristic polynomial of a*M + b*J + c*I from f_M and chi_M."""
    a, b, c = as_fraction(a), as_fraction(b), as_fraction(c)
    if a == 0:
        raise ValueError("a must be nonzero")
    arg = _lin(-c / a, 1 / a)
    s = chi(arg)
    out = _require_polynomial((a - b * s) * (f.compose(arg) * a ** (n - 1)), "affine characteristic polynomial")
    if out.degree != n or not out.is_monic():
        raise FormulaError(f"expected a monic polynomial of degree {n}, got {out}")
    return out


# -- complements -------------------------------------------------------


def complement_coronal(chi: RationalFunction, n: int, kind: CoronalKind) -> RationalFunction:
    _check_kind(kind, "AQ")
    arg = _lin(-1, -1) if kind == "A" else _lin(n - 2, -1)
    denom = 1 + chi(arg)
    if denom.is_zero():
        raise FormulaError("1 + chi vanishes identically")
    return 1 / denom - 1


def complement_charpoly(f: Polynomial, chi: RationalFunction | None, n: int, kind: str) -> Polynomial:
    """Characteristic polynomial of A, L or Q of the complement digraph."""
    _check_kind(kind, "ALQ")
    sign = -1 if n % 2 else 1
    if kind == "L":
        val = RationalFunction(LAMBDA, _lin(-n, 1)) * f.compose(_lin(n, -1)) * sign
    else:
        if chi is None:
            raise ValueError(f"kind {kind} needs the coronal")
        arg = _lin(-1, -1) if kind == "A" else _lin(n - 2, -1)
        val = (1 + chi(arg)) * f.compose(arg) * sign
    return _require_polynomial(val, f"complement {kind}-characteristic polynomial")


def complement_charpoly_outregular(f: Polynomial, n: int, r: int, kind: CoronalKind) -> Polynomial:
    """Complement characteristic polynomial for an r-out-regular digraph."""
    _check_kind(kind, "AQ")
    sign = -1 if n % 2 else 1
    if kind == "A":
        num, den = _lin(r + 1 - n, 1), _lin(r + 1, 1)
        g = f.compose(_lin(-1, -1))
    else:
        num, den = _lin(2 * r + 2 - 2 * n, 1), _lin(2 * r + 2 - n, 1)
        g = f.compose(_lin(n - 2, -1))
    q, rem = divmod(num * g, den)
    if rem:
        raise FormulaError("exact division failed; the input is not r-out-regular")
    return q * sign


# -- equitable partitions ----------------------------------------------


@dataclass(frozen=True)
class EquitablePartition:
    blocks: tuple[tuple[int, ...], ...]
    quotient: Matrix

    @property
    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]


def validate_partition(m: Matrix, blocks: Sequence[Sequence[int]]) -> EquitablePartition:
    """Check that ``blocks`` is equitable for ``m`` and build its quotient matrix."""
    if not m.is_square():
        raise PartitionError("matrix must be square")
    n = m.rows
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    flat = [v for b in blocks for v in b]
    if any(not b for b in blocks):
        raise PartitionError("blocks must be nonempty")
    if sorted(flat) != list(range(n)):
        raise PartitionError(f"blocks must partition 0..{n - 1} exactly once")
    k = len(blocks)
    quotient = [[Fraction(0)] * k for _ in range(k)]
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            sums = [sum((m[v, w] for w in bj), Fraction(0)) for v in bi]
            for v, s in zip(bi, sums):
                if s != sums[0]:
                    raise PartitionError(
                        f"vertex {v} in block {i} has row sum {s} into block {j}, "
                        f"but vertex {bi[0]} has {sums[0]}"
                    )
            quotient[i][j] = sums[0]
    return EquitablePartition(blocks, Matrix(quotient, k))


def coronal_equitable(m: Matrix, partition: Union[EquitablePartition, Sequence[Sequence[int]]]) -> RationalFunction:
    """[n_1 ... n_k] (lambda*I_k - R)^-1 ones_k for the quotient matrix R."""
    if not isinstance(partition, EquitablePartition):
        partition = validate_partition(m, partition)
    else:
        partition = validate_partition(m, partition.blocks)
    return coronal_from_quotient(partition.sizes, partition.quotient)


def coronal_from_quotient(sizes: Sequence[int], quotient: Matrix) -> RationalFunction:
    k = len(sizes)
    resolvent = quotient.minus_lambda_identity().inverse()
    out = RationalFunction(0)
    for i in range(k):
        for j in range(k):
            out = out + resolvent[i, j] * sizes[i]
    return out


def coronal_two_blocks(n1: int, n2: int, quotient: Matrix) -> RationalFunction:
    """The explicit k = 2 quotient formula."""
    r11, r12, r21, r22 = quotient[0, 0], quotient[0, 1], quotient[1, 0], quotient[1, 1]
    num = Polynomial([n1 * (r12 - r22) + n2 * (r21 - r11), n1 + n2])
    den = Polynomial([r11 * r22 - r12 * r21, -(r11 + r22), 1])
    return RationalFunction(num, den)


# -- digraph families --------------------------------------------------


def coronal_join_outregular(parts: Sequence[tuple[int, int]], kind: CoronalKind) -> RationalFunction:
    """Coronal of the join of r_i-out-regular digraphs on n_i vertices."""
    _check_kind(kind, "AQ")
    if not parts:
        raise ValueError("join needs at least one part")
    for ni, ri in parts:
        if ni < 1 or not 0 <= ri < ni:
            raise ValueError(f"part ({ni}, {ri}) needs n >= 1 and 0 <= r < n")
    n = sum(ni for ni, _ in parts)
    acc = RationalFunction(1)
    for ni, ri in parts:
        shift = ni - ri if kind == "A" else 2 * ni - 2 * ri - n
        acc = acc - RationalFunction(ni, _lin(shift, 1))
    return 1 / acc - 1


def coronal_semiregular_bipartite(n1: int, n2: int, r1: int, r2: int, kind: CoronalKind) -> RationalFunction:
    _check_kind(kind, "AQ")
    if n1 < 1 or n2 < 1 or not (0 <= r1 <= n2 and 0 <= r2 <= n1):
        raise ValueError("need n1, n2 >= 1, 0 <= r1 <= n2 and 0 <= r2 <= n1")
    if kind == "A":
        return RationalFunction(Polynomial([n1 * r1 + n2 * r2, n1 + n2]), Polynomial([-r1 * r2, 0, 1]))
    return RationalFunction(
        Polynomial([(n1 - n2) * (r1 - r2), n1 + n2]), Polynomial([0, -(r1 + r2), 1])
    )


def coronal_fullside_bipartite(n1: int, n2: int, k: int) -> RationalFunction:
    """A-coronal when every V1 vertex points to all of V2 and V2 sends k arcs back."""
    if n1 < 1 or n2 < 1 or not 0 <= k <= n1 * n2:
        raise ValueError("need n1, n2 >= 1 and 0 <= k <= n1*n2")
    return RationalFunction(Polynomial([k + n1 * n2, n1 + n2]), Polynomial([-k, 0, 1]))


def coronal_path(n: int, kind: CoronalKind) -> RationalFunction:
    """Coronal of the directed path on n vertices."""
    _check_kind(kind, "AQ")
    if n < 1:
        raise ValueError("n must be positive")
    lam = LAMBDA
    lm1 = _lin(-1, 1)
    if kind == "A":
        num = Polynomial.monomial(n + 1, n) - Polynomial.monomial(n, n + 1) + 1
        return RationalFunction(num, Polynomial.monomial(n) * lm1**2)
    lm2 = _lin(-2, 1)
    num = lm1**n * (lam * lm2 * n - lm1 * 2) + lm1 * 2
    return RationalFunction(num, lam * lm1**n * lm2**2)


# -- family descriptors ------------------------------------------------


def _circulant(n: int, r: int, offset: int = 0) -> list[tuple[int, int]]:
    return [(offset + u, offset + (u + t) % n) for u in range(n) for t in range(1, r + 1)]


@dataclass(frozen=True)
class ConstantRowSum:
    n: int
    t: int

    def coronal(self, kind: str = "A") -> RationalFunction:
        t = self.t if kind == "A" else 2 * self.t if kind == "Q" else 0
        return coronal_constant_rowsum(self.n, t)

    def realize(self) -> Digraph:
        return Digraph(self.n, tuple(_circulant(self.n, self.t)))


@dataclass(frozen=True)
class JoinOutRegular:
    parts: tuple[tuple[int, int], ...]

    def coronal(self, kind: CoronalKind = "A") -> RationalFunction:
        return coronal_join_outregular(self.parts, kind)

    def realize(self) -> Digraph:
        from .digraph import join

        out = None
        for ni, ri in self.parts:
            d = Digraph(ni, tuple(_circulant(ni, ri)))
            out = d if out is None else join(out, d)
        return out


@dataclass(frozen=True)
class SemiRegularBipartite:
    n1: int
    n2: int
    r1: int
    r2: int

    def coronal(self, kind: CoronalKind = "A") -> RationalFunction:
        return coronal_semiregular_bipartite(self.n1, self.n2, self.r1, self.r2, kind)

    def realize(self) -> Digraph:
        n1, n2 = self.n1, self.n2
        arcs = [(i, n1 + (i + t) % n2) for i in range(n1) for t in range(self.r1)]
        arcs += [(n1 + j, (j + t) % n1) for j in range(n2) for t in range(self.r2)]
        return Digraph(n1 + n2, tuple(arcs))


@dataclass(frozen=True)
class FullSideBipartite:
    n1: int
    n2: int
    k: int

    def coronal(self, kind: str = "A") -> RationalFunction:
        if kind != "A":
            raise ValueError("only the A-coronal has a closed form for this family")
        return coronal_fullside_bipartite(self.n1, self.n2, self.k)

    def realize(self) -> Digraph:
        n1, n2 = self.n1, self.n2
        arcs = [(i, n1 + j) for i in range(n1) for j in range(n2)]
        back = [(n1 + j, i) for j in range(n2) for i in range(n1)]
        return Digraph(n1 + n2, tuple(arcs + back[: self.k]))


@dataclass(frozen=True)
class DirectedPath:
    n: int

    def coronal(self, kind: CoronalKind = "A") -> RationalFunction:
        return coronal_path(self.n, kind)

    def realize(self) -> Digraph:
        return Digraph(self.n, tuple((i, i + 1) for i in range(self.n - 1)))


FamilySpec = Union[ConstantRowSum, JoinOutRegular, SemiRegularBipartite, FullSideBipartite, DirectedPath]


def parse_family_spec(text: str) -> FamilySpec:
    """Parse CLI family descriptors.

    ``rowsum:n,t``, ``join:n1,r1;n2,r2``, ``semireg:n1,n2,r1,r2``,
    ``fullside:n1,n2,k``, ``path:n``.
    """
    name, _, args = text.partition(":")
    try:
        if name == "join":
            parts = tuple(tuple(int(x) for x in p.split(",")) for p in args.split(";") if p)
            if any(len(p) != 2 for p in parts):
                raise ValueError
            return JoinOutRegular(parts)
        nums = [int(x) for x in args.split(",")] if args else []
    except ValueError:
        raise ValueError(f"malformed family descriptor {text!r}") from None
    table = {
        "rowsum": (ConstantRowSum, 2),
        "semireg": (SemiRegularBipartite, 4),
        "fullside": (FullSideBipartite, 3),
        "path": (DirectedPath, 1),
    }
    if name not in table or len(nums) != table[name][1]:
        raise ValueError(f"malformed family descriptor {text!r}")
    return table[name][0](*nums)
