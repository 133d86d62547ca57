"""Seeded verification sweeps: every closed form against an oracle.

Each suite turns (seed, trial index) into one or more checks. A check is
an instance descriptor plus two thunks, the oracle value and the value
under test, compared exactly. Formula functions are looked up through
their modules at call time so a test can substitute a broken one.
"""
from __future__ import annotations

import os
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from .. import coronals, corona
from ..algebra import Matrix, Polynomial, RationalFunction, block, spectral
from ..corona import COROLLARIES, DIRECTIONS, CoronaKind, HypothesisError
from ..digraph import (
    Digraph,
    complement,
    complete,
    cycle,
    empty,
    incidence_of,
    is_strongly_connected,
    line_digraph,
    matrix_of,
    path,
    underlying_graph,
)
from .oracles import oracle_charpoly, oracle_coronal, random_digraph_from, random_int_matrix, rng_for

VERDICTS = ("match", "mismatch", "hypothesis-violated", "skipped")
CORONA_BUDGET = 10


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 1
    trials: int = 25
    max_n: int = 8
    density: tuple[float, float] = (0.2, 0.8)
    suites: tuple[str, ...] = ("all",)

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        lo, hi = self.density
        if not 0.0 <= lo <= hi <= 1.0:
            raise ValueError("density range must satisfy 0 <= lo <= hi <= 1")

    def suite_names(self) -> list[str]:
        if "all" in self.suites:
            return list(SUITES)
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
        return list(self.suites)


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    trial: int
    instance: dict
    expected: Any
    actual: Any
    verdict: str
    detail: str = ""
    timing: float = field(default=0.0, compare=False)

    def to_json(self, include_timing: bool = False) -> dict:
        out = asdict(self)
        if not include_timing:
            del out["timing"]
        return out


@dataclass
class Check:
    instance: dict
    expected: Callable[[], Any]
    actual: Callable[[], Any]


@dataclass(frozen=True)
class Suite:
    name: str
    covers: tuple[str, ...]
    trial: Callable[[np.random.Generator, SweepConfig, int], list[Check]]


# -- JSON helpers ------------------------------------------------------


def to_jsonable(x):
    if isinstance(x, (Polynomial, RationalFunction, Matrix)):
        return x.to_json()
    if isinstance(x, Digraph):
        return {"n": x.n, "arcs": [list(a) for a in x.arcs]}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


# -- random instance helpers -------------------------------------------


def _int(rng, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def _density(rng, config: SweepConfig) -> float:
    lo, hi = config.density
    return float(rng.uniform(lo, hi)) if hi > lo else lo


def _relabel(rng, d: Digraph) -> Digraph:
    perm = [int(x) for x in rng.permutation(d.n)]
    return Digraph(d.n, tuple((perm[u], perm[v]) for u, v in d.arcs))


def pool_digraph(rng, n: int, config: SweepConfig) -> Digraph:
    """A digraph on n vertices from paths, cycles, empty, complete or random."""
    choice = _int(rng, 0, 4)
    if choice == 0:
        return path(n)
    if choice == 1 and n >= 2:
        return cycle(n)
    if choice == 2:
        return empty(n)
    if choice == 3:
        return complete(n)
    return random_digraph_from(rng, n, _density(rng, config))


def random_symmetric(rng, n: int, density: float) -> Digraph:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                arcs += [(u, v), (v, u)]
    return Digraph(n, tuple(arcs))


def random_tournament(rng, n: int) -> Digraph:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, tuple(arcs))


def random_out_regular(rng, n: int, r: int) -> Digraph:
    arcs = []
    for u in range(n):
        others = [v for v in range(n) if v != u]
        for k in rng.choice(len(others), size=r, replace=False):
            arcs.append((u, others[int(k)]))
    return Digraph(n, tuple(arcs))


def random_symmetric_regular(rng, n: int) -> Digraph:
    """A relabeled symmetric circulant: offsets closed under negation."""
    half = [s for s in range(1, n // 2 + 1)]
    chosen = [s for s in half if rng.random() < 0.5]
    offsets = {s % n for s in chosen} | {(-s) % n for s in chosen}
    arcs = [(u, (u + s) % n) for u in range(n) for s in offsets]
    return _relabel(rng, Digraph(n, tuple(arcs)))


def random_strong_out_regular(rng, n: int) -> Digraph:
    """Out-regular and strongly connected: a relabeled circulant with offsets 1..r."""
    if n == 1:
        return empty(1)
    r = _int(rng, 1, n - 1)
    return _relabel(rng, Digraph(n, tuple((u, (u + s) % n) for u in range(n) for s in range(1, r + 1))))


def random_equitable(rng, cap: int) -> tuple[Digraph, list[list[int]]]:
    """A digraph with a planted equitable partition into at most three blocks."""
    k = _int(rng, 1, min(3, cap))
    sizes = [1] * k
    for _ in range(_int(rng, 0, cap - k)):
        sizes[_int(rng, 0, k - 1)] += 1
    starts = [sum(sizes[:i]) for i in range(k)]
    arcs = []
    for i in range(k):
        for j in range(k):
            rij = _int(rng, 0, sizes[j] - (i == j))
            for p in range(sizes[i]):
                for t in range(rij):
                    q = (p + t + (i == j)) % sizes[j]
                    arcs.append((starts[i] + p, starts[j] + q))
    d = Digraph(sum(sizes), tuple(arcs))
    perm = [int(x) for x in rng.permutation(d.n)]
    relabeled = Digraph(d.n, tuple((perm[u], perm[v]) for u, v in d.arcs))
    blocks = [sorted(perm[starts[i] + p] for p in range(sizes[i])) for i in range(k)]
    return relabeled, blocks


def random_family_spec(rng, family: str, cap: int):
    if family == "rowsum":
        n = _int(rng, 1, cap)
        return coronals.ConstantRowSum(n, _int(rng, 0, n - 1))
    if family == "join":
        k = _int(rng, 1, min(3, cap))
        sizes = [1] * k
        for _ in range(_int(rng, 0, cap - k)):
            sizes[_int(rng, 0, k - 1)] += 1
        return coronals.JoinOutRegular(tuple((s, _int(rng, 0, s - 1)) for s in sizes))
    if family == "path":
        return coronals.DirectedPath(_int(rng, 1, cap))
    n1 = _int(rng, 1, max(1, cap - 1))
    n2 = _int(rng, 1, max(1, cap - n1))
    if family == "semireg":
        return coronals.SemiRegularBipartite(n1, n2, _int(rng, 0, n2), _int(rng, 0, n1))
    if family == "fullside":
        return coronals.FullSideBipartite(n1, n2, _int(rng, 0, n1 * n2))
    raise ValueError(f"unknown family {family!r}")


def family_instances(max_total: int):
    """Every parameterization of the closed-form families with at most max_total vertices."""
    for n in range(1, max_total + 1):
        yield coronals.DirectedPath(n)
        for t in range(n):
            yield coronals.ConstantRowSum(n, t)
    for total in range(1, max_total + 1):
        for parts in _compositions(total, 3):
            for rs in _product([range(s) for s in parts]):
                yield coronals.JoinOutRegular(tuple(zip(parts, rs)))
    for n1 in range(1, max_total):
        for n2 in range(1, max_total - n1 + 1):
            for r1 in range(n2 + 1):
                for r2 in range(n1 + 1):
                    yield coronals.SemiRegularBipartite(n1, n2, r1, r2)
            for k in range(n1 * n2 + 1):
                yield coronals.FullSideBipartite(n1, n2, k)


def _compositions(total: int, max_parts: int):
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first, max_parts - 1):
            yield (first,) + rest


def _product(ranges):
    if not ranges:
        yield ()
        return
    for x in ranges[0]:
        for rest in _product(ranges[1:]):
            yield (x,) + rest


def _kind(rng, kinds: str = "AQ") -> str:
    return kinds[_int(rng, 0, len(kinds) - 1)]


def _corona_factors(rng, config: SweepConfig, size: Callable[[Digraph, int], int], budget: int = CORONA_BUDGET):
    """Draw (D1, D2) from the pool until the corona has at most ``budget`` vertices."""
    cap = min(config.max_n, budget - 1)
    while True:
        d1 = pool_digraph(rng, _int(rng, 1, cap), config)
        n2 = _int(rng, 1, cap)
        if size(d1, n2) <= budget:
            return d1, pool_digraph(rng, n2, config)


def _vertex_size(d1: Digraph, n2: int) -> int:
    return d1.n * (1 + n2)


def _arc_size(direction: str):
    def size(d1: Digraph, n2: int) -> int:
        copies = underlying_graph(d1).m if direction == "symmetric" else d1.m
        return d1.n + copies * n2

    return size


def _pair_instance(d1: Digraph, d2: Digraph, **extra) -> dict:
    return {"d1": to_jsonable(d1), "d2": to_jsonable(d2), **extra}


# -- suites ------------------------------------------------------------


def _trial_coronal_formulas(rng, config, t):
    cap = min(config.max_n, 8)
    families = ("rowsum", "equitable", "join", "semireg", "fullside", "path")
    family = families[t % len(families)]
    if family == "equitable":
        d, blocks = random_equitable(rng, cap)
        m = matrix_of(d, "A")
        inst = {"family": "equitable", "digraph": to_jsonable(d), "blocks": blocks}
        checks = [Check(inst, lambda: oracle_coronal(m), lambda: coronals.coronal_equitable(m, blocks))]
        if len(blocks) == 2:
            part = coronals.validate_partition(m, blocks)
            checks.append(
                Check(
                    {**inst, "form": "two-block"},
                    lambda: oracle_coronal(m),
                    lambda: coronals.coronal_two_blocks(*part.sizes, part.quotient),
                )
            )
        return checks
    spec = random_family_spec(rng, family, cap)
    kind = "A" if family == "fullside" else _kind(rng)
    m = matrix_of(spec.realize(), kind)
    inst = {"family": family, "params": to_jsonable(asdict(spec)), "kind": kind}
    return [Check(inst, lambda: oracle_coronal(m), lambda: spec.coronal(kind))]


def _trial_affine(rng, config, t):
    d = random_digraph_from(rng, _int(rng, 1, min(config.max_n, 7)), _density(rng, config))
    kind = _kind(rng, "ALQ")
    a = _int(rng, 1, 3) * (1 if rng.random() < 0.5 else -1)
    b, c = _int(rng, -3, 3), _int(rng, -3, 3)
    m = matrix_of(d, kind)
    shifted = m.scale(a) + Matrix.all_ones(d.n).scale(b) + Matrix.identity(d.n).scale(c)
    inst = _single(d, kind=kind, a=a, b=b, c=c)
    f, chi = spectral.charpoly(m), spectral.coronal(m)
    return [
        Check(inst, lambda: oracle_coronal(shifted), lambda: coronals.coronal_affine(chi, a, b, c)),
        Check(
            {**inst, "target": "charpoly"},
            lambda: oracle_charpoly(shifted),
            lambda: coronals.charpoly_affine(f, chi, a, b, c, d.n),
        ),
    ]


def _single(d: Digraph, **extra) -> dict:
    return {"digraph": to_jsonable(d), **extra}


def _trial_complement(rng, config, t):
    n = _int(rng, 1, min(config.max_n, 7))
    d = random_digraph_from(rng, n, _density(rng, config))
    dc = complement(d)
    checks = []
    for kind in "ALQ":
        m = matrix_of(d, kind)
        f, chi = spectral.charpoly(m), spectral.coronal(m)
        mc = matrix_of(dc, kind)
        inst = _single(d, kind=kind)
        if kind != "L":
            checks.append(
                Check({**inst, "target": "coronal"}, lambda mc=mc: oracle_coronal(mc),
                      lambda chi=chi, kind=kind: coronals.complement_coronal(chi, n, kind))
            )
        checks.append(
            Check({**inst, "target": "charpoly"}, lambda mc=mc: oracle_charpoly(mc),
                  lambda f=f, chi=chi, kind=kind: coronals.complement_charpoly(f, chi, n, kind))
        )
    r = _int(rng, 0, n - 1)
    reg = random_out_regular(rng, n, r)
    for kind in "AQ":
        f = spectral.charpoly(matrix_of(reg, kind))
        mc = matrix_of(complement(reg), kind)
        checks.append(
            Check(_single(reg, kind=kind, r=r, target="charpoly-outregular"), lambda mc=mc: oracle_charpoly(mc),
                  lambda f=f, kind=kind: coronals.complement_charpoly_outregular(f, n, r, kind))
        )
    return checks


def _vertex_trial(kind: str):
    def trial(rng, config, t):
        direction = DIRECTIONS[t % 3]
        d1, d2 = _corona_factors(rng, config, _vertex_size)
        inst = _pair_instance(d1, d2, operation="vertex", direction=direction, kind=kind)
        return [
            Check(
                inst,
                lambda: oracle_charpoly(matrix_of(corona.vertex_corona(d1, d2, direction), kind)),
                lambda: corona.vertex_corona_charpoly(d1, d2, kind, direction),
            )
        ]

    return trial


def _arc_trial(kind: str):
    def trial(rng, config, t):
        direction = DIRECTIONS[t % 3]
        d1, d2 = _corona_factors(rng, config, _arc_size(direction))
        inst = _pair_instance(d1, d2, operation="arc", direction=direction, kind=kind)
        return [
            Check(
                inst,
                lambda: oracle_charpoly(matrix_of(corona.arc_corona(d1, d2, direction), kind)),
                lambda: corona.arc_corona_charpoly(d1, d2, direction, kind),
            )
        ]

    return trial


def qualifying_d1(rng, corollary_name: str, n: int) -> Digraph:
    if corollary_name == "backward-symmetric-A":
        return random_symmetric(rng, n, float(rng.uniform(0.2, 0.9)))
    if corollary_name == "backward-tournament-A":
        return random_tournament(rng, n)
    if corollary_name.startswith("forward-outregular"):
        return random_out_regular(rng, n, _int(rng, 0, n - 1))
    return random_symmetric_regular(rng, n)


def _closed_check(d1, d2, cor) -> Check:
    def actual():
        out = corona.arc_corona_charpoly_closed(d1, d2, cor.direction, cor.kind, corollary=cor.name)
        if not out.ok:
            raise HypothesisError(out.reason)
        return out.polynomial

    inst = _pair_instance(d1, d2, corollary=cor.name, direction=cor.direction, kind=cor.kind)
    return Check(inst, lambda: corona.arc_corona_charpoly(d1, d2, cor.direction, cor.kind), actual)


def _trial_corollaries(rng, config, t):
    cor = COROLLARIES[t % len(COROLLARIES)]
    size = _arc_size(cor.direction)
    cap = min(config.max_n, 5)
    while True:
        d1 = qualifying_d1(rng, cor.name, _int(rng, 1, cap))
        n2 = _int(rng, 1, min(config.max_n, 3))
        if size(d1, n2) <= CORONA_BUDGET:
            break
    return [_closed_check(d1, pool_digraph(rng, n2, config), cor)]


def _trial_tournament(rng, config, t):
    cor = next(c for c in COROLLARIES if c.name == "backward-tournament-A")
    if t == 0:
        d1, d2 = path(2), path(1)
    else:
        while True:
            d1 = random_tournament(rng, _int(rng, 1, min(config.max_n, 4)))
            n2 = _int(rng, 1, min(config.max_n, 3))
            if d1.n + d1.m * n2 <= CORONA_BUDGET:
                break
        d2 = pool_digraph(rng, n2, config)
    check = _closed_check(d1, d2, cor)
    check.expected = lambda: oracle_charpoly(matrix_of(corona.arc_corona(d1, d2, "backward"), "A"))
    return [check]


def _trial_spectrum(rng, config, t):
    kind = "ALQ"[t % 3]
    while True:
        d2 = random_strong_out_regular(rng, _int(rng, 1, min(config.max_n, 4)))
        d1 = pool_digraph(rng, _int(rng, 1, min(config.max_n, 3)), config)
        if _vertex_size(d1, d2.n) <= CORONA_BUDGET + 5:
            break
    inst = _pair_instance(d1, d2, operation="vertex", direction="symmetric", kind=kind)
    return [
        Check(
            inst,
            lambda: oracle_charpoly(matrix_of(corona.vertex_corona(d1, d2, "symmetric"), kind)),
            lambda: corona.vertex_corona_spectrum_outregular(d1, d2, kind).expand(),
        )
    ]


CORONA_KINDS = tuple(CoronaKind(op, d) for op in ("vertex", "arc") for d in DIRECTIONS)


def _trial_connectivity(rng, config, t):
    kind = CORONA_KINDS[t % len(CORONA_KINDS)]
    d1 = random_digraph_from(rng, _int(rng, 1, min(config.max_n, 5)), _density(rng, config))
    d2 = random_digraph_from(rng, _int(rng, 1, min(config.max_n, 3)), _density(rng, config))
    inst = _pair_instance(d1, d2, operation=kind.operation, direction=kind.direction)
    return [
        Check(
            inst,
            lambda: is_strongly_connected(corona.build_corona(d1, d2, kind)),
            lambda: corona.strong_connectivity_predictions(d1, d2, kind),
        )
    ]


def _trial_incidence(rng, config, t):
    d = random_digraph_from(rng, _int(rng, 1, min(config.max_n, 8)), _density(rng, config))
    b_in, b_out = incidence_of(d, "B_in"), incidence_of(d, "B_out")
    g = underlying_graph(d)
    b_u, n_or = incidence_of(d, "B_underlying"), incidence_of(d, "N_oriented")
    inst = _single(d)
    return [
        Check({**inst, "identity": "A = Bout Bin^T"}, lambda: matrix_of(d, "A"), lambda: b_out @ b_in.T),
        Check({**inst, "identity": "A(line) = Bin^T Bout"}, lambda: matrix_of(line_digraph(d), "A"), lambda: b_in.T @ b_out),
        Check({**inst, "identity": "L(G) = N N^T"}, lambda: g.laplacian(), lambda: n_or @ n_or.T),
        Check({**inst, "identity": "Q(G) = B B^T"}, lambda: g.signless_laplacian(), lambda: b_u @ b_u.T),
    ]


def _trial_charpoly(rng, config, t):
    m = random_int_matrix(rng, _int(rng, 1, min(config.max_n, 8)))
    return [Check({"matrix": to_jsonable(m)}, lambda: oracle_charpoly(m), lambda: spectral.charpoly(m))]


def _trial_coronal_oracle(rng, config, t):
    d = random_digraph_from(rng, _int(rng, 1, min(config.max_n, 8)), _density(rng, config))
    kind = _kind(rng, "ALQ")
    m = matrix_of(d, kind)
    return [Check(_single(d, kind=kind), lambda: oracle_coronal(m), lambda: spectral.coronal(m))]


def _trial_kron_schur(rng, config, t):
    n1, n2, r = _int(rng, 1, 3), _int(rng, 1, 3), _int(rng, 1, 3)
    m1, m2 = random_int_matrix(rng, n1, bound=2), random_int_matrix(rng, n2, bound=2)
    b1, b2 = random_int_matrix(rng, n1, r, bound=1), random_int_matrix(rng, r, n1, bound=1)
    sign = 1 if rng.random() < 0.5 else -1
    inst = {"M1": to_jsonable(m1), "M2": to_jsonable(m2), "B1": to_jsonable(b1), "B2": to_jsonable(b2), "sign": sign}
    return [
        Check(
            inst,
            lambda: oracle_charpoly(corona.kron_schur_block(m1, m2, b1, b2, sign)),
            lambda: corona.kron_schur_charpoly(m1, m2, b1, b2, sign),
        )
    ]


def _nonsingular(rng, n: int) -> Matrix:
    while True:
        c = random_int_matrix(rng, n, bound=3)
        if c.det():
            return c


def _trial_algebra(rng, config, t):
    n = _int(rng, 1, min(config.max_n, 5))
    c = _nonsingular(rng, n)
    alpha = _int(rng, -3, 3)
    shifted = c + Matrix.all_ones(n).scale(alpha)
    inst = {"C": to_jsonable(c), "alpha": alpha}
    checks = [
        Check({**inst, "identity": "rank-one det"}, lambda: shifted.det(), lambda: spectral.rank_one_det(c, alpha))
    ]
    if shifted.det():
        checks.append(
            Check({**inst, "identity": "rank-one inverse"}, lambda: shifted.inverse(),
                  lambda: spectral.rank_one_inverse(c, alpha))
        )
    p, q = _int(rng, 1, 3), _int(rng, 1, 3)
    m1, m2 = random_int_matrix(rng, p, bound=3), random_int_matrix(rng, p, q, bound=3)
    m3, m4 = random_int_matrix(rng, q, p, bound=3), _nonsingular(rng, q)
    full = block([[m1, m2], [m3, m4]])
    checks.append(
        Check({"blocks": to_jsonable([m1, m2, m3, m4]), "identity": "Schur determinant"}, lambda: full.det(),
              lambda: spectral.schur_block_det(m1, m2, m3, m4))
    )
    d = random_digraph_from(rng, _int(rng, 1, min(config.max_n, 7)), _density(rng, config))
    kind = _kind(rng, "ALQ")
    m = matrix_of(d, kind)
    checks.append(
        Check(_single(d, kind=kind, identity="coronal transpose invariance"),
              lambda: spectral.coronal(m), lambda: spectral.coronal(m.T))
    )
    return checks


_COROLLARY_OPS = tuple(f"arc_corona_charpoly_closed:{c.name}" for c in COROLLARIES)

SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite(
            "coronal-formulas",
            (
                "coronal_constant_rowsum",
                "coronal_equitable",
                "coronal_two_blocks",
                "coronal_join_outregular",
                "coronal_semiregular_bipartite",
                "coronal_fullside_bipartite",
                "coronal_path",
            ),
            _trial_coronal_formulas,
        ),
        Suite("coronal-affine", ("coronal_affine", "charpoly_affine"), _trial_affine),
        Suite(
            "complement",
            ("complement_coronal", "complement_charpoly", "complement_charpoly_outregular"),
            _trial_complement,
        ),
        Suite("vertex-corona-A", ("vertex_corona", "vertex_corona_charpoly"), _vertex_trial("A")),
        Suite("vertex-corona-L", ("vertex_corona", "vertex_corona_charpoly"), _vertex_trial("L")),
        Suite("vertex-corona-Q", ("vertex_corona", "vertex_corona_charpoly"), _vertex_trial("Q")),
        Suite("arc-corona-A", ("arc_corona", "arc_corona_charpoly"), _arc_trial("A")),
        Suite("arc-corona-L", ("arc_corona", "arc_corona_charpoly"), _arc_trial("L")),
        Suite("arc-corona-Q", ("arc_corona", "arc_corona_charpoly"), _arc_trial("Q")),
        Suite("arc-corollaries", ("arc_corona_charpoly_closed",) + _COROLLARY_OPS, _trial_corollaries),
        Suite(
            "tournament-backward-arc",
            ("arc_corona_charpoly_closed", "arc_corona_charpoly_closed:backward-tournament-A"),
            _trial_tournament,
        ),
        Suite("spectrum", ("vertex_corona_spectrum_outregular",), _trial_spectrum),
        Suite("connectivity", ("strong_connectivity_predictions",), _trial_connectivity),
        Suite("incidence", ("incidence_of", "line_digraph"), _trial_incidence),
        Suite("charpoly-oracle", ("charpoly",), _trial_charpoly),
        Suite("coronal-oracle", ("coronal",), _trial_coronal_oracle),
        Suite("kron-schur", ("kron_schur_charpoly",), _trial_kron_schur),
        Suite(
            "algebra-identities",
            ("rank_one_det", "rank_one_inverse", "schur_block_det", "coronal"),
            _trial_algebra,
        ),
    )
}


# -- driver ------------------------------------------------------------


def _suite_key(name: str) -> int:
    return zlib.crc32(name.encode("utf-8"))


def evaluate(suite: str, trial: int, check: Check) -> VerificationReport:
    start = time.perf_counter()
    try:
        expected = check.expected()
    except Exception as exc:  # the oracle itself failed; report, never raise
        return VerificationReport(suite, trial, check.instance, None, None, "skipped",
                                  f"oracle failed: {type(exc).__name__}: {exc}", time.perf_counter() - start)
    detail = ""
    try:
        actual = check.actual()
        verdict = "match" if actual == expected else "mismatch"
    except HypothesisError as exc:
        actual, verdict, detail = None, "hypothesis-violated", str(exc)
    except Exception as exc:
        actual, verdict, detail = None, "mismatch", f"{type(exc).__name__}: {exc}"
    return VerificationReport(
        suite, trial, check.instance, to_jsonable(expected), to_jsonable(actual), verdict, detail,
        time.perf_counter() - start,
    )


def run_trial(suite_name: str, seed: int, trial: int, config: SweepConfig) -> list[VerificationReport]:
    suite = SUITES[suite_name]
    rng = rng_for(seed, _suite_key(suite_name), trial)
    try:
        checks = suite.trial(rng, config, trial)
    except Exception as exc:
        return [VerificationReport(suite_name, trial, {}, None, None, "mismatch",
                                   f"instance generation failed: {type(exc).__name__}: {exc}")]
    return [evaluate(suite_name, trial, c) for c in checks]


def _worker(args) -> list[VerificationReport]:
    return run_trial(*args)


def thread_cap() -> int:
    raw = os.environ.get("CORONA_SPECTRA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(config: SweepConfig, workers: Optional[int] = None) -> list[VerificationReport]:
    """Run the configured suites; reports come back in (suite, trial) order."""
    tasks = [(name, config.seed, t, config) for name in config.suite_names() for t in range(config.trials)]
    workers = thread_cap() if workers is None else workers
    if workers <= 1 or len(tasks) < 2:
        results = [_worker(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_worker, tasks, chunksize=4))
    return [r for batch in results for r in batch]


def all_match(reports: Sequence[VerificationReport]) -> bool:
    return all(r.verdict == "match" for r in reports)


def summarize(reports: Sequence[VerificationReport]) -> dict[str, dict[str, int]]:
    out: dict[str, dict[str, int]] = {}
    for r in reports:
        counts = out.setdefault(r.suite, {v: 0 for v in VERDICTS})
        counts[r.verdict] += 1
    return out
