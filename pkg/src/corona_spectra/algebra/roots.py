"""Numeric roots of exact polynomials via Aberth simultaneous iteration.

This is the only floating-point code in the package. Results are
approximations and are never fed back into exact computations.
"""
from __future__ import annotations

import numpy as np

from .poly import Polynomial, square_free_decomposition


class RootFindingError(RuntimeError):
    pass


def _initial_guesses(c: np.ndarray) -> np.ndarray:
    # points on a circle of Cauchy-bound radius, rotated off the real axis
    n = len(c) - 1
    radius = 1 + np.max(np.abs(c[:-1] / c[-1]))
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    return radius * np.exp(1j * angles)


def numeric_roots(p: Polynomial, tol: float = 1e-12, max_iter: int = 500) -> list[tuple[complex, int]]:
    """Complex roots of ``p`` as (root, multiplicity) pairs.

    Multiplicities come from an exact square-free decomposition, so the
    iteration only ever sees simple roots. Roots of different square-free
    factors closer than ``tol`` are then merged.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial are undefined")
    found: list[complex] = []
    for factor, mult in square_free_decomposition(p):
        for z in simple_roots(factor, tol, max_iter):
            found.extend([z] * mult)
    return cluster_roots(found, tol)


def simple_roots(p: Polynomial, tol: float = 1e-12, max_iter: int = 500) -> list[complex]:
    """All complex roots of ``p`` listed with multiplicity.

    Converges when every root satisfies
    ``|p(z)| <= tol * sum_k |c_k| |z|**k``,
    or when Aberth corrections stall below ``tol`` relative size.
    Raises RootFindingError if neither happens within ``max_iter`` sweeps.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial are undefined")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = p.degree
    if n == 0:
        return []
    c = np.array([float(x) for x in p.monic().coeffs], dtype=complex)
    # factor out the root at zero exactly
    zero_mult = 0
    while zero_mult < n and c[zero_mult] == 0:
        zero_mult += 1
    c = c[zero_mult:]
    m = len(c) - 1
    roots = [0j] * zero_mult
    if m == 0:
        return roots
    desc = c[::-1]
    ddesc = np.polyder(desc)
    absdesc = np.abs(desc)
    z = _initial_guesses(c)
    polish = None
    for _ in range(max_iter):
        pz = np.polyval(desc, z)
        dpz = np.polyval(ddesc, z)
        ratio = np.zeros_like(z)
        nz = pz != 0
        ratio[nz] = pz[nz] / np.where(dpz[nz] == 0, 1e-300, dpz[nz])
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        repel = np.sum(1 / diff, axis=1) - 1  # remove the diagonal 1/1 term
        denom = 1 - ratio * repel
        step = np.where(denom != 0, ratio / np.where(denom == 0, 1, denom), ratio)
        z = z - step
        resid = np.abs(np.polyval(desc, z))
        bound = tol * np.polyval(absdesc, np.abs(z))  # componentwise backward error
        if np.all(np.abs(step) <= tol * (1 + np.abs(z))) or polish == 0:
            return roots + [complex(x) for x in z]
        if polish is not None:
            polish -= 1
        elif np.all(resid <= bound):
            polish = 2  # a couple of extra sweeps cost little and sharpen the roots
    raise RootFindingError(f"Aberth iteration did not converge in {max_iter} sweeps for degree {n}")


def cluster_roots(roots: list[complex], tol: float) -> list[tuple[complex, int]]:
    """Group roots closer than ``tol`` and report (centroid, multiplicity)."""
    remaining = sorted(roots, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    clusters: list[list[complex]] = []
    for z in remaining:
        for cl in clusters:
            if abs(np.mean(cl) - z) <= tol:
                cl.append(z)
                break
        else:
            clusters.append([z])
    return [(complex(np.mean(cl)), len(cl)) for cl in clusters]
