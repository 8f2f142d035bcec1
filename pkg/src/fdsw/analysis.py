"""Root finding on factor curves, critical wave numbers, stability diagrams.

The stability boundary of a model decomposes into the zero sets of the four
index factors (mechanisms R1..R4).  This module locates those roots in
kappa at fixed Bond number, extracts the critical wave number kappa_c
(the R4 crossing), runs the large-surface-tension protocol on the scaled
threshold kappa_c*sqrt(T), splits a kappa-range into classified stability
intervals, and assembles (kappa, kappa*sqrt(T)) stability diagrams.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .config import BOND_THIRD_TOL
from .factors import Branch, Model, factor_i1, factor_i2, factor_i3, factor_i4, index

# Scan density and bisection tolerance for factor root finding.  The factors
# are smooth and cheap; a dense scan guards against close root pairs near the
# Bond line T = 1/3.
SCAN_POINTS = 2000
ROOT_TOL = 1e-10

MECHANISM_FACTORS = ("i1", "i2", "i3", "i4")
MECHANISM_NAMES = {"i1": "R1", "i2": "R2", "i3": "R3", "i4": "R4"}


class InconclusiveBondError(ValueError):
    """The classification is inconclusive on the Bond line T = 1/3."""


def _factor_function(model: Model, which: str, bond: float) -> Callable[[float], float]:
    model = Model(model)
    branch = Branch.MINUS if model.unidirectional else Branch.FULL
    if which == "i1":
        return lambda k: factor_i1(k, bond)
    if which == "i2":
        return lambda k: factor_i2(k, bond, branch)
    if which == "i3":
        return lambda k: factor_i3(k, bond, branch)
    if which == "i4":
        return lambda k: factor_i4(model, k, bond)
    raise ValueError(f"unknown factor {which!r}")


def _bisect(
    f: Callable[[float], float], lo: float, hi: float, f_lo: float
) -> tuple[float, tuple[float, float], int]:
    """Bisect a bracketing interval down to ROOT_TOL; returns (root, bracket, iterations)."""
    iterations = 0
    while hi - lo > ROOT_TOL:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        iterations += 1
        if f_mid == 0.0:
            half = 0.5 * ROOT_TOL
            return mid, (mid - half, mid + half), iterations
        if f_lo * f_mid < 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi), (lo, hi), iterations


def find_factor_roots(
    model: Model,
    which: str,
    bond: float,
    k_lo: float,
    k_hi: float,
    scan_points: int = SCAN_POINTS,
) -> list[float]:
    """All sign changes of the chosen factor on [k_lo, k_hi], sorted.

    Log-spaced scan followed by bisection to absolute tolerance 1e-10 in
    kappa.  No roots is an empty list, not an error.
    """
    if not 0.0 < k_lo < k_hi:
        raise ValueError(f"need 0 < k_lo < k_hi, got ({k_lo!r}, {k_hi!r})")
    f = _factor_function(model, which, bond)
    grid = np.geomspace(k_lo, k_hi, scan_points)
    values = [f(k) for k in grid]
    roots = []
    for i in range(scan_points - 1):
        if values[i] == 0.0:
            roots.append(float(grid[i]))
        elif values[i] * values[i + 1] < 0.0:
            root, _, _ = _bisect(f, float(grid[i]), float(grid[i + 1]), values[i])
            roots.append(root)
    if values[-1] == 0.0:
        roots.append(float(grid[-1]))
    return sorted(roots)


@dataclass(frozen=True)
class CriticalResult:
    """Critical wave number at one Bond number, or a divergence certificate."""

    model: Model
    bond: float
    kappa_c: float | None  # None when divergent
    bracket: tuple[float, float] | None
    iterations: int

    @property
    def divergent(self) -> bool:
        return self.kappa_c is None


def critical_wavenumber(
    model: Model,
    bond: float,
    k_max: float = 50.0,
    allow_bond_third: bool = False,
) -> CriticalResult:
    """Smallest root of i4 (mechanism R4) at fixed Bond number.

    For T = 0 and T > 1/3 this root is unique and is the threshold above
    which small wave trains are modulationally unstable.  If no sign change
    exists up to k_max, the scan is extended once to 4*k_max before a
    divergence certificate (kappa_c = None) is returned.
    """
    if k_max < 20.0:
        raise ValueError(f"k_max must be >= 20, got {k_max!r}")
    if abs(bond - 1.0 / 3.0) < BOND_THIRD_TOL and not allow_bond_third:
        raise InconclusiveBondError(
            f"bond={bond!r} is on the T=1/3 line where the index is inconclusive"
        )
    model = Model(model)
    f = _factor_function(model, "i4", bond)
    for hi in (k_max, 4.0 * k_max):
        grid = np.geomspace(1e-4, hi, SCAN_POINTS)
        prev_k, prev_v = float(grid[0]), f(float(grid[0]))
        for k in grid[1:]:
            k = float(k)
            v = f(k)
            if prev_v * v < 0.0 or v == 0.0:
                root, bracket, iters = _bisect(f, prev_k, k, prev_v)
                return CriticalResult(
                    model=model,
                    bond=bond,
                    kappa_c=root,
                    bracket=bracket,
                    iterations=iters,
                )
            prev_k, prev_v = k, v
    return CriticalResult(model=model, bond=bond, kappa_c=None, bracket=None, iterations=0)


class Verdict(str, Enum):
    CONVERGED = "Converged"
    DIVERGENT = "Divergent"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class LimitEstimate:
    """Large-surface-tension behavior of the scaled threshold kappa_c*sqrt(T)."""

    model: Model
    bonds: tuple[float, ...]
    kappa_values: tuple[float | None, ...]
    scaled_values: tuple[float | None, ...]
    verdict: Verdict
    limit: float | None  # scaled threshold at the largest T when converged


def large_T_limit(
    model: Model,
    bond_sequence: Sequence[float] = (1.0, 10.0, 100.0, 1000.0),
    conv_tol: float = 1e-3,
    div_increment: float = 0.1,
) -> LimitEstimate:
    """Track kappa_c(T)*sqrt(T) over an increasing Bond sequence.

    The scaled threshold is the ordinate of the R4 curve in the
    (kappa, kappa*sqrt(T)) plane, which is the quantity with a finite
    large-T limit for the models that have one.  Verdicts:

    - Divergent: the tail of the sequence (last three values) is strictly
      increasing and the last increment exceeds ``div_increment``, or the
      threshold escaped the search range altogether.
    - Converged: the last two values differ by less than ``conv_tol``.
    """
    bonds = tuple(bond_sequence)
    if len(bonds) < 2 or any(b2 <= b1 for b1, b2 in zip(bonds, bonds[1:])):
        raise ValueError("bond_sequence must be increasing with at least two entries")
    kappas: list[float | None] = []
    scaled: list[float | None] = []
    for T in bonds:
        res = critical_wavenumber(model, T)
        kappas.append(res.kappa_c)
        scaled.append(None if res.kappa_c is None else res.kappa_c * math.sqrt(T))

    verdict = Verdict.UNDETERMINED
    limit = None
    if scaled[-1] is None:
        verdict = Verdict.DIVERGENT
    else:
        tail = [y for y in scaled[-3:] if y is not None]
        increasing = all(b > a for a, b in zip(tail, tail[1:]))
        last_two = [y for y in scaled[-2:] if y is not None]
        last_inc = last_two[1] - last_two[0] if len(last_two) == 2 else math.inf
        if increasing and last_inc > div_increment:
            verdict = Verdict.DIVERGENT
        elif abs(last_inc) < conv_tol:
            verdict = Verdict.CONVERGED
            limit = scaled[-1]
    return LimitEstimate(
        model=Model(model),
        bonds=bonds,
        kappa_values=tuple(kappas),
        scaled_values=tuple(scaled),
        verdict=verdict,
        limit=limit,
    )


def classify_intervals(
    model: Model, bond: float, k_lo: float, k_hi: float
) -> list[tuple[tuple[float, float], str]]:
    """Split [k_lo, k_hi] at all factor roots and label each piece.

    Delimiters are the roots of i1, i2, i3 (the i3 roots are the poles of
    the index) and i4; each resulting interval is labeled by the index
    classification at its geometric midpoint.
    """
    delimiters: list[float] = []
    for which in MECHANISM_FACTORS:
        delimiters.extend(find_factor_roots(model, which, bond, k_lo, k_hi))
    edges = [k_lo] + sorted(delimiters) + [k_hi]
    out = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = math.sqrt(lo * hi)
        out.append(((lo, hi), index(model, mid, bond).classification))
    return out


@dataclass(frozen=True)
class GridPoint:
    kappa: float
    kappa_sqrtT: float
    bond: float
    label: str


@dataclass(frozen=True)
class MechanismCurve:
    mechanism: str  # R1..R4
    points: list[tuple[float, float]]  # (kappa, kappa*sqrt(T)), ordered by T


@dataclass(frozen=True)
class StabilityDiagram:
    model: Model
    grid: list[GridPoint]
    curves: list[MechanismCurve]


def _classify_node(model: Model, kappa: float, y: float) -> GridPoint:
    bond = (y / kappa) ** 2
    label = index(model, kappa, bond).classification
    return GridPoint(kappa=kappa, kappa_sqrtT=y, bond=bond, label=label)


def stability_diagram(
    model: Model,
    k_range: tuple[float, float] = (0.0, 3.0),
    ksqrtT_range: tuple[float, float] = (0.0, 3.0),
    resolution: int = 600,
    curve_samples: int = 200,
    threads: int = 1,
) -> StabilityDiagram:
    """Classified grid plus mechanism curves in the (kappa, kappa*sqrt(T)) plane.

    Grid nodes exclude kappa = 0 (the left edge is open); rows are ordered
    by kappa then kappa*sqrt(T), independent of thread count.  Curves are
    traced by fixed-T root finding in kappa, converted to the scaled plane.
    """
    model = Model(model)
    if resolution < 2 or curve_samples < 2:
        raise ValueError("resolution and curve_samples must be >= 2")
    k_lo, k_hi = k_range
    y_lo, y_hi = ksqrtT_range
    if not (k_hi > k_lo >= 0.0 and y_hi > y_lo >= 0.0):
        raise ValueError(f"bad window {k_range!r} x {ksqrtT_range!r}")
    kappas = [k_lo + (i + 1) * (k_hi - k_lo) / resolution for i in range(resolution)]
    ys = [y_lo + j * (y_hi - y_lo) / (resolution - 1) for j in range(resolution)]

    def classify_row(kappa: float) -> list[GridPoint]:
        return [_classify_node(model, kappa, y) for y in ys]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(classify_row, kappas))
    else:
        rows = [classify_row(k) for k in kappas]
    grid = [point for row in rows for point in row]

    # Fixed T is a ray of slope sqrt(T) through the origin; each mechanism
    # curve is swept by bisecting its factor along rays of increasing slope.
    scan_lo = max(k_lo, 1e-3)
    bonds = [0.0] + list(
        np.geomspace(1e-4, (y_hi / scan_lo) ** 2, curve_samples - 1)
    )
    curves = []
    for which in MECHANISM_FACTORS:
        points: list[tuple[float, float]] = []
        for T in bonds:
            for root in find_factor_roots(model, which, T, scan_lo, k_hi, scan_points=400):
                y = root * math.sqrt(T)
                if y_lo <= y <= y_hi:
                    points.append((root, y))
        curves.append(MechanismCurve(mechanism=MECHANISM_NAMES[which], points=points))
    return StabilityDiagram(model=model, grid=grid, curves=curves)
