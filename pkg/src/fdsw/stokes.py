"""Small-amplitude periodic traveling waves of the bidirectional model.

The 2*pi-periodic traveling-wave system (after one integration in z)

    -c*eta + c2(kappa*|d/dz|) u + u*eta = 0
    -c*u + eta + u**2/2 = 0

admits a one-parameter family of small even solutions.  Through second order
in the amplitude a,

    eta = a*c*cos z + a^2*((c*h0 - 1/4) + (c*h2 - 1/4)*cos 2z)
    u   = a*cos z   + a^2*(h0 + h2*cos 2z)
    c(a) = c + (3/2)*a^2*(h0 + h2/2 - 1/(8c))

with harmonic coefficients

    h0 = (3/4)*c/(c^2 - 1),      h2 = (3/4)*c/(c^2 - c(2k)^2).

h2 blows up at a second-harmonic (Wilton ripple) resonance c(k) = c(2k),
h0 at a mean-flow resonance c(k) = 1; both raise :class:`ResonanceError`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import POLE_TOL
from .dispersion import eval_dispersion, eval_dispersion_squared


class ResonanceError(ValueError):
    """A resonance denominator of the wave expansion vanished.

    ``denominator`` is "mean-flow" for c(k)^2 - 1 (pole of h0) or
    "second-harmonic" for c(k)^2 - c(2k)^2 (pole of h2).
    """

    def __init__(self, denominator: str, kappa: float, bond: float):
        self.denominator = denominator
        super().__init__(
            f"{denominator} resonance at kappa={kappa!r}, bond={bond!r}: "
            "the wave expansion is singular here"
        )


def harmonic_coeffs(kappa: float, bond: float) -> tuple[float, float]:
    """Second-order harmonic coefficients (h0, h2) of the wave expansion."""
    s = eval_dispersion(kappa, bond)
    c2k = eval_dispersion_squared(2.0 * kappa, bond)
    tol = POLE_TOL * (1.0 + s.c2)
    if abs(s.c2 - 1.0) < tol:
        raise ResonanceError("mean-flow", kappa, bond)
    if abs(s.c2 - c2k) < tol:
        raise ResonanceError("second-harmonic", kappa, bond)
    h0 = 0.75 * s.c / (s.c2 - 1.0)
    h2 = 0.75 * s.c / (s.c2 - c2k)
    return h0, h2


@dataclass(frozen=True)
class WaveTrain:
    """Truncated Stokes wave: cosine coefficients (mean, cos z, cos 2z)."""

    kappa: float
    bond: float
    amplitude: float
    eta_coeffs: tuple[float, float, float]
    u_coeffs: tuple[float, float, float]
    speed: float
    h0: float
    h2: float


def wave_train(amplitude: float, kappa: float, bond: float) -> WaveTrain:
    """Construct the wave train at amplitude a (profiles exact through a^2)."""
    s = eval_dispersion(kappa, bond)
    h0, h2 = harmonic_coeffs(kappa, bond)
    a2 = amplitude * amplitude
    eta = (a2 * (s.c * h0 - 0.25), amplitude * s.c, a2 * (s.c * h2 - 0.25))
    u = (a2 * h0, amplitude, a2 * h2)
    speed = s.c + 1.5 * a2 * (h0 + 0.5 * h2 - 1.0 / (8.0 * s.c))
    return WaveTrain(
        kappa=kappa,
        bond=bond,
        amplitude=amplitude,
        eta_coeffs=eta,
        u_coeffs=u,
        speed=speed,
        h0=h0,
        h2=h2,
    )


def check_resonance_admissible(kappa: float, bond: float, n_max: int) -> list[int]:
    """Harmonics n in 2..n_max with c(n*kappa) within the pole guard of c(kappa).

    An empty list certifies the nondegeneracy condition c(k) != c(n*k) up to
    n_max, under which the traveling-wave family exists.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max!r}")
    s = eval_dispersion(kappa, bond)
    tol = POLE_TOL * (1.0 + s.c2)
    hits = []
    for n in range(2, n_max + 1):
        cn = eval_dispersion(n * kappa, bond).c
        if abs(s.c - cn) < tol:
            hits.append(n)
    return hits


def _cos_product(f: np.ndarray, g: np.ndarray, n_out: int) -> np.ndarray:
    """Cosine coefficients 0..n_out of the product of two cosine series."""
    nf, ng = len(f), len(g)
    out = np.zeros(n_out + 1)
    # cos(i z)*cos(j z) = (cos((i+j) z) + cos(|i-j| z)) / 2
    for i in range(nf):
        for j in range(ng):
            half = 0.5 * f[i] * g[j]
            for m in (i + j, abs(i - j)):
                if m <= n_out:
                    out[m] += half
    return out


def residual_periodic(wave: WaveTrain, modes: int) -> float:
    """Largest Fourier-coefficient magnitude of the traveling-wave residual.

    Both equations of the periodic system are evaluated spectrally on the
    truncated profiles (the multiplier acts mode-wise as c2(kappa*n)); the
    truncation makes the result O(a^3).
    """
    if modes < 4:
        raise ValueError(f"modes must be >= 4, got {modes!r}")
    eta = np.zeros(modes + 1)
    u = np.zeros(modes + 1)
    eta[:3] = wave.eta_coeffs
    u[:3] = wave.u_coeffs
    c = wave.speed
    sym = np.array(
        [eval_dispersion_squared(wave.kappa * n, wave.bond) for n in range(modes + 1)]
    )
    r1 = -c * eta + sym * u + _cos_product(u, eta, modes)
    r2 = -c * u + eta + 0.5 * _cos_product(u, u, modes)
    return float(max(np.max(np.abs(r1)), np.max(np.abs(r2))))
