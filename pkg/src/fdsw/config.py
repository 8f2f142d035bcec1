"""Shared numerical tolerances.

These constants are used across modules so that, e.g., the second-harmonic
resonance detected by the wave construction coincides with the pole guard of
the instability index.
"""

# Relative guard for vanishing resonance denominators.  A quantity d with
# natural scale s is treated as a pole when |d| < POLE_TOL * (1 + s).
POLE_TOL = 1e-10

# Half-width of the Bond-number band around T = 1/3 on which the index is
# inconclusive (the long-wave expansion of the group speed degenerates there).
BOND_THIRD_TOL = 1e-9

# Default probe parameters for the 4x4 pencil / spectral classifications:
# small enough to sit inside the asymptotic regime, far above round-off.
DEFAULT_XI = 1e-2
DEFAULT_AMPLITUDE = 1e-2

# Relative imaginary-part tolerance used when classifying quartic roots.
CLASSIFY_TOL = 1e-6

# Growth rates below this threshold count as spectrally stable.
GROWTH_THRESHOLD = 1e-8
