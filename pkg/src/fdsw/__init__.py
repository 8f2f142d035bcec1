"""Modulational instability of full-dispersion shallow-water wave trains."""

from .analysis import (
    CriticalResult,
    InconclusiveBondError,
    LimitEstimate,
    StabilityDiagram,
    Verdict,
    classify_intervals,
    critical_wavenumber,
    find_factor_roots,
    large_T_limit,
    stability_diagram,
)
from .bloch import (
    BlochMatrices,
    DegenerateQuarticError,
    EigenBasis,
    Stability,
    build_matrices,
    classify_band,
    classify_from_quartic,
    eigenbasis,
)
from .dispersion import DispersionSample, eval_dispersion, eval_dispersion_squared
from .factors import (
    Branch,
    IndexFlag,
    IndexReport,
    Model,
    factor_i1,
    factor_i2,
    factor_i3,
    factor_i4,
    index,
)
from .hill import HillProblem, assemble, growth_rate, growth_rate_band
from .stokes import (
    ResonanceError,
    WaveTrain,
    check_resonance_admissible,
    harmonic_coeffs,
    residual_periodic,
    wave_train,
)

__all__ = [
    "BlochMatrices",
    "Branch",
    "CriticalResult",
    "DegenerateQuarticError",
    "DispersionSample",
    "EigenBasis",
    "HillProblem",
    "InconclusiveBondError",
    "IndexFlag",
    "IndexReport",
    "LimitEstimate",
    "Model",
    "ResonanceError",
    "Stability",
    "StabilityDiagram",
    "Verdict",
    "WaveTrain",
    "assemble",
    "build_matrices",
    "check_resonance_admissible",
    "classify_band",
    "classify_from_quartic",
    "classify_intervals",
    "critical_wavenumber",
    "eigenbasis",
    "eval_dispersion",
    "eval_dispersion_squared",
    "factor_i1",
    "factor_i2",
    "factor_i3",
    "factor_i4",
    "find_factor_roots",
    "growth_rate",
    "growth_rate_band",
    "harmonic_coeffs",
    "index",
    "large_T_limit",
    "residual_periodic",
    "stability_diagram",
    "wave_train",
]
