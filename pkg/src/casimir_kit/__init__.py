"""Vacuum energy between parallel plates, derived state by state.

The package computes the energy per plate area as a convergent sum of
per-state contributions (each the uncertainty-limited energy flux divided
by the state's area), checks it against the closed form
``hbar c pi^2 / (720 a^3)`` and a numerically regularized divergent mode
sum, and analyzes the inside/outside pressure-balance scenarios.
"""

from .core import (
    DEFAULT_SERIES_TERMS,
    EnergyDensityResult,
    ModeState,
    PlateGap,
    SignConvention,
    convergence_report,
    divergent_area_terms,
    divergent_energy_terms,
    energy_per_area_closed,
    energy_per_area_series,
    force_per_area,
    mode_state,
    per_state_energy_flux,
    traversal_time,
)
from .errors import (
    CasimirKitError,
    DimensionError,
    DomainError,
    ImplausibleGapWarning,
    ParseError,
    UnsupportedArgumentError,
)
from .paradox import (
    UNBOUNDED,
    LimitSweepRow,
    ScenarioClassification,
    ScenarioInput,
    ScenarioResult,
    Unbounded,
    cosmological_crossover,
    crossover_by_bisection,
    evaluate_scenario,
    limit_sweep,
    pressure_difference,
    situation_one,
    situation_two,
)
from .series import (
    CutoffTrace,
    PartialSumTrace,
    SeriesEstimate,
    SummationMethod,
    TailBracket,
    cutoff_regularized_value,
    cutoff_sum_direct,
    direct_sum_estimate,
    euler_maclaurin_sum,
    exponential_cutoff_finite_part,
    partial_sum_inverse_powers,
    richardson_extrapolate,
    tail_bound,
    zeta_even_closed_form,
)
from .units import (
    ConstantsSource,
    Dimension,
    PhysicalConstants,
    Quantity,
    codata_constants,
    custom_constants,
    natural_units,
    parse_length,
)

__version__ = "0.1.0"
