"""Pressure-balance scenarios for the region outside the plates.

With the outside region taken unbounded, the inside-minus-outside pressure
difference at gap ``L_i`` is ``-hbar c pi^2 / (240 L_i^4)``.  Two readings
of that relation are implemented:

* Situation one: the inside pressure is a free nonnegative parameter, so
  the outside pressure ``P_o = P_i + hbar c pi^2 / (240 L_i^4)`` grows
  without bound as the gap shrinks.
* Situation two: the inside pressure itself equals the (negative)
  attractive pressure, and the outside pressure cancels to exactly zero.

Divergence is always reported as a classification plus a monotone sweep,
never as an evaluated infinity; the unbounded outside distance is a
distinguished sentinel, not ``float("inf")``, and serializes as the string
"infinity".

The crossover gap compares the magnitude of the volumetric energy density,
defined here as |energy per area| / gap (the only volume available in this
geometry is plate area times gap), against a reference vacuum energy
density such as the cosmological upper estimate 5.26e-10 J/m^3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence, Union

from .core import PlateGap, force_per_area
from .errors import DomainError
from .units import PhysicalConstants, codata_constants

__all__ = [
    "Unbounded",
    "UNBOUNDED",
    "ScenarioClassification",
    "ScenarioInput",
    "ScenarioResult",
    "LimitSweepRow",
    "pressure_difference",
    "situation_one",
    "situation_two",
    "evaluate_scenario",
    "limit_sweep",
    "cosmological_crossover",
    "crossover_by_bisection",
]


class Unbounded:
    """Sentinel for an outside region with no finite extent."""

    _instance: "Unbounded | None" = None

    def __new__(cls) -> "Unbounded":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unbounded"


UNBOUNDED = Unbounded()


class ScenarioClassification(str, Enum):
    DIVERGING_OUTSIDE = "diverging_outside"
    BALANCED_ZERO_OUTSIDE = "balanced_zero_outside"


@dataclass(frozen=True)
class ScenarioInput:
    """Geometry and inside-pressure choice for one scenario.

    ``inside_pressure`` is a fixed nonnegative value for situation one, or
    ``None`` for the balanced case (situation two) where the inside
    pressure is determined by the plate attraction itself.
    """

    L_i: float
    L_o: Union[float, Unbounded] = UNBOUNDED
    inside_pressure: float | None = None

    def __post_init__(self) -> None:
        if not self.L_i > 0.0:
            raise DomainError(f"inside distance must be positive, got {self.L_i!r}")
        if not isinstance(self.L_o, Unbounded):
            if not self.L_o > self.L_i:
                raise DomainError(
                    "a finite outside distance must exceed the gap")
        if self.inside_pressure is not None and self.inside_pressure < 0.0:
            raise DomainError(
                f"fixed inside pressure must be nonnegative, got "
                f"{self.inside_pressure!r}")

    @property
    def balanced(self) -> bool:
        return self.inside_pressure is None


@dataclass(frozen=True)
class ScenarioResult:
    P_i: float
    P_o: float
    difference: float
    classification: ScenarioClassification
    note: str

    def __post_init__(self) -> None:
        if (self.classification is ScenarioClassification.BALANCED_ZERO_OUTSIDE
                and (self.P_o != 0.0 or not self.P_i < 0.0)):
            raise DomainError(
                "balanced scenarios require P_o = 0 exactly and P_i < 0")


def _gap(L_i: float, constants: PhysicalConstants | None) -> PlateGap:
    return PlateGap(L_i, constants if constants is not None else codata_constants())


def pressure_difference(
        L_i: float, constants: PhysicalConstants | None = None) -> float:
    """Inside-minus-outside pressure, ``-hbar c pi^2 / (240 L_i^4)``."""
    return force_per_area(_gap(L_i, constants))


def situation_one(
        L_i: float,
        P_i: float = 0.0,
        constants: PhysicalConstants | None = None,
) -> ScenarioResult:
    """Nonnegative inside pressure; the outside pressure diverges as L_i -> 0.

    ``difference`` is evaluated from the closed form rather than as
    ``P_i - P_o``, so it stays exact even when ``P_i`` dwarfs the
    attraction magnitude.
    """
    if P_i < 0.0:
        raise DomainError(
            f"inside pressure must be nonnegative in situation one, got {P_i!r}")
    difference = pressure_difference(L_i, constants)
    magnitude = -difference
    return ScenarioResult(
        P_i=P_i,
        P_o=P_i + magnitude,
        difference=difference,
        classification=ScenarioClassification.DIVERGING_OUTSIDE,
        note=("outside pressure P_o = P_i + hbar*c*pi^2/(240*L_i^4) grows "
              "without bound as L_i -> 0 for any fixed P_i >= 0"),
    )


def situation_two(
        L_i: float, constants: PhysicalConstants | None = None) -> ScenarioResult:
    """Inside pressure equals the attraction; the outside contribution cancels.

    The cancellation is algebraic, so ``P_o`` is returned as exact zero
    rather than as a floating-point subtraction.
    """
    difference = pressure_difference(L_i, constants)
    return ScenarioResult(
        P_i=difference,
        P_o=0.0,
        difference=difference,
        classification=ScenarioClassification.BALANCED_ZERO_OUTSIDE,
        note=("inside pressure -hbar*c*pi^2/(240*L_i^4) is negative "
              "(interpretable as negative energy density); the outside "
              "pressure cancels exactly to zero"),
    )


def evaluate_scenario(
        scenario: ScenarioInput,
        constants: PhysicalConstants | None = None,
) -> ScenarioResult:
    """Dispatch a validated scenario to the matching situation."""
    if scenario.balanced:
        return situation_two(scenario.L_i, constants)
    return situation_one(scenario.L_i, scenario.inside_pressure, constants)


class LimitSweepRow(NamedTuple):
    L_i: float
    situation_one_P_o: float
    situation_two_P_i: float


def limit_sweep(
        L_grid: Sequence[float],
        P_i_fixed: float = 0.0,
        constants: PhysicalConstants | None = None,
) -> tuple[LimitSweepRow, ...]:
    """Both scenarios over a strictly decreasing gap grid.

    As the gap shrinks, the situation-one outside pressure strictly
    increases (its divergence mode) and the situation-two inside pressure
    strictly decreases; adjacent rows obey the fourth-power ratio law.
    """
    grid = [float(L) for L in L_grid]
    if not grid:
        raise DomainError("limit sweep requires at least one gap")
    if any(L <= 0.0 for L in grid):
        raise DomainError("all gaps must be positive")
    if any(b >= a for a, b in zip(grid, grid[1:])):
        raise DomainError("gap grid must be strictly decreasing")
    rows = []
    for L in grid:
        rows.append(LimitSweepRow(
            L_i=L,
            situation_one_P_o=situation_one(L, P_i_fixed, constants).P_o,
            situation_two_P_i=situation_two(L, constants).P_i,
        ))
    return tuple(rows)


def _density_magnitude(a: float, constants: PhysicalConstants) -> float:
    """|energy per area| / gap, the volumetric density used for the crossover."""
    return constants.hbar * constants.c * math.pi ** 2 / (720.0 * a ** 4)


def cosmological_crossover(
        rho_vac: float, constants: PhysicalConstants | None = None) -> float:
    """Gap at which |E/A|/a matches a reference vacuum energy density.

    Solves ``hbar c pi^2 / (720 a^4) = rho_vac`` in closed form,
    ``a = (hbar c pi^2 / (720 rho_vac))^(1/4)``.
    """
    if not rho_vac > 0.0:
        raise DomainError(f"vacuum energy density must be positive, got {rho_vac!r}")
    constants = constants if constants is not None else codata_constants()
    return (constants.hbar * constants.c * math.pi ** 2
            / (720.0 * rho_vac)) ** 0.25


def crossover_by_bisection(
        rho_vac: float,
        constants: PhysicalConstants | None = None,
        rel_tol: float = 1e-12,
) -> float:
    """Independent bracketing root search for the crossover gap.

    The density magnitude is strictly decreasing in the gap, so an
    expanding bracket followed by plain bisection converges; used to
    cross-check the closed form.
    """
    if not rho_vac > 0.0:
        raise DomainError(f"vacuum energy density must be positive, got {rho_vac!r}")
    constants = constants if constants is not None else codata_constants()

    lo, hi = 1e-9, 1.0
    while _density_magnitude(lo, constants) < rho_vac:
        lo /= 16.0
    while _density_magnitude(hi, constants) > rho_vac:
        hi *= 16.0
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rel_tol * mid:
            break
        if _density_magnitude(mid, constants) > rho_vac:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
