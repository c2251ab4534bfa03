"""Complete classification of the bivariate solutions of the J1 identity.

Every solution over an integral domain has degree at most 1 in each
variable, so it is P = A*x*y + B*x + C*y + D, and P satisfies J1 exactly
when the coefficient system

    3*A^2 = 0,  3*D*(B+1) = 0,  A*(2*B+C) = 0,  B^2+B*C+C+A*D = 0

holds.  Outside characteristic 3 this forces A = D = 0, leaving
P = B*x + C*y with B^2+B*C+C = 0.  In characteristic 3 there are two
families: A != 0 forces C = B and A*D = B^2-B (the product family), and
A = 0 leaves the affine family B*x + C*y + D with B^2+B*C+C = 0.  The
overlap (A = 0 with C = B) is reported as the affine family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Union

from .errors import (
    AlgebraError,
    CharMismatch,
    ConditionViolated,
    SpecMismatch,
)
from .jacobi import EquationForm, defect, _require_xy
from .poly import MultiPoly, Monomial
from .rings import RingElement, RingSpec


@dataclass(frozen=True)
class LinearBC:
    """P = B*x + C*y with B^2 + B*C + C = 0 (any characteristic)."""

    B: RingElement
    C: RingElement

    name: ClassVar[str] = "linear_bc"
    shape: ClassVar[str] = "B*x + C*y"
    condition: ClassVar[str] = "B^2 + B*C + C = 0"

    def coefficients(self):
        return {"B": self.B, "C": self.C}


@dataclass(frozen=True)
class Char3Product:
    """P = A*x*y + B*(x+y) + D with A*D = B^2 - B, characteristic 3 only."""

    A: RingElement
    B: RingElement
    D: RingElement

    name: ClassVar[str] = "char3_product"
    shape: ClassVar[str] = "A*x*y + B*(x+y) + D"
    condition: ClassVar[str] = "A*D = B^2 - B"

    def coefficients(self):
        return {"A": self.A, "B": self.B, "D": self.D}


@dataclass(frozen=True)
class Char3Affine:
    """P = B*x + C*y + D with B^2 + B*C + C = 0, characteristic 3 only."""

    B: RingElement
    C: RingElement
    D: RingElement

    name: ClassVar[str] = "char3_affine"
    shape: ClassVar[str] = "B*x + C*y + D"
    condition: ClassVar[str] = "B^2 + B*C + C = 0"

    def coefficients(self):
        return {"B": self.B, "C": self.C, "D": self.D}


FamilyParams = Union[LinearBC, Char3Product, Char3Affine]

_CHAR3_FAMILIES = (Char3Product, Char3Affine)


def make_family(params: FamilyParams, spec: RingSpec) -> MultiPoly:
    """Build the family member over (x, y), validating characteristic and
    the defining coefficient condition."""
    coeffs = {}
    for label, value in params.coefficients().items():
        elem = spec.element(value)
        coeffs[label] = elem
    if isinstance(params, _CHAR3_FAMILIES) and spec.characteristic != 3:
        raise CharMismatch(
            f"{params.name} requires characteristic 3, {spec} has "
            f"characteristic {spec.characteristic}")
    if isinstance(params, Char3Product):
        A, B, D = coeffs["A"], coeffs["B"], coeffs["D"]
        if A * D != B * B - B:
            raise ConditionViolated(f"A*D = B^2 - B fails for {params}")
        terms = {(1, 1): A, (1, 0): B, (0, 1): B, (0, 0): D}
    else:
        B, C = coeffs["B"], coeffs["C"]
        if not (B * B + B * C + C).is_zero:
            raise ConditionViolated(f"B^2 + B*C + C = 0 fails for {params}")
        D = coeffs.get("D", spec.zero())
        terms = {(1, 0): B, (0, 1): C, (0, 0): D}
    return MultiPoly(spec, ("x", "y"), terms)


_RESIDUAL_NAMES = ("3*A^2", "3*D*(B+1)", "A*(2*B+C)", "B^2+B*C+C+A*D")


@dataclass(frozen=True)
class SystemResiduals:
    """The four residuals of the coefficient system, in the order
    3*A^2, 3*D*(B+1), A*(2*B+C), B^2+B*C+C+A*D."""

    residuals: tuple[RingElement, RingElement, RingElement, RingElement]

    @property
    def all_zero(self) -> bool:
        return all(r.is_zero for r in self.residuals)

    def failed(self) -> tuple[str, ...]:
        return tuple(name for name, r in zip(_RESIDUAL_NAMES, self.residuals)
                     if not r.is_zero)


def system_check(A, B, C, D, spec: RingSpec | None = None) -> SystemResiduals:
    """Evaluate the coefficient system at (A, B, C, D)."""
    if spec is None:
        for v in (A, B, C, D):
            if isinstance(v, RingElement):
                spec = v.spec
                break
        else:
            raise TypeError("pass a spec or at least one ring element")
    A, B, C, D = (spec.element(v) for v in (A, B, C, D))
    return SystemResiduals((
        A * A * 3,
        D * (B + 1) * 3,
        A * (B * 2 + C),
        B * B + B * C + C + A * D,
    ))


@dataclass(frozen=True)
class ClassificationResult:
    """Either a family membership or a nonzero J1 defect term."""

    family: FamilyParams | None
    witness: tuple[Monomial, RingElement] | None

    @property
    def is_solution(self) -> bool:
        return self.family is not None


def classify(p: MultiPoly, spec: RingSpec | None = None) -> ClassificationResult:
    """Decide whether P satisfies J1 and name its family if it does.

    Non-solutions come back with the graded-lex least nonzero term of the
    J1 defect as the violation witness.
    """
    if spec is not None and spec != p.spec:
        raise SpecMismatch(f"polynomial over {p.spec}, expected {spec}")
    _require_xy(p)
    spec = p.spec
    if p.deg_in("x") <= 1 and p.deg_in("y") <= 1:
        A = p.coeff((1, 1))
        B = p.coeff((1, 0))
        C = p.coeff((0, 1))
        D = p.coeff((0, 0))
        if system_check(A, B, C, D).all_zero:
            if spec.characteristic == 3:
                if not A.is_zero:
                    family: FamilyParams = Char3Product(A, B, D)
                else:
                    family = Char3Affine(B, C, D)
            else:
                family = LinearBC(B, C)
            assert make_family(family, spec) == p
            return ClassificationResult(family=family, witness=None)
    lt = defect(p, EquationForm.J1).least_term()
    if lt is None:
        raise AlgebraError(
            "internal: J1 defect vanished for a polynomial the coefficient "
            "system rejects")
    return ClassificationResult(family=None, witness=lt)


@dataclass(frozen=True)
class ConstantSolutionRule:
    """Which constants satisfy J1 over a given ring: 3c = 0, so every
    constant in characteristic 3 and only zero otherwise."""

    characteristic: int
    every_constant: bool

    def describe(self) -> str:
        if self.every_constant:
            return "every constant (characteristic 3)"
        return (f"only the zero constant "
                f"(characteristic {self.characteristic})")


def constant_solutions(spec: RingSpec) -> ConstantSolutionRule:
    return ConstantSolutionRule(
        characteristic=spec.characteristic,
        every_constant=spec.characteristic == 3,
    )
