"""Defect polynomials for the four composition identities.

For a bivariate polynomial P over (x, y) the defect of each form is a
polynomial over (x, y, z):

  J1 = P(P(x,y), z) + P(P(y,z), x) + P(P(z,x), y)
  J2 = P(x, P(y,z)) + P(y, P(z,x)) + P(z, P(x,y))
  J5 = P(P(x,y), z) + P(y, P(x,z)) - P(x, P(y,z))
  J6 = P(x, P(y,z)) + P(P(x,z), y) - P(P(x,y), z)

P satisfies a form when its defect is the zero polynomial, as a formal
identity on coefficients (never a pointwise check; finite fields conflate
distinct polynomials as functions).
"""

from __future__ import annotations

import enum

from .errors import WrongArity
from .poly import MultiPoly, _mul_raw
from .rings import RingSpec


class EquationForm(enum.Enum):
    J1 = "j1"
    J2 = "j2"
    J5 = "j5"
    J6 = "j6"

    @classmethod
    def from_tag(cls, tag: str) -> "EquationForm":
        return cls(tag.lower())


# One entry per composition: (sign, inner argument positions (a, b) among
# (x, y, z) = (0, 1, 2), position of the lone variable argument, and the
# slot of P that receives the inner composition: 0 = P(inner, var),
# 1 = P(var, inner)).
_COMPOSITIONS = {
    EquationForm.J1: ((1, (0, 1), 2, 0), (1, (1, 2), 0, 0), (1, (2, 0), 1, 0)),
    EquationForm.J2: ((1, (1, 2), 0, 1), (1, (2, 0), 1, 1), (1, (0, 1), 2, 1)),
    EquationForm.J5: ((1, (0, 1), 2, 0), (1, (0, 2), 1, 1), (-1, (1, 2), 0, 1)),
    EquationForm.J6: ((1, (1, 2), 0, 1), (1, (0, 2), 1, 0), (-1, (0, 1), 2, 0)),
}

_XYZ = ("x", "y", "z")


def _require_xy(p: MultiPoly) -> None:
    if p.vars != ("x", "y"):
        raise WrongArity(
            f"expected a bivariate polynomial over ('x', 'y'), got {p.vars}")


def defect(p: MultiPoly, form: EquationForm) -> MultiPoly:
    """The form's defect polynomial of P, over (x, y, z).

    Every composition in every form plugs P into one argument slot and a
    bare variable into the other, so the powers of P are computed once and
    reused across compositions by renaming them into the right variable
    positions (renaming commutes with multiplication).
    """
    _require_xy(p)
    spec = p.spec
    radd, rmul, rneg, rzero = spec._radd, spec._rmul, spec._rneg, spec._rzero
    terms = p._terms
    dmax = 0
    for i, j in terms:
        if i > dmax:
            dmax = i
        if j > dmax:
            dmax = j
    pows = [{(0, 0): spec._rone}]
    for _ in range(dmax):
        pows.append(_mul_raw(spec, pows[-1], terms))

    acc: dict = {}
    for sign, (a, b), var_idx, slot in _COMPOSITIONS[form]:
        placed = []
        for q in pows:
            d = {}
            for (i, j), v in q.items():
                m = [0, 0, 0]
                m[a] = i
                m[b] = j
                d[tuple(m)] = v
            placed.append(d)
        for (i, j), c in terms.items():
            e_inner, e_var = (i, j) if slot == 0 else (j, i)
            cc = c if sign > 0 else rneg(c)
            for m3, v in placed[e_inner].items():
                if e_var:
                    m = list(m3)
                    m[var_idx] += e_var
                    key = tuple(m)
                else:
                    key = m3
                cv = rmul(cc, v)
                prev = acc.get(key)
                acc[key] = cv if prev is None else radd(prev, cv)
    acc = {m: v for m, v in acc.items() if v != rzero}
    return MultiPoly._from_raw(spec, _XYZ, acc)


def satisfies(p: MultiPoly, form: EquationForm) -> bool:
    """Whether the defect of P under the form is the zero polynomial."""
    return not defect(p, form)


def swap(p: MultiPoly) -> MultiPoly:
    """Q(x, y) = P(y, x): transpose every exponent pair."""
    _require_xy(p)
    return MultiPoly._from_raw(
        p.spec, p.vars, {(j, i): v for (i, j), v in p._terms.items()})


def constant_satisfies(spec: RingSpec, value) -> bool:
    """Whether the constant polynomial c satisfies J1, i.e. 3c = 0."""
    c = spec.element(value)
    return (c + c + c).is_zero
