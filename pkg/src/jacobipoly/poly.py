"""Sparse multivariate polynomials over the rings in :mod:`.rings`.

Representation
--------------
A polynomial carries its RingSpec, an ordered tuple of distinct variable
names, and a dict mapping exponent tuples to nonzero raw coefficient
values.  The dict is always canonical: no zero values, exponents
nonnegative, every key the same length as the variable list.  Equality is
structural, so two polynomials are equal exactly when they agree as formal
sums; nothing is ever compared pointwise.

Ordering
--------
Terms are ranked graded lexicographically: first by total degree, ties by
the exponent tuple in variable-list order.  Printing walks terms in
descending order; `least_term` picks the minimal nonzero term, which is
what violation witnesses use.  deg of the zero polynomial is -1.

Text grammar
------------
``poly := ['+'|'-'] term (('+'|'-') term)*`` where a term is a product of
factors joined by optional ``*``; a factor is an integer literal, a
variable with optional ``^uint``, or (over an extension ring only) a
parenthesized univariate expression in the extension variable, e.g.
``(1+2*t^2)*x*y``.  Whitespace is insignificant.  `parse` and `str` round
trip: parse(str(p)) == p, and str picks one canonical spelling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CoefficientNotInRing,
    ParseError,
    SpecMismatch,
    UnknownVariable,
    VarListMismatch,
)
from .rings import EXTENSION, INTEGERS, RingElement, RingSpec


def _grade(exps: tuple[int, ...]):
    return (sum(exps), exps)


@dataclass(frozen=True)
class Monomial:
    """Exponent vector of one term, positions matching a variable list."""

    exponents: tuple[int, ...]

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    def text(self, vars: tuple[str, ...]) -> str:
        if len(vars) != len(self.exponents):
            raise VarListMismatch(
                f"monomial arity {len(self.exponents)} vs {len(vars)} variables")
        return _mono_body(self.exponents, vars) or "1"


def _mono_body(exps, vars) -> str:
    parts = []
    for v, e in zip(vars, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _check_vars(spec: RingSpec, vars) -> tuple[str, ...]:
    vars = tuple(vars)
    if not vars:
        raise VarListMismatch("variable list is empty")
    if len(set(vars)) != len(vars):
        raise VarListMismatch(f"repeated variable in {vars}")
    for v in vars:
        if not isinstance(v, str) or not v or not (v[0].isalpha() or v[0] == "_"):
            raise VarListMismatch(f"bad variable name {v!r}")
    if spec.kind == EXTENSION and spec.var_name in vars:
        raise VarListMismatch(
            f"variable {spec.var_name!r} collides with the extension variable")
    return vars


# raw-term-dict arithmetic shared with the identity-defect engine

def _add_raw(spec: RingSpec, a: dict, b: dict) -> dict:
    radd, rzero = spec._radd, spec._rzero
    out = dict(a)
    for m, v in b.items():
        prev = out.get(m)
        if prev is None:
            out[m] = v
        else:
            s = radd(prev, v)
            if s == rzero:
                del out[m]
            else:
                out[m] = s
    return out


def _mul_raw(spec: RingSpec, a: dict, b: dict) -> dict:
    radd, rmul, rzero = spec._radd, spec._rmul, spec._rzero
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for ma, va in a.items():
        for mb, vb in b.items():
            key = tuple(x + y for x, y in zip(ma, mb))
            prod = rmul(va, vb)
            prev = out.get(key)
            out[key] = prod if prev is None else radd(prev, prod)
    return {m: v for m, v in out.items() if v != rzero}


def _neg_raw(spec: RingSpec, a: dict) -> dict:
    rneg = spec._rneg
    return {m: rneg(v) for m, v in a.items()}


class MultiPoly:
    """Immutable sparse polynomial; supports +, -, *, ** and substitution."""

    __slots__ = ("spec", "vars", "_terms", "_hash")

    def __init__(self, spec: RingSpec, vars, terms=None):
        if not isinstance(spec, RingSpec):
            raise TypeError("spec must be a RingSpec")
        self.spec = spec
        self.vars = _check_vars(spec, vars)
        self._hash = None
        clean: dict = {}
        n = len(self.vars)
        for key, value in (terms or {}).items():
            if isinstance(key, Monomial):
                key = key.exponents
            key = tuple(key)
            if len(key) != n:
                raise VarListMismatch(
                    f"exponent tuple {key} has arity {len(key)}, expected {n}")
            if any(e < 0 or not isinstance(e, int) for e in key):
                raise ValueError(f"bad exponents {key}")
            raw = spec.element(value).value
            if raw == spec._rzero:
                continue
            if key in clean:
                raw2 = spec._radd(clean[key], raw)
                if raw2 == spec._rzero:
                    del clean[key]
                else:
                    clean[key] = raw2
            else:
                clean[key] = raw
        self._terms = clean

    @classmethod
    def _from_raw(cls, spec, vars, terms: dict) -> MultiPoly:
        self = object.__new__(cls)
        self.spec = spec
        self.vars = vars
        self._terms = terms
        self._hash = None
        return self

    @classmethod
    def zero(cls, spec: RingSpec, vars) -> MultiPoly:
        return cls(spec, vars)

    @classmethod
    def constant(cls, spec: RingSpec, vars, value) -> MultiPoly:
        vars = _check_vars(spec, vars)
        return cls(spec, vars, {(0,) * len(vars): value})

    @classmethod
    def variable(cls, spec: RingSpec, vars, name: str) -> MultiPoly:
        vars = _check_vars(spec, vars)
        if name not in vars:
            raise UnknownVariable(f"{name!r} not among {vars}")
        exps = tuple(int(v == name) for v in vars)
        return cls(spec, vars, {exps: 1})

    # -- queries ----------------------------------------------------------

    def deg(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def deg_in(self, var: str) -> int:
        """Highest exponent of one variable; -1 for the zero polynomial."""
        if var not in self.vars:
            raise UnknownVariable(f"{var!r} not among {self.vars}")
        i = self.vars.index(var)
        return max((m[i] for m in self._terms), default=-1)

    def coeff(self, monomial) -> RingElement:
        """Coefficient at a monomial (zero when absent)."""
        if isinstance(monomial, Monomial):
            monomial = monomial.exponents
        monomial = tuple(monomial)
        if len(monomial) != len(self.vars):
            raise VarListMismatch(
                f"monomial arity {len(monomial)} vs {len(self.vars)} variables")
        raw = self._terms.get(monomial)
        return self.spec.zero() if raw is None else RingElement(self.spec, raw)

    def homogeneous_component(self, k: int) -> MultiPoly:
        """Sum of the terms of total degree exactly k."""
        picked = {m: v for m, v in self._terms.items() if sum(m) == k}
        return MultiPoly._from_raw(self.spec, self.vars, picked)

    def terms(self):
        """Yield (Monomial, coefficient) pairs, graded-lex descending."""
        for m in sorted(self._terms, key=_grade, reverse=True):
            yield Monomial(m), RingElement(self.spec, self._terms[m])

    def least_term(self):
        """Graded-lex least nonzero term, or None for the zero polynomial."""
        if not self._terms:
            return None
        m = min(self._terms, key=_grade)
        return Monomial(m), RingElement(self.spec, self._terms[m])

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    def _operand(self, other):
        if isinstance(other, MultiPoly):
            if other.spec != self.spec:
                raise SpecMismatch(
                    f"cannot combine polynomials over {self.spec} and {other.spec}")
            if other.vars != self.vars:
                raise VarListMismatch(
                    f"variable lists differ: {self.vars} vs {other.vars}")
            return other._terms
        if isinstance(other, (int, RingElement)) and not isinstance(other, bool):
            raw = self.spec.element(other).value
            if raw == self.spec._rzero:
                return {}
            return {(0,) * len(self.vars): raw}
        return None

    def __add__(self, other):
        t = self._operand(other)
        if t is None:
            return NotImplemented
        return MultiPoly._from_raw(self.spec, self.vars,
                                   _add_raw(self.spec, self._terms, t))

    __radd__ = __add__

    def __sub__(self, other):
        t = self._operand(other)
        if t is None:
            return NotImplemented
        return MultiPoly._from_raw(
            self.spec, self.vars,
            _add_raw(self.spec, self._terms, _neg_raw(self.spec, t)))

    def __rsub__(self, other):
        t = self._operand(other)
        if t is None:
            return NotImplemented
        return MultiPoly._from_raw(
            self.spec, self.vars,
            _add_raw(self.spec, t, _neg_raw(self.spec, self._terms)))

    def __mul__(self, other):
        t = self._operand(other)
        if t is None:
            return NotImplemented
        return MultiPoly._from_raw(self.spec, self.vars,
                                   _mul_raw(self.spec, self._terms, t))

    __rmul__ = __mul__

    def __neg__(self):
        return MultiPoly._from_raw(self.spec, self.vars,
                                   _neg_raw(self.spec, self._terms))

    def __pow__(self, e: int) -> MultiPoly:
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = {(0,) * len(self.vars): self.spec._rone}
        base = self._terms
        while e:
            if e & 1:
                out = _mul_raw(self.spec, out, base)
            e >>= 1
            if e:
                base = _mul_raw(self.spec, base, base)
        return MultiPoly._from_raw(self.spec, self.vars, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.spec == other.spec and self.vars == other.vars
                and self._terms == other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.spec, self.vars,
                               frozenset(self._terms.items())))
        return self._hash

    # -- substitution -----------------------------------------------------

    def substitute(self, bindings: dict[str, MultiPoly]) -> MultiPoly:
        """Simultaneously replace bound variables by polynomials.

        All replacement polynomials must share this polynomial's spec and a
        common variable list (the target list); unbound variables must exist
        in the target list and map to themselves.
        """
        if not bindings:
            return self
        for name in bindings:
            if name not in self.vars:
                raise UnknownVariable(f"{name!r} not among {self.vars}")
        repls = list(bindings.values())
        for q in repls:
            if not isinstance(q, MultiPoly):
                raise TypeError("replacements must be polynomials")
            if q.spec != self.spec:
                raise SpecMismatch(
                    f"replacement over {q.spec}, expected {self.spec}")
        target = repls[0].vars
        for q in repls:
            if q.vars != target:
                raise VarListMismatch(
                    f"replacement variable lists differ: {target} vs {q.vars}")
        spec = self.spec
        width = len(target)
        unit = {(0,) * width: spec._rone}
        repl_terms = []
        for v in self.vars:
            if v in bindings:
                repl_terms.append(bindings[v]._terms)
            else:
                if v not in target:
                    raise UnknownVariable(
                        f"unbound variable {v!r} missing from {target}")
                exps = tuple(int(w == v) for w in target)
                repl_terms.append({exps: spec._rone})
        powers: list[list[dict]] = [[unit, t] for t in repl_terms]

        def power(vi: int, e: int) -> dict:
            cache = powers[vi]
            while len(cache) <= e:
                cache.append(_mul_raw(spec, cache[-1], repl_terms[vi]))
            return cache[e]

        radd, rmul, rzero = spec._radd, spec._rmul, spec._rzero
        acc: dict = {}
        for mono, c in self._terms.items():
            prod = None
            for vi, e in enumerate(mono):
                if e:
                    pw = power(vi, e)
                    prod = pw if prod is None else _mul_raw(spec, prod, pw)
            if prod is None:
                prod = unit
            for m, v in prod.items():
                cv = rmul(c, v)
                prev = acc.get(m)
                acc[m] = cv if prev is None else radd(prev, cv)
        acc = {m: v for m, v in acc.items() if v != rzero}
        return MultiPoly._from_raw(spec, target, acc)

    def with_vars(self, vars) -> MultiPoly:
        """Re-index over a wider (or reordered) variable list containing
        every variable of this polynomial."""
        vars = _check_vars(self.spec, vars)
        try:
            pos = [vars.index(v) for v in self.vars]
        except ValueError:
            missing = [v for v in self.vars if v not in vars]
            raise UnknownVariable(f"{missing[0]!r} not among {vars}") from None
        out = {}
        width = len(vars)
        for mono, c in self._terms.items():
            m = [0] * width
            for i, e in enumerate(mono):
                m[pos[i]] = e
            out[tuple(m)] = c
        return MultiPoly._from_raw(self.spec, vars, out)

    def evaluate(self, values: dict) -> RingElement:
        """Plug in a ring element for every variable."""
        for name in values:
            if name not in self.vars:
                raise UnknownVariable(f"{name!r} not among {self.vars}")
        point = []
        for v in self.vars:
            if v not in values:
                raise UnknownVariable(f"no value for {v!r}")
            point.append(self.spec.element(values[v]).value)
        spec = self.spec
        radd, rmul = spec._radd, spec._rmul
        acc = spec._rzero
        for mono, c in self._terms.items():
            t = c
            for vi, e in enumerate(mono):
                if e:
                    t = rmul(t, spec._rpow(point[vi], e))
            acc = radd(acc, t)
        return RingElement(spec, acc)

    # -- text -------------------------------------------------------------

    @classmethod
    def parse(cls, text: str, spec: RingSpec, vars=("x", "y")) -> MultiPoly:
        """Parse the canonical text grammar over the given variables."""
        vars = _check_vars(spec, vars)
        terms = _Parser(text, spec, vars).run()
        return cls._from_raw(spec, vars, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        spec = self.spec
        pieces = []
        for m in sorted(self._terms, key=_grade, reverse=True):
            raw = self._terms[m]
            body = _mono_body(m, self.vars)
            neg = False
            if spec.kind == EXTENSION:
                if len(raw) > 1:
                    coeff = f"({spec._literal(raw)})"
                else:
                    d = raw[0] if raw else 0
                    coeff = "" if (d == 1 and body) else str(d)
            else:
                if spec.kind == INTEGERS and raw < 0:
                    neg = True
                    raw = -raw
                coeff = "" if (raw == 1 and body) else str(raw)
            term = "*".join(p for p in (coeff, body) if p)
            if not pieces:
                pieces.append(("-" if neg else "") + term)
            else:
                pieces.append((" - " if neg else " + ") + term)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<{self} over {self.spec} in {'/'.join(self.vars)}>"


class _Parser:
    """Recursive descent over the term grammar in the module docstring."""

    def __init__(self, text: str, spec: RingSpec, vars: tuple[str, ...]):
        self.spec = spec
        self.vars = vars
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def run(self) -> dict:
        spec = self.spec
        acc: dict = {}
        sign = 1
        kind, _, pos = self.peek()
        if kind in ("+", "-"):
            sign = -1 if kind == "-" else 1
            self.take()
        while True:
            coeff, exps = self.term()
            if sign < 0:
                coeff = spec._rneg(coeff)
            key = tuple(exps)
            prev = acc.get(key)
            total = coeff if prev is None else spec._radd(prev, coeff)
            if total == spec._rzero:
                acc.pop(key, None)
            else:
                acc[key] = total
            kind, _, pos = self.peek()
            if kind == "end":
                return acc
            if kind in ("+", "-"):
                sign = -1 if kind == "-" else 1
                self.take()
                continue
            raise ParseError(f"expected '+' or '-', got {kind!r}", pos)

    def term(self):
        coeff = self.factor(self.spec._rone, exps := [0] * len(self.vars))
        while True:
            kind, _, _ = self.peek()
            if kind == "*":
                self.take()
                coeff = self.factor(coeff, exps)
            elif kind in ("int", "name", "("):
                coeff = self.factor(coeff, exps)
            else:
                return coeff, exps

    def factor(self, coeff, exps):
        spec = self.spec
        kind, text, pos = self.peek()
        if kind == "int":
            self.take()
            raw = self.maybe_power_scalar(spec._coerce_raw(int(text)))
            return spec._rmul(coeff, raw)
        if kind == "name":
            self.take()
            if text not in self.vars:
                if spec.kind == EXTENSION and text == spec.var_name:
                    raise UnknownVariable(
                        f"extension variable {text!r} must appear inside "
                        "parentheses")
                raise UnknownVariable(f"{text!r} not among {self.vars}")
            exps[self.vars.index(text)] += self.maybe_exponent()
            return coeff
        if kind == "(":
            if spec.kind != EXTENSION:
                raise CoefficientNotInRing(
                    f"parenthesized coefficients are not valid over {spec}")
            self.take()
            raw = self.cexpr()
            k2, _, pos2 = self.take()
            if k2 != ")":
                raise ParseError("expected ')'", pos2)
            raw = self.maybe_power_scalar(raw)
            return spec._rmul(coeff, raw)
        raise ParseError("expected a factor", pos)

    def maybe_exponent(self) -> int:
        kind, _, _ = self.peek()
        if kind != "^":
            return 1
        self.take()
        k2, text, pos = self.take()
        if k2 != "int":
            raise ParseError("expected an integer exponent", pos)
        return int(text)

    def maybe_power_scalar(self, raw):
        kind, _, _ = self.peek()
        if kind != "^":
            return raw
        self.take()
        k2, text, pos = self.take()
        if k2 != "int":
            raise ParseError("expected an integer exponent", pos)
        return self.spec._rpow(raw, int(text))

    # univariate expression in the extension variable, between parentheses

    def cexpr(self):
        spec = self.spec
        acc = spec._rzero
        sign = 1
        kind, _, _ = self.peek()
        if kind in ("+", "-"):
            sign = -1 if kind == "-" else 1
            self.take()
        while True:
            v = self.cterm()
            if sign < 0:
                v = spec._rneg(v)
            acc = spec._radd(acc, v)
            kind, _, pos = self.peek()
            if kind in ("+", "-"):
                sign = -1 if kind == "-" else 1
                self.take()
                continue
            if kind == ")":
                return acc
            raise ParseError("expected '+', '-' or ')'", pos)

    def cterm(self):
        out = self.cfactor()
        while True:
            kind, _, _ = self.peek()
            if kind == "*":
                self.take()
                out = self.spec._rmul(out, self.cfactor())
            elif kind in ("int", "name", "("):
                out = self.spec._rmul(out, self.cfactor())
            else:
                return out

    def cfactor(self):
        spec = self.spec
        kind, text, pos = self.peek()
        if kind == "int":
            self.take()
            return self.maybe_power_scalar(spec._coerce_raw(int(text)))
        if kind == "name":
            self.take()
            if text != spec.var_name:
                raise UnknownVariable(
                    f"{text!r} is not the extension variable {spec.var_name!r}")
            return spec._rpow((0, 1), self.maybe_exponent())
        if kind == "(":
            self.take()
            raw = self.cexpr()
            k2, _, pos2 = self.take()
            if k2 != ")":
                raise ParseError("expected ')'", pos2)
            return self.maybe_power_scalar(raw)
        raise ParseError("expected a coefficient factor", pos)


def _tokenize(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
        elif ch in "+-*^()":
            toks.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks
