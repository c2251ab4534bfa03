"""Exact coefficient domains: the integers, prime fields, and univariate
polynomial extensions of prime fields.

A RingSpec names the domain and owns the raw arithmetic; a RingElement is a
thin wrapper pairing a spec with a canonical raw value.  Raw values are

  * Integers        -- Python int (arbitrary precision),
  * PrimeField(p)   -- int residue in [0, p),
  * F_p[v]          -- tuple of residues, least significant first, no
                       trailing zeros, () for zero.

All three are integral domains; the extension is one level deep by
construction (the base of an extension is always a prime field).  Specs are
value objects: equal parameters compare equal, and elements of unequal
specs never mix (SpecMismatch).

Text syntax, round-tripped by parse()/str(): ``int``, ``zp:<p>``,
``zp:<p>[<var>]``.
"""

from __future__ import annotations

import re

from .errors import NotPrime, ParseError, SpecMismatch
from .numtheory import is_prime

INTEGERS = "int"
PRIME_FIELD = "zp"
EXTENSION = "zp_ext"

_RING_TEXT = re.compile(r"^(int|zp:([0-9]+)(\[([A-Za-z_][A-Za-z0-9_]*)\])?)$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _ext_trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class RingSpec:
    """Identity and arithmetic of one coefficient domain."""

    __slots__ = ("kind", "p", "var_name", "_radd", "_rmul", "_rneg",
                 "_rzero", "_rone")

    def __init__(self, kind: str, p: int | None = None,
                 var_name: str | None = None):
        if kind not in (INTEGERS, PRIME_FIELD, EXTENSION):
            raise ValueError(f"unknown ring kind {kind!r}")
        if kind == INTEGERS:
            if p is not None or var_name is not None:
                raise ValueError("Integers take no parameters")
        else:
            if p is None:
                raise ValueError("a prime modulus is required")
            if not is_prime(p):
                raise NotPrime(f"modulus {p} is not prime")
            if kind == PRIME_FIELD and var_name is not None:
                raise ValueError("prime field takes no variable name")
            if kind == EXTENSION:
                if var_name is None or not _IDENT.match(var_name):
                    raise ValueError("extension needs an identifier variable name")
        self.kind = kind
        self.p = p
        self.var_name = var_name

        if kind == INTEGERS:
            self._radd = lambda a, b: a + b
            self._rmul = lambda a, b: a * b
            self._rneg = lambda a: -a
            self._rzero = 0
            self._rone = 1
        elif kind == PRIME_FIELD:
            self._radd = lambda a, b, p=p: (a + b) % p
            self._rmul = lambda a, b, p=p: a * b % p
            self._rneg = lambda a, p=p: -a % p
            self._rzero = 0
            self._rone = 1
        else:
            self._radd = lambda a, b, p=p: _ext_add(a, b, p)
            self._rmul = lambda a, b, p=p: _ext_mul(a, b, p)
            self._rneg = lambda a, p=p: tuple((-c) % p for c in a)
            self._rzero = ()
            self._rone = (1,)

    # -- identity ---------------------------------------------------------

    @classmethod
    def integers(cls) -> RingSpec:
        return cls(INTEGERS)

    @classmethod
    def prime_field(cls, p: int) -> RingSpec:
        return cls(PRIME_FIELD, p)

    @classmethod
    def extension(cls, p: int, var_name: str) -> RingSpec:
        return cls(EXTENSION, p, var_name)

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        """Parse ``int``, ``zp:<p>``, or ``zp:<p>[<var>]``."""
        m = _RING_TEXT.match(text.strip())
        if not m:
            raise ParseError(f"bad ring spec {text!r}")
        if m.group(1) == "int":
            return cls.integers()
        p = int(m.group(2))
        if m.group(4) is not None:
            return cls.extension(p, m.group(4))
        return cls.prime_field(p)

    def __str__(self) -> str:
        if self.kind == INTEGERS:
            return "int"
        if self.kind == PRIME_FIELD:
            return f"zp:{self.p}"
        return f"zp:{self.p}[{self.var_name}]"

    def __repr__(self) -> str:
        return f"RingSpec({str(self)!r})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingSpec)
                and self.kind == other.kind
                and self.p == other.p
                and self.var_name == other.var_name)

    def __hash__(self) -> int:
        return hash((self.kind, self.p, self.var_name))

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == INTEGERS else self.p

    # -- elements ---------------------------------------------------------

    def _coerce_raw(self, value):
        if isinstance(value, bool):
            raise TypeError("bool is not a ring value")
        if isinstance(value, int):
            if self.kind == INTEGERS:
                return value
            if self.kind == PRIME_FIELD:
                return value % self.p
            return _ext_trim([value % self.p])
        if self.kind == EXTENSION and isinstance(value, (list, tuple)):
            return _ext_trim([int(c) % self.p for c in value])
        raise TypeError(f"cannot interpret {value!r} in {self}")

    def element(self, value) -> RingElement:
        """Coerce an int (or, for extensions, a little-endian coefficient
        sequence) into this ring."""
        if isinstance(value, RingElement):
            if value.spec != self:
                raise SpecMismatch(f"element of {value.spec} used in {self}")
            return value
        return RingElement(self, self._coerce_raw(value))

    def zero(self) -> RingElement:
        return RingElement(self, self._rzero)

    def one(self) -> RingElement:
        return RingElement(self, self._rone)

    def generator(self) -> RingElement:
        """The extension variable as a ring element."""
        if self.kind != EXTENSION:
            raise ValueError(f"{self} has no generator")
        return RingElement(self, (0, 1))

    def _rpow(self, a, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        if self.kind == INTEGERS:
            return a**e
        if self.kind == PRIME_FIELD:
            return pow(a, e, self.p)
        out = self._rone
        base = a
        while e:
            if e & 1:
                out = self._rmul(out, base)
            base = self._rmul(base, base)
            e >>= 1
        return out

    def _literal(self, raw) -> str:
        """Canonical literal text of a raw value, without outer parentheses."""
        if self.kind != EXTENSION:
            return str(raw)
        if not raw:
            return "0"
        parts = []
        for i, c in enumerate(raw):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                v = self.var_name if i == 1 else f"{self.var_name}^{i}"
                parts.append(v if c == 1 else f"{c}*{v}")
        return "+".join(parts)


def _ext_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _ext_trim(out)


def _ext_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] = (out[i + j] + c * d) % p
    return tuple(out)


class RingElement:
    """A value of one specific RingSpec, kept in canonical form."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: RingSpec, value):
        self.spec = spec
        self.value = value

    def _raw_of(self, other):
        if isinstance(other, RingElement):
            if other.spec is self.spec or other.spec == self.spec:
                return other.value
            raise SpecMismatch(
                f"cannot combine {self.spec} with {other.spec}")
        if isinstance(other, int) and not isinstance(other, bool):
            return self.spec._coerce_raw(other)
        return None

    def __add__(self, other):
        raw = self._raw_of(other)
        if raw is None:
            return NotImplemented
        return RingElement(self.spec, self.spec._radd(self.value, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._raw_of(other)
        if raw is None:
            return NotImplemented
        return RingElement(self.spec,
                           self.spec._radd(self.value, self.spec._rneg(raw)))

    def __rsub__(self, other):
        raw = self._raw_of(other)
        if raw is None:
            return NotImplemented
        return RingElement(self.spec,
                           self.spec._radd(raw, self.spec._rneg(self.value)))

    def __mul__(self, other):
        raw = self._raw_of(other)
        if raw is None:
            return NotImplemented
        return RingElement(self.spec, self.spec._rmul(self.value, raw))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.spec, self.spec._rneg(self.value))

    def __pow__(self, e: int):
        return RingElement(self.spec, self.spec._rpow(self.value, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.spec._coerce_raw(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.value))

    @property
    def is_zero(self) -> bool:
        return self.value == self.spec._rzero

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return self.spec._literal(self.value)

    def __repr__(self) -> str:
        return f"<{self} in {self.spec}>"
