"""Base-p digit machinery: Lucas residues and the digit-sum classes s_m(p).

s_m(p) is the set of positive integers whose base-p digits sum to m.  Digit
vectors are little-endian (least significant digit first) throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotInS2, NotPrime


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"modulus {p} is not prime")


@dataclass(frozen=True)
class BasePDigits:
    """Base-p expansion of a nonnegative integer, least significant first."""

    n: int
    p: int
    digits: tuple[int, ...]

    @property
    def digit_sum(self) -> int:
        return sum(self.digits)


def base_p_digits(n: int, p: int) -> BasePDigits:
    """Expand n >= 0 in base p.  Zero expands to the empty digit vector."""
    _require_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    orig = n
    digits = []
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    return BasePDigits(n=orig, p=p, digits=tuple(digits))


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n."""
    return base_p_digits(n, p).digit_sum


def in_s_m(n: int, p: int, m: int) -> bool:
    """Whether n lies in s_m(p), i.e. its base-p digits sum to m."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return digit_sum(n, p) == m


def lucas_factors(n: int, m: int, p: int) -> list[tuple[int, int, int]]:
    """Digitwise breakdown of C(n, m) mod p: one (n_i, m_i, C(n_i, m_i) mod p)
    triple per base-p position, padded with zero digits on the shorter side."""
    _require_prime(p)
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    factors = []
    while n or m:
        n, ni = divmod(n, p)
        m, mi = divmod(m, p)
        # math.comb(ni, mi) is 0 when mi > ni, matching the C(a, b) = 0
        # convention the product relies on
        factors.append((ni, mi, math.comb(ni, mi) % p))
    return factors


def binom_mod_p(n: int, m: int, p: int) -> int:
    """C(n, m) mod p via the digitwise product of small binomials."""
    _require_prime(p)
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    out = 1
    while m or n:
        n, ni = divmod(n, p)
        m, mi = divmod(m, p)
        if mi > ni:
            return 0
        out = out * math.comb(ni, mi) % p
    return out


def is_s1_by_divisibility(n: int, p: int) -> bool:
    """Whether every interior binomial C(n, m), 0 < m < n, vanishes mod p.

    Equivalent to n being in s_1(p), i.e. n a power of p.
    """
    _require_prime(p)
    if n < 2:
        raise ValueError("n must be at least 2")
    return all(binom_mod_p(n, m, p) == 0 for m in range(1, n))


def s2_parts(n: int, p: int) -> tuple[int, int]:
    """Split n in s_2(p) as n = n1 + n2 with n1 >= n2 powers of p.

    The split is read off the digit vector: one digit equal to 2 gives
    n1 = n2 = p^i, two digits equal to 1 give distinct powers.  Raises
    NotInS2 when the digits do not sum to 2, and also for the repeated
    part over p = 2 (the digit 2 is not a base-2 digit, so that shape
    cannot arise there).
    """
    exp = base_p_digits(n, p)
    if exp.digit_sum != 2:
        raise NotInS2(f"{n} has base-{p} digit sum {exp.digit_sum}, not 2")
    ones = [i for i, d in enumerate(exp.digits) if d == 1]
    if len(ones) == 2:
        return p ** ones[1], p ** ones[0]
    # remaining shape: a single digit 2, impossible in base 2
    i = exp.digits.index(2)
    return p**i, p**i


def cor2a_check(n: int, p: int) -> "Cor2aReport":
    """Interior/edge binomial residues for n in s_2(p).

    Interior binomials are C(n, m) for 0 < m < n with m not a split point;
    the edge residue is C(n, n1) mod p, expected to be (1 + [n1 = n2]) mod p.
    """
    n1, n2 = s2_parts(n, p)
    interior = all(
        binom_mod_p(n, m, p) == 0
        for m in range(1, n)
        if m != n1 and m != n2
    )
    return Cor2aReport(
        n1=n1,
        n2=n2,
        interior_divisible=interior,
        edge_residue=binom_mod_p(n, n1, p),
    )


@dataclass(frozen=True)
class Cor2aReport:
    n1: int
    n2: int
    interior_divisible: bool
    edge_residue: int


def cor2b_check(n: int, p: int) -> bool:
    """Check one implication instance: if C(n, m) * C(m, l) vanishes mod p for
    all 0 < l < m < n, then n is in s_1(p) or s_2(p).

    True when the implication holds for this n (conclusion true, or some
    product is a counterexample to the hypothesis).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if digit_sum(n, p) in (1, 2):
        return True
    for m in range(1, n):
        top = binom_mod_p(n, m, p)
        if top == 0:
            continue
        for l in range(1, m):
            if top * binom_mod_p(m, l, p) % p:
                return True
    return False
