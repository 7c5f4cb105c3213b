"""Primes p = 5 (mod 8), quartic residue classes mod p and mod 2p, and the
index correspondence Z_2p = Z_2 x Z_p.

The sequence family built in :mod:`cyclolc.sequences` only achieves optimal
autocorrelation for primes of one of two shapes: p = 1 + 4 y^2 or
p = x^2 + 4.  ``find_prime_params`` validates a candidate prime, finds
primitive roots mod p and mod 2p, and records the (unique) representation
p = x^2 + 4 y^2 normalised to x = 1 (mod 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import BadOverride, NoQuarticForm, NotPrime, WrongResidueClass

__all__ = [
    "PrimeParams",
    "QuarticClasses",
    "is_prime",
    "is_primitive_root",
    "primitive_roots",
    "find_prime_params",
    "quartic_classes",
    "crt_inverse",
    "enumerate_valid_primes",
]


def is_prime(n: int) -> bool:
    """Deterministic trial division; ample for the desk-scale primes used here."""
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


def _distinct_prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_primitive_root(a: int, p: int) -> bool:
    """True iff a generates the multiplicative group mod prime p."""
    a %= p
    if a == 0:
        return False
    return all(pow(a, (p - 1) // q, p) != 1 for q in _distinct_prime_factors(p - 1))


def primitive_roots(p: int) -> Iterator[int]:
    """All primitive roots mod p in ascending order."""
    factors = _distinct_prime_factors(p - 1)
    for a in range(1, p):
        if all(pow(a, (p - 1) // q, p) != 1 for q in factors):
            yield a


@dataclass(frozen=True)
class PrimeParams:
    """A validated prime p = 5 (mod 8) with the data the constructions need.

    theta generates the units mod p; g is the odd member of
    {theta, theta + p} and generates the units mod 2p.  rho = theta^((p-1)/4)
    is a primitive fourth root of unity mod p.  x and y_abs satisfy
    p = x^2 + 4*y_abs^2 with x = 1 (mod 4); case1 means |x| = 1
    (p = 1 + 4y^2), case2 means y_abs = 1 (p = x^2 + 4).
    """

    p: int
    theta: int
    g: int
    rho: int
    x: int
    y_abs: int
    case1: bool
    case2: bool

    @property
    def form_valid(self) -> bool:
        """True when p has one of the two shapes the constructions require."""
        return self.case1 or self.case2


@dataclass(frozen=True)
class QuarticClasses:
    """The four quartic cosets D_0..D_3 mod p and H_0..H_3 in the units mod 2p."""

    d: tuple[frozenset[int], ...]
    h: tuple[frozenset[int], ...]


def _quartic_form(p: int) -> tuple[int, int]:
    # Unique x, y with p = x^2 + 4 y^2 for p = 1 (mod 4); sign of x fixed
    # by x = 1 (mod 4), y reported unsigned.
    y = 1
    while 4 * y * y < p:
        t = p - 4 * y * y
        r = math.isqrt(t)
        if r * r == t:
            x = r if r % 4 == 1 else -r
            return x, y
        y += 1
    raise NotPrime(f"{p} has no representation x^2 + 4y^2")


def find_prime_params(
    p: int, theta_override: Optional[int] = None, *, strict: bool = True
) -> PrimeParams:
    """Validate p and assemble a :class:`PrimeParams`.

    theta defaults to the smallest primitive root mod p.  With
    ``strict=True`` (the default) primes with neither |x| = 1 nor y = 1
    are rejected with :class:`NoQuarticForm`; with ``strict=False`` they
    are returned with both case flags off.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p % 8 != 5:
        raise WrongResidueClass(f"{p} = {p % 8} (mod 8), need 5")
    if theta_override is not None:
        if not is_primitive_root(theta_override, p):
            raise BadOverride(f"{theta_override} is not a primitive root mod {p}")
        theta = theta_override % p
    else:
        theta = next(primitive_roots(p))
    g = theta if theta % 2 == 1 else theta + p
    rho = pow(theta, (p - 1) // 4, p)
    x, y = _quartic_form(p)
    case1 = abs(x) == 1
    case2 = y == 1
    if strict and not (case1 or case2):
        raise NoQuarticForm(f"{p} = {x}^2 + 4*{y}^2 has neither |x| = 1 nor y = 1")
    return PrimeParams(p=p, theta=theta, g=g, rho=rho, x=x, y_abs=y, case1=case1, case2=case2)


def quartic_classes(params: PrimeParams) -> QuarticClasses:
    """Build D_0..D_3 mod p and H_0..H_3 mod 2p from the primitive roots."""
    p, theta, g = params.p, params.theta, params.g
    quarter = (p - 1) // 4
    step_d = pow(theta, 4, p)
    d0 = []
    v = 1
    for _ in range(quarter):
        d0.append(v)
        v = v * step_d % p
    d = [frozenset(d0)]
    for n in (1, 2, 3):
        d.append(frozenset(pow(theta, n, p) * e % p for e in d0))

    m = 2 * p
    step_h = pow(g, 4, m)
    h0 = []
    v = 1
    for _ in range(quarter):
        h0.append(v)
        v = v * step_h % m
    h = [frozenset(h0)]
    for n in (1, 2, 3):
        h.append(frozenset(pow(g, n, m) * e % m for e in h0))
    return QuarticClasses(d=tuple(d), h=tuple(h))


def crt_inverse(r2: int, rp: int, p: int) -> int:
    """The unique i in [0, 2p) with i = r2 (mod 2) and i = rp (mod p)."""
    if r2 not in (0, 1):
        raise ValueError("r2 must be 0 or 1")
    if not 0 <= rp < p:
        raise ValueError("rp out of range")
    return rp if rp % 2 == r2 else rp + p


def enumerate_valid_primes(lo: int, hi: int, case_filter: int | str = "any") -> list[PrimeParams]:
    """All accepted primes in [lo, hi] matching the case filter, ascending.

    case_filter is 1 (p = 1 + 4y^2), 2 (p = x^2 + 4) or "any".
    """
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    if case_filter not in (1, 2, "any", "1", "2"):
        raise ValueError(f"bad case filter {case_filter!r}")
    case_filter = int(case_filter) if case_filter in ("1", "2") else case_filter
    out = []
    for p in range(max(lo, 2), hi + 1):
        if p % 8 != 5 or not is_prime(p):
            continue
        params = find_prime_params(p, strict=False)
        if not params.form_valid:
            continue
        if case_filter == 1 and not params.case1:
            continue
        if case_filter == 2 and not params.case2:
            continue
        out.append(params)
    return out
