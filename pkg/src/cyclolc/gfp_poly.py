"""Dense polynomials over F_p for periods p and 2p.

Over F_p the period polynomials factor as x^p - 1 = (x - 1)^p and
x^2p - 1 = (x - 1)^p (x + 1)^p, so the linear complexity of a sequence is
determined entirely by the root multiplicities of its generating
polynomial at x = 1 and x = -1.  Formal derivatives of order >= p vanish
identically in characteristic p; Hasse derivatives
D_n(x^i) = C(i, n) x^(i-n) stay faithful multiplicity detectors at every
order and are used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Mapping

from .errors import BadPeriod

if TYPE_CHECKING:
    from .sequences import SequenceFp

__all__ = [
    "PolyFp",
    "MultiplicityReport",
    "binom_mod",
    "poly_from_sequence",
    "hasse_eval",
    "root_multiplicity",
    "linear_complexity",
]


@dataclass(frozen=True)
class PolyFp:
    """Coefficient list over F_p, ascending degree, length at most 2p."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.modulus
        if len(self.coeffs) > 2 * p:
            raise ValueError("coefficient list longer than 2p")
        if any(not 0 <= c < p for c in self.coeffs):
            raise ValueError("coefficients must be reduced residues")

    @classmethod
    def from_coeffs(cls, modulus: int, coeffs: Iterable[int]) -> "PolyFp":
        return cls(modulus, tuple(c % modulus for c in coeffs))

    @classmethod
    def from_support(cls, modulus: int, support: Mapping[int, int], length: int | None = None) -> "PolyFp":
        """Build from a position -> coefficient map, wrapping mod x^2p - 1."""
        period = 2 * modulus
        out = [0] * (period if length is None else length)
        for pos, c in support.items():
            out[pos % period] = (out[pos % period] + c) % modulus
        if length is None:
            while out and out[-1] == 0:
                out.pop()
        return cls(modulus, tuple(out))

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    @property
    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "PolyFp") -> "PolyFp":
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        p = self.modulus
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return PolyFp(p, tuple(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)))

    def __sub__(self, other: "PolyFp") -> "PolyFp":
        return self + (-other)

    def __neg__(self) -> "PolyFp":
        return PolyFp(self.modulus, tuple((-c) % self.modulus for c in self.coeffs))

    def evaluate(self, a: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = (y * a + c) % self.modulus
        return y

    def shift_mod_two_periods(self, k: int) -> "PolyFp":
        """Multiply by x^k, reducing mod x^2p - 1."""
        period = 2 * self.modulus
        out = [0] * period
        for i, c in enumerate(self.coeffs):
            if c:
                out[(i + k) % period] = (out[(i + k) % period] + c) % self.modulus
        while out and out[-1] == 0:
            out.pop()
        return PolyFp(self.modulus, tuple(out))


@dataclass(frozen=True)
class MultiplicityReport:
    """Multiplicity of (x - point) in a polynomial, capped.

    cofactor_value is the deflated polynomial evaluated at the point
    (nonzero whenever the cap was not hit; 0 at the cap).
    """

    point: int
    multiplicity: int
    cofactor_value: int


def binom_mod(m: int, n: int, p: int) -> int:
    """C(m, n) mod p by Lucas' theorem."""
    if n < 0 or n > m:
        return 0
    r = 1
    while n:
        mi, ni = m % p, n % p
        if ni > mi:
            return 0
        # plain binomial of residues < p
        num = den = 1
        for t in range(ni):
            num = num * (mi - t) % p
            den = den * (t + 1) % p
        r = r * num * pow(den, p - 2, p) % p
        m //= p
        n //= p
    return r


def poly_from_sequence(s: "SequenceFp") -> PolyFp:
    """Generating polynomial of one period: coefficient i is s_i."""
    return PolyFp(s.modulus, tuple(s.terms))


def hasse_eval(f: PolyFp, n: int, a: int) -> int:
    """Order-n Hasse derivative of f at a = +1 or -1."""
    p = f.modulus
    if a not in (1, -1, p - 1):
        raise ValueError("evaluation point must be +1 or -1")
    neg = a != 1
    total = 0
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        term = binom_mod(i, n, p) * c
        if neg and (i - n) % 2:
            term = -term
        total += term
    return total % p


def root_multiplicity(f: PolyFp, a: int, cap: int) -> MultiplicityReport:
    """Largest m <= cap with (x - a)^m dividing f, by repeated synthetic division.

    The zero polynomial reports the cap.
    """
    p = f.modulus
    if a not in (1, -1, p - 1):
        raise ValueError("point must be +1 or -1")
    point = 1 if a == 1 else p - 1
    if f.is_zero():
        return MultiplicityReport(point=point, multiplicity=cap, cofactor_value=0)
    work = list(f.coeffs)
    mult = 0
    while mult < cap:
        # synthetic division by (x - point): b_i = w_{i+1} + point * b_{i+1}
        rem = 0
        for i in range(len(work) - 1, -1, -1):
            rem = (rem * point + work[i]) % p
            work[i] = rem  # becomes quotient coefficient shifted by one
        rem = work[0]
        if rem != 0:
            return MultiplicityReport(point=point, multiplicity=mult, cofactor_value=rem)
        work = work[1:]
        mult += 1
        if not work:
            return MultiplicityReport(point=point, multiplicity=cap, cofactor_value=0)
    return MultiplicityReport(point=point, multiplicity=cap, cofactor_value=0)


def linear_complexity(s: "SequenceFp") -> int:
    """Shortest LFSR length over F_p for a sequence of period p or 2p."""
    p = s.modulus
    f = poly_from_sequence(s)
    if s.period == p:
        return p - root_multiplicity(f, 1, p).multiplicity
    if s.period == 2 * p:
        m0 = root_multiplicity(f, 1, p).multiplicity
        m1 = root_multiplicity(f, -1, p).multiplicity
        return 2 * p - m0 - m1
    raise BadPeriod(f"period {s.period} is neither {p} nor {2 * p}")
