"""Multilinear plus/minus-one representation of a constraint's weight.

Each variable's class in {0,1,2,3} is encoded by two independent uniform
plus/minus-one indicators (e1, e2): e1 is the high bit and e2 the low bit
of the class, with -1 standing for bit 0.  A constraint's weight is then
a function of six indicators and has an exact multilinear expansion

    X = (1/64) * sum over q in 0..63 of
        sign(q) * w(q) * prod_s (eps_s + digit_s(q))

where digit_s(q) is the plus/minus-one form of q's s-th binary digit,
sign(q) = (-1)^(number of -1 digits), and w(q) is the weight of the class
triple that q encodes.  At eps equal to the digits of q' every product
term vanishes except q = q', which collapses to w(q'); expanding the
products gives the coefficient of each of the 64 monomials.

Slot order is (middle e1, middle e2, outer_lo e1, outer_lo e2,
outer_hi e1, outer_hi e2); slot 0 is the most significant digit of q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .instance import Constraint
from .weights import weight6

SLOTS = 6


def eps_of_value(value: int) -> tuple[int, int]:
    """The (high, low) indicator pair of a class value."""
    return (1 if value & 2 else -1, 1 if value & 1 else -1)


def value_of_eps(e1: int, e2: int) -> int:
    return (2 if e1 == 1 else 0) + (1 if e2 == 1 else 0)


def _digits(q: int) -> tuple[int, ...]:
    """Plus/minus-one digits of q, slot 0 first (most significant)."""
    return tuple(1 if (q >> (SLOTS - 1 - s)) & 1 else -1 for s in range(SLOTS))


def _decode_triple(q: int) -> tuple[int, int, int]:
    return ((q >> 4) & 3, (q >> 2) & 3, q & 3)


@lru_cache(maxsize=1)
def _expansion() -> dict[int, Fraction]:
    """Coefficients of the 64 monomials, keyed by slot bitmask.

    The expansion is the same for every constraint; only the identity of
    the six indicator variables changes.
    """
    coeffs: dict[int, Fraction] = {}
    for mask in range(1 << SLOTS):
        total = Fraction(0)
        for q in range(1 << SLOTS):
            digits = _digits(q)
            sign = (-1) ** sum(1 for d in digits if d == -1)
            mid, lo, hi = _decode_triple(q)
            w = Fraction(weight6(mid, lo, hi), 6)
            prod = 1
            for s in range(SLOTS):
                if not (mask >> s) & 1:
                    prod *= digits[s]
            total += sign * w * prod
        coeff = total / 64
        if coeff:
            coeffs[mask] = coeff
    return coeffs


@dataclass(frozen=True)
class WeightPolynomial:
    """Expanded multilinear polynomial of one constraint's weight."""

    constraint: Constraint
    coeffs: dict[int, Fraction]

    @property
    def degree(self) -> int:
        return max((mask.bit_count() for mask in self.coeffs), default=0)

    @property
    def constant_term(self) -> Fraction:
        """Coefficient of the empty monomial; equals the weight's mean."""
        return self.coeffs.get(0, Fraction(0))

    def evaluate_eps(self, eps: tuple[int, ...]) -> Fraction:
        """Evaluate at six plus/minus-one indicator values (slot order)."""
        total = Fraction(0)
        for mask, coeff in self.coeffs.items():
            prod = 1
            for s in range(SLOTS):
                if (mask >> s) & 1:
                    prod *= eps[s]
            total += coeff * prod
        return total

    def evaluate_values(self, mid: int, lo: int, hi: int) -> Fraction:
        eps = eps_of_value(mid) + eps_of_value(lo) + eps_of_value(hi)
        return self.evaluate_eps(eps)


def weight_polynomial(constraint: Constraint) -> WeightPolynomial:
    """The multilinear expansion bound to one constraint's variables."""
    return WeightPolynomial(constraint, dict(_expansion()))
