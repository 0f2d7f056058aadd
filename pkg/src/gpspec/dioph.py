"""Quadratic-form representations with side conditions.

Two norm forms drive the closed spectral formulas:

    4 * p^r   = a^2 + 27*b^2   with a = 1 (mod 3), gcd(a, p) = 1   (k = 3)
    p^(2t)    = c^2 +  4*d^2   with c = 1 (mod 4), gcd(c, p) = 1   (k = 4)

plus the minimal exponent t with  p^t = x^2 + 27*y^2, gcd(x, p) = 1,
which seeds the lifting recursions.  Everything is a bounded scan over the
y-component with an exact perfect-square test; big integers throughout,
no factorization.

Sign normalization: the y-component is always >= 0 (the spectra are not
affected by its sign), and the x-component sign is fixed by the congruence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BadInput, BadP, NoSolution, NotFound
from .ff import is_prime

#: Default search bound for the minimal exponent.
T_CAP = 64


class QFForm(Enum):
    X2_27Y2 = "x^2 + 27y^2"
    X2_4Y2 = "x^2 + 4y^2"


_FORM_COEFF = {QFForm.X2_27Y2: 27, QFForm.X2_4Y2: 4}


@dataclass(frozen=True)
class QFRep:
    """One solution of  x^2 + coeff*y^2 = target  with its side conditions."""

    form: QFForm
    target: int
    x: int
    y: int

    def __post_init__(self):
        coeff = _FORM_COEFF[self.form]
        if self.x * self.x + coeff * self.y * self.y != self.target:
            raise BadInput(f"({self.x}, {self.y}) does not represent {self.target} by {self.form.value}")
        if self.y < 0:
            raise BadInput("y-component must be normalized to y >= 0")


def _square_part(n: int) -> int | None:
    """isqrt(n) if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def solve_ab(p: int, r: int) -> QFRep:
    """Solve 4*p^r = a^2 + 27*b^2 with a = 1 (mod 3) and gcd(a, p) = 1.

    The solution is unique up to the sign of b; b >= 0 is returned.
    """
    if not is_prime(p) or p % 3 != 1:
        raise BadP(f"p = {p} must be a prime with p = 1 (mod 3)")
    if r < 1:
        raise BadInput(f"r = {r} must be >= 1")
    target = 4 * p ** r
    for b in range(math.isqrt(target // 27) + 1):
        a = _square_part(target - 27 * b * b)
        if a is None or a % p == 0 or a % 3 == 0:
            continue
        if a % 3 != 1:
            a = -a
        return QFRep(QFForm.X2_27Y2, target, a, b)
    raise NoSolution(f"4*{p}^{r} = a^2 + 27*b^2 has no admissible solution")


def solve_cd(p: int, t: int) -> QFRep:
    """Solve p^(2t) = c^2 + 4*d^2 with c = 1 (mod 4) and gcd(c, p) = 1."""
    if not is_prime(p) or p % 4 != 1:
        raise BadP(f"p = {p} must be a prime with p = 1 (mod 4)")
    if t < 1:
        raise BadInput(f"t = {t} must be >= 1")
    target = p ** (2 * t)
    for d in range(math.isqrt(target // 4) + 1):
        c = _square_part(target - 4 * d * d)
        if c is None or c % p == 0:
            continue
        if c % 4 != 1:
            c = -c
        return QFRep(QFForm.X2_4Y2, target, c, d)
    raise NoSolution(f"{p}^{2 * t} = c^2 + 4*d^2 has no admissible solution")


def minimal_t(p: int, t_cap: int = T_CAP) -> tuple[int, int, int]:
    """Smallest t <= t_cap such that p^t = x^2 + 27*y^2 with gcd(x, p) = 1.

    Returns (t, x, y) with x = 1 (mod 3) (x is never divisible by 3 here)
    and y >= 0.  Raises NotFound(t_cap) when the scan is exhausted; for
    p = 1 (mod 3) the minimal t is 1 or 3, so any cap >= 3 succeeds.
    """
    if not is_prime(p) or p % 3 != 1:
        raise BadP(f"p = {p} must be a prime with p = 1 (mod 3)")
    for t in range(1, t_cap + 1):
        target = p ** t
        for y in range(math.isqrt(target // 27) + 1):
            x = _square_part(target - 27 * y * y)
            if x is None or x % p == 0:
                continue
            if x % 3 != 1:
                x = -x
            return t, x, y
    raise NotFound(t_cap)


def is_cubic_residue(a: int, p: int) -> bool:
    """Euler criterion: a^((p-1)/d) = 1 (mod p) with d = gcd(3, p-1)."""
    if not is_prime(p):
        raise BadP(f"p = {p} must be prime")
    if a % p == 0:
        raise BadInput(f"gcd({a}, {p}) != 1")
    d = math.gcd(3, p - 1)
    return pow(a, (p - 1) // d, p) == 1
