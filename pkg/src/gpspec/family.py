"""Search for complementary-equienergetic members of the lifted families.

Equienergy at level ell is decided purely from the sign pattern of the
closed-form eigenvalue expressions, i.e. from integer inequalities on the
level pair (a, b) or (c, d) - never from a q-sized spectrum - so probing
ell in the hundreds stays cheap even though q is astronomically large.

The argument-interval sufficient conditions are likewise exact integer
inequalities (no transcendental function is evaluated anywhere here):

    k=3, s=0 regime, on the raw pair (x, y):   0 < x < 9y
    k=3, s>0 regime, on the pair (a, b):       a > 9b > 0
    k=4, on the pair (c, d):                   c > 0, d > 0, 4d^2 > 3c^2
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import dioph
from .errors import BadInput
from .lift import check_k3_invariants, check_k4_invariants, k3_base_pairs, mul_pair

#: Default number of levels probed.
ELL_MAX = 100


class Regime(Enum):
    """Which argument interval applies: the s=0 proof works on the raw
    (x, y) pair, the s>0 proof on the derived (a, b) pair."""

    S_ZERO = "s-zero"
    S_POSITIVE = "s-positive"


@dataclass(frozen=True)
class FamilyWitness:
    """One probe of a lifted family member GP(k, p^(3(t*ell+s)) or p^(4*ell))."""

    p: int
    k: int
    t: int
    s: int
    ell: int
    pair: tuple[int, int]
    equienergetic: bool
    interval_hit: bool
    q_digits: int


def interval_test_k3(x: int, y: int, regime: Regime) -> bool:
    """Exact integer form of the k=3 argument-interval conditions."""
    if regime is Regime.S_ZERO:
        return 0 < x < 9 * y
    return y > 0 and x > 9 * y


def interval_test_k4(c: int, d: int) -> bool:
    """Exact integer form of the k=4 argument-interval condition (strict
    first quadrant)."""
    return c > 0 and d > 0 and 4 * d * d > 3 * c * c


def _k3_sign_count(a: int, b: int) -> int:
    """Positives among the non-principal eigenvalues of the k=3 formulas;
    the signs are those of a, -(a+9b), -(a-9b) since |alpha * r| > 1."""
    return (a > 0) + (a + 9 * b < 0) + (a - 9 * b < 0)


def _k4_sign_count(p_ell: int, c: int, d: int) -> int:
    """Positives among the k=4 non-principal eigenvalues at level ell."""
    return (p_ell + 4 * d > 0) + (p_ell - 4 * d > 0) + (2 * c - p_ell > 0) + (-2 * c - p_ell > 0)


def find_equienergetic_family(p: int, k: int, t: int | None = None, s: int = 0,
                              ell_max: int = ELL_MAX) -> list[FamilyWitness]:
    """Probe levels 1..ell_max of the lifted family, flagging each level with
    the equienergy verdict (sign criterion) and the interval condition.

    For k=3 the base comes from ``dioph.minimal_t``; a caller-supplied t
    must match the minimal exponent.  For k=4, t and s are fixed at 1, 0.
    """
    if k == 3:
        return _family_k3(p, t, s, ell_max)
    if k == 4:
        if s != 0 or t not in (None, 1):
            raise BadInput("k=4 families take no (t, s) offsets")
        return _family_k4(p, ell_max)
    raise BadInput(f"k = {k} not in {{3, 4}}")


def _family_k3(p: int, t: int | None, s: int, ell_max: int) -> list[FamilyWitness]:
    if s < 0:
        raise BadInput(f"s = {s} must be >= 0")
    t0, base_xy, base_ab = k3_base_pairs(p, s)
    if t is not None and t != t0:
        raise BadInput(f"minimal exponent of p = {p} is {t0}, not {t}")
    t = t0

    witnesses = []
    xy = base_xy
    for ell in range(1, ell_max + 1):
        if ell > 1:
            xy = mul_pair(base_xy, xy, 27)
        if s == 0:
            a, b = -2 * xy[0], -2 * xy[1]
            hit = interval_test_k3(xy[0], xy[1], Regime.S_ZERO)
        else:
            a, b = mul_pair(base_ab, xy, 27)
            hit = interval_test_k3(a, b, Regime.S_POSITIVE)
        check_k3_invariants(p, t * ell + s, a, b)
        equi = _k3_sign_count(a, b) == 1
        witnesses.append(FamilyWitness(
            p=p, k=3, t=t, s=s, ell=ell, pair=(a, b),
            equienergetic=equi, interval_hit=hit,
            q_digits=len(str(p ** (3 * (t * ell + s)))),
        ))
        if hit and not equi:
            raise AssertionError(f"interval hit without equienergy at ell = {ell}")
    return witnesses


def _family_k4(p: int, ell_max: int) -> list[FamilyWitness]:
    rep = dioph.solve_cd(p, 1)
    witnesses = []
    cd = (rep.x, rep.y)
    p_ell = p
    for ell in range(1, ell_max + 1):
        if ell > 1:
            cd = mul_pair((rep.x, rep.y), cd, 4)
            p_ell *= p
        check_k4_invariants(p, ell, *cd)
        hit = interval_test_k4(*cd)
        equi = _k4_sign_count(p_ell, *cd) == 1
        witnesses.append(FamilyWitness(
            p=p, k=4, t=1, s=0, ell=ell, pair=cd,
            equienergetic=equi, interval_hit=hit,
            q_digits=len(str(p ** (4 * ell))),
        ))
        if hit and not equi:
            raise AssertionError(f"interval hit without equienergy at ell = {ell}")
    return witnesses
