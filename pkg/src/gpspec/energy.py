"""Graph energy, exact semiprimitive values, bounds, and the
complementary-equienergy decision.

The energy of a graph is the sum of the absolute values of its adjacency
eigenvalues.  For a connected loopless regular graph whose non-principal
eigenvalues all share the multiplicity n, comparing E(G) with E(G-bar)
reduces to a sign count: the two are equal exactly when exactly one of the
distinct non-principal eigenvalues is positive.  The report below always
computes both the direct comparison and the sign criterion, so their
agreement is itself a checkable fact (it can legitimately fail only in the
semiprimitive case, where the multiplicities are unequal).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import dioph
from .errors import OutOfScope
from .ff import HypothesisCase
from .spectra import Spectrum, complement_spectrum, require_in_scope


@dataclass(frozen=True)
class EnergyReport:
    """Outcome of the complementary-equienergy decision for one spectrum."""

    energy: int
    complement_energy: int
    positive_nonprincipal_count: int
    equienergetic: bool
    criterion_agrees: bool


def energy(s: Spectrum) -> int:
    """E = sum of multiplicity * |eigenvalue| (exact integer)."""
    return sum(e * abs(v) for v, e in s.entries)


def semiprimitive_energy(k: int, p: int, m: int) -> int:
    """Exact energy in the semiprimitive case p = -1 (mod k).

    k=3:  2n(2*sqrt(q)+1)/3  for m = 0 (mod 4),   4n(sqrt(q)+1)/3  otherwise.
    k=4:   n(3*sqrt(q)+1)/2  for m = 0 (mod 4),   3n(sqrt(q)+1)/2  otherwise.
    """
    case = require_in_scope(k, p, m)
    if case not in (HypothesisCase.K3_CASE_B, HypothesisCase.K4_CASE_B):
        raise OutOfScope(f"(k={k}, p={p}) is not semiprimitive")
    q = p ** m
    n = (q - 1) // k
    root = p ** (m // 2)
    if k == 3:
        num = 2 * n * (2 * root + 1) if m % 4 == 0 else 4 * n * (root + 1)
        den = 3
    else:
        num = n * (3 * root + 1) if m % 4 == 0 else 3 * n * (root + 1)
        den = 2
    value, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"semiprimitive energy {num}/{den} is not integral")
    return value


def energy_bounds(k: int, p: int, m: int) -> tuple[Fraction, Fraction]:
    """Exact lower/upper energy bounds in the case p = 1 (mod k).

    k=3:  n(1 + |2a*r + 1|/3)  <=  E  <=  n(1 + (2/3)(|a|r + 1) + 3|b|r)
    k=4:  n(r^2 + 1)           <=  E  <=  n(r^2 + 1 + (|c| + 2|d|) r)

    with r the k-th root of q and (a, b) resp. (c, d) the quadratic-form
    pair of the spectrum formulas.
    """
    case = require_in_scope(k, p, m)
    if case not in (HypothesisCase.K3_CASE_A, HypothesisCase.K4_CASE_A):
        raise OutOfScope(f"(k={k}, p={p}) has no bound form (semiprimitive case is exact)")
    q = p ** m
    n = (q - 1) // k
    if k == 3:
        rep = dioph.solve_ab(p, m // 3)
        r = p ** (m // 3)
        lower = n * (1 + Fraction(abs(2 * rep.x * r + 1), 3))
        upper = n * (1 + Fraction(2, 3) * (abs(rep.x) * r + 1) + 3 * abs(rep.y) * r)
    else:
        rep = dioph.solve_cd(p, m // 4)
        r = p ** (m // 4)
        lower = Fraction(n * (r * r + 1))
        upper = Fraction(n * (r * r + 1 + (abs(rep.x) + 2 * abs(rep.y)) * r))
    return lower, upper


def is_complementary_equienergetic(s: Spectrum) -> EnergyReport:
    """Decide E(G) = E(G-bar) both directly and by the sign criterion.

    The sign criterion counts positives among the distinct non-principal
    eigenvalues; the direct route compares exact energies through the
    complement spectrum.  ``criterion_agrees`` records whether the two
    verdicts coincide.
    """
    direct = energy(s)
    comp = energy(complement_spectrum(s))
    values = [v for v, _ in s.nonprincipal()]
    pos = sum(1 for v in values if v > 0)
    neg = sum(1 for v in values if v < 0)
    criterion = pos == 1 and neg == len(values) - 1
    equal = direct == comp
    return EnergyReport(
        energy=direct,
        complement_energy=comp,
        positive_nonprincipal_count=pos,
        equienergetic=equal,
        criterion_agrees=criterion == equal,
    )


def corollary_condition(k: int, rep: dioph.QFRep, q: int) -> bool:
    """Sufficient condition for complementary equienergy from the pair alone.

    k=3:  a > 9|b|, or a < 0 with -a < 9|b|.
    k=4:  3c^2 < 4d^2  (the exact form of |c| < (2/sqrt(3))|d|).

    The representation must belong to q: target^3 = 64 q for k=3,
    target^2 = q for k=4.
    """
    if k == 3:
        if rep.form is not dioph.QFForm.X2_27Y2 or rep.target ** 3 != 64 * q:
            raise OutOfScope(f"representation {rep} does not match k=3, q={q}")
        a, b = rep.x, rep.y
        return a > 9 * abs(b) or (a < 0 and -a < 9 * abs(b))
    if k == 4:
        if rep.form is not dioph.QFForm.X2_4Y2 or rep.target ** 2 != q:
            raise OutOfScope(f"representation {rep} does not match k=4, q={q}")
        return 3 * rep.x * rep.x < 4 * rep.y * rep.y
    raise OutOfScope(f"k = {k} not in {{3, 4}}")
