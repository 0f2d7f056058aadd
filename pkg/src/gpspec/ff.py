"""Exact arithmetic in F_{p^m}, k-th power residues and hypothesis checks.

A field is modelled explicitly: a deterministic irreducible modulus, a
deterministic primitive element, and elements encoded as integers in
``[0, q)`` whose base-p digits are the coefficient vector in the
polynomial basis (digit i = coefficient of x^i).  The encoding keeps
elements hashable and cheap while still being, literally, a coefficient
vector.

The case analysis for the closed spectral formulas lives here as well:
``theorem_hypotheses`` classifies a triple (k, p, m) into one of the four
in-scope cases or ``OUT_OF_SCOPE``.
"""
from __future__ import annotations

import math
from enum import Enum
from functools import lru_cache

from .errors import BadInput, BadK, CapExceeded, NonPrime

#: Largest field order constructed explicitly (elements, tables).
FIELD_CAP = 1 << 20

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (desk scale)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomial arithmetic over F_p; ascending coefficient lists, no trailing 0.
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_rem(a: list[int], f: list[int], p: int) -> list[int]:
    # f must be monic
    a = a[:]
    df = len(f) - 1
    while len(a) > df:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - df
            for i, c in enumerate(f):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return _trim(a)


def _poly_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    r = [1]
    a = _poly_rem(a, f, p)
    while e:
        if e & 1:
            r = _poly_rem(_poly_mul(r, a, p), f, p)
        a = _poly_rem(_poly_mul(a, a, p), f, p)
        e >>= 1
    return r


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        lead_inv = pow(b[-1], -1, p)
        monic_b = [c * lead_inv % p for c in b]
        a, b = b, _poly_rem(a, monic_b, p)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test: x^(p^m) = x mod f, and gcd(x^(p^(m/l)) - x, f) = 1
    for every prime l dividing m."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    xq = _poly_powmod(x, p ** m, f, p)
    if _trim([(c1 - c2) % p for c1, c2 in _pad(xq, x)]):
        return False
    for ell in prime_factors(m):
        xr = _poly_powmod(x, p ** (m // ell), f, p)
        diff = _trim([(c1 - c2) % p for c1, c2 in _pad(xr, x)])
        g = _poly_gcd(f, diff, p)
        if len(g) - 1 != 0:
            return False
    return True


def _pad(a: list[int], b: list[int]):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m minimizing the base-p encoding of the
    non-leading coefficients (reproducible across runs)."""
    if m == 1:
        return (0, 1)
    for v in range(p ** m):
        coeffs, vv = [], v
        for _ in range(m):
            coeffs.append(vv % p)
            vv //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# Field model
# ---------------------------------------------------------------------------

class HypothesisCase(Enum):
    """Which branch of the closed spectral formulas applies to (k, p, m)."""

    K3_CASE_A = "k=3, p = 1 (mod 3), m = 3t"
    K3_CASE_B = "k=3, p = 2 (mod 3), m = 2t"
    K4_CASE_A = "k=4, p = 1 (mod 4), m = 4t"
    K4_CASE_B = "k=4, p = 3 (mod 4), m = 2t"
    OUT_OF_SCOPE = "out of scope"


class FieldSpec:
    """A concrete model of F_{p^m}.

    Immutable after construction; all operations are pure, so instances are
    safe to share between threads.  Elements are ints in [0, q) encoding
    base-p coefficient vectors.  Discrete-log / trace tables are built
    lazily, once, on first use.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...], generator: int):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self.generator = generator
        self._exp: list[int] | None = None
        self._dlog: list[int] | None = None
        self._trace: list[int] | None = None

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={list(self.modulus)}, g={self.generator})"

    # -- element encoding ---------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (length m) of an element code."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, c) -> int:
        v = 0
        for x in reversed(list(c)):
            v = v * self.p + x % self.p
        return v

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        v, shift = 0, 1
        for _ in range(self.m):
            v += ((a % self.p + b % self.p) % self.p) * shift
            a //= self.p
            b //= self.p
            shift *= self.p
        return v

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        v, shift = 0, 1
        for _ in range(self.m):
            v += (-a % self.p) * shift
            a //= self.p
            shift *= self.p
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        prod = _poly_rem(_poly_mul(_trim(list(self.coeffs(a))), _trim(list(self.coeffs(b))), self.p),
                         list(self.modulus), self.p)
        return self.from_coeffs(prod + [0] * (self.m - len(prod)))

    def pow(self, a: int, e: int) -> int:
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        e %= self.q - 1
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise BadInput("zero has no multiplicative order")
        n = self.q - 1
        order = n
        for r in prime_factors(n):
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    # -- tables ---------------------------------------------------------------

    @property
    def exp_table(self) -> list[int]:
        """exp_table[i] = generator**i for i in [0, q-1)."""
        if self._exp is None:
            exp = [1] * (self.q - 1)
            g = self.generator
            for i in range(1, self.q - 1):
                exp[i] = self.mul(exp[i - 1], g)
            self._exp = exp
        return self._exp

    @property
    def dlog_table(self) -> list[int]:
        """dlog_table[code] = discrete log base generator; -1 for zero."""
        if self._dlog is None:
            dlog = [-1] * self.q
            for i, e in enumerate(self.exp_table):
                dlog[e] = i
            self._dlog = dlog
        return self._dlog

    @property
    def trace_table(self) -> list[int]:
        """trace_table[code] = Tr_{q/p}(code), via F_p-linearity on the basis."""
        if self._trace is None:
            basis = [trace(self, self.from_coeffs([0] * i + [1])) for i in range(self.m)]
            table = []
            for a in range(self.q):
                acc, aa = 0, a
                for i in range(self.m):
                    acc += (aa % self.p) * basis[i]
                    aa //= self.p
                table.append(acc % self.p)
            self._trace = table
        return self._trace


@lru_cache(maxsize=None)
def _make_field_cached(p: int, m: int) -> FieldSpec:
    modulus = _smallest_irreducible(p, m)
    q = p ** m
    probe = FieldSpec(p, m, modulus, 1)
    generator = 1  # only q = 2 leaves the scan below empty
    for cand in range(2, q):
        if probe.element_order(cand) == q - 1:
            generator = cand
            break
    return FieldSpec(p, m, modulus, generator)


def make_field(p: int, m: int, cap: int = FIELD_CAP) -> FieldSpec:
    """Build the deterministic model of F_{p^m}.

    Modulus: monic irreducible of degree m with lexicographically smallest
    coefficients (by base-p encoding); for m=1 the convention "x - 0" is
    used.  Generator: smallest element code of multiplicative order q-1.
    """
    if not is_prime(p):
        raise NonPrime(f"p = {p} is not prime")
    if m < 1:
        raise BadInput(f"m = {m} must be >= 1")
    if p ** m > cap:
        raise CapExceeded(f"q = {p}^{m} exceeds the construction cap {cap}")
    return _make_field_cached(p, m)


def trace(f: FieldSpec, a: int) -> int:
    """Tr_{q/p}(a) = a + a^p + ... + a^(p^(m-1)), reduced into [0, p)."""
    if not 0 <= a < f.q:
        raise BadInput(f"element code {a} outside [0, {f.q})")
    if f.m == 1:
        return a
    acc, t = a, a
    for _ in range(f.m - 1):
        t = f.pow(t, f.p)
        acc = f.add(acc, t)
    if acc >= f.p:
        raise AssertionError(f"trace {acc} not in prime subfield")
    return acc


def kth_power_residues(f: FieldSpec, k: int) -> frozenset[int]:
    """R_k = {x^k : x nonzero}, requiring k | q-1 (|R_k| = (q-1)/k)."""
    if k < 1:
        raise BadInput(f"k = {k} must be positive")
    if (f.q - 1) % k != 0:
        raise BadK(f"k = {k} does not divide q - 1 = {f.q - 1}")
    exp = f.exp_table
    n = (f.q - 1) // k
    return frozenset(exp[(k * j) % (f.q - 1)] for j in range(n))


def is_semiprimitive(k: int, p: int) -> bool:
    """True iff -1 is a power of p modulo k (some j >= 1 with p^j = -1 mod k)."""
    if math.gcd(p, k) != 1:
        raise BadInput(f"gcd(p, k) = {math.gcd(p, k)} != 1")
    if k == 1:
        return True
    target = k - 1
    x = p % k
    for _ in range(2 * k):
        if x == target:
            return True
        x = x * p % k
    return False


def theorem_hypotheses(k: int, p: int, m: int) -> HypothesisCase:
    """Classify (k, p, m); OUT_OF_SCOPE is a value, never an error."""
    return HypothesisCase.OUT_OF_SCOPE if out_of_scope_reason(k, p, m) else _case_of(k, p, m)


def _case_of(k: int, p: int, m: int) -> HypothesisCase:
    if k == 3:
        return HypothesisCase.K3_CASE_A if p % 3 == 1 else HypothesisCase.K3_CASE_B
    return HypothesisCase.K4_CASE_A if p % 4 == 1 else HypothesisCase.K4_CASE_B


def out_of_scope_reason(k: int, p: int, m: int) -> str | None:
    """Human-readable reason a triple is out of scope, or None if in scope."""
    if k not in (3, 4):
        return f"k = {k} not in {{3, 4}}"
    if not is_prime(p):
        return f"p = {p} is not prime"
    if m < 1:
        return f"m = {m} must be >= 1"
    q = p ** m
    if q < 5:
        return f"q = {q} < 5"
    if k == 4 and q == 9:
        return "q = 9 is excluded for k = 4"
    if ((q - 1) // (p - 1)) % k != 0:
        return f"{k} does not divide (q-1)/(p-1) = {(q - 1) // (p - 1)}"
    if p % k == 0:
        return f"p = {p} divides k = {k}"  # unreachable: divisibility fails first
    return None
