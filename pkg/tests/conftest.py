"""Shared helpers: prime enumeration and in-scope instance generation."""
from __future__ import annotations

import math

from gpspec.ff import HypothesisCase, theorem_hypotheses


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(sieve[i * i:: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def in_scope_instances(q_max: int, ks=(3, 4)) -> list[tuple[int, int, int]]:
    """All (k, p, m) with an applicable closed formula and q = p^m <= q_max.

    m = 1 is never in scope (k never divides (q-1)/(p-1) = 1), so primes
    only need to run up to sqrt(q_max).
    """
    out = []
    for k in ks:
        for p in primes_upto(math.isqrt(q_max)):
            m = 2
            while p ** m <= q_max:
                if theorem_hypotheses(k, p, m) is not HypothesisCase.OUT_OF_SCOPE:
                    out.append((k, p, m))
                m += 1
    return out
