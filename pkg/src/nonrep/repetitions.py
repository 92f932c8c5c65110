"""Detection and quantification of repetitions in words: squares with bounded
period, maximal exponents, freeness checks, and directedness checks.

The reference algorithms are deliberately simple (quadratic scans with early
exit); the exhaustive oracle tests pin their behaviour, and any optimization
elsewhere must agree with them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import PowerFreeSpec, factors


@dataclass(frozen=True)
class Repetition:
    """A located factor w[start : start+length] having period `period`."""

    start: int
    length: int
    period: int

    def __post_init__(self):
        if not 1 <= self.period <= self.length:
            raise ValueError("need 1 <= period <= length")

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    def describe(self) -> str:
        e = self.exponent
        return f"start={self.start} len={self.length} period={self.period} exp={e.numerator}/{e.denominator}"


@dataclass(frozen=True)
class DirectednessSpec:
    """Window length for the directedness check."""

    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("window length must be >= 1")


def smallest_period(w: str) -> int:
    """Smallest p with w[i] == w[i+p] for all valid i (failure-function method)."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no period")
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return n - fail[n - 1]


def find_squares(w: str, min_period: int, max_period: int) -> list[Repetition]:
    """All square occurrences in w with period in [min_period, max_period],
    sorted by (start, period)."""
    if not 1 <= min_period <= max_period:
        raise ValueError("need 1 <= min_period <= max_period")
    n = len(w)
    out = []
    for start in range(n):
        top = min(max_period, (n - start) // 2)
        for p in range(min_period, top + 1):
            if w[start:start + p] == w[start + p:start + 2 * p]:
                out.append(Repetition(start, 2 * p, p))
    return out


def _run_length(w: str, start: int, p: int) -> int:
    """Length of the longest factor starting at `start` with period p."""
    n = len(w)
    i = start + p
    while i < n and w[i] == w[i - p]:
        i += 1
    return i - start


def max_exponent(w: str, min_period: int) -> Fraction:
    """Maximum of length/smallest-period over factors whose smallest period is
    at least min_period; 0 if no factor qualifies."""
    if min_period < 1:
        raise ValueError("min_period must be >= 1")
    n = len(w)
    best = Fraction(0)
    for start in range(n):
        # incremental failure function over w[start:], giving the smallest
        # period of every factor starting at `start`
        fail = [0] * (n - start)
        k = 0
        sub = w[start:]
        for i in range(len(sub)):
            if i:
                while k and sub[i] != sub[k]:
                    k = fail[k - 1]
                if sub[i] == sub[k]:
                    k += 1
                fail[i] = k
            sp = (i + 1) - fail[i]
            if sp >= min_period:
                e = Fraction(i + 1, sp)
                if e > best:
                    best = e
    return best


def is_power_free(w: str, spec: PowerFreeSpec) -> Repetition | None:
    """None if w contains no repetition violating spec; otherwise the violating
    repetition with smallest start, then smallest period, reported at its
    maximal length (the full periodic run)."""
    n = len(w)
    num = spec.exponent_bound.numerator
    den = spec.exponent_bound.denominator
    for start in range(n):
        for p in range(spec.min_period, n - start):
            if w[start + p] != w[start]:
                continue
            run = _run_length(w, start, p)
            # smallest violating length for this period
            if spec.strict:
                need = (num * p) // den + 1
            else:
                need = -(-(num * p) // den)  # ceil
            if need > p and run >= need:
                return Repetition(start, run, p)
    return None


def is_d_directed(w: str, d: int) -> tuple[str, str] | None:
    """None if no length-d factor of w has its reversal also a factor of w;
    otherwise the lexicographically least offending (factor, reversed factor)
    pair.  A palindromic factor offends by definition."""
    if d < 1:
        raise ValueError("window length must be >= 1")
    if len(w) < d:
        return None
    fs = factors(w, d)
    for f in sorted(fs):
        if f[::-1] in fs:
            return f, f[::-1]
    return None
