"""Signed exponential sums over the Thue-Morse sign with exact rational phases.

    f(X, alpha) = sum_{n=0..X-1} eps(n) * e^{2 pi i alpha n}

Phases are kept as reduced fractions so that the halving recursion can
double alpha exactly (integer arithmetic mod 1); repeatedly doubling a
floating-point phase would lose the phase entirely after ~50 levels.
"""

import cmath
import math
from dataclasses import dataclass

from .digitseq import eps

NAIVE_LIMIT = 10**7
MAX_PRODUCT_LEVELS = 50
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RationalPhase:
    """Phase p/q reduced mod 1; 0 <= p < q and gcd(p, q) = 1."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("denominator must be positive")
        p = self.p % self.q
        g = math.gcd(p, self.q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", self.q // g)

    def double(self) -> "RationalPhase":
        """2*alpha mod 1, exactly."""
        return RationalPhase(2 * self.p, self.q)

    def cis(self) -> complex:
        """e^{2 pi i p/q}."""
        return cmath.exp(1j * _TWO_PI * self.p / self.q)

    @property
    def value(self) -> float:
        return self.p / self.q


def expsum_naive(alpha: RationalPhase, X: int) -> complex:
    """Direct left-to-right evaluation of f(X, alpha); guarded O(X) loop.

    The phase of term n is the exact root of unity e^{2 pi i (p n mod q)/q},
    tracked by integer steps, so there is no accumulated angle drift.
    """
    if X < 0:
        raise ValueError("X must be nonnegative")
    if X > NAIVE_LIMIT:
        raise ValueError(f"direct loop refused for X > {NAIVE_LIMIT}; use expsum_fast")
    q = alpha.q
    table = [cmath.exp(1j * _TWO_PI * k / q) for k in range(q)]
    total = 0j
    idx = 0
    for n in range(X):
        total += eps(n) * table[idx]
        idx = (idx + alpha.p) % q
    return total


def expsum_fast(alpha: RationalPhase, X: int) -> complex:
    """f(X, alpha) by ceil/floor halving; O(log X) complex operations.

    Recursion: f(X) at phase a equals f(ceil(X/2)) - e(a) * f(floor(X/2)),
    both at phase 2a; bases f(0) = 0, f(1) = 1.  At most two range sizes
    occur per doubling level, so the memo stays logarithmic.
    """
    if X < 0:
        raise ValueError("X must be nonnegative")
    memo: dict[tuple[int, int, int], complex] = {}

    def f(Y: int, ph: RationalPhase) -> complex:
        if Y == 0:
            return 0j
        if Y == 1:
            return 1 + 0j
        key = (Y, ph.p, ph.q)
        val = memo.get(key)
        if val is not None:
            return val
        doubled = ph.double()
        val = f((Y + 1) // 2, doubled) - ph.cis() * f(Y // 2, doubled)
        memo[key] = val
        return val

    return f(X, alpha)


def product_formula(alpha: RationalPhase, k: int) -> complex:
    """prod_{j=0..k-1} (1 - e^{2 pi i 2^j alpha}), the closed form of
    f(2^k, alpha)."""
    if not 0 <= k <= MAX_PRODUCT_LEVELS:
        raise ValueError(f"k must lie in 0..{MAX_PRODUCT_LEVELS}")
    result = 1 + 0j
    ph = alpha
    for _ in range(k):
        result *= 1 - ph.cis()
        ph = ph.double()
    return result


@dataclass(frozen=True)
class ScanResult:
    """Maximum modulus of f(X, p/grid) over p = 1..grid-1."""

    X: int
    grid: int
    max_modulus: float
    argmax_p: int


def scan_alpha(X: int, grid: int) -> ScanResult:
    """Deterministic phase scan; ties keep the lowest numerator p."""
    if grid < 2:
        raise ValueError("grid must be >= 2")
    if X < 0:
        raise ValueError("X must be nonnegative")
    best_mod = -1.0
    best_p = 1
    for p in range(1, grid):
        mod = abs(expsum_fast(RationalPhase(p, grid), X))
        if mod > best_mod:
            best_mod, best_p = mod, p
    return ScanResult(X=X, grid=grid, max_modulus=best_mod, argmax_p=best_p)
