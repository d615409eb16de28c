"""Correlation and dilation sums of the Thue-Morse sign under odd multipliers.

For odd q and shift 0 <= r < q:

    S_q(X, r) = sum_{n=1..X} eps(n) * eps(q*n + r)      (correlation)
    U_q(X, r) = sum_{n=1..X} eps(q*n + r)               (dilation)

Both have direct O(X) evaluations and exact halving recursions: splitting
n into even/odd halves the range and maps the shift r to r//2 (even part)
or (q+r-1)//2 / (q+r)//2 (odd part), with a sign flip whenever the mapped
argument is odd.  Carrying the exact half-sizes floor(X/2), floor((X-1)/2)
and the n = 0 base term makes the recursion agree with the direct loop to
the last integer.  The coefficient propagation of the recursion is the
q x q transfer matrix built by ``build_transfer``.
"""

from dataclasses import dataclass

from .digitseq import eps

# direct-loop guard: above this the O(X) paths refuse instead of hanging
NAIVE_LIMIT = 10**7


def _validate(q: int, r: int, X: int) -> None:
    if q < 1 or q % 2 == 0:
        raise ValueError("multiplier must be odd")
    if not 0 <= r < q:
        raise ValueError(f"shift must satisfy 0 <= r < q, got r={r} q={q}")
    if X < 0:
        raise ValueError("X must be nonnegative")


def _check_naive_guard(X: int) -> None:
    if X > NAIVE_LIMIT:
        raise ValueError(f"direct loop refused for X > {NAIVE_LIMIT}; use the fast path")


def corr_naive(q: int, r: int, X: int) -> int:
    """S_q(X, r) by direct summation; O(X) terms."""
    _validate(q, r, X)
    _check_naive_guard(X)
    return sum(eps(n) * eps(q * n + r) for n in range(1, X + 1))


def _corr_prefixed(q: int, Y: int, s: int, memo: dict) -> int:
    """sum_{n=0..Y} eps(n) eps(qn+s), memoized halving recursion."""
    key = (q, Y, s)
    val = memo.get(key)
    if val is not None:
        return val
    if Y == 0:
        val = eps(s)
    elif s % 2 == 0:
        val = (_corr_prefixed(q, Y // 2, s // 2, memo)
               + _corr_prefixed(q, (Y - 1) // 2, (q + s - 1) // 2, memo))
    else:
        val = (-_corr_prefixed(q, Y // 2, (s - 1) // 2, memo)
               - _corr_prefixed(q, (Y - 1) // 2, (q + s) // 2, memo))
    memo[key] = val
    return val


def corr_fast(q: int, r: int, X: int, memo: dict | None = None) -> int:
    """S_q(X, r), identical to corr_naive, in O(q log X).

    ``memo`` may be passed to share work across calls (e.g. sweeps over
    consecutive X); it holds only exact values keyed by (q, Y, s), so
    sharing never changes results.
    """
    _validate(q, r, X)
    if memo is None:
        memo = {}
    return _corr_prefixed(q, X, r, memo) - eps(r)


def _dilation_prefixed(q: int, Y: int, s: int, memo: dict) -> int:
    """sum_{n=0..Y} eps(qn+s); same index maps as the correlation, signs
    from the single factor only."""
    key = (q, Y, s)
    val = memo.get(key)
    if val is not None:
        return val
    if Y == 0:
        val = eps(s)
    elif s % 2 == 0:
        val = (_dilation_prefixed(q, Y // 2, s // 2, memo)
               - _dilation_prefixed(q, (Y - 1) // 2, (q + s - 1) // 2, memo))
    else:
        val = (-_dilation_prefixed(q, Y // 2, (s - 1) // 2, memo)
               + _dilation_prefixed(q, (Y - 1) // 2, (q + s) // 2, memo))
    memo[key] = val
    return val


def dilation_sum(q: int, r: int, X: int, memo: dict | None = None) -> int:
    """U_q(X, r) = sum_{n=1..X} eps(qn+r), memoized recursion; O(q log X)."""
    _validate(q, r, X)
    if memo is None:
        memo = {}
    return _dilation_prefixed(q, X, r, memo) - eps(r)


def dilation_naive(q: int, r: int, X: int) -> int:
    """U_q(X, r) by direct summation; the oracle for dilation_sum."""
    _validate(q, r, X)
    _check_naive_guard(X)
    return sum(eps(q * n + r) for n in range(1, X + 1))


@dataclass(frozen=True)
class CorrelationSystem:
    """Odd multiplier q with the transfer matrix of its shift recursion.

    Row r of ``transfer`` holds the coefficients with which the prefixed
    correlation at shift r decomposes into the half-size correlations;
    the shift alphabet 0..q-1 is closed under the recursion.
    """

    q: int
    transfer: tuple[tuple[int, ...], ...]
    shifts: tuple[int, ...]


def build_transfer(q: int) -> CorrelationSystem:
    """Transfer matrix of the halving recursion for odd q >= 3.

    Row r: +1 at column r//2 and +1 at column (q+r-1)//2 for even r,
    -1 at columns (r-1)//2 and (q+r)//2 for odd r.
    """
    if q < 3 or q % 2 == 0:
        raise ValueError("multiplier must be odd and >= 3")
    rows = []
    for r in range(q):
        row = [0] * q
        if r % 2 == 0:
            cols = (r // 2, (q + r - 1) // 2)
            sign = 1
        else:
            cols = ((r - 1) // 2, (q + r) // 2)
            sign = -1
        for c in cols:
            if not 0 <= c < q:
                raise AssertionError(f"shift alphabet not closed: q={q} r={r} -> {c}")
            row[c] += sign
        if sorted(abs(v) for v in row if v) != [1, 1]:
            raise AssertionError(f"transfer row {r} is not a two-entry sign row: {row}")
        rows.append(tuple(row))
    return CorrelationSystem(q=q, transfer=tuple(rows), shifts=tuple(range(q)))
