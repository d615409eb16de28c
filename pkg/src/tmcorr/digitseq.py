"""Thue-Morse sign sequence, binary digit-sum parity classes, and exact class counts.

The sign eps(n) = (-1)**s(n), with s(n) the number of ones in the binary
expansion of n, splits the naturals into class 0 (even digit sum) and
class 1 (odd digit sum).  Everything here is exact integer arithmetic.
"""

from functools import cache


def eps(n: int) -> int:
    """Sign (-1)**popcount(n) for n >= 0; eps(0) = +1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 1 - 2 * (n.bit_count() & 1)


def class_of(n: int) -> int:
    """Digit-sum parity class: 0 iff eps(n) = +1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n.bit_count() & 1


def eps_partial_sum(X: int) -> int:
    """Sum of eps(n) over 1 <= n <= X, in O(1).

    Consecutive pairs (2k, 2k+1) cancel, so the sum over 0..X is eps(X)
    for even X and 0 for odd X; the n = 0 term (+1) is then removed.
    """
    if X < 0:
        raise ValueError("X must be nonnegative")
    total_from_zero = eps(X) if X % 2 == 0 else 0
    return total_from_zero - 1


def gelfond_count(X: int, l: int, m: int, j: int) -> int:
    """Count n with 1 <= n <= X, n = l (mod m), and parity class j.

    Most-significant-bit-first dynamic program over (position, tight flag,
    residue mod m, digit-sum parity); exact, O(m log X) states.  l is
    reduced mod m on entry.
    """
    if m < 1:
        raise ValueError("modulus m must be >= 1")
    if j not in (0, 1):
        raise ValueError("class index j must be 0 or 1")
    if X < 0:
        raise ValueError("X must be nonnegative")
    l %= m
    if X == 0:
        return 0

    bits = tuple(int(b) for b in bin(X)[2:])
    nbits = len(bits)

    @cache
    def dfs(i: int, tight: bool, r: int, p: int) -> int:
        if i == nbits:
            return 1 if (r == l and p == j) else 0
        hi = bits[i] if tight else 1
        total = 0
        for b in range(hi + 1):
            total += dfs(i + 1, tight and b == hi, (2 * r + b) % m, p ^ b)
        return total

    total = dfs(0, True, 0, 0)
    # dfs counts n in [0, X]; drop the n = 0 solution when it qualifies
    if l == 0 and j == 0:
        total -= 1
    return total
