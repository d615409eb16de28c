"""Exact class-pair solution counts for n - q*m = r and adjacent integers.

cells[i][k] counts 1 <= m <= X with m in class i and q*m + r in class k;
all four cells carry the main term X/4.  The fast path evaluates the exact
four-term identity

    4 * cells[i][k] = X + (-1)^i * P + (-1)^k * U + (-1)^(i+k) * S

with P the plain sign partial sum, U the dilation sum, and S the
correlation sum, so fast-vs-naive equality is an exact integer test.
"""

from dataclasses import dataclass

from .digitseq import class_of, eps_partial_sum
from .correlation import NAIVE_LIMIT, corr_fast, dilation_sum


@dataclass(frozen=True)
class CountTable:
    """2x2 table of class-pair counts with quarter-scaled deviations.

    deviations4[i][k] = 4*cells[i][k] - X, i.e. the deviation from the
    main term X/4 in exact quarter units.
    """

    q: int
    r: int
    X: int
    cells: tuple[tuple[int, int], tuple[int, int]]
    deviations4: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        total = sum(v for row in self.cells for v in row)
        if total != self.X:
            raise ValueError(f"cells sum to {total}, expected X={self.X}")

    @property
    def main_term(self) -> float:
        return self.X / 4

    def cell(self, i: int, k: int) -> int:
        return self.cells[i][k]

    def deviation(self, i: int, k: int) -> float:
        """cells[i][k] - X/4; exact (quarters are representable)."""
        return self.deviations4[i][k] / 4

    def max_abs_deviation(self) -> float:
        return max(abs(v) for row in self.deviations4 for v in row) / 4


def _validate(q: int, r: int, X: int, extension: bool) -> None:
    if q < 1 or q % 2 == 0:
        raise ValueError("multiplier must be odd")
    if r < 0 or (not extension and r >= q):
        raise ValueError(f"shift must satisfy 0 <= r < q, got r={r} q={q} "
                         "(pass extension=True to explore r >= q)")
    if X < 0:
        raise ValueError("X must be nonnegative")


def _table(q: int, r: int, X: int, cells) -> CountTable:
    dev4 = tuple(tuple(4 * cells[i][k] - X for k in (0, 1)) for i in (0, 1))
    frozen = tuple(tuple(cells[i][k] for k in (0, 1)) for i in (0, 1))
    return CountTable(q=q, r=r, X=X, cells=frozen, deviations4=dev4)


def count_classes_naive(q: int, r: int, X: int, extension: bool = False) -> CountTable:
    """Direct loop over m = 1..X; the oracle for count_classes_fast.

    extension=True lifts the r < q restriction (exploratory; no main-term
    claim is attached to such shifts).
    """
    _validate(q, r, X, extension)
    if X > NAIVE_LIMIT:
        raise ValueError(f"direct loop refused for X > {NAIVE_LIMIT}; "
                         "use count_classes_fast")
    cells = [[0, 0], [0, 0]]
    for m in range(1, X + 1):
        cells[class_of(m)][class_of(q * m + r)] += 1
    return _table(q, r, X, cells)


def count_classes_fast(q: int, r: int, X: int,
                       corr_memo: dict | None = None,
                       dil_memo: dict | None = None) -> CountTable:
    """Exact table via the four-term identity; O(q log X).

    The optional memo dicts are passed through to the correlation and
    dilation recursions for cross-call sharing in sweeps.
    """
    _validate(q, r, X, extension=False)
    P = eps_partial_sum(X)
    U = dilation_sum(q, r, X, memo=dil_memo)
    S = corr_fast(q, r, X, memo=corr_memo)
    cells = [[0, 0], [0, 0]]
    for i in (0, 1):
        si = -1 if i else 1
        for k in (0, 1):
            sk = -1 if k else 1
            four_cells = X + si * P + sk * U + si * sk * S
            assert four_cells % 4 == 0, "four-term identity must be divisible by 4"
            cells[i][k] = four_cells // 4
    return _table(q, r, X, cells)


def count_adjacent(X: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """F[i][k] = number of m with m+1 <= X, m+1 in class i, m in class k.

    Direct loop with one popcount per step; guarded like the other naive
    paths.
    """
    if X < 0:
        raise ValueError("X must be nonnegative")
    if X > NAIVE_LIMIT:
        raise ValueError(f"adjacent-pair loop refused for X > {NAIVE_LIMIT}")
    F = [[0, 0], [0, 0]]
    if X < 2:
        return ((0, 0), (0, 0))
    prev = 1  # class of m = 1
    for n in range(2, X + 1):
        cls = n.bit_count() & 1
        F[cls][prev] += 1
        prev = cls
    return tuple(tuple(row) for row in F)
