"""All-substrings longest-square and longest-cubic tables.

For every interval [i, j] of the input, ``square_table`` stores the
length of the longest square subsequence (0 if none) and ``cube_table``
the longest cubic one.  Both run one all-prefix LCS per cut inside each
suffix, so a single DP pass fills a whole row of end points:

  square: for suffix start s and cut m, LCS(S[s..m], S[m+1..n])
          against every prefix of the second part covers Q[s, m+k].
  cube:   same with cut pairs (c1, c2) and the 3-way engine.

That is O(n^4) total for squares and O(n^6) for cubes with table-only
O(n^2) extra space (the 3-way DP itself rolls its layers).

Witnesses are rebuilt on demand per interval -- storing tracebacks for
all O(n^2) intervals would dwarf the tables themselves.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .core import Block, Sequence, SrsDecomposition
from .lcs import lcs2_all_prefixes, lcs2_witness, lcs3_all_prefixes, lcs3_witness

INT_KINDS = ("square", "cube", "covered-square", "covered-cube", "feasible-length")
SET_KINDS = ("cover", "cover-twice", "cover-thrice")


class IntervalTable:
    """Triangular map (i, j) -> value for 1 <= i <= j <= n."""

    __slots__ = ("n", "kind", "rows")

    def __init__(self, n: int, kind: str, fill=0):
        if kind not in INT_KINDS and kind not in SET_KINDS:
            raise ValueError(f"unknown table kind {kind!r}")
        self.n = n
        self.kind = kind
        self.rows = [[fill] * (n - i) for i in range(n)]

    def get(self, i: int, j: int):
        if not 1 <= i <= j <= self.n:
            raise IndexError(f"interval ({i},{j}) outside 1..{self.n}")
        return self.rows[i - 1][j - i]

    def set(self, i: int, j: int, value) -> None:
        if not 1 <= i <= j <= self.n:
            raise IndexError(f"interval ({i},{j}) outside 1..{self.n}")
        self.rows[i - 1][j - i] = value

    def __getitem__(self, ij):
        return self.get(*ij)

    def cells(self):
        for i in range(1, self.n + 1):
            row = self.rows[i - 1]
            for j in range(i, self.n + 1):
                yield i, j, row[j - i]

    def __eq__(self, other):
        return (
            isinstance(other, IntervalTable)
            and self.n == other.n
            and self.kind == other.kind
            and self.rows == other.rows
        )


def _run_rows(row_fn, n: int, threads: int) -> list:
    """Row per suffix start; thread count must not change the result."""
    starts = range(1, n + 1)
    if threads <= 1 or n <= 1:
        return [row_fn(s) for s in starts]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(row_fn, starts))


def _square_row(letters: tuple[int, ...], s: int) -> list[int]:
    n = len(letters)
    best = [0] * (n - s + 1)
    for m in range(s, n):
        f = lcs2_all_prefixes(letters[s - 1 : m], letters[m:])
        base = m - s
        for k in range(1, n - m + 1):
            v = f[k]
            if v:
                v += v
                idx = base + k
                if v > best[idx]:
                    best[idx] = v
    return best


def _cube_row(letters: tuple[int, ...], s: int) -> list[int]:
    n = len(letters)
    best = [0] * (n - s + 1)
    for c1 in range(s, n - 1):
        a = letters[s - 1 : c1]
        for c2 in range(c1 + 1, n):
            f = lcs3_all_prefixes(a, letters[c1:c2], letters[c2:])
            base = c2 - s
            for k in range(1, n - c2 + 1):
                v = f[k]
                if v:
                    v += v + v
                    idx = base + k
                    if v > best[idx]:
                        best[idx] = v
    return best


def square_table(seq: Sequence, threads: int = 1) -> IntervalTable:
    """Longest square subsequence length for every interval; O(n^4)."""
    letters = seq.letters
    table = IntervalTable(seq.n, "square")
    table.rows = _run_rows(lambda s: _square_row(letters, s), seq.n, threads)
    _check_repeat_table(table, 2)
    return table


def cube_table(seq: Sequence, threads: int = 1) -> IntervalTable:
    """Longest cubic subsequence length for every interval; O(n^6)."""
    letters = seq.letters
    table = IntervalTable(seq.n, "cube")
    table.rows = _run_rows(lambda s: _cube_row(letters, s), seq.n, threads)
    _check_repeat_table(table, 3)
    return table


def _check_repeat_table(table: IntervalTable, divisor: int) -> None:
    """Divisibility and containment monotonicity; cheap next to construction."""
    n = table.n
    rows = table.rows
    for i in range(1, n + 1):
        row = rows[i - 1]
        for j in range(i, n + 1):
            v = row[j - i]
            if v < 0 or v % divisor:
                raise AssertionError(
                    f"{table.kind} table cell ({i},{j}) = {v} violates divisibility"
                )
            if j < n and row[j - i + 1] < v:
                raise AssertionError(f"{table.kind} table not monotone at ({i},{j})")
            if i > 1 and rows[i - 2][j - i + 1] < v:
                raise AssertionError(f"{table.kind} table not monotone at ({i},{j})")


def _bounds_check(seq: Sequence, i: int, j: int) -> None:
    if not 1 <= i <= j <= seq.n:
        raise ValueError(f"interval ({i},{j}) outside 1..{seq.n}")


def square_witness(seq: Sequence, i: int, j: int) -> SrsDecomposition | None:
    """Single exponent-2 block of length Q2[i, j], or None when that is 0.

    Re-derives the best cut for the interval (smallest cut wins ties),
    then runs an LCS traceback across it.
    """
    _bounds_check(seq, i, j)
    letters = seq.letters
    best_val = 0
    best_m = -1
    for m in range(i, j):
        f = lcs2_all_prefixes(letters[i - 1 : m], letters[m:j])
        if f[j - m] > best_val:
            best_val = f[j - m]
            best_m = m
    if best_val == 0:
        return None
    word, pa, pb = lcs2_witness(letters[i - 1 : best_m], letters[best_m : j])
    copy1 = tuple(i - 1 + p for p in pa)
    copy2 = tuple(best_m + p for p in pb)
    return SrsDecomposition((Block(tuple(word), 2, (copy1, copy2)),))


def cube_witness(seq: Sequence, i: int, j: int) -> SrsDecomposition | None:
    """Single exponent-3 block of length Q3[i, j], or None when that is 0.

    Ties broken by the smallest (c1, c2) cut pair.
    """
    _bounds_check(seq, i, j)
    letters = seq.letters
    best_val = 0
    best_cuts = None
    for c1 in range(i, j - 1):
        a = letters[i - 1 : c1]
        for c2 in range(c1 + 1, j):
            f = lcs3_all_prefixes(a, letters[c1:c2], letters[c2:j])
            if f[j - c2] > best_val:
                best_val = f[j - c2]
                best_cuts = (c1, c2)
    if best_val == 0:
        return None
    c1, c2 = best_cuts
    word, pa, pb, pc = lcs3_witness(
        letters[i - 1 : c1], letters[c1:c2], letters[c2:j]
    )
    copies = (
        tuple(i - 1 + p for p in pa),
        tuple(c1 + p for p in pb),
        tuple(c2 + p for p in pc),
    )
    return SrsDecomposition((Block(tuple(word), 3, copies),))
