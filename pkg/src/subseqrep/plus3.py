"""Full-coverage repeat solver for sequences whose letters occur at most 3 times.

With every letter appearing 2 or 3 times, any solution block is a square
or a cube, and the letters a local solution must cover are pinned down
by per-interval occurrence counts:

  cover[i,j]        letters occurring >= 2 times in S[i..j]
  cover2[i,j]       == cover[i,j] when some letter occurs exactly twice, else {}
  cover3[i,j]       letters occurring exactly 3 times when none occurs twice, else {}

A square inside [i, j] can use each covered letter at most once per
half, so a covering square has length exactly 2*|set| and existence
reduces to comparing the unconstrained square table entry against that
bound.  A covering cube is unique when it exists: the subsequence of
cover3-letters split into equal thirds.

Interval lengths L[i,j] (-1 = infeasible) start from those local
solutions and combine bottom-up over splits whose two sides are both
feasible and jointly cover cover[i,j].  Feasibility of the whole
sequence is L[1,n] > 0.  Total O(n^4), dominated by the square table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Block,
    OccurrenceIndex,
    Sequence,
    SrsDecomposition,
    merge_blocks,
    validate_srs,
)
from .tables import IntervalTable, square_table, square_witness


class OccurrenceBoundError(Exception):
    """Some letter occurs more than 3 times.

    Feasibility testing with occurrence bound 4 or more is NP-complete;
    this solver only handles the bound-3 case.  Use the hardness module
    to build such instances, or the brute-force oracles on tiny ones.
    """


@dataclass(frozen=True)
class CoverageTables:
    cover: IntervalTable
    cover2: IntervalTable
    cover3: IntervalTable


@dataclass(frozen=True)
class FeasibilityTables:
    s2: IntervalTable
    s3: IntervalTable
    length: IntervalTable
    trace: dict


@dataclass(frozen=True)
class Plus3Result:
    feasible: bool
    length: int
    decomposition: SrsDecomposition | None


def precheck(seq: Sequence) -> OccurrenceIndex:
    """Occurrence index of ``seq``; rejects sequences with a letter beyond 3."""
    index = OccurrenceIndex.from_sequence(seq)
    d = index.max_occurrence
    if d > 3:
        raise OccurrenceBoundError(
            f"occurrence bound exceeded: some letter appears {d} times (limit 3); "
            "the constrained problem is NP-complete from 4 occurrences up"
        )
    return index


def _cover_masks(seq: Sequence) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Bitmask rows (letter id = bit) for cover / cover2 / cover3 per interval."""
    n = seq.n
    letters = seq.letters
    sigma = seq.alphabet_size
    rows_c: list[list[int]] = []
    rows_c2: list[list[int]] = []
    rows_c3: list[list[int]] = []
    for i in range(1, n + 1):
        counts = [0] * sigma
        repeated = 0
        thrice = 0
        twice_count = 0
        row_c = [0] * (n - i + 1)
        row_c2 = [0] * (n - i + 1)
        row_c3 = [0] * (n - i + 1)
        for j in range(i, n + 1):
            a = letters[j - 1]
            c = counts[a] + 1
            counts[a] = c
            if c == 2:
                repeated |= 1 << a
                twice_count += 1
            elif c == 3:
                thrice |= 1 << a
                twice_count -= 1
            idx = j - i
            row_c[idx] = repeated
            if twice_count:
                row_c2[idx] = repeated
            else:
                row_c3[idx] = thrice
        rows_c.append(row_c)
        rows_c2.append(row_c2)
        rows_c3.append(row_c3)
    return rows_c, rows_c2, rows_c3


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    a = 0
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return frozenset(out)


def coverage_tables(seq: Sequence) -> CoverageTables:
    """Set-valued coverage tables for every interval; O(n^3) total."""
    precheck(seq)
    n = seq.n
    rows_c, rows_c2, rows_c3 = _cover_masks(seq)
    cover = IntervalTable(n, "cover", frozenset())
    cover2 = IntervalTable(n, "cover-twice", frozenset())
    cover3 = IntervalTable(n, "cover-thrice", frozenset())
    for i in range(1, n + 1):
        cover.rows[i - 1] = [_mask_to_set(m) for m in rows_c[i - 1]]
        cover2.rows[i - 1] = [_mask_to_set(m) for m in rows_c2[i - 1]]
        cover3.rows[i - 1] = [_mask_to_set(m) for m in rows_c3[i - 1]]
    return CoverageTables(cover, cover2, cover3)


def s3_table(seq: Sequence, cov: CoverageTables, q2: IntervalTable) -> IntervalTable:
    """Best covering cube (or square fallback) per interval, -1 when none.

    Entries are 3*|cover3| for the unique covering cube, else 2*|cover3|
    when the longest square reaches that length (such a square covers
    every cover3-letter: each can occur at most once per half), else -1.
    """
    n = seq.n
    letters = seq.letters
    table = IntervalTable(n, "covered-cube", -1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            want = cov.cover3.get(i, j)
            if not want:
                continue
            restricted = [a for a in letters[i - 1 : j] if a in want]
            size = len(want)
            if len(restricted) != 3 * size:
                raise AssertionError("cover3 letters must occur exactly 3 times")
            if restricted[:size] == restricted[size : 2 * size] == restricted[2 * size :]:
                table.set(i, j, 3 * size)
            elif q2.get(i, j) == 2 * size:
                table.set(i, j, 2 * size)
    return table


def s2_table(seq: Sequence, cov: CoverageTables, q2: IntervalTable) -> IntervalTable:
    """Best covering square per interval, -1 when none (same length test)."""
    n = seq.n
    table = IntervalTable(n, "covered-square", -1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            want = cov.cover2.get(i, j)
            if want and q2.get(i, j) == 2 * len(want):
                table.set(i, j, 2 * len(want))
    return table


def feasibility_tables(
    seq: Sequence, q2: IntervalTable | None = None, threads: int = 1
) -> FeasibilityTables:
    """Interval DP over covering solutions; trace records how each cell was won."""
    precheck(seq)
    n = seq.n
    if q2 is None:
        q2 = square_table(seq, threads)
    cov = coverage_tables(seq)
    s3 = s3_table(seq, cov, q2)
    s2 = s2_table(seq, cov, q2)
    rows_c, _, rows_c3 = _cover_masks(seq)

    length = IntervalTable(n, "feasible-length", -1)
    trace: dict = {}
    for span in range(2, n + 1):
        for i in range(1, n - span + 2):
            j = i + span - 1
            v3 = s3.get(i, j)
            v2 = s2.get(i, j)
            if v3 > 0:
                best = v3
                is_cube = v3 == 3 * rows_c3[i - 1][j - i].bit_count()
                kind: tuple = ("cube3",) if is_cube else ("square3",)
            elif v2 > 0:
                best = v2
                kind = ("square2",)
            else:
                best = -1
                kind = ()
            whole = rows_c[i - 1][j - i]
            row_i = rows_c[i - 1]
            for k in range(i, j):
                left = length.get(i, k)
                if left <= 0:
                    continue
                right = length.get(k + 1, j)
                if right <= 0:
                    continue
                left_mask = row_i[k - i]
                right_mask = rows_c[k][j - k - 1]
                if left_mask | right_mask != whole:
                    continue
                if left_mask & right_mask:
                    raise AssertionError(
                        "repeat sets of split parts must be disjoint at bound 3"
                    )
                if left + right > best:
                    best = left + right
                    kind = ("split", k)
            if best > 0:
                length.set(i, j, best)
                trace[(i, j)] = kind
    return FeasibilityTables(s2, s3, length, trace)


def _rebuild(seq: Sequence, tabs: FeasibilityTables, rows_c3, i: int, j: int) -> list[Block]:
    kind = tabs.trace[(i, j)]
    if kind[0] == "split":
        k = kind[1]
        return _rebuild(seq, tabs, rows_c3, i, k) + _rebuild(seq, tabs, rows_c3, k + 1, j)
    if kind[0] == "cube3":
        mask = rows_c3[i - 1][j - i]
        positions = [
            p for p in range(i, j + 1) if mask >> seq.letters[p - 1] & 1
        ]
        size = len(positions) // 3
        root = tuple(seq.letters[p - 1] for p in positions[:size])
        copies = (
            tuple(positions[:size]),
            tuple(positions[size : 2 * size]),
            tuple(positions[2 * size :]),
        )
        return [Block(root, 3, copies)]
    # covering square: the interval's longest square has exactly the wanted
    # length, so the generic witness already covers the required set
    want = tabs.s3.get(i, j) if kind[0] == "square3" else tabs.s2.get(i, j)
    wit = square_witness(seq, i, j)
    if wit is None or wit.total_length != want:
        raise AssertionError("square witness does not match covered-square entry")
    return [wit.blocks[0]]


def lsrs_plus3(
    seq: Sequence, q2: IntervalTable | None = None, threads: int = 1
) -> Plus3Result:
    """Longest repeat subsequence covering the whole alphabet, at occurrence bound 3.

    Returns infeasible (length -1) when any letter occurs exactly once
    or when no covering solution exists.
    """
    index = precheck(seq)
    n = seq.n
    if n == 0:
        return Plus3Result(True, 0, SrsDecomposition(()))
    if index.singletons():
        return Plus3Result(False, -1, None)
    tabs = feasibility_tables(seq, q2=q2, threads=threads)
    best = tabs.length.get(1, n) if n >= 2 else -1
    if best <= 0:
        return Plus3Result(False, -1, None)
    _, _, rows_c3 = _cover_masks(seq)
    blocks = _rebuild(seq, tabs, rows_c3, 1, n)
    dec = merge_blocks(SrsDecomposition(tuple(blocks)))
    if dec.total_length != best:
        raise AssertionError(f"witness length {dec.total_length} != optimum {best}")
    problems = validate_srs(seq, dec, frozenset(range(seq.alphabet_size)))
    if problems:
        raise AssertionError(f"witness failed validation: {problems}")
    return Plus3Result(True, best, dec)


def ft3(seq: Sequence) -> bool:
    """Does some repeat subsequence cover the whole alphabet?"""
    return lsrs_plus3(seq).feasible
