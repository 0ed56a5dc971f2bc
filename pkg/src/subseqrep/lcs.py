"""Two- and three-way longest-common-subsequence engines.

Both engines answer every prefix of their *last* argument in a single
pass: ``f[k]`` is the LCS length of the fixed arguments against
``last[:k]``.  That all-prefix output is what lets the table builders
in :mod:`subseqrep.tables` amortize one DP over a whole row of interval
end points, so no single-value variant is exposed.

Arguments are any indexable sequences with ``==`` on elements (letter-id
tuples, strings, lists).  Witness reconstruction lives here too since it
shares the recurrences.
"""

from __future__ import annotations


def lcs2_all_prefixes(a, b) -> list[int]:
    """f[k] = LCS(a, b[:k]) for 0 <= k <= len(b).

    O(len(a)*len(b)) time, one rolling row of memory.
    """
    nb = len(b)
    row = [0] * (nb + 1)
    for x in a:
        diag = 0
        for j in range(1, nb + 1):
            cur = row[j]
            if b[j - 1] == x:
                row[j] = diag + 1
            elif row[j - 1] > cur:
                row[j] = row[j - 1]
            diag = cur
    return row


def lcs3_all_prefixes(a, b, c) -> list[int]:
    """f[k] = LCS(a, b, c[:k]) for 0 <= k <= len(c).

    O(len(a)*len(b)*len(c)) time; two (|b|+1)x(|c|+1) layers rolled over
    ``a``.  The final layer's last row is the prefix vector.
    """
    nb, nc = len(b), len(c)
    width = nc + 1
    size = (nb + 1) * width
    prev = [0] * size
    cur = [0] * size
    for x in a:
        off = 0
        for j in range(1, nb + 1):
            prev_off = off
            off += width
            match_b = b[j - 1] == x
            for k in range(1, nc + 1):
                if match_b and c[k - 1] == x:
                    v = prev[prev_off + k - 1] + 1
                else:
                    v = prev[off + k]
                    up = cur[prev_off + k]
                    if up > v:
                        v = up
                    left = cur[off + k - 1]
                    if left > v:
                        v = left
                cur[off + k] = v
        prev, cur = cur, prev
    return prev[nb * width :]


def lcs2_witness(a, b) -> tuple[list, list[int], list[int]]:
    """A longest common subsequence of ``a`` and ``b`` with 1-based positions.

    Deterministic: walks forward, consuming a match at the earliest
    position pair whenever that is optimal, otherwise advancing ``a``
    first.
    """
    na, nb = len(a), len(b)
    suf = [[0] * (nb + 1) for _ in range(na + 1)]
    for i in range(na - 1, -1, -1):
        row = suf[i]
        below = suf[i + 1]
        for j in range(nb - 1, -1, -1):
            if a[i] == b[j]:
                row[j] = below[j + 1] + 1
            else:
                row[j] = below[j] if below[j] >= row[j + 1] else row[j + 1]
    word: list = []
    pa: list[int] = []
    pb: list[int] = []
    i = j = 0
    while i < na and j < nb:
        if a[i] == b[j] and suf[i][j] == suf[i + 1][j + 1] + 1:
            word.append(a[i])
            pa.append(i + 1)
            pb.append(j + 1)
            i += 1
            j += 1
        elif suf[i + 1][j] == suf[i][j]:
            i += 1
        else:
            j += 1
    return word, pa, pb


def lcs3_witness(a, b, c) -> tuple[list, list[int], list[int], list[int]]:
    """A longest common subsequence of three arguments with per-argument positions.

    Same forward tie-break as :func:`lcs2_witness`, advancing the
    earliest-listed argument on non-matches.
    """
    na, nb, nc = len(a), len(b), len(c)
    suf = [[[0] * (nc + 1) for _ in range(nb + 1)] for _ in range(na + 1)]
    for i in range(na - 1, -1, -1):
        for j in range(nb - 1, -1, -1):
            row = suf[i][j]
            for k in range(nc - 1, -1, -1):
                if a[i] == b[j] == c[k]:
                    row[k] = suf[i + 1][j + 1][k + 1] + 1
                else:
                    row[k] = max(suf[i + 1][j][k], suf[i][j + 1][k], row[k + 1])
    word: list = []
    pa: list[int] = []
    pb: list[int] = []
    pc: list[int] = []
    i = j = k = 0
    while i < na and j < nb and k < nc:
        v = suf[i][j][k]
        if a[i] == b[j] == c[k] and v == suf[i + 1][j + 1][k + 1] + 1:
            word.append(a[i])
            pa.append(i + 1)
            pb.append(j + 1)
            pc.append(k + 1)
            i += 1
            j += 1
            k += 1
        elif suf[i + 1][j][k] == v:
            i += 1
        elif suf[i][j + 1][k] == v:
            j += 1
        else:
            k += 1
    return word, pa, pb, pc
