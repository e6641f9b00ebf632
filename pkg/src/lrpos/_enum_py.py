"""Backtracking enumeration kernels (pure Python).

Ground truth for the polytope route: fillings of a skew shape are built
row by row, choosing how many copies of each letter a row receives.
Rows are weakly increasing by construction; column strictness is checked
cell by cell against the materialized previous row, and the reverse
lattice-word property is enforced with running prefix counts (the count
of letter j through row i may never exceed the count of j-1 through row
i-1).  Both checks are exact prunings: no valid completion is ever
discarded.

Every search is metered: each value trial and each materialized cell
costs one node, and the search reports exhaustion the moment the node
budget is crossed.  The compiled twin mirrors this module exactly,
including node accounting, so the two backends are interchangeable.

Kernel interface:

    count_fillings(alpha, gamma, beta, n, budget, want_witness) ->
        (count, witness, nodes, exhausted)
    count_ssyt(shape, n, budget) -> (count, nodes, exhausted)

alpha/gamma/beta are zero-padded length-n lists; witness is a list of
(row, letter, count) triples with positive count (empty list for the
empty filling, None when no filling exists or none was requested).
"""

from __future__ import annotations

import sys


def count_fillings(alpha, gamma, beta, n, budget, want_witness):
    if n == 0:
        return 1, ([] if want_witness else None), 0, False

    a = [0] + list(alpha)
    g = [0] + list(gamma)
    b = [0] + list(beta)
    cells = [0] * (n + 1)
    total = 0
    for i in range(1, n + 1):
        cells[i] = g[i] - a[i]
        if cells[i] < 0:
            return 0, None, 0, False
        total += cells[i]
    if total != sum(b):
        return 0, None, 0, False
    if total > budget:
        return 0, None, total, True

    depth = n * (n + 2) + 64
    if sys.getrecursionlimit() < depth + 128:
        sys.setrecursionlimit(depth + 256)

    r = [[0] * (n + 1) for _ in range(n + 1)]  # r[i][j], 1-based
    tot = [0] * (n + 1)  # copies of each letter in rows < current
    row_letters: list = [None] * (n + 1)

    state = {"count": 0, "nodes": 0, "witness": None, "exhausted": False}

    def choose(i, j, remaining):
        if j > n:
            if remaining == 0:
                row_done(i)
            return
        hi = remaining
        avail = b[j] - tot[j]
        if avail < hi:
            hi = avail
        if j >= 2:
            ballot = tot[j - 1] - tot[j]
            if ballot < hi:
                hi = ballot
        lo = remaining if j == n else 0
        for v in range(hi, lo - 1, -1):
            state["nodes"] += 1
            if state["nodes"] > budget:
                state["exhausted"] = True
                return
            r[i][j] = v
            choose(i, j + 1, remaining - v)
            r[i][j] = 0
            if state["exhausted"] or (want_witness and state["witness"] is not None):
                return

    def row_done(i):
        state["nodes"] += cells[i]
        if state["nodes"] > budget:
            state["exhausted"] = True
            return
        letters = []
        for j in range(1, n + 1):
            letters.extend([j] * r[i][j])
        if i >= 2:
            prev = row_letters[i - 1]
            base_prev = a[i - 1]
            base_cur = a[i]
            # overlap columns: both rows are filled there
            for c in range(base_prev + 1, g[i] + 1):
                if letters[c - base_cur - 1] <= prev[c - base_prev - 1]:
                    return
        row_letters[i] = letters
        if i == n:
            state["count"] += 1
            if want_witness and state["witness"] is None:
                state["witness"] = [
                    (ii, jj, r[ii][jj])
                    for ii in range(1, n + 1)
                    for jj in range(1, n + 1)
                    if r[ii][jj]
                ]
        else:
            for j in range(1, n + 1):
                tot[j] += r[i][j]
            choose(i + 1, 1, cells[i + 1])
            for j in range(1, n + 1):
                tot[j] -= r[i][j]
        row_letters[i] = None

    choose(1, 1, cells[1])
    witness = state["witness"] if want_witness else None
    return state["count"], witness, state["nodes"], state["exhausted"]


def count_ssyt(shape, n, budget):
    """Count semistandard tableaux of a straight shape, entries in [1, n]."""
    k = len(shape)
    if k == 0:
        return 1, 0, False
    if n <= 0:
        return 0, 0, False
    total = sum(shape)
    if total > budget:
        return 0, total, True

    positions = [(row, col) for row in range(k) for col in range(shape[row])]
    last = len(positions) - 1
    grid = [[0] * shape[row] for row in range(k)]
    count = 0
    nodes = 0
    pos = 0
    while pos >= 0:
        row, col = positions[pos]
        cur = grid[row][col]
        if cur == 0:
            v = grid[row][col - 1] if col else 1
            if row and grid[row - 1][col] >= v:
                v = grid[row - 1][col] + 1
        else:
            v = cur + 1
        if v > n:
            grid[row][col] = 0
            pos -= 1
            continue
        nodes += 1
        if nodes > budget:
            return count, nodes, True
        grid[row][col] = v
        if pos == last:
            count += 1
        else:
            pos += 1
    return count, nodes, False
