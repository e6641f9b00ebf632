# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python enumeration kernels.

Identical search order, pruning and node accounting; state lives in C
arrays.  Inputs that cannot be held in 64-bit words (huge parts, a rank
past 60, an astronomical budget) raise KernelCapacityError so the
dispatcher reruns the call on the pure kernel instead.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

from .errors import KernelCapacityError

cdef int64_t PART_LIMIT = <int64_t>1 << 31
cdef int64_t BUDGET_LIMIT = <int64_t>1 << 62


cdef struct FillState:
    int n
    int64_t budget
    bint want_witness
    int64_t *a        # 1-based padded parts
    int64_t *g
    int64_t *b
    int64_t *cells    # per-row skew cells
    int64_t *r        # r[i*(n+1)+j]
    int64_t *tot      # copies of each letter in rows above the current one
    int64_t *rowbuf   # materialized rows, one flat buffer
    int64_t *rowoff   # row i occupies rowbuf[rowoff[i] : rowoff[i]+cells[i]]
    int64_t *wit      # snapshot of r at the first leaf
    int64_t count
    int64_t nodes
    bint exhausted
    bint found


cdef void _choose(FillState *s, int i, int j, int64_t remaining) noexcept:
    cdef int64_t hi, lo, avail, ballot, v
    cdef int n = s.n
    if j > n:
        if remaining == 0:
            _row_done(s, i)
        return
    hi = remaining
    avail = s.b[j] - s.tot[j]
    if avail < hi:
        hi = avail
    if j >= 2:
        ballot = s.tot[j - 1] - s.tot[j]
        if ballot < hi:
            hi = ballot
    lo = remaining if j == n else 0
    v = hi
    while v >= lo:
        s.nodes += 1
        if s.nodes > s.budget:
            s.exhausted = True
            return
        s.r[i * (n + 1) + j] = v
        _choose(s, i, j + 1, remaining - v)
        s.r[i * (n + 1) + j] = 0
        if s.exhausted or (s.want_witness and s.found):
            return
        v -= 1


cdef void _row_done(FillState *s, int i) noexcept:
    cdef int n = s.n
    cdef int j
    cdef int64_t c, t, pos, off, prev_off, lo, hi
    s.nodes += s.cells[i]
    if s.nodes > s.budget:
        s.exhausted = True
        return
    off = s.rowoff[i]
    pos = off
    for j in range(1, n + 1):
        for t in range(s.r[i * (n + 1) + j]):
            s.rowbuf[pos] = j
            pos += 1
    if i >= 2:
        prev_off = s.rowoff[i - 1]
        lo = s.a[i - 1] + 1
        hi = s.g[i]
        for c in range(lo, hi + 1):
            if (
                s.rowbuf[off + (c - s.a[i] - 1)]
                <= s.rowbuf[prev_off + (c - s.a[i - 1] - 1)]
            ):
                return
    if i == n:
        s.count += 1
        if s.want_witness and not s.found:
            for j in range((n + 1) * (n + 1)):
                s.wit[j] = s.r[j]
            s.found = True
    else:
        for j in range(1, n + 1):
            s.tot[j] += s.r[i * (n + 1) + j]
        _choose(s, i + 1, 1, s.cells[i + 1])
        for j in range(1, n + 1):
            s.tot[j] -= s.r[i * (n + 1) + j]


def count_fillings(alpha, gamma, beta, n, budget, want_witness):
    if n == 0:
        return 1, ([] if want_witness else None), 0, False
    if n > 60:
        raise KernelCapacityError("rank exceeds the compiled kernel's range")
    for part in alpha:
        if part < 0 or part >= PART_LIMIT:
            raise KernelCapacityError("part exceeds the 64-bit guard")
    for part in gamma:
        if part < 0 or part >= PART_LIMIT:
            raise KernelCapacityError("part exceeds the 64-bit guard")
    for part in beta:
        if part < 0 or part >= PART_LIMIT:
            raise KernelCapacityError("part exceeds the 64-bit guard")
    if budget < 0 or budget >= BUDGET_LIMIT:
        raise KernelCapacityError("budget exceeds the 64-bit guard")

    cdef FillState s
    cdef int nn = n
    cdef int i, j
    cdef int64_t total = 0
    cdef int64_t content = 0

    s.n = nn
    s.budget = budget
    s.want_witness = bool(want_witness)
    s.count = 0
    s.nodes = 0
    s.exhausted = False
    s.found = False

    s.a = <int64_t *> malloc((nn + 2) * sizeof(int64_t))
    s.g = <int64_t *> malloc((nn + 2) * sizeof(int64_t))
    s.b = <int64_t *> malloc((nn + 2) * sizeof(int64_t))
    s.cells = <int64_t *> malloc((nn + 2) * sizeof(int64_t))
    s.rowoff = <int64_t *> malloc((nn + 2) * sizeof(int64_t))
    s.r = <int64_t *> malloc((nn + 1) * (nn + 1) * sizeof(int64_t))
    s.tot = <int64_t *> malloc((nn + 1) * sizeof(int64_t))
    s.wit = <int64_t *> malloc((nn + 1) * (nn + 1) * sizeof(int64_t))
    s.rowbuf = NULL

    try:
        if (
            s.a == NULL or s.g == NULL or s.b == NULL or s.cells == NULL
            or s.rowoff == NULL or s.r == NULL or s.tot == NULL or s.wit == NULL
        ):
            raise MemoryError()

        s.a[0] = 0
        s.g[0] = 0
        s.b[0] = 0
        s.cells[0] = 0
        for i in range(1, nn + 1):
            s.a[i] = alpha[i - 1]
            s.g[i] = gamma[i - 1]
            s.b[i] = beta[i - 1]
            s.cells[i] = s.g[i] - s.a[i]
            if s.cells[i] < 0:
                return 0, None, 0, False
            total += s.cells[i]
        for i in range(1, nn + 1):
            content += s.b[i]
        if total != content:
            return 0, None, 0, False
        if total > s.budget:
            return 0, None, total, True

        s.rowoff[1] = 0
        for i in range(2, nn + 2):
            s.rowoff[i] = s.rowoff[i - 1] + s.cells[i - 1]
        s.rowbuf = <int64_t *> malloc(max(total, 1) * sizeof(int64_t))
        if s.rowbuf == NULL:
            raise MemoryError()

        for j in range((nn + 1) * (nn + 1)):
            s.r[j] = 0
            s.wit[j] = 0
        for j in range(nn + 1):
            s.tot[j] = 0

        _choose(&s, 1, 1, s.cells[1])

        witness = None
        if want_witness and s.found:
            witness = [
                (i, j, s.wit[i * (nn + 1) + j])
                for i in range(1, nn + 1)
                for j in range(1, nn + 1)
                if s.wit[i * (nn + 1) + j]
            ]
        return s.count, witness, s.nodes, s.exhausted
    finally:
        free(s.a)
        free(s.g)
        free(s.b)
        free(s.cells)
        free(s.rowoff)
        free(s.r)
        free(s.tot)
        free(s.wit)
        free(s.rowbuf)


def count_ssyt(shape, n, budget):
    cdef Py_ssize_t k = len(shape)
    if k == 0:
        return 1, 0, False
    if n <= 0:
        return 0, 0, False
    if n >= PART_LIMIT:
        raise KernelCapacityError("rank exceeds the 64-bit guard")
    for part in shape:
        if part < 0 or part >= PART_LIMIT:
            raise KernelCapacityError("part exceeds the 64-bit guard")
    if budget < 0 or budget >= BUDGET_LIMIT:
        raise KernelCapacityError("budget exceeds the 64-bit guard")

    cdef int64_t total = 0
    for part in shape:
        total += part
    if total > budget:
        return 0, total, True

    cdef int64_t *grid = <int64_t *> malloc(max(total, 1) * sizeof(int64_t))
    cdef int64_t *rowof = <int64_t *> malloc(total * sizeof(int64_t))
    cdef int64_t *colof = <int64_t *> malloc(total * sizeof(int64_t))
    cdef int64_t *offsets = <int64_t *> malloc((k + 1) * sizeof(int64_t))
    if grid == NULL or rowof == NULL or colof == NULL or offsets == NULL:
        free(grid)
        free(rowof)
        free(colof)
        free(offsets)
        raise MemoryError()

    cdef int64_t count = 0, nodes = 0, limit = budget
    cdef int64_t nmax = n
    cdef Py_ssize_t pos = 0, last = total - 1
    cdef int64_t row, col, cur, v
    cdef Py_ssize_t idx = 0
    cdef Py_ssize_t rr

    try:
        offsets[0] = 0
        for rr in range(k):
            offsets[rr + 1] = offsets[rr] + shape[rr]
        idx = 0
        for rr in range(k):
            for col in range(shape[rr]):
                rowof[idx] = rr
                colof[idx] = col
                idx += 1
        for idx in range(total):
            grid[idx] = 0

        while pos >= 0:
            row = rowof[pos]
            col = colof[pos]
            cur = grid[offsets[row] + col]
            if cur == 0:
                v = grid[offsets[row] + col - 1] if col else 1
                if row and grid[offsets[row - 1] + col] >= v:
                    v = grid[offsets[row - 1] + col] + 1
            else:
                v = cur + 1
            if v > nmax:
                grid[offsets[row] + col] = 0
                pos -= 1
                continue
            nodes += 1
            if nodes > limit:
                return count, nodes, True
            grid[offsets[row] + col] = v
            if pos == last:
                count += 1
            else:
                pos += 1
        return count, nodes, False
    finally:
        free(grid)
        free(rowof)
        free(colof)
        free(offsets)
