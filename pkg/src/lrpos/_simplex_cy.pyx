# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python phase-1 simplex kernel.

Same algorithm, same Bland pivot choices, same results.  Entries live in
64-bit words under a conservative magnitude guard (everything below 2^31,
so any product of two entries fits a word); whenever an operand could
outgrow the guard the kernel raises KernelCapacityError and the
dispatcher reruns the identical call on the pure kernel, which has no
width limits.  Exactness is never traded away: within the guard all
arithmetic is exact integer pivoting, outside it the call never runs
here at all.
"""

from fractions import Fraction

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

from .errors import KernelCapacityError

cdef int64_t MAG_LIMIT = <int64_t>1 << 31
cdef int64_t PIVOT_LIMIT = 10_000_000


def solve(num_vars, rows):
    cdef Py_ssize_t nv = num_vars
    cdef Py_ssize_t i, j, enter, leave
    cdef int64_t den = 1, p, f, piv, cross, value, av, maxabs
    cdef int64_t pivots = 0
    cdef int64_t *prow
    cdef int64_t *irow

    # --- standard-form preparation, identical to the pure kernel ---
    n_le = sum(1 for _, _, is_eq in rows if not is_eq)
    base_cols = nv + n_le

    prepared = []
    next_slack = nv
    for coeffs, rhs, is_eq in rows:
        dense = [0] * base_cols
        for col, c in coeffs.items():
            dense[col] = c
        slack = None
        if not is_eq:
            dense[next_slack] = 1
            slack = next_slack
            next_slack += 1
        if rhs < 0:
            dense = [-v for v in dense]
            rhs = -rhs
            slack = None
        prepared.append((dense, rhs, slack))

    n_art = sum(1 for _, _, slack in prepared if slack is None)
    cdef Py_ssize_t ncols = base_cols + n_art
    cdef Py_ssize_t rhs_col = ncols
    cdef Py_ssize_t stride = ncols + 1
    cdef Py_ssize_t nrows = len(prepared)

    matrix_py = []
    basis_py = []
    art_cols = []
    next_art = base_cols
    for dense, rhs, slack in prepared:
        full = dense + [0] * n_art + [rhs]
        if slack is not None:
            basis_py.append(slack)
        else:
            full[next_art] = 1
            basis_py.append(next_art)
            art_cols.append(next_art)
            next_art += 1
        matrix_py.append(full)

    obj_py = [0] * (ncols + 1)
    for row, bcol in zip(matrix_py, basis_py):
        if bcol >= base_cols:
            for j in range(ncols + 1):
                obj_py[j] -= row[j]
    for col in art_cols:
        obj_py[col] += 1

    for row in matrix_py:
        for v in row:
            if v >= MAG_LIMIT or v <= -MAG_LIMIT:
                raise KernelCapacityError("entry exceeds the 64-bit guard")
    for v in obj_py:
        if v >= MAG_LIMIT or v <= -MAG_LIMIT:
            raise KernelCapacityError("entry exceeds the 64-bit guard")

    # --- pack into one flat buffer, objective row last ---
    cdef int64_t *T = <int64_t *> malloc(
        (nrows + 1) * stride * sizeof(int64_t)
    )
    cdef Py_ssize_t *basis = <Py_ssize_t *> malloc(
        max(nrows, 1) * sizeof(Py_ssize_t)
    )
    if T == NULL or basis == NULL:
        free(T)
        free(basis)
        raise MemoryError()

    cdef Py_ssize_t obj_off = nrows * stride

    try:
        for i in range(nrows):
            row = matrix_py[i]
            for j in range(stride):
                T[i * stride + j] = row[j]
            basis[i] = basis_py[i]
        for j in range(stride):
            T[obj_off + j] = obj_py[j]

        while True:
            enter = -1
            for j in range(ncols):
                if T[obj_off + j] < 0:
                    enter = j
                    break
            if enter < 0:
                break

            leave = -1
            for i in range(nrows):
                piv = T[i * stride + enter]
                if piv > 0:
                    if leave < 0:
                        leave = i
                    else:
                        cross = (
                            T[i * stride + rhs_col] * T[leave * stride + enter]
                            - T[leave * stride + rhs_col] * piv
                        )
                        if cross < 0 or (cross == 0 and basis[i] < basis[leave]):
                            leave = i
            if leave < 0:
                raise AssertionError(
                    "phase-1 objective unbounded: kernel invariant violated"
                )
            if pivots >= PIVOT_LIMIT:
                raise RuntimeError("pivot limit exceeded")

            p = T[leave * stride + enter]
            prow = T + leave * stride
            maxabs = 0
            for i in range(nrows + 1):
                if i == leave:
                    continue
                irow = T + i * stride
                f = irow[enter]
                if f == 0:
                    if p != den:
                        for j in range(stride):
                            value = irow[j] * p // den
                            irow[j] = value
                            av = -value if value < 0 else value
                            if av > maxabs:
                                maxabs = av
                else:
                    for j in range(stride):
                        value = (irow[j] * p - f * prow[j]) // den
                        irow[j] = value
                        av = -value if value < 0 else value
                        if av > maxabs:
                            maxabs = av
            den = p
            basis[leave] = enter
            pivots += 1
            if maxabs >= MAG_LIMIT:
                raise KernelCapacityError("tableau outgrew the 64-bit guard")

        feasible = T[obj_off + rhs_col] == 0
        phase1_opt = Fraction(-T[obj_off + rhs_col], den)
        witness = None
        if feasible:
            witness = [Fraction(0)] * nv
            for i in range(nrows):
                if basis[i] < nv:
                    witness[basis[i]] = Fraction(T[i * stride + rhs_col], den)
        return feasible, witness, pivots, phase1_opt
    finally:
        free(T)
        free(basis)
