"""Shared brute-force oracles and corpus helpers.

The enumerators here are deliberately definitional and share no code
with the package: fillings are built cell by cell and checked against
the definitions themselves (weakly increasing rows, strictly increasing
columns, prescribed content, reverse lattice row word with every suffix
recounted from scratch).  Production results are always compared against
these.
"""

import itertools

from lrpos import Partition, partitions_of
from lrpos.polytope import variable_order


def suffix_lattice_ok(word):
    """Independent reverse-lattice check: every suffix, recounted naively."""
    letters = range(1, (max(word) if word else 0) + 1)
    for start in range(len(word)):
        tail = word[start:]
        for j in letters:
            if tail.count(j) < tail.count(j + 1):
                return False
    return True


def semistandard_skew_rows(alpha, beta, gamma, n):
    """Yield every semistandard filling of gamma/alpha with content beta,
    as a tuple of letter rows — WITHOUT the lattice-word condition.

    Brute force: rows of a semistandard tableau are weakly increasing, so
    each row ranges over the multisets of its length; assignments are
    filtered by content and by cell-level column strictness.
    """
    a, b, g = alpha.padded(n), beta.padded(n), gamma.padded(n)
    if any(g[i] < a[i] for i in range(n)):
        return
    row_choices = [
        list(itertools.combinations_with_replacement(range(1, n + 1), g[i] - a[i]))
        for i in range(n)
    ]
    for rows in itertools.product(*row_choices):
        flat = [v for row in rows for v in row]
        if any(flat.count(j) != b[j - 1] for j in range(1, n + 1)):
            continue
        ok = True
        for i in range(1, n):
            upper, lower = rows[i - 1], rows[i]
            for c in range(a[i - 1] + 1, g[i] + 1):
                if lower[c - a[i] - 1] <= upper[c - a[i - 1] - 1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield rows


def rows_to_counts(rows):
    """Letter-count map {(row, letter): count} of a rows tuple."""
    counts = {}
    for i, row in enumerate(rows, start=1):
        for v in row:
            counts[(i, v)] = counts.get((i, v), 0) + 1
    return counts


def naive_lr_fillings(alpha, beta, gamma, n):
    """All valid LR fillings as count-vector tuples over variable_order(n)."""
    order = variable_order(n)
    found = set()
    for rows in semistandard_skew_rows(alpha, beta, gamma, n):
        word = [v for row in reversed(rows) for v in row]
        if not suffix_lattice_ok(word):
            continue
        counts = rows_to_counts(rows)
        # letters above their own row would contradict the word condition
        assert all(j <= i for (i, j) in counts), counts
        found.add(tuple(counts.get(v, 0) for v in order))
    return found


def naive_integer_points(system, alpha, beta, gamma):
    """Nonnegative integer points of the system, by bounded box search."""
    n = system.n
    a, b, g = alpha.padded(n), beta.padded(n), gamma.padded(n)
    bounds = []
    for i, j in system.variables:
        ub = min(g[i - 1] - a[i - 1], b[j - 1])
        if ub < 0:
            return set()
        bounds.append(range(ub + 1))
    points = set()
    for combo in itertools.product(*bounds):
        if all(
            sum(combo[k] * c for k, c in row.coeffs.items()) == row.rhs
            for row in system.eq_rows
        ) and all(
            sum(combo[k] * c for k, c in row.coeffs.items()) <= row.rhs
            for row in system.le_rows
        ):
            points.add(combo)
    return points


def system_integer_points(system):
    """All nonnegative integer points of a system, by pruned DFS.

    Variable bounds are read off the system itself: any equality row with
    all +1 coefficients caps each of its variables by its right-hand
    side.  A row is checked exactly the moment its last variable gets a
    value, so the search discards only assignments that already violate a
    fully determined row — no LR-specific knowledge is used.
    """
    m = system.num_vars
    ub = [None] * m
    for row in system.eq_rows:
        if row.coeffs and all(c == 1 for c in row.coeffs.values()):
            for k in row.coeffs:
                ub[k] = row.rhs if ub[k] is None else min(ub[k], row.rhs)
    if any(u is None for u in ub):
        raise AssertionError("a variable escaped every all-positive equality row")
    if any(u < 0 for u in ub):
        return set()

    checks_at = [[] for _ in range(m)]  # rows whose support ends at var k
    for is_eq, rows in ((True, system.eq_rows), (False, system.le_rows)):
        for row in rows:
            if row.coeffs:
                checks_at[max(row.coeffs)].append((row, is_eq))
            elif (is_eq and row.rhs != 0) or (not is_eq and row.rhs < 0):
                return set()

    points = set()
    values = [0] * m

    def assign(k):
        if k == m:
            points.add(tuple(values))
            return
        for v in range(ub[k] + 1):
            values[k] = v
            ok = True
            for row, is_eq in checks_at[k]:
                total = sum(values[idx] * c for idx, c in row.coeffs.items())
                if (is_eq and total != row.rhs) or (not is_eq and total > row.rhs):
                    ok = False
                    break
            if ok:
                assign(k + 1)
        values[k] = 0

    assign(0)
    return points


def corpus_triples(max_size, max_n):
    """Every (alpha, beta, gamma) with the sweep's size/height bounds."""
    shapes = [p for s in range(max_size + 1) for p in partitions_of(s, max_n)]
    for alpha in shapes:
        for beta in shapes:
            for gamma in partitions_of(alpha.size + beta.size, max_n):
                yield alpha, beta, gamma


def P(text_or_parts):
    """Tiny literal helper: P("2,1") or P([2, 1])."""
    if isinstance(text_or_parts, str):
        from lrpos import parse_partition

        return parse_partition(text_or_parts)
    return Partition(text_or_parts)
