"""Fraction-free integer row reduction, pure-Python backend.

All heavy linear algebra in this package reduces to row operations on
matrices with (arbitrary precision) integer entries.  Rational input is
cleared to integers row by row before it gets here; row scaling never
changes a row span or a kernel, so ranks, spans and kernels computed on
the cleared matrix are those of the rational one.

The elimination is fraction-free: a pivot row p and a target row r with
entries a = p[c], b = r[c] in the pivot column are combined as

    r := (a // g) * r - (b // g) * p,        g = gcd(a, b)

and the result is divided by its content (gcd of its entries).  Pivoting
is deterministic: columns are processed left to right and the first row
with a nonzero entry in the current column wins.  ``rref`` finishes with
back substitution, content stripping and positive pivots, which makes the
output the unique canonical integer echelon form of the row span, so the
compiled backend is interchangeable with this one.

Functions here consume their argument: the caller's list of rows is
modified in place and must not be reused.
"""

from math import gcd

BACKEND = "python"


def _content(row, start):
    g = 0
    for c in range(start, len(row)):
        v = row[c]
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def _strip(row, start):
    g = _content(row, start)
    if g > 1:
        for c in range(start, len(row)):
            row[c] //= g
    return row


def _eliminate(rows, ncols):
    """Forward phase; returns pivot columns, leaves echelon rows in place."""
    nrows = len(rows)
    for row in rows:
        _strip(row, 0)
    pivots = []
    r = 0
    for col in range(ncols):
        p = -1
        for i in range(r, nrows):
            if rows[i][col]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        a = prow[col]
        for j in range(r + 1, nrows):
            row = rows[j]
            b = row[col]
            if not b:
                continue
            g = gcd(a, b)
            ma = a // g
            mb = b // g
            row[col] = 0
            for c in range(col + 1, ncols):
                row[c] = ma * row[c] - mb * prow[c]
            _strip(row, col + 1)
        pivots.append(col)
        r += 1
    return pivots


def rank(rows, ncols):
    """Rank of an integer matrix given as a list of rows (consumed)."""
    return len(_eliminate(rows, ncols))


def rref(rows, ncols):
    """Canonical integer reduced row echelon form.

    Returns ``(pivots, rows)`` where ``rows`` are the nonzero rows:
    primitive, positive pivot entries, zeros above and below each pivot.
    This form is unique for the row span, independent of backend.
    """
    pivots = _eliminate(rows, ncols)
    npiv = len(pivots)
    del rows[npiv:]
    for idx in range(npiv - 1, -1, -1):
        pc = pivots[idx]
        prow = rows[idx]
        a = prow[pc]
        for q in range(idx):
            row = rows[q]
            b = row[pc]
            if not b:
                continue
            g = gcd(a, b)
            ma = a // g
            mb = b // g
            if ma != 1:
                for c in range(pivots[q], pc):
                    row[c] *= ma
            row[pc] = 0
            for c in range(pc + 1, ncols):
                row[c] = ma * row[c] - mb * prow[c]
            _strip(row, pivots[q])
    for idx in range(npiv):
        row = rows[idx]
        if row[pivots[idx]] < 0:
            for c in range(pivots[idx], ncols):
                row[c] = -row[c]
    return pivots, rows
