"""Smith normal form over Q[t, t^-1] and small symbolic determinants."""
from __future__ import annotations

from .laurent import LaurentPoly, canonical_poly, divmod_laurent


def _find_pivot(m, p, nrows, ncols):
    """Nonzero entry of minimal degree spread in the trailing submatrix,
    ties broken row-major; None if the submatrix is zero."""
    best = None
    best_spread = None
    for i in range(p, nrows):
        for j in range(p, ncols):
            entry = m[i][j]
            if entry.is_zero:
                continue
            s = entry.spread
            if best is None or s < best_spread:
                best, best_spread = (i, j), s
    return best


def _swap_rows(m, a, b):
    m[a], m[b] = m[b], m[a]


def _swap_cols(m, a, b):
    for row in m:
        row[a], row[b] = row[b], row[a]


def _clear_pivot(m, p, nrows, ncols):
    """Clear row p and column p using the pivot at (p, p).

    Whenever a division leaves a remainder, the remainder (of strictly
    smaller spread) is swapped into the pivot slot and the pass restarts,
    so this terminates.
    """
    while True:
        restarted = False
        for i in range(p + 1, nrows):
            if m[i][p].is_zero:
                continue
            q, r = divmod_laurent(m[i][p], m[p][p])
            for j in range(p, ncols):
                m[i][j] = m[i][j] - q * m[p][j]
            if not r.is_zero:
                _swap_rows(m, p, i)
                restarted = True
                break
        if restarted:
            continue
        for j in range(p + 1, ncols):
            if m[p][j].is_zero:
                continue
            q, r = divmod_laurent(m[p][j], m[p][p])
            for i in range(p, nrows):
                m[i][j] = m[i][j] - q * m[i][p]
            if not r.is_zero:
                _swap_cols(m, p, j)
                restarted = True
                break
        if not restarted:
            return


def smith_normal_form(rows):
    """Invariant factors d1 | d2 | ... | dr of a LaurentPoly matrix,
    each in canonical form; the empty list for a zero or empty matrix."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    diag = []
    p = 0
    while p < nrows and p < ncols:
        piv = _find_pivot(m, p, nrows, ncols)
        if piv is None:
            break
        i, j = piv
        _swap_rows(m, p, i)
        _swap_cols(m, p, j)
        while True:
            _clear_pivot(m, p, nrows, ncols)
            bad = None
            for i in range(p + 1, nrows):
                for j in range(p + 1, ncols):
                    if m[i][j].is_zero:
                        continue
                    _, r = divmod_laurent(m[i][j], m[p][p])
                    if not r.is_zero:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            for j in range(ncols):
                m[p][j] = m[p][j] + m[bad][j]
        diag.append(m[p][p])
        p += 1
    return [canonical_poly(d) for d in diag]


def poly_det(rows, one):
    """Determinant by cofactor expansion; `one` is the ring unit of the
    entry type (used for the empty matrix)."""
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    sign = 1
    for i in range(n):
        entry = rows[i][0]
        if not entry.is_zero:
            sub = [row[1:] for k, row in enumerate(rows) if k != i]
            term = entry * poly_det(sub, one)
            if sign < 0:
                term = -term
            total = term if total is None else total + term
        sign = -sign
    if total is None:
        return one - one
    return total


def minor_matrix(rows, drop_row, drop_col):
    """Matrix with one row and one column removed."""
    return [[entry for j, entry in enumerate(row) if j != drop_col]
            for i, row in enumerate(rows) if i != drop_row]
