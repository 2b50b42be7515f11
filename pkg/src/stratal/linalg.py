"""Sparse exact linear algebra over the rationals.

Matrices are stored column-wise: a column is a dict {row_index: value} whose
values are ints or Fractions; zeros are never stored. Rank and kernel
routines may rescale columns (harmless for spans), so they normalize to
primitive integer columns and run in pure integer arithmetic. Canonical
bases use Fractions (reduced column echelon form, pivot entries 1).
"""

from fractions import Fraction
from math import gcd

# Entries larger than this trigger a gcd renormalization during elimination.
_GROWTH_LIMIT = 1 << 128


def col_primitive(col):
    """Primitive integer copy of a column: denominators cleared, gcd divided out."""
    if not col:
        return {}
    mult = 1
    for v in col.values():
        if isinstance(v, Fraction):
            d = v.denominator
            mult = mult * d // gcd(mult, d)
    out = {r: int(v * mult) for r, v in col.items()}
    g = 0
    for v in out.values():
        g = gcd(g, abs(v))
    if g > 1:
        out = {r: v // g for r, v in out.items()}
    return {r: v for r, v in out.items() if v}


def _combine(a_col, a, b_col, b):
    """a*a_col - b*b_col as a fresh integer column."""
    out = {r: a * v for r, v in a_col.items()}
    for r, v in b_col.items():
        w = out.get(r, 0) - b * v
        if w:
            out[r] = w
        elif r in out:
            del out[r]
    return out


def _shrink(col):
    if not col:
        return col
    big = max(abs(v) for v in col.values())
    if big < _GROWTH_LIMIT:
        return col
    g = 0
    for v in col.values():
        g = gcd(g, abs(v))
    if g > 1:
        return {r: v // g for r, v in col.items()}
    return col


def rank(cols):
    """Rank of the matrix whose columns are `cols`, exact over the rationals."""
    pivots = {}
    for col in cols:
        col = col_primitive(col)
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                break
            col = _shrink(_combine(col, piv[low], piv, col[low]))
    return len(pivots)


def _sub_scaled(target, source, f):
    """target - f*source over Fractions, dropping zeros."""
    out = dict(target)
    for r, v in source.items():
        w = out.get(r, 0) - f * v
        if w:
            out[r] = w
        elif r in out:
            del out[r]
    return out


def kernel(cols, ncols=None):
    """Basis of the kernel of the column matrix, as primitive integer
    combination vectors over the column indices.

    The working column and its tracked combination are updated by the same
    exact Fraction operations, so col = matrix @ combo holds throughout.
    Kernel vectors are emitted in column order; the vector produced while
    processing column j has its largest support index equal to j, which makes
    the output order (and hence downstream bases) deterministic.
    """
    if ncols is None:
        ncols = len(cols)
    pivots = {}
    out = []
    for j in range(ncols):
        col = {r: Fraction(v) for r, v in cols[j].items() if v}
        combo = {j: Fraction(1)}
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = (col, combo)
                combo = None
                break
            pcol, pcombo = piv
            f = col[low] / pcol[low]
            col = _sub_scaled(col, pcol, f)
            combo = _sub_scaled(combo, pcombo, f)
        if combo is not None:
            combo = col_primitive(combo)
            if combo.get(j, 1) < 0:
                combo = {r: -v for r, v in combo.items()}
            out.append(combo)
    return out


def rcef(cols):
    """Reduced column echelon form of the span of `cols`.

    Returns the canonical basis: Fraction columns ordered by pivot row
    (topmost nonzero entry), pivot entries 1, pivot rows cleared from every
    other column. Two inputs span the same subspace iff their rcef is equal.
    """
    basis = {}
    for col in cols:
        work = {r: Fraction(v) for r, v in col.items() if v}
        while work:
            top = min(work)
            if top not in basis:
                pv = work[top]
                basis[top] = {r: v / pv for r, v in work.items()}
                break
            f = work[top]
            ref = basis[top]
            nxt = dict(work)
            for r, v in ref.items():
                w = nxt.get(r, 0) - f * v
                if w:
                    nxt[r] = w
                elif r in nxt:
                    del nxt[r]
            work = nxt
    for top in sorted(basis, reverse=True):
        col = basis[top]
        for other in sorted(r for r in col if r != top and r in basis):
            f = col.get(other)
            if f is None:
                continue
            ref = basis[other]
            for r, v in ref.items():
                w = col.get(r, 0) - f * v
                if w:
                    col[r] = w
                elif r in col:
                    del col[r]
    return [basis[top] for top in sorted(basis)]


def reduce_against(col, echelon):
    """Residual of `col` after elimination by an rcef basis (empty iff in span)."""
    by_top = {min(c): c for c in echelon}
    work = {r: Fraction(v) for r, v in col.items() if v}
    while work:
        top = min(work)
        ref = by_top.get(top)
        if ref is None:
            return work
        f = work[top]
        for r, v in ref.items():
            w = work.get(r, 0) - f * v
            if w:
                work[r] = w
            elif r in work:
                del work[r]
    return work


def in_span(col, echelon):
    return not reduce_against(col, echelon)


def combine_columns(cols, combos):
    """Columns obtained by applying combination vectors to `cols`.

    Each combo is a dict {column_index: coefficient}; the result is the
    corresponding linear combination, one output column per combo.
    """
    out = []
    for combo in combos:
        acc = {}
        for j, coeff in combo.items():
            for r, v in cols[j].items():
                w = acc.get(r, 0) + coeff * v
                if w:
                    acc[r] = w
                elif r in acc:
                    del acc[r]
        out.append(acc)
    return out


def transpose_cols(cols, nrows):
    """Columns of the transpose: entry (r, c) becomes entry (c, r)."""
    out = [{} for _ in range(nrows)]
    for c, col in enumerate(cols):
        for r, v in col.items():
            out[r][c] = v
    return out


def identity_cols(n):
    return [{i: 1} for i in range(n)]


def stack_cols(top_cols, bottom_cols, top_rows):
    """Columns of the vertical stack [A; B]; B's rows are shifted by A's height."""
    out = []
    for a, b in zip(top_cols, bottom_cols):
        col = dict(a)
        for r, v in b.items():
            col[r + top_rows] = v
        out.append(col)
    return out


def solve_square(cols, rhs, n):
    """Solve A x = rhs for square full-rank A given column-wise; exact.

    Returns the solution as a dict {index: Fraction}. Raises ValueError if A
    is singular (callers only pass Gram matrices of independent columns).
    """
    rows = [[Fraction(0)] * (n + 1) for _ in range(n)]
    for c in range(n):
        for r, v in cols[c].items():
            rows[r][c] = Fraction(v)
    for r, v in rhs.items():
        rows[r][n] = Fraction(v)
    for i in range(n):
        piv = next((r for r in range(i, n) if rows[r][i] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        rows[i], rows[piv] = rows[piv], rows[i]
        pv = rows[i][i]
        rows[i] = [v / pv for v in rows[i]]
        for r in range(n):
            if r != i and rows[r][i] != 0:
                f = rows[r][i]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[i])]
    return {i: rows[i][n] for i in range(n) if rows[i][n] != 0}


def dot(a, b):
    if len(a) > len(b):
        a, b = b, a
    total = 0
    for r, v in a.items():
        w = b.get(r)
        if w is not None:
            total += v * w
    return total


def project_onto_span(v, cols):
    """Orthogonal projection of v onto the column span, exact over the rationals."""
    echelon = rcef(cols)
    if not echelon:
        return {}
    k = len(echelon)
    gram = [{i: dot(echelon[i], echelon[j]) for i in range(k) if dot(echelon[i], echelon[j]) != 0}
            for j in range(k)]
    rhs = {i: dot(echelon[i], v) for i in range(k) if dot(echelon[i], v) != 0}
    coeffs = solve_square(gram, rhs, k)
    return combine_columns(echelon, [coeffs])[0]
