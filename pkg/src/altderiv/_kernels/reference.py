"""Pure-Python integer elimination kernels.

These are the hot inner loops of the engine: canonical integer echelon
reduction, incremental kernel intersection, and integer matrix products.
Everything operates on plain Python ints, so results are exact for inputs
of any size.  The compiled twin in ``_speedups.pyx`` implements the same
contracts with an int64 fast path and falls back to object arithmetic
when magnitudes grow past its guards.
"""

from math import gcd

BACKEND = "pure"


def _content_normalize(vec):
    """Divide vec by the gcd of its entries (in place); return the pivot index.

    The first nonzero entry is made positive.  Returns None for the zero
    vector.
    """
    g = 0
    pivot = None
    for i, x in enumerate(vec):
        if x:
            if pivot is None:
                pivot = i
            g = gcd(g, x)
            if g == 1 and vec[pivot] > 0:
                return pivot
    if pivot is None:
        return None
    if vec[pivot] < 0:
        g = -g
    if g != 1:
        for i in range(pivot, len(vec)):
            vec[i] //= g
    return pivot


def echelon(rows, ncols):
    """Reduce integer rows to the canonical echelon form of their row space.

    Returns (pivot_cols, echelon_rows) where echelon_rows[k] is a primitive
    integer vector (content 1) with positive leading entry at pivot_cols[k],
    zeros at every other pivot column, and pivot_cols is strictly increasing.
    Dividing each row by its pivot value yields the unique rational RREF.
    Input rows are not modified; zero rows are dropped.
    """
    erows = []  # list of [pivot_col, row]
    for row in rows:
        row = list(row)
        for p, er in erows:
            v = row[p]
            if v:
                a = er[p]
                g = gcd(a, v)
                a_, v_ = a // g, v // g
                for t in range(ncols):
                    row[t] = a_ * row[t] - v_ * er[t]
        p = _content_normalize(row)
        if p is None:
            continue
        for ent in erows:
            q, er = ent
            v = er[p]
            if v:
                a = row[p]
                g = gcd(a, v)
                a_, v_ = a // g, v // g
                for t in range(ncols):
                    er[t] = a_ * er[t] - v_ * row[t]
                _content_normalize(er)
        erows.append([p, row])
    erows.sort(key=lambda ent: ent[0])
    return [ent[0] for ent in erows], [ent[1] for ent in erows]


def kernel_absorb(n, sparse_rows):
    """Intersect the kernels of a stream of integer constraint rows.

    ``sparse_rows`` yields (indices, values) pairs describing rows of length
    ``n``.  Starting from the full space, each row shrinks the candidate
    kernel by one dimension when it is informative.  Returns a list of
    integer vectors spanning {x : row . x = 0 for every row}, in no
    particular normal form (callers canonicalize).
    """
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    for idx, vals in sparse_rows:
        if not cols:
            break
        svals = []
        for col in cols:
            s = 0
            for t, v in zip(idx, vals):
                c = col[t]
                if c:
                    s += v * c
            svals.append(s)
        j0 = -1
        best = 0
        for j, s in enumerate(svals):
            if s and (j0 < 0 or abs(s) < best):
                j0 = j
                best = abs(s)
        if j0 < 0:
            continue
        a = svals[j0]
        piv = cols[j0]
        newcols = []
        for j, col in enumerate(cols):
            if j == j0:
                continue
            b = svals[j]
            if b == 0:
                newcols.append(col)
                continue
            g = gcd(a, b)
            a_, b_ = a // g, b // g
            nc = [a_ * x - b_ * y for x, y in zip(col, piv)]
            _content_normalize(nc)
            newcols.append(nc)
        cols = newcols
    return cols


def matmul(a, b):
    """Product of two integer matrices given as lists of rows."""
    if not a or not b:
        return [[] for _ in a]
    inner = len(b)
    ncols = len(b[0])
    out = []
    for arow in a:
        acc = [0] * ncols
        for t in range(inner):
            x = arow[t]
            if x:
                brow = b[t]
                for j in range(ncols):
                    y = brow[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out
