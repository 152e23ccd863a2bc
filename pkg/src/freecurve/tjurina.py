"""Independent ground truth for the graded tangent module dimensions.

Each graded piece of C[u]^g / (Jacobian columns + (f_1,...,f_g) C[u]^g) is a
finite-dimensional linear algebra problem over the integers: enumerate the
monomial-times-unit vectors of that degree, write down the submodule
generators landing there, and subtract the exact rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LimitExceededError, WindowNotCertifiedError
from .basis import build_basis
from .semigroup import FreeStructure

__all__ = [
    "TjurinaGradedDims",
    "enumerate_monomials",
    "graded_dim",
    "graded_profile",
    "integer_rank",
]


def enumerate_monomials(weights, target: int):
    """All exponent vectors k with sum k_i * weights_i = target, sorted."""
    weights = list(weights)
    if target < 0:
        return []
    out = []

    def rec(pos, remaining, prefix):
        if pos == len(weights) - 1:
            q, r = divmod(remaining, weights[pos])
            if r == 0:
                out.append(prefix + (q,))
            return
        w = weights[pos]
        for k in range(remaining // w + 1):
            rec(pos + 1, remaining - k * w, prefix + (k,))

    if weights:
        rec(0, target, ())
    elif target == 0:
        out.append(())
    return out


def integer_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        p = mat[row][col]
        for i in range(row + 1, nrows):
            f = mat[i][col]
            for j in range(col, ncols):
                mat[i][j] = (mat[i][j] * p - f * mat[row][j]) // prev
        prev = p
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def _partial(fs: FreeStructure, r: int, j: int):
    """Nonzero terms of d f_r / d u_j as [(coefficient, exponent tuple)]."""
    g = fs.g
    n_r = fs.n[r - 1]
    if j == r:
        exps = [0] * (g + 1)
        exps[r] = n_r - 1
        return [(n_r, tuple(exps))]
    if j < r:
        l = fs.ell[r - 1][j]
        if l == 0:
            return []
        exps = [0] * (g + 1)
        for t in range(r):
            exps[t] = fs.ell[r - 1][t]
        exps[j] -= 1
        return [(-l, tuple(exps))]
    return []


def _equation_terms(fs: FreeStructure, i: int):
    """f_i as [(coefficient, exponent tuple)]."""
    g = fs.g
    lead = [0] * (g + 1)
    lead[i] = fs.n[i - 1]
    tail = [0] * (g + 1)
    for t in range(i):
        tail[t] = fs.ell[i - 1][t]
    return [(1, tuple(lead)), (-1, tuple(tail))]


def graded_dim(fs: FreeStructure, d: int) -> int:
    """Dimension of the degree-d piece of the tangent module."""
    a, g = fs.a, fs.g
    if g == 0:
        return 0
    cols = {}
    for r in range(1, g + 1):
        for mono in enumerate_monomials(a, d + fs.n[r - 1] * a[r]):
            cols[(r, mono)] = len(cols)
    if not cols:
        return 0

    rows = []

    def add_row(terms):
        # terms: iterable of (coeff, unit r, exponent tuple)
        row = [0] * len(cols)
        nonzero = False
        for coeff, r, exps in terms:
            idx = cols.get((r, exps))
            if idx is None:
                continue  # outside this graded piece means zero by homogeneity
            row[idx] += coeff
            nonzero = True
        if nonzero:
            rows.append(row)

    # Jacobian columns v_j, module degree -a_j
    for j in range(g + 1):
        column = [(r, _partial(fs, r, j)) for r in range(1, g + 1)]
        if all(not terms for _, terms in column):
            continue
        for mono in enumerate_monomials(a, d + a[j]):
            terms = []
            for r, parts in column:
                for coeff, exps in parts:
                    prod = tuple(m + x for m, x in zip(mono, exps))
                    terms.append((coeff, r, prod))
            add_row(terms)

    # f_i * e_r, module degree n_i a_i - n_r a_r
    for i in range(1, g + 1):
        eq = _equation_terms(fs, i)
        for r in range(1, g + 1):
            for mono in enumerate_monomials(a, d + fs.n[r - 1] * a[r] - fs.n[i - 1] * a[i]):
                terms = [
                    (coeff, r, tuple(m + x for m, x in zip(mono, exps)))
                    for coeff, exps in eq
                ]
                add_row(terms)

    return len(cols) - integer_rank(rows)


@dataclass(frozen=True)
class TjurinaGradedDims:
    dims: dict
    total: int
    window: tuple[int, int]


def graded_profile(fs: FreeStructure, work_limit: int = 200) -> TjurinaGradedDims:
    """Graded dimensions over a window certified by the conductor total.

    The window starts from the basis degree span padded by a_g; if the
    boundary dimensions are nonzero or the total misses the conductor,
    the window widens and the scan retries a few times.
    """
    if fs.conductor > work_limit:
        raise LimitExceededError(
            f"conductor {fs.conductor} above work limit {work_limit}"
        )
    if fs.g == 0:
        return TjurinaGradedDims(dims={}, total=0, window=(0, 0))
    degs = [b.degree for b in build_basis(fs)]
    pad = fs.a[fs.g]
    lo = (min(degs) if degs else 0) - pad
    hi = (max(degs) if degs else 0) + pad
    for _ in range(5):
        dims = {}
        for d in range(lo, hi + 1):
            v = graded_dim(fs, d)
            if v:
                dims[d] = v
        total = sum(dims.values())
        if total == fs.conductor and graded_dim(fs, lo) == 0 and graded_dim(fs, hi) == 0:
            return TjurinaGradedDims(dims=dims, total=total, window=(lo, hi))
        lo -= pad
        hi += pad
    raise WindowNotCertifiedError(
        f"graded totals never matched conductor {fs.conductor}"
    )
