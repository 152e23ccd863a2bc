"""Recursive index sets and the graded monomial basis of the tangent module.

The sets E, I, D', D are built level by level from the ell-table.  Each
basis element is a monomial times a unit vector e_r; its degree is the
weighted monomial degree minus n_r * a_r.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError
from .semigroup import FreeStructure

__all__ = ["IndexFamily", "BasisElement", "build_E", "build_index_family", "build_basis"]


@dataclass(frozen=True)
class IndexFamily:
    """The level-s sets with the removed lexicographic maximum h.

    I_prev is the block whose last coordinate ranges over a full period
    n_{s-1}; I_last is the shifted block contributed by the last ell entry
    (absent when ell_{s-1}^(s) = 0).  D = Dprime minus {h}.
    """

    level: int
    I_prev: tuple[tuple[int, ...], ...]
    I_last: tuple[tuple[int, ...], ...] | None
    Dprime: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    h: tuple[int, ...]


def build_E(fs: FreeStructure):
    """The base rectangle of exponent pairs (i, j) = (u_0 power, u_1 power)."""
    if fs.g < 1:
        raise ValueError("index sets need at least two generators")
    n1 = fs.n[0]
    if n1 == 1:
        return [(0, 0)]
    l0 = fs.ell[0][0]
    return [(i, j) for i in range(l0 - 1) for j in range(n1 - 1)]


def _chain_blocks(fs: FreeStructure, s: int):
    """Run the I-set recursion at level s; return (full set, last step blocks).

    The full set is D'_{ell_{s-1}^(s)} as tuples of length s.  At level 1
    the set is just {(k,) : k < ell_0^(1)} and the blocks are degenerate.
    """
    row = fs.ell[s - 1]
    cur = [(k,) for k in range(row[0])]
    first, last = cur, None
    for t in range(2, s + 1):
        first = [x + (k,) for x in cur for k in range(fs.n[t - 2])]
        if row[t - 1] > 0:
            seed, _, _ = _chain_blocks(fs, t - 1)
            shift = row[: t - 1]
            last = [
                tuple(a + b for a, b in zip(shift, y)) + (k,)
                for y in seed
                for k in range(row[t - 1])
            ]
        else:
            last = None
        cur = first + (last or [])
    return cur, first, last


def build_index_family(fs: FreeStructure, s: int) -> IndexFamily:
    """Materialize the level-s sets; checks |D'| = a_s / e_s."""
    if not 2 <= s <= fs.g:
        raise ValueError(f"level {s} out of range 2..{fs.g}")
    cur, i_prev, i_last = _chain_blocks(fs, s)
    dprime = sorted(cur)
    if len(set(dprime)) != len(dprime):
        raise InternalConsistencyError(f"level {s} blocks are not disjoint")
    expected = fs.a[s] // fs.e[s]
    if len(dprime) != expected:
        raise InternalConsistencyError(
            f"|D'| = {len(dprime)} at level {s}, expected a_s/e_s = {expected}"
        )
    h = max(i_last) if i_last is not None else max(i_prev)
    d = [p for p in dprime if p != h]
    return IndexFamily(
        level=s,
        I_prev=tuple(sorted(i_prev)),
        I_last=tuple(sorted(i_last)) if i_last is not None else None,
        Dprime=tuple(dprime),
        D=tuple(d),
        h=h,
    )


@dataclass(frozen=True)
class BasisElement:
    unit: int
    exponents: tuple[int, ...]
    degree: int
    clause: int


def _tails(fs: FreeStructure, start: int):
    """All trailing exponent tuples (k_start, ..., k_g) with k_r < n_r."""
    out = [()]
    for r in range(start, fs.g + 1):
        out = [t + (k,) for t in out for k in range(fs.n[r - 1])]
    return out


def build_basis(fs: FreeStructure) -> list[BasisElement]:
    """The full graded basis, sorted by (unit, exponents).

    The element count equals the conductor whenever all n_i >= 2; inputs
    with redundant generators (some n_i = 1) still build, and the count
    mismatch is left for callers to observe.
    """
    if fs.g == 0:
        return []
    a, n, g = fs.a, fs.n, fs.g
    out = []
    for i, j in build_E(fs):
        for tail in _tails(fs, 2):
            exps = (i, j) + tail
            deg = sum(k * x for k, x in zip(exps, a)) - n[0] * a[1]
            out.append(BasisElement(1, exps, deg, 1))
    for m in range(2, g + 1):
        fam = build_index_family(fs, m)
        clause = 4 if m == g else (2 if m == 2 else 3)
        for point in fam.D:
            for km in range(n[m - 1] - 1):
                for tail in _tails(fs, m + 1):
                    exps = point + (km,) + tail
                    deg = sum(k * x for k, x in zip(exps, a)) - n[m - 1] * a[m]
                    out.append(BasisElement(m, exps, deg, clause))
    out.sort(key=lambda b: (b.unit, b.exponents))
    return out
