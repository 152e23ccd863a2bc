"""Positive/negative degree counts, bound chains and closed-formula reports.

Direct enumeration values are authoritative everywhere; closed formulas are
evaluated in exact rational arithmetic exactly as written down and reported
next to the direct counts.  A disagreement is data, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .basis import build_E, build_basis, build_index_family
from .semigroup import FreeStructure

__all__ = [
    "TauReport",
    "BskRecord",
    "BoundsReport",
    "PlaneBranchRecord",
    "AtInfinityRecord",
    "TriangleRecord",
    "tau_report",
    "tau_plus_E",
    "d_mk",
    "b_sk_bruteforce",
    "b_sk_formula",
    "dimension_bounds",
    "plane_branch_check",
    "at_infinity_tau2",
    "dplus_l2_bounds",
]


@dataclass(frozen=True)
class TauReport:
    tau_plus: int
    tau_minus: int
    zero_count: int
    histogram: dict
    moduli_dim: int
    conductor: int


def tau_report(fs: FreeStructure) -> TauReport:
    """Count basis degrees by sign; moduli dimension is the negative count."""
    hist: dict = {}
    plus = minus = zero = 0
    for b in build_basis(fs):
        hist[b.degree] = hist.get(b.degree, 0) + 1
        if b.degree > 0:
            plus += 1
        elif b.degree < 0:
            minus += 1
        else:
            zero += 1
    return TauReport(
        tau_plus=plus,
        tau_minus=minus,
        zero_count=zero,
        histogram=dict(sorted(hist.items())),
        moduli_dim=minus,
        conductor=fs.conductor,
    )


def tau_plus_E(fs: FreeStructure) -> int:
    """Positive-degree count over the base rectangle alone.

    This is the two-generator tau+ of <n_1, ell_0^(1)>; the comparison
    i*a_0 + j*a_1 > n_1*a_1 is invariant under scaling by e_1.
    """
    a0, a1 = fs.a[0], fs.a[1]
    t = fs.n[0] * a1
    return sum(1 for i, j in build_E(fs) if i * a0 + j * a1 > t)


def d_mk(fs: FreeStructure, m: int, k: int) -> int:
    """|{points of D at level m with weighted sum above (n_m - k) a_m}|."""
    if not 2 <= m <= fs.g:
        raise ValueError(f"level {m} out of range 2..{fs.g}")
    if not 0 <= k <= fs.n[m - 1] - 2:
        raise ValueError(f"k = {k} out of range 0..{fs.n[m - 1] - 2}")
    fam = build_index_family(fs, m)
    a = fs.a
    thr = (fs.n[m - 1] - k) * a[m]
    return sum(1 for p in fam.D if sum(c * x for c, x in zip(p, a)) > thr)


@dataclass(frozen=True)
class BskRecord:
    s: int
    k: int
    guard_holds: bool  # a_s < n_1 a_1, the hypothesis of the counted set
    brute: int
    formula: int
    delta: int
    sigma: int
    gamma: int


def b_sk_bruteforce(fs: FreeStructure, s: int, k: int) -> int:
    """Direct count of E-points with i a_0 + j a_1 + k a_s > n_1 a_1."""
    a0, a1, as_ = fs.a[0], fs.a[1], fs.a[s]
    t = fs.n[0] * a1
    return sum(1 for i, j in build_E(fs) if i * a0 + j * a1 + k * as_ > t)


def _sigma_gamma(fs: FreeStructure, k: int, t: int):
    l0 = fs.ell[0][0]
    n1 = fs.n[0]
    fl = k * t // fs.e[1]
    sigma = 0 if fl < l0 else 1
    q = n1 // l0
    if fl < n1 - q * l0:
        gamma = 0
    elif fl >= n1:
        gamma = q + 1
    else:
        gamma = fl - n1 + q * l0
    return sigma, gamma


def b_sk_formula(fs: FreeStructure, s: int, k: int) -> BskRecord:
    """The closed b_{s,k} formula next to the brute count; delta reported."""
    if not 2 <= s <= fs.g:
        raise ValueError(f"level {s} out of range 2..{fs.g}")
    as_ = fs.a[s]
    sigma, gamma = _sigma_gamma(fs, k, as_)
    value = tau_plus_E(fs) + k * as_ // fs.e[1] - sigma - gamma + 1
    brute = b_sk_bruteforce(fs, s, k)
    return BskRecord(
        s=s,
        k=k,
        guard_holds=as_ < fs.n[0] * fs.a[1],
        brute=brute,
        formula=value,
        delta=value - brute,
        sigma=sigma,
        gamma=gamma,
    )


@dataclass(frozen=True)
class BoundsReport:
    m: int
    tau_actual: int
    mu_prev: int
    tau_prev_plus: int
    d_m0: int
    simple_lower: int
    simple_upper: int
    refined_lower: int
    holds_simple_lower: bool
    holds_simple_upper: bool
    holds_refined_lower: bool
    tau_minus_actual: int
    tau_minus_upper_printed: int
    tau_minus_lower_printed: int
    J_m: tuple[int, ...]
    L_1: tuple[int, ...]
    notes: tuple[str, ...] = ()


def dimension_bounds(fs: FreeStructure) -> BoundsReport:
    """Evaluate both bound chains against the directly computed tau+."""
    if fs.g < 2:
        raise ValueError("bounds need at least three generators")
    m = fs.g
    a, n, e = fs.a, fs.n, fs.e
    prev = fs.scaled_prefix(m - 1)
    prev_tau = tau_report(prev)
    tau_prev_plus = prev_tau.tau_plus
    mu_prev = prev.conductor
    d0 = d_mk(fs, m, 0)
    nm = n[m - 1]
    actual = tau_report(fs).tau_plus

    simple_lower = tau_prev_plus + (nm - 1) * (tau_prev_plus + d0)
    simple_upper = (
        tau_prev_plus
        + (nm - 1) * (mu_prev + d0)
        + sum(k * a[m] // nm for k in range(1, nm - 1))
    )

    tau_E = tau_plus_E(fs)
    J_m = tuple(j for j in range(1, m) if a[m] >= n[j - 1] * a[j])
    L_1 = tuple(i for i in range(2, m + 1) if a[i] < n[0] * a[1])
    middle = tuple(j for j in range(2, m) if j not in L_1 and j not in J_m)
    refined_lower = (
        tau_E
        + sum((n[j - 1] - 1) * tau_E for j in middle)
        + sum(
            b_sk_formula(fs, j, k).formula
            for j in L_1
            for k in range(1, n[j - 1])
        )
        + (nm - 1) * (sum(a[j] // e[j] for j in J_m) + d0)
    )

    tau_minus_actual = fs.conductor - actual
    tau_minus_prev = mu_prev - tau_prev_plus
    # tau- bounds evaluated with a_m exactly as stated, no rescaling applied
    tm_upper = nm * tau_minus_prev - (nm - 1) * (d0 + a[m] - 1)
    tm_lower = (
        tau_minus_prev
        - (nm - 1) * (d0 + a[m] - 1)
        - sum(k * a[m] // nm for k in range(1, nm - 1))
    )

    notes = []
    if not simple_lower <= actual <= simple_upper:
        notes.append("simple bound chain violated")
    if refined_lower > actual:
        notes.append("refined lower bound exceeds actual tau+")
    return BoundsReport(
        m=m,
        tau_actual=actual,
        mu_prev=mu_prev,
        tau_prev_plus=tau_prev_plus,
        d_m0=d0,
        simple_lower=simple_lower,
        simple_upper=simple_upper,
        refined_lower=refined_lower,
        holds_simple_lower=simple_lower <= actual,
        holds_simple_upper=actual <= simple_upper,
        holds_refined_lower=refined_lower <= actual,
        tau_minus_actual=tau_minus_actual,
        tau_minus_upper_printed=tm_upper,
        tau_minus_lower_printed=tm_lower,
        J_m=J_m,
        L_1=L_1,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class PlaneBranchRecord:
    is_plane_branch: bool
    recursion_holds: bool  # recursion exact at every level 2..g
    recursion_holds_top: bool
    tau_plus: int
    recursion_value: int  # top-level right hand side
    sum_d_direct: int
    sum_d_formula: Fraction


def _recursion_exact(fs: FreeStructure) -> tuple[bool, int, int]:
    """One recursion step at the top level of fs.

    Returns (exact, actual tau+, right hand side value).
    """
    m = fs.g
    prev = fs.scaled_prefix(m - 1)
    nm = fs.n[m - 1]
    sum_d = sum(d_mk(fs, m, k) for k in range(nm - 1))
    rhs = tau_report(prev).tau_plus + (nm - 1) * prev.conductor + sum_d
    actual = tau_report(fs).tau_plus
    return actual == rhs, actual, rhs


def plane_branch_check(fs: FreeStructure) -> PlaneBranchRecord:
    """Plane-branch test, the tau+ recursion and the closed sum-of-d formula.

    ``recursion_holds`` means the recursion step is exact at every level,
    i.e. tau+ is computable recursively from the two-generator base case;
    the top-level step alone is reported separately.
    """
    if fs.g < 2:
        raise ValueError("plane-branch check needs at least three generators")
    m = fs.g
    a, n, e = fs.a, fs.n, fs.e
    is_pb = all(n[i - 1] * a[i] < a[i + 1] for i in range(1, m))
    top_exact, actual, recursion_value = _recursion_exact(fs)
    all_exact = top_exact and all(
        _recursion_exact(fs.scaled_prefix(lvl))[0] for lvl in range(2, m)
    )
    nm = n[m - 1]
    sum_d = sum(d_mk(fs, m, k) for k in range(nm - 1))
    mu_prev = fs.scaled_prefix(m - 1).conductor
    q = a[m] // e[m]
    formula = (
        Fraction((nm - 1) * mu_prev, 2)
        + Fraction((nm - 3) * (q - 3), 2)
        + q // nm
        - 2
    )
    return PlaneBranchRecord(
        is_plane_branch=is_pb,
        recursion_holds=all_exact,
        recursion_holds_top=top_exact,
        tau_plus=actual,
        recursion_value=recursion_value,
        sum_d_direct=sum_d,
        sum_d_formula=formula,
    )


@dataclass(frozen=True)
class AtInfinityRecord:
    hypotheses_hold: bool
    hypotheses: tuple[bool, bool, bool]  # n1 a1 > a2, a0 > a1, n2 a2 > n1 a1
    tau2_direct: int
    formula_value: Fraction | None
    delta: Fraction | None


def at_infinity_tau2(fs: FreeStructure) -> AtInfinityRecord:
    """The three-generator tau2+ closed formula, as written, vs direct count."""
    if fs.g != 2:
        raise ValueError("at-infinity formula is for exactly three generators")
    a, n, e = fs.a, fs.n, fs.e
    hyp = (n[0] * a[1] > a[2], a[0] > a[1], n[1] * a[2] > n[0] * a[1])
    direct = tau_report(fs).tau_plus
    if not all(hyp):
        return AtInfinityRecord(False, hyp, direct, None, None)
    prev = fs.scaled_prefix(1)
    tau1 = tau_report(prev).tau_plus
    mu1 = prev.conductor
    n2 = n[1]
    total = Fraction(0)
    for k in range(1, n2):
        sigma, gamma = _sigma_gamma(fs, k, a[2])
        total += 2 * (k * a[2] // e[1]) - sigma - gamma + 1
    value = (
        n2 * tau1
        + Fraction((n2 - 1) * (mu1 - 2), 2)
        - Fraction((n2 - 1) * a[2], e[1])
        + total
    )
    return AtInfinityRecord(True, hyp, direct, value, value - direct)


@dataclass(frozen=True)
class TriangleRecord:
    k: int
    direct: int
    statement_upper: Fraction
    proof_case1_value: Fraction
    lower: Fraction
    triangle_C: int


def _lattice_points_in_triangle(lines):
    """Closed lattice-point count for the region cut out by three lines.

    Lines are (A, B, C) meaning A*i + B*j = C.  Vertices are the pairwise
    intersections; concurrent lines collapse the triangle to its single
    common point, which counts iff it is a lattice point.
    """
    import math

    verts = []
    for idx in range(3):
        (a1, b1, c1), (a2, b2, c2) = lines[idx], lines[(idx + 1) % 3]
        det = a1 * b2 - a2 * b1
        if det == 0:
            return 0  # parallel pair: no bounded triangle
        verts.append((Fraction(c1 * b2 - c2 * b1, det), Fraction(a1 * c2 - a2 * c1, det)))

    count = 0
    lo_x, hi_x = min(v[0] for v in verts), max(v[0] for v in verts)
    lo_y, hi_y = min(v[1] for v in verts), max(v[1] for v in verts)
    for i in range(math.ceil(lo_x), math.floor(hi_x) + 1):
        for j in range(math.ceil(lo_y), math.floor(hi_y) + 1):
            ok = True
            for idx, (a, b, c) in enumerate(lines):
                # verts[t] joins lines t and t+1, so the vertex off line
                # idx is verts[(idx+1) % 3]
                ox, oy = verts[(idx + 1) % 3]
                ref = a * ox + b * oy - c
                val = a * i + b * j - c
                if (ref > 0 and val < 0) or (ref < 0 and val > 0):
                    ok = False
                    break
            if ok:
                count += 1
    return count


def dplus_l2_bounds(fs: FreeStructure, k: int) -> TriangleRecord:
    """Level-2 positive-count bounds: direct count vs both printed variants."""
    if fs.g < 2:
        raise ValueError("needs at least three generators")
    a, n = fs.a, fs.n
    fam = build_index_family(fs, 2)
    thr = (n[1] - k) * a[2]
    direct = sum(1 for p in fam.D if p[0] * a[0] + p[1] * a[1] > thr)
    l0 = fs.ell[0][0]
    l02 = fs.ell[1][0]
    n1 = n[0]
    q2 = a[2] // fs.e[2]
    fl = k * q2 // n[1]
    statement_upper = Fraction((l0 - 1) * (n1 - 2), 2) + fl - 1
    proof_case1 = Fraction((l0 - 1) * (n1 - 1), 2) + fl - 1
    c_count = _lattice_points_in_triangle(
        [(1, 0, 0), (0, 1, n1), (n1, l02, n1 * l02)]
    )
    lower = Fraction((l0 - 1) * (n1 - 2), 2) - c_count - 1
    return TriangleRecord(
        k=k,
        direct=direct,
        statement_upper=statement_upper,
        proof_case1_value=proof_case1,
        lower=lower,
        triangle_C=c_count,
    )
