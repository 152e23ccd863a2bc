"""Delta-sequences of curves with one place at infinity and their plane-branch
semigroups: validation, the R1/R2 conversions, and the inverse enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceededError, NonIntegralRelationError, NotFreeError
from .semigroup import free_structure, gcd_tower, semigroup_membership

__all__ = [
    "DeltaSequence",
    "BetaSequence",
    "is_delta_sequence",
    "is_plane_branch",
    "delta_to_beta",
    "enumerate_deltas",
    "one_puiseux_family",
]


@dataclass(frozen=True)
class DeltaSequence:
    deltas: tuple[int, ...]
    e: tuple[int, ...]
    n: tuple[int, ...]
    minimal: bool  # False for family members violating condition (1)
    branch: str  # "R1", "R2" or "puiseux-family"


@dataclass(frozen=True)
class BetaSequence:
    betas: tuple[int, ...]


def is_delta_sequence(gens) -> tuple[bool, str | None]:
    """Check the three one-place-at-infinity conditions, in order.

    Returns (ok, first failed condition name or None).
    """
    d = tuple(int(x) for x in gens)
    if not d or any(x < 1 for x in d):
        return False, "positivity"
    e, n = gcd_tower(d)
    s = len(d) - 1
    if e[s] != 1 or any(ni <= 1 for ni in n):
        return False, "condition-1"
    for i in range(1, s + 1):
        if not semigroup_membership(d[:i], n[i - 1] * d[i]):
            return False, "condition-2"
    # n_0 = 1, so the i = 1 instance reads delta_1 < delta_0
    for i in range(1, s + 1):
        prev_n = 1 if i == 1 else n[i - 2]
        if not d[i] < prev_n * d[i - 1]:
            return False, "condition-3"
    return True, None


def is_plane_branch(gens) -> bool:
    """Free for the given order and n_i a_i < a_{i+1} strictly increasing."""
    a = tuple(int(x) for x in gens)
    try:
        fs = free_structure(a)
    except (NotFreeError, ValueError):
        return False
    return all(fs.n[i - 1] * a[i] < a[i + 1] for i in range(1, fs.g))


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise NonIntegralRelationError(f"{num} is not divisible by {den}")
    return q


def delta_to_beta(gens) -> tuple[BetaSequence, str]:
    """Convert a delta-sequence to its plane-branch generators.

    The R2 relation applies when (delta_0 - delta_1) divides delta_0,
    otherwise R1.  Returns the beta-sequence and the branch taken.
    """
    d = tuple(int(x) for x in gens)
    if len(d) < 2:
        raise ValueError("delta-sequence needs at least two entries")
    e, _ = gcd_tower(d)
    s = len(d) - 1
    head = d[0] - d[1]
    if head <= 0:
        raise ValueError("delta_1 must be smaller than delta_0")
    sq = d[0] * d[0]
    if d[0] % head == 0:
        betas = [head] + [_exact_div(sq, e[i - 1]) - d[i] for i in range(2, s + 1)]
        branch = "R2"
    else:
        betas = [head, d[0]] + [_exact_div(sq, e[i - 1]) - d[i] for i in range(2, s + 1)]
        branch = "R1"
    if any(b < 1 for b in betas):
        raise NonIntegralRelationError("conversion produced a non-positive generator")
    return BetaSequence(tuple(betas)), branch


def _package(deltas, minimal: bool, branch: str) -> DeltaSequence:
    e, n = gcd_tower(deltas)
    return DeltaSequence(tuple(deltas), e, n, minimal, branch)


def _complete_candidate(d0: int, d1: int, rest):
    """Extend (d0, d1) with delta_i = d0^2/e_{i-1} - rest[i-2] for i >= 2.

    Prunes with positivity and condition (3); returns None on any failure.
    """
    if not 0 < d1 < d0:
        return None
    deltas = [d0, d1]
    e = [d0, math.gcd(d0, d1)]
    n = [d0 // e[1]]
    sq = d0 * d0
    for idx, target in enumerate(rest):
        i = idx + 2
        if sq % e[i - 1] != 0:
            return None
        di = sq // e[i - 1] - target
        if di < 1 or not di < n[i - 2] * deltas[i - 1]:
            return None
        deltas.append(di)
        e.append(math.gcd(e[-1], di))
        n.append(e[-2] // e[-1])
    return tuple(deltas)


def enumerate_deltas(beta, cap: int = 10**6) -> list[DeltaSequence]:
    """All delta-sequences whose associated plane-branch semigroup is beta.

    The R1 candidate is forced (delta_0 = beta_1); R2 candidates have
    delta_0 = k*beta_0 with the level-2 condition (3) bounding k by
    beta_1/beta_0.  Every emitted sequence is re-validated and
    round-tripped.  For two-generator input the one-Puiseux family
    members are appended as non-minimal delta-data.
    """
    b = tuple(int(x) for x in beta)
    if len(b) < 2:
        raise ValueError("beta-sequence needs at least two entries")
    if not is_plane_branch(b):
        raise ValueError("input is not a plane-branch semigroup")
    out = []

    def accept(deltas, branch):
        ok, _ = is_delta_sequence(deltas)
        if not ok:
            return
        try:
            free_structure(deltas)
            back, _ = delta_to_beta(deltas)
        except Exception:
            return
        if back.betas == b:
            out.append(_package(deltas, True, branch))

    # R1: delta_0 = beta_1, delta_1 = beta_1 - beta_0, targets beta_2..
    cand = _complete_candidate(b[1], b[1] - b[0], b[2:])
    if cand is not None:
        accept(cand, "R1")

    # R2: delta_0 = k beta_0, targets beta_1.. shifted one level up
    k = 2
    while k * b[0] < b[1]:
        d0 = k * b[0]
        if d0 > cap:
            raise CapExceededError(f"delta_0 search passed the cap {cap}")
        cand = _complete_candidate(d0, (k - 1) * b[0], b[1:])
        if cand is not None:
            accept(cand, "R2")
        k += 1

    if len(b) == 2:
        seen = {d.deltas for d in out}
        out.extend(
            m for m in one_puiseux_family(b[0], b[1]) if m.deltas not in seen
        )
    return out


def one_puiseux_family(b0: int, b1: int) -> list[DeltaSequence]:
    """The delta-family (a, a-1, a^2 b0 - b1) for b1/b0 > a > sqrt(b1/b0).

    These have e_1 = 1, so the third entry is a redundant generator and
    condition (1) fails; they are flagged non-minimal.  When the interval
    holds no integer the unique pair (b1, b1 - b0) is returned instead.
    """
    if b0 < 2 or b1 <= b0 or math.gcd(b0, b1) != 1:
        raise ValueError("need coprime b1 > b0 >= 2")
    members = []
    for a in range(2, (b1 + b0 - 1) // b0 + 1):
        if a * b0 < b1 and a * a * b0 > b1:
            members.append(_package((a, a - 1, a * a * b0 - b1), False, "puiseux-family"))
    if members:
        return members
    return [_package((b1, b1 - b0), True, "puiseux-family")]
