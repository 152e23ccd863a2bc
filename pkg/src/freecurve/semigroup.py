"""Exact integer foundations for numerical semigroups.

Everything here is pure integer arithmetic: gcd towers, freeness detection
with the canonical ell-decomposition, membership, conductors (recursive and
by brute-force scan) and Apery sets.  No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .errors import InternalConsistencyError, LimitExceededError, NotFreeError, NotMemberError

__all__ = [
    "NumericalSemigroup",
    "FreeStructure",
    "EquationShape",
    "gcd_tower",
    "semigroup_membership",
    "free_structure",
    "conductor_recursive",
    "frobenius_bruteforce",
    "apery_set",
    "monomial_curve_equations",
]


@dataclass(frozen=True)
class NumericalSemigroup:
    """An ordered list of positive generators a_0, ..., a_g.

    The order is significant and kept as given.  Top-level semigroups must
    have gcd 1; intermediate scaled semigroups of a tower may carry a
    common factor, recorded in ``scale``.
    """

    generators: tuple[int, ...]
    scale: int = 1

    def __post_init__(self):
        gens = tuple(int(a) for a in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("generator list is empty")
        if any(a < 1 for a in gens):
            raise ValueError("generators must be positive")
        content = reduce(math.gcd, gens)
        if self.scale == 1 and content != 1:
            raise ValueError(
                f"gcd of generators is {content}; pass scale={content} for a scaled tower semigroup"
            )
        if self.scale != 1 and content != self.scale:
            raise ValueError(f"declared scale {self.scale} but gcd of generators is {content}")

    @property
    def g(self) -> int:
        return len(self.generators) - 1


@dataclass(frozen=True)
class FreeStructure:
    """A free semigroup together with its gcd tower and canonical ell-table.

    e[i] = gcd(a_0, ..., a_i), n[i-1] = e[i-1] / e[i], and row i of ``ell``
    holds the unique exponents with n_i * a_i = sum_j ell_j^(i) * a_j and
    0 <= ell_j^(i) < n_j for j >= 1.
    """

    base: NumericalSemigroup
    e: tuple[int, ...]
    n: tuple[int, ...]
    ell: tuple[tuple[int, ...], ...]
    conductor: int

    @property
    def g(self) -> int:
        return self.base.g

    @property
    def a(self) -> tuple[int, ...]:
        return self.base.generators

    def scaled_prefix(self, m: int) -> "FreeStructure":
        """Free structure of the scaled prefix <a_0/e_m, ..., a_m/e_m>."""
        if not 0 <= m <= self.g:
            raise ValueError(f"prefix level {m} out of range")
        em = self.e[m]
        return free_structure(tuple(x // em for x in self.a[: m + 1]))


@dataclass(frozen=True)
class EquationShape:
    """Shape of one defining equation u_i^{n_i} - u_0^{l_0} ... u_{i-1}^{l_{i-1}}."""

    index: int
    lead: tuple[int, int]  # (variable index, exponent n_i)
    tail: tuple[int, ...]  # exponents on u_0 ... u_{i-1}
    degree: int  # weighted degree n_i * a_i of both monomials


def _as_semigroup(gens) -> NumericalSemigroup:
    if isinstance(gens, NumericalSemigroup):
        return gens
    gens = tuple(int(a) for a in gens)
    content = reduce(math.gcd, gens) if gens else 1
    return NumericalSemigroup(gens, scale=content)


def gcd_tower(gens) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (e, n) with e_i = gcd(a_0..a_i) and n_i = e_{i-1}/e_i."""
    sg = _as_semigroup(gens)
    a = sg.generators
    e = [a[0]]
    for x in a[1:]:
        e.append(math.gcd(e[-1], x))
    n = tuple(e[i - 1] // e[i] for i in range(1, len(a)))
    return tuple(e), n


def _members_mask(gens: tuple[int, ...], limit: int) -> int:
    """Bitmask of semigroup members in [0, limit] (bit v set iff v is a member)."""
    window = (1 << (limit + 1)) - 1
    bits = 1
    for a in gens:
        shift = a
        while shift <= limit:
            bits |= (bits << shift) & window
            shift <<= 1
    return bits


def semigroup_membership(gens, v: int) -> bool:
    """Whether v lies in N*a_0 + ... + N*a_g, by dynamic programming up to v."""
    if v < 0:
        raise ValueError("membership is defined for non-negative values")
    sg = _as_semigroup(gens)
    return bool(_members_mask(sg.generators, v) >> v & 1)


def _canonical_row(a, e, n, i):
    """Canonical decomposition of n_i * a_i over a_0 .. a_{i-1}.

    Peels exponents from j = i-1 down to 1: each ell_j is forced modulo n_j
    by divisibility, and what remains must be a non-negative multiple of a_0.
    """
    rem = n[i - 1] * a[i]
    row = [0] * i
    for j in range(i - 1, 0, -1):
        nj = n[j - 1]
        if nj > 1:
            # rem is divisible by e_j here; a_j/e_j is invertible mod n_j
            lj = (rem // e[j]) * pow(a[j] // e[j], -1, nj) % nj
        else:
            lj = 0
        row[j] = lj
        rem -= lj * a[j]
    if rem < 0 or rem % a[0] != 0:
        raise NotFreeError(i)
    row[0] = rem // a[0]
    return tuple(row)


def free_structure(gens) -> FreeStructure:
    """Canonical FreeStructure of the given ordered generators.

    Raises NotFreeError(i) at the smallest index where freeness fails.
    """
    sg = _as_semigroup(gens)
    a = sg.generators
    e, n = gcd_tower(sg)
    ell = tuple(_canonical_row(a, e, n, i) for i in range(1, len(a)))
    for i, row in enumerate(ell, start=1):
        if any(row[j] >= n[j - 1] for j in range(1, i)):
            raise InternalConsistencyError(f"non-canonical ell-row at level {i}: {row}")
        if sum(l * x for l, x in zip(row, a)) != n[i - 1] * a[i]:
            raise InternalConsistencyError(f"ell-row at level {i} does not decompose n_i*a_i")
    cond = _conductor_from_tower(a, e, n)
    return FreeStructure(base=sg, e=e, n=n, ell=ell, conductor=cond)


def _conductor_from_tower(a, e, n) -> int:
    # Delorme recursion c(G_m) = n_m c(G_{m-1}) + (n_m - 1)(a_m/e_m - 1),
    # starting from c(<1>) = 0; the two-generator Sylvester value is the
    # m = 1 step.
    c = 0
    for m in range(1, len(a)):
        c = n[m - 1] * c + (n[m - 1] - 1) * (a[m] // e[m] - 1)
    return c


def conductor_recursive(fs: FreeStructure) -> int:
    """Conductor of the free semigroup via the gluing recursion."""
    return _conductor_from_tower(fs.a, fs.e, fs.n)


def frobenius_bruteforce(gens, limit: int | None = None) -> int:
    """Conductor (Frobenius number + 1) by direct membership scan.

    Independent of the freeness machinery: scans an expanding window until
    a full run of min(gens) consecutive members certifies stabilization.
    """
    sg = _as_semigroup(gens)
    if sg.scale != 1:
        raise ValueError("conductor requires gcd of generators = 1")
    a = sg.generators
    m0 = min(a)
    if m0 == 1:
        return 0
    # Sylvester bound of a coprime pair, when one exists, bounds the scan.
    start = min(
        ((p - 1) * (q - 1) + m0 for p in a for q in a if p < q and math.gcd(p, q) == 1),
        default=4096,
    )
    cap = limit if limit is not None else max(1 << 22, start)
    span = min(max(start, 64), cap)
    while True:
        if span + 1 >= m0:
            bits = _members_mask(a, span)
            top = bits >> (span + 1 - m0)
            if top == (1 << m0) - 1:
                gaps = ~bits & ((1 << (span + 1)) - 1)
                return gaps.bit_length()
        if span >= cap:
            raise LimitExceededError(f"no stabilization up to {span}")
        span = min(span * 2, cap)


def apery_set(gens, m: int) -> list[int]:
    """Sorted Apery set: least member of the semigroup in each class mod m."""
    sg = _as_semigroup(gens)
    if m < 1 or not semigroup_membership(sg, m):
        raise NotMemberError(f"{m} is not a member of the semigroup")
    bound = frobenius_bruteforce(sg) + m
    bits = _members_mask(sg.generators, bound)
    minima: dict[int, int] = {}
    for v in range(bound + 1):
        if bits >> v & 1 and v % m not in minima:
            minima[v % m] = v
            if len(minima) == m:
                break
    if len(minima) != m:
        raise InternalConsistencyError("Apery scan did not fill all residue classes")
    return sorted(minima.values())


def monomial_curve_equations(fs: FreeStructure) -> list[EquationShape]:
    """The defining equations of the monomial curve, one per level 1..g."""
    return [
        EquationShape(
            index=i,
            lead=(i, fs.n[i - 1]),
            tail=fs.ell[i - 1],
            degree=fs.n[i - 1] * fs.a[i],
        )
        for i in range(1, fs.g + 1)
    ]
