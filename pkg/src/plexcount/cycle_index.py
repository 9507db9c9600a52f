"""Cycle indices of the symmetric group and of its action on r-subsets.

Z(S_p) needs one term per partition of p, weighted by the number of
permutations with that cycle type.  For the induced action on r-element
subsets the cycle type of the induced permutation is computed from the base
cycle type alone, with no explicit permutations: a subset is fixed exactly
when it is a union of whole cycles, which gives the number of 1-cycles of
every power of the induced permutation, and the full induced cycle type
follows by inversion over the divisors of the base permutation's order.

Everything here is exact integer arithmetic.  Any division that comes out
inexact, or any negative intermediate multiplicity, raises ArithmeticError
instead of rounding.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, lcm

from .partitions import Partition, partitions_of, permutation_count, power_cycle_type

# A cycle type is just a partition of the number of points moved.
CycleType = Partition


class CycleIndex:
    """Exact cycle index: integer-weighted cycle-type monomials over 1/group_order.

    ``terms`` maps each cycle type to a positive integer weight.  The weights
    sum to ``group_order`` and every cycle type partitions ``ambient_points``,
    both checked at construction.  The normalising 1/group_order factor is
    implicit; it is applied only when substituting (see counting.substitute).
    """

    __slots__ = ("terms", "group_order", "ambient_points")

    def __init__(self, terms: dict[CycleType, int], group_order: int, ambient_points: int):
        terms = dict(terms)
        for cycle_type, weight in terms.items():
            if weight < 1:
                raise ValueError(f"term weight must be >= 1, got {weight}")
            if cycle_type.ambient != ambient_points:
                raise ValueError(
                    f"cycle type {cycle_type!r} partitions {cycle_type.ambient}, "
                    f"not {ambient_points}")
        if sum(terms.values()) != group_order:
            raise ValueError(
                f"weights sum to {sum(terms.values())}, not group order {group_order}")
        self.terms = terms
        self.group_order = group_order
        self.ambient_points = ambient_points

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleIndex):
            return NotImplemented
        return (self.terms == other.terms
                and self.group_order == other.group_order
                and self.ambient_points == other.ambient_points)

    def __repr__(self) -> str:
        return (f"CycleIndex({len(self.terms)} terms, group_order={self.group_order}, "
                f"points={self.ambient_points})")


def fixed_subset_count(cycle_type: Partition, r: int) -> int:
    """Number of r-subsets fixed by a permutation with the given cycle type.

    A subset is fixed exactly when it is a union of whole cycles, so the
    count sums, over all partitions of r, the number of ways to choose that
    many cycles of each length.  r = 0 gives 1 (the empty subset).
    """
    if not 0 <= r <= cycle_type.ambient:
        raise ValueError(f"need 0 <= r <= {cycle_type.ambient}, got r={r}")
    total = 0
    for sub in partitions_of(r):
        ways = 1
        for size, needed in sub.items():
            ways *= comb(cycle_type.multiplicity(size), needed)
            if not ways:
                break
        total += ways
    return total


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def induced_cycle_type(base: Partition, r: int) -> CycleType:
    """Cycle type of the permutation induced on r-subsets by a base cycle type.

    The m-th power of the induced permutation fixes
    ``fixed_subset_count(power_cycle_type(base, m), r)`` subsets, and that
    fixed count also equals ``sum_{d | m} d * mult_d`` over the induced
    multiplicities.  Walking m through the divisors of the base permutation's
    order in increasing order therefore peels off one unknown multiplicity at
    a time; all other multiplicities are zero because the induced
    permutation's order divides the base order.  The loop stops as soon as
    the recovered cycles cover all C(p, r) points.
    """
    p = base.ambient
    if not 1 <= r <= p:
        raise ValueError(f"need 1 <= r <= {p}, got r={r}")
    points = comb(p, r)
    order = lcm(*base.sizes())
    mult: dict[int, int] = {}
    covered = 0
    for m in _divisors(order):
        fixed = fixed_subset_count(power_cycle_type(base, m), r)
        fixed_by_shorter = sum(d * md for d, md in mult.items() if m % d == 0)
        quotient, leftover = divmod(fixed - fixed_by_shorter, m)
        if leftover or quotient < 0:
            raise ArithmeticError(
                f"cycle-type inversion failed at m={m} for base {base!r}, r={r}: "
                f"{fixed - fixed_by_shorter} is not a nonnegative multiple of {m}")
        if quotient:
            mult[m] = quotient
            covered += m * quotient
            if covered == points:
                break
    if covered != points:
        raise ArithmeticError(
            f"induced cycle type of {base!r} covers {covered} of {points} points")
    return Partition(mult, ambient=points)


@lru_cache(maxsize=None)
def cycle_index_symmetric(p: int) -> CycleIndex:
    """Cycle index of S_p acting on p points."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    terms = {j: permutation_count(j) for j in partitions_of(p)}
    return CycleIndex(terms, factorial(p), p)


@lru_cache(maxsize=None)
def subset_action_terms(p: int, r: int) -> tuple[tuple[Partition, CycleType, int], ...]:
    """Unmerged cycle-index terms of S_p acting on r-subsets.

    One (base partition, induced cycle type, weight) triple per partition of
    p, in partitions_of order.  Distinct base partitions can induce the same
    cycle type; this form keeps them apart so each term stays auditable.
    """
    if not 1 <= r <= p:
        raise ValueError(f"need 1 <= r <= p, got p={p}, r={r}")
    return tuple((j, induced_cycle_type(j, r), permutation_count(j))
                 for j in partitions_of(p))


@lru_cache(maxsize=None)
def cycle_index_subset_action(p: int, r: int) -> CycleIndex:
    """Cycle index of S_p acting on the r-element subsets of p points.

    Equal induced cycle types are merged by summing their weights, so the
    term count can drop below the number of partitions of p.
    """
    merged: dict[CycleType, int] = {}
    for _, induced, weight in subset_action_terms(p, r):
        merged[induced] = merged.get(induced, 0) + weight
    return CycleIndex(merged, factorial(p), comb(p, r))
