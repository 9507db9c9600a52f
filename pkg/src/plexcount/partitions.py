"""Integer partitions in multiplicity form.

A partition of p is stored sparsely as a map from part size to multiplicity.
The same data describes the cycle type of a permutation (part sizes are cycle
lengths), so this module also carries the two cycle-type computations the
rest of the package is built on: counting the permutations with a given cycle
type, and transforming a cycle type under powers.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Iterator, Mapping


class Partition:
    """A partition of ``ambient``, as a read-only {part size: multiplicity} map.

    Zero multiplicities are never stored.  Instances are immutable by
    convention and hashable, so they can key term maps directly.
    """

    __slots__ = ("_items", "_parts", "ambient")

    def __init__(self, parts: Mapping[int, int] | Iterable[tuple[int, int]] = (),
                 ambient: int | None = None):
        mapping = dict(parts)
        items = []
        for size in sorted(mapping):
            mult = mapping[size]
            if size < 1:
                raise ValueError(f"part size must be >= 1, got {size}")
            if mult < 0:
                raise ValueError(f"multiplicity must be >= 0, got {mult}")
            if mult:
                items.append((size, mult))
        self._items: tuple[tuple[int, int], ...] = tuple(items)
        self._parts = dict(items)
        total = sum(size * mult for size, mult in items)
        if ambient is None:
            ambient = total
        elif ambient != total:
            raise ValueError(f"parts sum to {total}, not the stated {ambient}")
        self.ambient: int = ambient

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "Partition":
        """Build from an explicit list of parts, e.g. [3, 2, 2, 1]."""
        return cls(Counter(sizes))

    def multiplicity(self, size: int) -> int:
        return self._parts.get(size, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        """(size, multiplicity) pairs, ascending by part size."""
        return self._items

    def sizes(self) -> tuple[int, ...]:
        """Distinct part sizes, ascending."""
        return tuple(size for size, _ in self._items)

    def to_sizes(self) -> list[int]:
        """Expanded part list, largest first, e.g. [3, 2, 2, 1]."""
        out: list[int] = []
        for size, mult in reversed(self._items):
            out.extend([size] * mult)
        return out

    def num_parts(self) -> int:
        """Total number of parts (counting multiplicity)."""
        return sum(mult for _, mult in self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._items == other._items and self.ambient == other.ambient

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return f"Partition({dict(self._items)!r})"

    def __str__(self) -> str:
        if not self._items:
            return "0"
        return "+".join(str(size) for size in self.to_sizes())


def _descending_part_lists(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
    # Largest-first recursion emits part lists in decreasing-lexicographic order.
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, cap), 0, -1):
        for rest in _descending_part_lists(remaining - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(p: int) -> tuple[Partition, ...]:
    """All integer partitions of p, in decreasing-lexicographic part order.

    partitions_of(4) lists [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
    partitions_of(0) is the single empty partition, which the subset-count
    loops rely on.  The result is cached and must not be mutated.
    """
    if p < 0:
        raise ValueError(f"cannot partition {p}")
    return tuple(Partition.from_sizes(sizes) for sizes in _descending_part_lists(p, p))


def permutation_count(cycle_type: Partition) -> int:
    """Number of permutations of S_p with the given cycle type.

    With multiplicities m_k over part sizes k this is
    p! / prod_k (k**m_k * m_k!), and the division is always exact.
    """
    denominator = 1
    for size, mult in cycle_type.items():
        denominator *= size**mult * factorial(mult)
    return factorial(cycle_type.ambient) // denominator


def power_cycle_type(cycle_type: Partition, exponent: int) -> Partition:
    """Cycle type of the exponent-th power of a permutation with this type.

    Each k-cycle splits into gcd(e, k) cycles of length k / gcd(e, k).
    """
    if exponent < 1:
        raise ValueError(f"exponent must be >= 1, got {exponent}")
    powered: Counter[int] = Counter()
    for size, mult in cycle_type.items():
        g = gcd(exponent, size)
        powered[size // g] += g * mult
    return Partition(powered, ambient=cycle_type.ambient)
