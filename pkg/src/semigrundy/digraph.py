"""Digraph, vertex-set and value-map primitives shared by every other module.

Vertices are dense indices 0..order-1. Vertex subsets travel as bitmasks
wrapped in :class:`VertexSet`; non-negative integer vertex labelings are
:class:`ValueMap`. All three types are immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

__all__ = [
    "Digraph",
    "ValueMap",
    "VertexSet",
    "induced_subdigraph",
    "is_independent",
    "make_digraph",
    "mex",
]


def mex(values: Iterable[int]) -> int:
    """Smallest non-negative integer not contained in ``values``."""
    present = set(values)
    k = 0
    while k in present:
        k += 1
    return k


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Digraph:
    """Immutable finite digraph on vertices 0..order-1.

    Arcs are a set (duplicates collapse); self-loops are kept as given and
    treated literally by every checker. The primary representation is one
    out-neighbor bitmask per vertex, so adjacency queries are O(1) words.
    """

    __slots__ = ("order", "out_masks", "labels")

    def __init__(
        self,
        order: int,
        arcs: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ) -> None:
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        out = [0] * order
        for tail, head in arcs:
            if not (0 <= tail < order and 0 <= head < order):
                raise ValueError(
                    f"arc ({tail}, {head}) out of range for order {order}"
                )
            out[tail] |= 1 << head
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != order:
                raise ValueError(
                    f"expected {order} labels, got {len(labels)}"
                )
        self.order = order
        self.out_masks = tuple(out)
        self.labels = labels

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """All arcs as (tail, head) pairs, sorted."""
        return tuple(
            (v, w) for v in range(self.order) for w in bits(self.out_masks[v])
        )

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out_masks)

    def successors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.out_masks[v]))

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other: object) -> bool:
        # Labels are display metadata and do not affect equality.
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.order == other.order and self.out_masks == other.out_masks

    def __hash__(self) -> int:
        return hash((self.order, self.out_masks))

    def __repr__(self) -> str:
        return f"Digraph(order={self.order}, arcs={list(self.arcs)!r})"


def make_digraph(
    order: int,
    arcs: Iterable[tuple[int, int]] = (),
    labels: Sequence[str] | None = None,
) -> Digraph:
    """Build a digraph from an arc list, deduplicating arcs."""
    return Digraph(order, arcs, labels)


class VertexSet:
    """Subset of the vertices of a digraph of a fixed order, as a bitmask."""

    __slots__ = ("order", "mask")

    def __init__(self, order: int, members: Iterable[int] = ()) -> None:
        mask = 0
        for v in members:
            if not 0 <= v < order:
                raise ValueError(f"vertex {v} out of range for order {order}")
            mask |= 1 << v
        self.order = order
        self.mask = mask

    @classmethod
    def from_mask(cls, order: int, mask: int) -> VertexSet:
        if mask < 0 or mask >> order:
            raise ValueError(f"mask {mask:#x} out of range for order {order}")
        out = cls.__new__(cls)
        out.order = order
        out.mask = mask
        return out

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.order and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.order == other.order and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.order, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.order}, {sorted(self)})"


class ValueMap:
    """Total non-negative integer function on the vertices of a digraph."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]) -> None:
        vals = tuple(int(v) for v in values)
        for v in vals:
            if v < 0:
                raise ValueError(f"values must be non-negative, got {v}")
        self.values = vals

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def max_value(self) -> int:
        if not self.values:
            raise ValueError("max_value of an empty map")
        return max(self.values)

    def min_value(self) -> int:
        if not self.values:
            raise ValueError("min_value of an empty map")
        return min(self.values)

    def image(self) -> frozenset[int]:
        return frozenset(self.values)

    def preimage(self, value: int) -> VertexSet:
        """Vertices mapped to ``value``, as a set over this map's domain."""
        return VertexSet(
            len(self.values),
            (v for v, x in enumerate(self.values) if x == value),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ValueMap):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"ValueMap({list(self.values)!r})"


def _check_same_order(D: Digraph, X: VertexSet) -> None:
    if X.order != D.order:
        raise ValueError(
            f"vertex set over order {X.order} used with digraph of order {D.order}"
        )


def induced_subdigraph(D: Digraph, X: VertexSet) -> tuple[Digraph, dict[int, int]]:
    """Subdigraph induced by ``X``, densely reindexed.

    Returns the induced digraph together with the old-to-new index map.
    """
    _check_same_order(D, X)
    old = sorted(X)
    remap = {v: i for i, v in enumerate(old)}
    arcs = [
        (remap[v], remap[w])
        for v in old
        for w in bits(D.out_masks[v] & X.mask)
    ]
    labels = None
    if D.labels is not None:
        labels = [D.labels[v] for v in old]
    return Digraph(len(old), arcs, labels), remap


def is_independent(D: Digraph, I: VertexSet) -> bool:
    """True iff no arc of ``D`` has both endpoints in ``I``.

    A self-loop at a member counts as an internal arc.
    """
    _check_same_order(D, I)
    return all(D.out_masks[v] & I.mask == 0 for v in bits(I.mask))
