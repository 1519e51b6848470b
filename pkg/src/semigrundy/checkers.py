"""Polynomial-time validators for kernels, semi-kernels, Grundy and
semi-Grundy labelings, plus the two witness extractions they license.

All checkers are pure functions on immutable inputs. Self-loops are read
literally: a looped vertex belongs to no independent set and admits no
Grundy or semi-Grundy value.
"""

from __future__ import annotations

from semigrundy.digraph import Digraph, ValueMap, VertexSet, bits, mex
from semigrundy.errors import ContractViolation

__all__ = [
    "coloring_classes",
    "is_grundy",
    "is_kernel",
    "is_semi_grundy",
    "is_semi_kernel",
    "kernel_from_grundy",
    "semi_kernel_from_semi_grundy",
]


def _check_set(D: Digraph, X: VertexSet) -> None:
    if X.order != D.order:
        raise ValueError(
            f"vertex set over order {X.order} used with digraph of order {D.order}"
        )


def _check_map(D: Digraph, f: ValueMap) -> None:
    if len(f) != D.order:
        raise ValueError(
            f"value map on {len(f)} vertices used with digraph of order {D.order}"
        )


def is_semi_kernel(D: Digraph, S: VertexSet) -> bool:
    """True iff ``S`` is nonempty, independent, and every arc leaving ``S``
    is answered by an arc from its head back into ``S``."""
    _check_set(D, S)
    smask = S.mask
    if smask == 0:
        return False
    for v in bits(smask):
        if D.out_masks[v] & smask:
            return False
    for v in bits(smask):
        for z in bits(D.out_masks[v] & ~smask):
            if not D.out_masks[z] & smask:
                return False
    return True


def is_kernel(D: Digraph, N: VertexSet) -> bool:
    """True iff ``N`` is independent and absorbs every outside vertex.

    The empty set is a kernel only of the empty digraph.
    """
    _check_set(D, N)
    nmask = N.mask
    for v in bits(nmask):
        if D.out_masks[v] & nmask:
            return False
    full = (1 << D.order) - 1
    for z in bits(full & ~nmask):
        if not D.out_masks[z] & nmask:
            return False
    return True


def is_grundy(D: Digraph, g: ValueMap) -> bool:
    """True iff every vertex carries the mex of its successor values."""
    _check_map(D, g)
    for x in range(D.order):
        if g[x] != mex(g[y] for y in bits(D.out_masks[x])):
            return False
    return True


def is_semi_grundy(D: Digraph, s: ValueMap) -> bool:
    """True iff no arc joins equal values and every value-raising arc is
    answered by an arc from its head back to the tail's value class.

    Values need not be consecutive.
    """
    _check_map(D, s)
    for x in range(D.order):
        for y in bits(D.out_masks[x]):
            if s[y] == s[x]:
                return False
    succ_values: dict[int, set[int]] = {}
    for x in range(D.order):
        for y in bits(D.out_masks[x]):
            if s[y] > s[x]:
                if y not in succ_values:
                    succ_values[y] = {s[z] for z in bits(D.out_masks[y])}
                if s[x] not in succ_values[y]:
                    return False
    return True


def kernel_from_grundy(D: Digraph, g: ValueMap) -> VertexSet:
    """Zero class of a Grundy labeling; always a kernel."""
    if not is_grundy(D, g):
        raise ContractViolation("value map is not a Grundy labeling of the digraph")
    return VertexSet(D.order, (v for v in range(D.order) if g[v] == 0))


def semi_kernel_from_semi_grundy(D: Digraph, s: ValueMap) -> VertexSet:
    """Minimum-value class of a semi-Grundy labeling; always a semi-kernel."""
    if D.order == 0:
        raise ValueError("the empty digraph has no semi-kernel")
    if not is_semi_grundy(D, s):
        raise ContractViolation(
            "value map is not a semi-Grundy labeling of the digraph"
        )
    low = s.min_value()
    return VertexSet(D.order, (v for v in range(D.order) if s[v] == low))


def coloring_classes(s: ValueMap) -> int:
    """Number of distinct values; for a semi-Grundy labeling the classes are
    independent, so this bounds the chromatic number of the underlying graph."""
    return len(set(s.values))
