"""Families of subsets of a finite domain, encoded as int bitmasks.

Bit ``i`` of a mask stands for the ``i``-th domain element.  Upward-closed
families are kept as the antichain of their minimal members.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ResourceError


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def canonical(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and sort by the ascending tuple of member indices."""
    return tuple(sorted(set(masks), key=indices))


def minimal(masks: Iterable[int]) -> tuple[int, ...]:
    """The inclusion-minimal members, canonically ordered."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return canonical(kept)


def is_antichain(masks: Iterable[int]) -> bool:
    masks = list(masks)
    return all(a == b or (a & ~b and b & ~a) for a in masks for b in masks) and len(set(masks)) == len(masks)


def in_upset(generators: Iterable[int], mask: int) -> bool:
    return any(g & ~mask == 0 for g in generators)


def upset_members(generators: Iterable[int], n: int) -> list[int]:
    gens = list(generators)
    return [a for a in range(1 << n) if in_upset(gens, a)]


def upset_size(generators: Iterable[int], n: int, enumerate_limit: int = 20, generator_limit: int = 20) -> int:
    """Number of subsets of an ``n``-element domain above some generator.

    Enumerates for ``n <= enumerate_limit``, otherwise uses inclusion-exclusion
    over at most ``generator_limit`` generators.
    """
    gens = minimal(generators)
    if n <= enumerate_limit:
        return len(upset_members(gens, n))
    if len(gens) > generator_limit:
        raise ResourceError(f"cannot count an upset with {len(gens)} generators over {n} elements")
    # inclusion-exclusion over sets of generators
    total = 0
    for pick in range(1, 1 << len(gens)):
        union = 0
        for i, g in enumerate(gens):
            if pick >> i & 1:
                union |= g
        sign = 1 if bin(pick).count("1") % 2 else -1
        total += sign * (1 << (n - union.bit_count()))
    return total


def minimal_transversals(edges: Iterable[int]) -> tuple[int, ...]:
    """Minimal sets meeting every edge (Berge's incremental algorithm).

    No edges: the only minimal transversal is the empty set.  An empty edge
    cannot be met, so there are none.
    """
    trs = [0]
    for e in minimal(edges):
        if e == 0:
            return ()
        grown = set()
        for t in trs:
            if t & e:
                grown.add(t)
            else:
                for b in bits(e):
                    grown.add(t | b)
        trs = list(minimal(grown))
    return canonical(trs)


def transversal_members(edges: Iterable[int], n: int) -> list[int]:
    """Brute force: all subsets of the domain meeting every edge."""
    edges = list(edges)
    return [b for b in range(1 << n) if all(a & b for a in edges)]
