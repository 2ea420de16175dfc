"""Geometric corona enumeration by backtracking exact cover.

A corona of a region is a set of pairwise disjoint lozenges, each lying
outside the region with at least one vertex on its boundary, that covers
every triangle of the external ring exactly once. Triangles further out may
be covered at most once (secondary items in exact-cover terms).
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .lattice import Lozenge, Region, candidate_lozenges, external_ring_triangles


@dataclass(frozen=True)
class Corona:
    lozenges: tuple[Lozenge, ...]

    @classmethod
    def of(cls, lozenges: Iterable[Lozenge]) -> Corona:
        return cls(tuple(sorted(lozenges)))

    def __len__(self) -> int:
        return len(self.lozenges)

    def __iter__(self) -> Iterator[Lozenge]:
        return iter(self.lozenges)


@dataclass
class CoronaHistogram:
    """Number of coronas keyed by lozenge count."""

    by_size: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.by_size.values())

    @property
    def sizes(self) -> list[int]:
        return sorted(self.by_size)

    def counts(self) -> list[int]:
        return [self.by_size[k] for k in self.sizes]

    def as_polynomial(self):
        from .polyalg import Polynomial

        return Polynomial(self.by_size)

    @classmethod
    def from_counter(cls, c: Counter) -> CoronaHistogram:
        return cls({k: c[k] for k in sorted(c) if c[k]})


@dataclass(frozen=True)
class CoronaCheck:
    valid: bool
    violation: Optional[str] = None
    lozenge: Optional[Lozenge] = None

    def __bool__(self) -> bool:
        return self.valid


INSIDE_REGION = "lozenge inside region"
DETACHED = "detached lozenge"
OVERLAP = "overlap"
UNCOVERED = "uncovered required triangle"


def is_valid_corona(r: Region, lozenges: Iterable[Lozenge]) -> CoronaCheck:
    """Check `lozenges` against the corona conditions, reporting the first failure.

    Conditions are tried in the order: region overlap, detachment, mutual
    overlap, coverage of the external ring.
    """
    lozenges = sorted(set(lozenges))
    candidates = candidate_lozenges(r)
    for lz in lozenges:
        if lz.first in r.triangles or lz.second in r.triangles:
            return CoronaCheck(False, INSIDE_REGION, lz)
    for lz in lozenges:
        if lz not in candidates:
            return CoronaCheck(False, DETACHED, lz)
    covered = set()
    for lz in lozenges:
        if lz.first in covered or lz.second in covered:
            return CoronaCheck(False, OVERLAP, lz)
        covered.update(lz.triangles())
    if not external_ring_triangles(r) <= covered:
        return CoronaCheck(False, UNCOVERED)
    return CoronaCheck(True)


class _Problem:
    """Bitmask encoding of the exact-cover instance for one region."""

    def __init__(self, r: Region):
        self.ring = sorted(external_ring_triangles(r))
        self.lozenges = sorted(candidate_lozenges(r))
        cells = sorted({t for lz in self.lozenges for t in lz.triangles()})
        bit = {t: 1 << i for i, t in enumerate(cells)}
        self.masks = [bit[lz.first] | bit[lz.second] for lz in self.lozenges]
        self.ring_bits = [bit[t] for t in self.ring]
        # candidate indices covering each ring triangle, in lozenge order
        self.cover = [
            [j for j, m in enumerate(self.masks) if m & b] for b in self.ring_bits
        ]

    def branch(self, used: int) -> Optional[list[int]]:
        """Options for the most constrained uncovered ring triangle.

        Returns [] when the search is stuck and None when everything is covered.
        """
        best = None
        for b, opts in zip(self.ring_bits, self.cover):
            if used & b:
                continue
            live = [j for j in opts if not self.masks[j] & used]
            if not live:
                return []
            if best is None or len(live) < len(best):
                best = live
                if len(live) == 1:
                    break
        return best

    def walk(self, used: int, chosen: list[int], leaf: Callable[[list[int]], None]) -> None:
        opts = self.branch(used)
        if opts is None:
            leaf(chosen)
            return
        for j in opts:
            chosen.append(j)
            self.walk(used | self.masks[j], chosen, leaf)
            chosen.pop()

    def count(self, used: int, depth: int, hist: Counter) -> None:
        opts = self.branch(used)
        if opts is None:
            hist[depth] += 1
            return
        for j in opts:
            self.count(used | self.masks[j], depth + 1, hist)

    def corona(self, chosen: list[int]) -> Corona:
        return Corona.of(self.lozenges[j] for j in chosen)


def _subtree_coronas(r: Region, first: int) -> list[Corona]:
    p = _Problem(r)
    out: list[Corona] = []
    p.walk(p.masks[first], [first], lambda ch: out.append(p.corona(ch)))
    return out


def _subtree_counts(r: Region, first: int) -> Counter:
    p = _Problem(r)
    hist: Counter = Counter()
    p.count(p.masks[first], 1, hist)
    return hist


def _top_level(p: _Problem) -> list[int]:
    opts = p.branch(0)
    return [] if opts is None else opts


def enumerate_coronas(
    r: Region,
    emit: Optional[Callable[[Corona], None]] = None,
    workers: Optional[int] = None,
) -> CoronaHistogram:
    """Visit every corona of `r` once, in canonical search order.

    With ``workers > 1`` the top-level branches run in separate processes;
    coronas are still passed to `emit` in the sequential order.
    """
    if any(s <= 0 for s in r.shape.sides):
        raise ValueError("side lengths must be positive")
    p = _Problem(r)
    hist: Counter = Counter()

    def deliver(c: Corona) -> None:
        hist[len(c)] += 1
        if emit is not None:
            emit(c)

    if workers and workers > 1:
        branches = _top_level(p)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_subtree_coronas, [r] * len(branches), branches):
                for c in chunk:
                    deliver(c)
    else:
        p.walk(0, [], lambda ch: deliver(p.corona(ch)))
    return CoronaHistogram.from_counter(hist)


def enumerate_count_only(r: Region, workers: Optional[int] = None) -> CoronaHistogram:
    """Same search as `enumerate_coronas`, counting without building coronas."""
    if any(s <= 0 for s in r.shape.sides):
        raise ValueError("side lengths must be positive")
    p = _Problem(r)
    hist: Counter = Counter()
    if workers and workers > 1:
        branches = _top_level(p)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_subtree_counts, [r] * len(branches), branches):
                hist.update(part)
    else:
        p.count(0, 0, hist)
    return CoronaHistogram.from_counter(hist)


def iter_coronas(r: Region) -> list[Corona]:
    """All coronas of `r` as a list, in canonical order."""
    out: list[Corona] = []
    enumerate_coronas(r, out.append)
    return out


class _Enough(Exception):
    pass


def first_coronas(r: Region, limit: Optional[int]) -> list[Corona]:
    """The first `limit` coronas in canonical order (all of them for None)."""
    if limit is None:
        return iter_coronas(r)
    out: list[Corona] = []
    if limit <= 0:
        return out

    def take(c: Corona) -> None:
        out.append(c)
        if len(out) >= limit:
            raise _Enough

    try:
        enumerate_coronas(r, take)
    except _Enough:
        pass
    return out
