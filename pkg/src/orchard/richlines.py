"""Lines spanned by a point set, with exact multiplicities.

The central object is the table mapping each spanned line to the number
of set points on it.  It is built from the O(n^2) pair space: every
unordered pair contributes one join, a line carrying m points receives
C(m,2) pairs, and m is recovered from the pair count.  No O(n^3) pass
and no floating slope buckets anywhere.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from math import comb, gcd, isqrt
from typing import Iterable, Optional, Sequence

from .projective import ProjLine, ProjPoint, canonical_triple


class InvariantViolation(RuntimeError):
    """An internal consistency law failed; the message names it."""


@dataclass(frozen=True)
class PointSet:
    """Ordered distinct projective points, optionally labelled 1/2/3."""

    points: tuple[ProjPoint, ...]
    labels: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if len(set(self.points)) != len(self.points):
            raise ValueError("PointSet: duplicate points rejected")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != len(self.points):
                raise ValueError("PointSet: labels must cover all indices")
            if any(g not in (1, 2, 3) for g in labels):
                raise ValueError("PointSet: labels must be in {1, 2, 3}")

    @property
    def n(self) -> int:
        return len(self.points)

    def raw(self) -> list[tuple[int, int, int]]:
        return [p.h for p in self.points]


# Canonical line triples with all entries below this bound pack
# injectively into one integer; integer keys hash several times faster
# than tuples and carry the 2 * 10^6-join workload of big sets.
_ENC = 1 << 40
_ENC_HALF = _ENC >> 1


def _key_scale(hs: Sequence[tuple[int, int, int]]) -> Optional[int]:
    bound = max(max(abs(v) for v in h) for h in hs)
    return _ENC if 2 * bound * bound < _ENC_HALF else None


def _decode_key(key, scale) -> tuple[int, int, int]:
    if scale is None:
        return key
    half = scale >> 1
    key, c = divmod(key + half, scale)
    key, b = divmod(key + half, scale)
    return (key, b - half, c - half)


@dataclass
class RichLineTable:
    """Map canonical line key -> number of incident set points (>= 2).

    Keys are canonical line triples, stored packed into single integers
    when the coordinate range permits (scale is the packing base then).
    """

    entries: dict = field(default_factory=dict)
    scale: Optional[int] = None

    def multiplicity(self, line: ProjLine) -> int:
        a, b, c = line.l
        if self.scale is None:
            return self.entries.get((a, b, c), 0)
        return self.entries.get((a * self.scale + b) * self.scale + c, 0)

    def sorted_entries(self) -> list[tuple[tuple[int, int, int], int]]:
        return sorted((_decode_key(k, self.scale), m)
                      for k, m in self.entries.items())

    def lines(self, min_multiplicity: int = 2) -> list[ProjLine]:
        return [ProjLine(k) for k, m in self.sorted_entries()
                if m >= min_multiplicity]

    def pair_total(self) -> int:
        return sum(comb(m, 2) for m in self.entries.values())


def _pair_counts(hs: Sequence[tuple[int, int, int]], stripe: int = 0,
                 step: int = 1, scale: Optional[int] = None) -> dict:
    """Joins of all pairs (i, j), i in the given stripe, keyed canonically
    (packed into integers when a scale is given)."""
    tab: dict = {}
    get = tab.get
    n = len(hs)
    for i in range(stripe, n, step):
        x1, y1, z1 = hs[i]
        for j in range(i + 1, n):
            x2, y2, z2 = hs[j]
            a = y1 * z2 - z1 * y2
            b = z1 * x2 - x1 * z2
            c = x1 * y2 - y1 * x2
            g = gcd(a, b, c)
            if a:
                if a < 0:
                    g = -g
            elif b:
                if b < 0:
                    g = -g
            elif c < 0:
                g = -g
            if scale is None:
                key = (a // g, b // g, c // g)
            else:
                key = (a // g * scale + b // g) * scale + c // g
            tab[key] = get(key, 0) + 1
    return tab


def _stripe_worker(args):
    hs, stripe, step, scale = args
    return _pair_counts(hs, stripe, step, scale)


def spanned_lines(ps: PointSet, workers: int = 1) -> RichLineTable:
    """All lines spanned by the set, with exact incidence multiplicities.

    With workers > 1 the pair space is partitioned into interleaved row
    stripes computed in separate processes; the merged table is
    identical to the single-worker result.
    """
    if ps.n < 2:
        raise ValueError("spanned_lines needs at least 2 points")
    hs = ps.raw()
    scale = _key_scale(hs)
    if workers <= 1:
        pairs = _pair_counts(hs, scale=scale)
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            parts = pool.map(_stripe_worker,
                             [(hs, w, workers, scale) for w in range(workers)])
        pairs = parts[0]
        for part in parts[1:]:
            for key, c in part.items():
                pairs[key] = pairs.get(key, 0) + c
    for key, c in pairs.items():
        if c > 1:
            m = (1 + isqrt(1 + 8 * c)) // 2
            if m * (m - 1) // 2 != c:
                raise InvariantViolation(
                    f"pair-count conservation: line {_decode_key(key, scale)}"
                    f" carries {c} pairs, not a binomial C(m,2)")
            pairs[key] = m
        else:
            pairs[key] = 2
    return RichLineTable(pairs, scale)


def k_rich_count(table: RichLineTable, k: int, exactly: bool = False) -> int:
    """Number of lines with multiplicity = k (exactly) or >= k."""
    if k < 2:
        raise ValueError("k_rich_count needs k >= 2")
    if exactly:
        return sum(1 for m in table.entries.values() if m == k)
    return sum(1 for m in table.entries.values() if m >= k)


def triple_line_count(table: RichLineTable) -> int:
    """|T(H)|: lines carrying at least three set points."""
    return k_rich_count(table, 3)


def line_members(ps: PointSet, min_points: int = 3) -> dict[tuple, list[int]]:
    """Point indices per line, for lines with >= min_points set points.

    Two passes over the pair space: multiplicities first, then member
    lists only for the qualifying lines (keeps memory flat on big sets).
    """
    hs = ps.raw()
    pairs = _pair_counts(hs)
    want = comb(min_points, 2)
    candidates = {k for k, c in pairs.items() if c >= want}
    members: dict[tuple, list[int]] = {k: [] for k in candidates}
    seen: dict[tuple, set[int]] = {k: set() for k in candidates}
    n = len(hs)
    for i in range(n):
        x1, y1, z1 = hs[i]
        for j in range(i + 1, n):
            x2, y2, z2 = hs[j]
            key = canonical_triple(y1 * z2 - z1 * y2,
                                   z1 * x2 - x1 * z2,
                                   x1 * y2 - y1 * x2)
            s = seen.get(key)
            if s is not None:
                if i not in s:
                    s.add(i)
                    members[key].append(i)
                if j not in s:
                    s.add(j)
                    members[key].append(j)
    return members


def tripartite_count(ps: PointSet, pattern: Iterable[int]) -> int:
    """Lines containing three distinct points matching a label pattern.

    pattern is a multiset over {1,2,3} of size 3; e.g. (1,2,3) asks for
    one point of each group, (1,1,2) for two of group 1 and one of
    group 2.
    """
    if ps.labels is None:
        raise ValueError("tripartite_count needs a labelled PointSet")
    pat = sorted(pattern)
    if len(pat) != 3 or any(g not in (1, 2, 3) for g in pat):
        raise ValueError("pattern must be a size-3 multiset over {1,2,3}")
    present = set(ps.labels)
    missing = set(pat) - present
    if missing:
        raise ValueError(f"pattern references missing group {sorted(missing)}")
    need = {g: pat.count(g) for g in set(pat)}
    count = 0
    for _, idxs in line_members(ps).items():
        have = {g: 0 for g in need}
        for i in idxs:
            g = ps.labels[i]
            if g in have:
                have[g] += 1
        if all(have[g] >= need[g] for g in need):
            count += 1
    return count


def direction_count(ps: PointSet) -> int:
    """Number of distinct directions (points at infinity) of all joins."""
    if ps.n < 2:
        raise ValueError("direction_count needs at least 2 points")
    hs = ps.raw()
    if any(h[2] == 0 for h in hs):
        raise ValueError("direction_count: point at infinity present")
    dirs = set()
    n = len(hs)
    for i in range(n):
        x1, y1, z1 = hs[i]
        for j in range(i + 1, n):
            x2, y2, z2 = hs[j]
            dx = x2 * z1 - x1 * z2
            dy = y2 * z1 - y1 * z2
            g = gcd(dx, dy)
            if dx:
                if dx < 0:
                    g = -g
            elif dy < 0:
                g = -g
            dirs.add((dx // g, dy // g))
    return len(dirs)


def green_tao_bound(n: int) -> int:
    """floor(n(n-3)/6) + 1, the sharp maximum of 3-rich lines."""
    if n < 3:
        raise ValueError("green_tao_bound needs n >= 3")
    return n * (n - 3) // 6 + 1


def green_tao_advisory(ps: PointSet) -> tuple[int, int, bool]:
    """(exactly-3-rich count, bound, within-bound?) for a point set.

    The bound is proven only for sufficiently large sets, so callers
    should report a violation rather than crash on one.
    """
    t = spanned_lines(ps)
    c = k_rich_count(t, 3, exactly=True)
    b = green_tao_bound(ps.n)
    return c, b, c <= b
