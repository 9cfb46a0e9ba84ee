"""Exact rational arithmetic, permutation algebra, and weighted-graph shortest paths.

Everything downstream stores measures and distances as `fractions.Fraction`
(arbitrary precision, canonical lowest terms, positive denominator), so value
equality is structural and no rounding ever happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Optional

Rational = Fraction


class ParseError(ValueError):
    """Malformed serialized data or unusable input file."""

    category = "parse"


class PreconditionError(ValueError):
    """A documented domain precondition was violated."""

    category = "precondition"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact fraction."""
    if not isinstance(text, str):
        raise ParseError(f"rational must be a string, got {type(text).__name__}")
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Canonical string form: "p/q", or "p" when the value is an integer."""
    return str(value)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., size-1}, stored as the image tuple."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise PreconditionError("image is not a bijection on 0..n-1")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def size(self) -> int:
        return len(self.image)

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.image))

    def __call__(self, i: int) -> int:
        return self.image[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self.compose(other))(i) == self(other(i))."""
        if other.size != self.size:
            raise PreconditionError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.image[j] for j in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def power(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.size)
        while k:
            if k & 1:
                result = result.compose(base)
            base = base.compose(base)
            k >>= 1
        return result

    def cycles(self) -> list[list[int]]:
        """Cycle decomposition including fixed points, ordered by least element."""
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.image[i]
            out.append(cycle)
        return out

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)


def permutation_power(p: Permutation, k: int) -> Permutation:
    """p composed with itself k times; negative k uses the inverse."""
    return p.power(k)


def permutation_order(p: Permutation) -> int:
    """Least m >= 1 with p^m = identity (= lcm of cycle lengths)."""
    return p.order()


def permutation_nth_root(p: Permutation, n: int) -> Optional[Permutation]:
    """Some r with r.power(n) == p, or None when no such permutation exists.

    A single K-cycle raised to the n-th power splits into gcd(n, K) cycles of
    length K/gcd(n, K); a root therefore exists iff, for every cycle length L
    of p, the L-cycles can be grouped into bundles of size g with
    gcd(n, g*L) == g, each bundle interleaving into one (g*L)-cycle of the root.
    """
    if n < 1:
        raise PreconditionError("root degree must be >= 1")
    if n == 1:
        return p
    by_length: dict[int, list[list[int]]] = {}
    for cycle in p.cycles():
        by_length.setdefault(len(cycle), []).append(cycle)

    image = list(range(p.size))
    for length, cycles in sorted(by_length.items()):
        valid = [g for g in range(1, len(cycles) + 1) if gcd(n, g * length) == g]
        grouping = _partition_into(len(cycles), valid)
        if grouping is None:
            return None
        start = 0
        for g in grouping:
            bundle = cycles[start : start + g]
            start += g
            k = g * length
            # root cycle y with y[(r + t*n) % k] = bundle[r][t]; then the n-th
            # power of the k-cycle traverses each original cycle in order.
            y = [0] * k
            for r in range(g):
                for t in range(length):
                    y[(r + t * n) % k] = bundle[r][t]
            for idx in range(k):
                image[y[idx]] = y[(idx + 1) % k]
    root = Permutation(tuple(image))
    if root.power(n) != p:  # pragma: no cover - construction is exact
        raise RuntimeError("internal error: constructed root fails to verify")
    return root


def _partition_into(total: int, parts: list[int]) -> Optional[list[int]]:
    """Write `total` as an ordered sum of values from `parts`, or None."""
    if total == 0:
        return []
    reachable: list[Optional[int]] = [None] * (total + 1)
    reachable[0] = 0
    for value in range(1, total + 1):
        for part in parts:
            if part <= value and reachable[value - part] is not None:
                reachable[value] = part
                break
    if reachable[total] is None:
        return None
    out = []
    value = total
    while value:
        part = reachable[value]
        assert part is not None
        out.append(part)
        value -= part
    return out


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph with exact non-negative rational edge weights."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, Fraction], ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError("duplicate vertex labels")
        known = set(self.vertices)
        for u, v, w in self.edges:
            if u not in known or v not in known:
                raise PreconditionError(f"edge ({u}, {v}) references unknown vertex")
            if w < 0:
                raise PreconditionError(f"negative weight on edge ({u}, {v})")


def all_pairs_shortest_paths(g: WeightedGraph) -> dict[tuple[str, str], Fraction]:
    """Exact shortest-path distances via relaxation over all intermediate vertices.

    Unreachable pairs are absent from the returned mapping. Internally the
    weights are scaled to integers by the common denominator, which keeps the
    dynamic program exact and fast.
    """
    n = len(g.vertices)
    index = {v: i for i, v in enumerate(g.vertices)}
    scale = reduce(lcm, (w.denominator for _, _, w in g.edges), 1)
    total = sum(int(w * scale) for _, _, w in g.edges)
    inf = total + 1
    dist = [[inf] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0
    for u, v, w in g.edges:
        iu, iv = index[u], index[v]
        scaled = int(w * scale)
        if scaled < dist[iu][iv]:
            dist[iu][iv] = scaled
            dist[iv][iu] = scaled
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik >= inf:
                continue
            di = dist[i]
            for j in range(n):
                via = dik + dk[j]
                if via < di[j]:
                    di[j] = via
    out: dict[tuple[str, str], Fraction] = {}
    for i, u in enumerate(g.vertices):
        for j, v in enumerate(g.vertices):
            if dist[i][j] < inf:
                out[(u, v)] = Fraction(dist[i][j], scale)
    return out
