"""Set partitions of n + m boundary points and the partition/Brauer category.

Labels are signed integers: ``i > 0`` is northern point i, ``-j`` is southern
point j'.  A :class:`Diagram` carries a partition together with the number of
vacuum bubbles (closed loops) produced while composing, so identities hold
in Z[delta] without ever choosing a value for delta.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Iterator


def _label_key(x: int) -> tuple[int, int]:
    return (abs(x), 0 if x > 0 else 1)


def _canonical(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    bs = [tuple(sorted(b, key=_label_key)) for b in blocks]
    return tuple(sorted(bs, key=lambda b: _label_key(b[0])))


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


@dataclass(frozen=True)
class Diagram:
    """A partition of {1..n} and {-1..-m}, scaled by delta**delta_exp."""

    n: int
    m: int
    blocks: tuple[tuple[int, ...], ...]
    delta_exp: int = 0

    def __post_init__(self):
        blocks = _canonical(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.delta_exp < 0:
            raise ValueError("delta_exp must be nonnegative")
        seen = [x for b in blocks for x in b]
        expected = set(range(1, self.n + 1)) | set(range(-self.m, 0))
        if any(not b for b in blocks) or len(seen) != len(set(seen)) or set(seen) != expected:
            raise ValueError(f"blocks {blocks} do not partition the points of P({self.n},{self.m})")

    # -- construction helpers
    @classmethod
    def from_pairs(cls, n: int, m: int, pairs: Iterable[Iterable[int]], delta_exp: int = 0) -> "Diagram":
        return cls(n, m, tuple(tuple(p) for p in pairs), delta_exp)

    @classmethod
    def from_permutation(cls, perm: Iterable[int]) -> "Diagram":
        """Permutation diagram with north i joined to south perm[i-1] (1-based images)."""
        perm = tuple(perm)
        return cls(len(perm), len(perm), tuple((i + 1, -perm[i]) for i in range(len(perm))))

    # -- basic data
    @property
    def unscaled(self) -> "Diagram":
        return self if self.delta_exp == 0 else replace(self, delta_exp=0)

    def scaled(self, k: int) -> "Diagram":
        return replace(self, delta_exp=self.delta_exp + k)

    @property
    def is_pair(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    @cached_property
    def partner(self) -> dict[int, int]:
        if not self.is_pair:
            raise ValueError("partner map needs a pair partition")
        out = {}
        for a, b in self.blocks:
            out[a], out[b] = b, a
        return out

    def propagating_blocks(self) -> list[tuple[int, ...]]:
        return [b for b in self.blocks if any(x > 0 for x in b) and any(x < 0 for x in b)]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "m": self.m, "delta_exp": self.delta_exp,
                           "blocks": [list(b) for b in self.blocks]})

    @classmethod
    def from_json(cls, text: str | dict) -> "Diagram":
        d = json.loads(text) if isinstance(text, str) else text
        return cls(d["n"], d["m"], tuple(tuple(b) for b in d["blocks"]), d.get("delta_exp", 0))

    def __str__(self):
        def lab(x):
            return str(x) if x > 0 else f"{-x}'"
        body = ",".join("{" + ",".join(lab(x) for x in b) + "}" for b in self.blocks)
        pre = "" if self.delta_exp == 0 else ("d*" if self.delta_exp == 1 else f"d^{self.delta_exp}*")
        return f"{pre}{{{body}}}"


PairPartition = Diagram
ScaledDiagram = Diagram


def propagating_number(p: Diagram) -> int:
    return len(p.propagating_blocks())


def compose(p: Diagram, q: Diagram) -> Diagram:
    """Stack p (on top, P(n,m)) over q (P(m,k)); closed middle components add to delta_exp."""
    if p.m != q.n:
        raise ValueError(f"cannot compose P({p.n},{p.m}) with P({q.n},{q.m})")
    uf = _UnionFind()
    # nodes: ('t', i) top of p, ('m', j) middle, ('b', k) bottom of q
    for b in p.blocks:
        nodes = [("t", x) if x > 0 else ("m", -x) for x in b]
        for u in nodes:
            uf.find(u)
        for u in nodes[1:]:
            uf.union(nodes[0], u)
    for b in q.blocks:
        nodes = [("m", x) if x > 0 else ("b", -x) for x in b]
        for u in nodes:
            uf.find(u)
        for u in nodes[1:]:
            uf.union(nodes[0], u)
    comps: dict = {}
    for node in list(uf.parent):
        comps.setdefault(uf.find(node), []).append(node)
    blocks = []
    loops = 0
    for nodes in comps.values():
        ext = [x if side == "t" else -x for side, x in nodes if side != "m"]
        if ext:
            blocks.append(tuple(ext))
        else:
            loops += 1
    return Diagram(p.n, q.m, tuple(blocks), p.delta_exp + q.delta_exp + loops)


def tensor(p: Diagram, q: Diagram) -> Diagram:
    """Side-by-side juxtaposition, q to the right of p."""
    def shift(x):
        return x + p.n if x > 0 else x - p.m
    blocks = p.blocks + tuple(tuple(shift(x) for x in b) for b in q.blocks)
    return Diagram(p.n + q.n, p.m + q.m, blocks, p.delta_exp + q.delta_exp)


def flip(p: Diagram) -> Diagram:
    """Top-to-bottom reflection (swap primed and unprimed labels)."""
    return Diagram(p.m, p.n, tuple(tuple(-x for x in b) for b in p.blocks), p.delta_exp)


def identity(n: int) -> Diagram:
    return Diagram(n, n, tuple((i, -i) for i in range(1, n + 1)))


def cap_u() -> Diagram:
    """The unique element u of J(2,0)."""
    return Diagram(2, 0, ((1, 2),))


def U() -> Diagram:
    return Diagram(2, 2, ((1, 2), (-1, -2)))


def tl_generator(i: int, n: int) -> Diagram:
    """Temperley-Lieb generator U_i = 1_{i-1} (x) U (x) 1_{n-i-1}."""
    if not 1 <= i < n:
        raise ValueError(f"U_{i} needs 1 <= i < n={n}")
    return tensor(tensor(identity(i - 1), U()), identity(n - i - 1))


def sigma(i: int, n: int) -> Diagram:
    """Coxeter generator swapping strands i and i+1 in J(n,n)."""
    if not 1 <= i < n:
        raise ValueError(f"sigma_{i} needs 1 <= i < n={n}")
    perm = list(range(1, n + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return Diagram.from_permutation(perm)


def e_nt(n: int, t: int) -> Diagram:
    """e_{n,t} = 1_{n-2t} (x) U^{(x)t}."""
    if 2 * t > n or t < 0:
        raise ValueError(f"e_{{n,t}} needs 0 <= 2t <= n (n={n}, t={t})")
    out = identity(n - 2 * t)
    for _ in range(t):
        out = tensor(out, U())
    return out


def e_n(n: int) -> Diagram:
    return e_nt(n, 1)


# ---------------------------------------------------------------- enumeration

def _matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k, other in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + tail


def pair_partitions(n: int, m: int) -> list[Diagram]:
    """All (n+m-1)!! elements of J(n,m), in a fixed order."""
    if (n + m) % 2:
        return []
    pts = list(range(1, n + 1)) + list(range(-1, -m - 1, -1))
    return [Diagram(n, m, tuple(mt)) for mt in _matchings(pts)]


def random_pair_partition(n: int, m: int, rng: random.Random) -> Diagram:
    pts = list(range(1, n + 1)) + list(range(-1, -m - 1, -1))
    rng.shuffle(pts)
    return Diagram(n, m, tuple(zip(pts[::2], pts[1::2])))


def permutations_diagrams(n: int) -> list[Diagram]:
    from itertools import permutations
    return [Diagram.from_permutation(p) for p in permutations(range(1, n + 1))]


# ---------------------------------------------------------------- polar decomposition

def order_preserving_half(p: Diagram) -> tuple[Diagram, tuple[int, ...]]:
    """Split p in J(n,m) with k propagating lines as x o pi.

    ``x`` keeps p's northern arcs and sends the k propagating northern
    endpoints, in order, to 1'..k'; ``pi`` (1-based images) satisfies
    compose(x, pi-diagram) joins to p's southern side, i.e. the line leaving
    the r-th northern propagating endpoint ends at p's southern endpoint of
    rank pi[r-1] among the southern propagating endpoints.
    """
    props = sorted(p.propagating_blocks(), key=lambda b: max(b))
    # each propagating block of a pair partition is (north, south)
    north = [max(b) for b in props]
    south_sorted = sorted(-min(b) for b in props)
    rank = {s: r + 1 for r, s in enumerate(south_sorted)}
    pi = tuple(rank[-min(b)] for b in props)
    north_rank = {a: r + 1 for r, a in enumerate(north)}
    blocks = [b for b in p.blocks if b not in props and all(x > 0 for x in b)]
    blocks += [(a, -north_rank[a]) for a in north]
    return Diagram(p.n, len(props), tuple(blocks)), pi


def polar_decompose(p: Diagram) -> tuple[Diagram, Diagram, Diagram]:
    """(left, middle, right) with compose(compose(left, middle), right) == p.

    The middle permutation orders propagating lines by northern endpoint;
    left and right have order-preserving propagating lines.
    """
    if not p.is_pair:
        raise ValueError("polar decomposition is defined for pair partitions")
    left, pi = order_preserving_half(p)
    right_flipped, _ = order_preserving_half(flip(p))
    return left, Diagram.from_permutation(pi), flip(right_flipped)


def eta(p: Diagram) -> Diagram:
    """Bijection J(n+1,n+1) -> J(n+2,n): southern n+1' becomes northern n+2."""
    if p.n != p.m:
        raise ValueError("eta is defined on J(n+1,n+1)")
    last = p.m
    blocks = tuple(tuple(p.n + 1 if x == -last else x for x in b) for b in p.blocks)
    return Diagram(p.n + 1, p.m - 1, blocks, p.delta_exp)


def eta_inverse(q: Diagram) -> Diagram:
    blocks = tuple(tuple(-(q.m + 1) if x == q.n else x for x in b) for b in q.blocks)
    return Diagram(q.n - 1, q.m + 1, blocks, q.delta_exp)


def restrict_last_two(p: Diagram) -> Diagram:
    """Drop points n-1, n, (n-1)', n' from p in J(n,n) of the form d (x) U."""
    n = p.n
    top, bottom = {n - 1, n}, {-(n - 1), -n}
    sets = [set(b) for b in p.blocks]
    if top not in sets or bottom not in sets:
        raise ValueError(f"{p} is not of the form d (x) U")
    keep = [b for b in p.blocks if set(b) not in (top, bottom)]
    return Diagram(n - 2, n - 2, tuple(keep), p.delta_exp)
