"""The Rollet graph R_l and walk counting.

Vertices are pairs (p, lam) with lam a partition of min(p, l+2).  Between
levels p and p+1 the edges add a box while p < l+2 and keep lam fixed from
p = l+2 on.  Walks of length n from (0, ()) ending at (p, lam) count the
dimension of the standard module of J_{l,n} with label (p, lam).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .symgrp import add_box_neighbours, partitions, remove_box_neighbours

Vertex = tuple  # (p, lam)


@dataclass
class RolletGraph:
    l: int
    radius: int
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)  # (lower, upper)

    def neighbours(self, v: Vertex) -> list[Vertex]:
        out = [b for a, b in self.edges if a == v]
        out += [a for a, b in self.edges if b == v]
        return out

    def to_dot(self) -> str:
        def name(v):
            lam = ",".join(map(str, v[1])) or "0"
            return f'"{v[0]}:{lam}"'
        lines = [f"graph R_{self.l} {{".replace("-", "m")]
        lines += [f"  {name(v)};" for v in self.vertices]
        lines += [f"  {name(a)} -- {name(b)};" for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"l": self.l, "radius": self.radius,
                           "vertices": [[v[0], list(v[1])] for v in self.vertices],
                           "edges": [[[a[0], list(a[1])], [b[0], list(b[1])]] for a, b in self.edges]})


def up_neighbours(l: int, v: Vertex) -> list[Vertex]:
    p, lam = v
    if p < l + 2:
        return [(p + 1, mu) for mu in add_box_neighbours(lam)]
    return [(p + 1, lam)]


def down_neighbours(l: int, v: Vertex) -> list[Vertex]:
    p, lam = v
    if p == 0:
        return []
    if p <= l + 2:
        return [(p - 1, mu) for mu in remove_box_neighbours(lam)]
    return [(p - 1, lam)]


def build_rollet(l: int, radius: int) -> RolletGraph:
    if l < -1:
        raise ValueError("l must be at least -1")
    g = RolletGraph(l, radius)
    for p in range(radius + 1):
        for lam in partitions(min(p, l + 2)):
            g.vertices.append((p, lam))
    for v in g.vertices:
        if v[0] < radius:
            for w in up_neighbours(l, v):
                g.edges.append((v, w))
    return g


@lru_cache(maxsize=None)
def walk_counts(l: int, n: int) -> dict:
    """{vertex: number of length-n walks from (0, ()) ending there}."""
    cur = {(0, ()): 1}
    for _ in range(n):
        nxt: dict = {}
        for v, c in cur.items():
            for w in up_neighbours(l, v) + down_neighbours(l, v):
                nxt[w] = nxt.get(w, 0) + c
        cur = nxt
    return cur


def count_walks(l: int, n: int, target: Vertex) -> int:
    p, lam = target
    return walk_counts(l, n).get((p, tuple(lam)), 0)


def count_closed_walks(l: int, n: int) -> int:
    """Closed walks of length 2n at the root = sum of squared walk counts of length n."""
    return sum(c * c for c in walk_counts(l, n).values())


@dataclass
class AuditLine:
    label: tuple
    walks: int
    dimension: int

    @property
    def ok(self) -> bool:
        return self.walks == self.dimension


@dataclass
class DimensionAudit:
    l: int
    n: int
    lines: list
    closed_walks: int
    basis_size: int

    @property
    def ok(self) -> bool:
        return all(x.ok for x in self.lines) and self.closed_walks == self.basis_size


def dimension_audit(l: int, n: int) -> DimensionAudit:
    """Walk counts against standard-module dimensions and |J_{<=l}(n,n)|."""
    from .height import height_set
    from .reptheory import index_set, standard_module_dimension
    lines = [AuditLine(lab, count_walks(l, n, lab), standard_module_dimension(l, n, *lab))
             for lab in index_set(l, n)]
    return DimensionAudit(l, n, lines, count_closed_walks(l, n), len(height_set(l, n)))
