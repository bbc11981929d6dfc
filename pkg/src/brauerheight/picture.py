"""Pictures as words of elementary slices, and their height.

A picture is a top-to-bottom sequence of events acting on a row of strands:

* ``Cross(i)`` swaps strands i and i+1,
* ``Cap(i)`` joins strands i and i+1 and removes them,
* ``Cup(i)`` creates a new pair of strands at positions i, i+1.

Between consecutive events sits a *level* with k strands and k+1 gaps
numbered 0..k from the left.  Gaps are the faces of the picture as seen on
that level; two gaps on one level are adjacent across a strand (weight 1),
and a gap is joined to the gaps directly below it across an event without
touching a line (weight 0).  Gap 0 is the left alcove.  Heights come from a
0-1 breadth first search on that graph.

Text form: ``n=3:X1.C2.U2`` (X cross, C cap, U cup, positions 1-based).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .diagram import Diagram, _UnionFind

KINDS = ("X", "C", "U")


@dataclass(frozen=True)
class Event:
    kind: str  # 'X', 'C' or 'U'
    i: int     # 1-based strand position

    def __post_init__(self):
        if self.kind not in KINDS or self.i < 1:
            raise ValueError(f"bad event {self.kind}{self.i}")

    def __str__(self):
        return f"{self.kind}{self.i}"


def Cross(i): return Event("X", i)
def Cap(i): return Event("C", i)
def Cup(i): return Event("U", i)


@dataclass(frozen=True)
class SliceWord:
    n: int
    events: tuple[Event, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        self.widths()  # validate

    def widths(self) -> list[int]:
        """Strand counts at each level, top to bottom (len(events) + 1 entries)."""
        k = self.n
        out = [k]
        for e in self.events:
            if e.kind == "X":
                if e.i + 1 > k:
                    raise ValueError(f"{e} needs at least {e.i + 1} strands, have {k}")
            elif e.kind == "C":
                if e.i + 1 > k:
                    raise ValueError(f"{e} needs at least {e.i + 1} strands, have {k}")
                k -= 2
            else:
                if e.i > k + 1:
                    raise ValueError(f"{e} is out of range for {k} strands")
                k += 2
            out.append(k)
        return out

    @property
    def m(self) -> int:
        return self.widths()[-1]

    def __str__(self):
        return f"n={self.n}:" + ".".join(str(e) for e in self.events)

    @classmethod
    def parse(cls, text: str) -> "SliceWord":
        text = text.strip()
        if not text.startswith("n=") or ":" not in text:
            raise ValueError(f"cannot parse slice word {text!r}")
        head, body = text.split(":", 1)
        n = int(head[2:])
        events = []
        for tok in filter(None, body.split(".")):
            if tok[0] not in KINDS or not tok[1:].isdigit():
                raise ValueError(f"bad token {tok!r} in {text!r}")
            events.append(Event(tok[0], int(tok[1:])))
        return cls(n, tuple(events))

    def __add__(self, other: "SliceWord") -> "SliceWord":
        return stack(self, other)


def stack(a: SliceWord, b: SliceWord) -> SliceWord:
    """a on top of b."""
    if a.m != b.n:
        raise ValueError(f"cannot stack width {a.m} over width {b.n}")
    return SliceWord(a.n, a.events + b.events)


def flip_word(w: SliceWord) -> SliceWord:
    """Reflect top to bottom: caps become cups and the order reverses."""
    swap = {"X": "X", "C": "U", "U": "C"}
    return SliceWord(w.m, tuple(Event(swap[e.kind], e.i) for e in reversed(w.events)))


def tensor_word(a: SliceWord, b: SliceWord) -> SliceWord:
    """a left of b: run a's events with b's strands idle, then b's shifted past a."""
    shift = a.m
    return SliceWord(a.n + b.n, a.events + tuple(Event(e.kind, e.i + shift) for e in b.events))


def realize(w: SliceWord) -> Diagram:
    """The scaled pair partition drawn by the word (closed loops count as delta)."""
    uf = _UnionFind()
    strands = [("top", i) for i in range(1, w.n + 1)]
    for s in strands:
        uf.find(s)
    fresh = 0
    for e in w.events:
        j = e.i - 1
        if e.kind == "X":
            strands[j], strands[j + 1] = strands[j + 1], strands[j]
        elif e.kind == "C":
            uf.union(strands[j], strands[j + 1])
            del strands[j:j + 2]
        else:
            a, b = ("mid", fresh), ("mid", fresh + 1)
            fresh += 2
            uf.union(a, b)
            strands[j:j] = [a, b]
    for k, s in enumerate(strands, start=1):
        uf.union(s, ("bot", k))
    comps: dict = {}
    for node in list(uf.parent):
        comps.setdefault(uf.find(node), []).append(node)
    blocks, loops = [], 0
    for nodes in comps.values():
        ext = [x if side == "top" else -x for side, x in nodes if side != "mid"]
        if ext:
            blocks.append(tuple(ext))
        else:
            loops += 1
    return Diagram(w.n, len(strands), tuple(blocks), loops)


# ---------------------------------------------------------------- face graph

@dataclass
class FaceGraph:
    widths: list[int]
    edges: dict  # node -> list[(node, weight)]; node = (level, gap)

    def distances(self) -> dict:
        """0-1 BFS distance to the left alcove for every (level, gap)."""
        dist = {}
        dq = deque()
        for t in range(len(self.widths)):
            dist[(t, 0)] = 0
            dq.append((t, 0))
        while dq:
            u = dq.popleft()
            du = dist[u]
            for v, wt in self.edges.get(u, ()):
                dv = du + wt
                if dv < dist.get(v, 1 << 30):
                    dist[v] = dv
                    if wt == 0:
                        dq.appendleft(v)
                    else:
                        dq.append(v)
        return dist


def face_graph(w: SliceWord) -> FaceGraph:
    widths = w.widths()
    edges: dict = {}

    def link(u, v, wt):
        edges.setdefault(u, []).append((v, wt))
        edges.setdefault(v, []).append((u, wt))

    for t, k in enumerate(widths):
        for g in range(k):
            link((t, g), (t, g + 1), 1)
    for t, e in enumerate(w.events, start=1):
        k = widths[t - 1]
        i = e.i
        if e.kind == "X":
            for g in range(k + 1):
                if g != i:
                    link((t - 1, g), (t, g), 0)
        elif e.kind == "C":
            for g in range(k + 1):
                if g < i:
                    link((t - 1, g), (t, g), 0)
                elif g > i:
                    link((t - 1, g), (t, g - 2), 0)
        else:
            for g in range(k + 3):
                if g < i:
                    link((t - 1, g), (t, g), 0)
                elif g > i:
                    link((t - 1, g - 2), (t, g), 0)
    return FaceGraph(widths, edges)


def crossing_heights(w: SliceWord) -> list[int]:
    """Height of each crossing, in word order: min distance over its four wedges."""
    dist = face_graph(w).distances()
    out = []
    for t, e in enumerate(w.events, start=1):
        if e.kind != "X":
            continue
        i = e.i
        wedges = [(t - 1, i - 1), (t - 1, i + 1), (t - 1, i), (t, i)]
        out.append(min(dist[x] for x in wedges))
    return out


def picture_height(w: SliceWord) -> int:
    """Largest crossing height, or -1 for a picture without crossings."""
    hs = crossing_heights(w)
    return max(hs) if hs else -1


def frame_alcove_connected(w: SliceWord) -> bool:
    """Is the part of the boundary frame touching the left alcove connected?

    The frame is walked once around: left edge, top segments left to right,
    right edge, bottom segments right to left.  Each segment is tagged by
    whether its face lies in the left alcove (distance 0).
    """
    dist = face_graph(w).distances()
    widths = w.widths()
    last = len(widths) - 1
    ring = [True]  # left edge
    ring += [dist[(0, g)] == 0 for g in range(widths[0] + 1)]
    right_edge = any(dist[(t, widths[t])] == 0 for t in range(last + 1))
    ring.append(right_edge)
    ring += [dist[(last, g)] == 0 for g in range(widths[last], -1, -1)]
    # count maximal runs of True on the circle
    runs = sum(1 for j in range(len(ring)) if ring[j] and not ring[j - 1])
    return runs <= 1 or all(ring)


def words_from(n: int, events: Iterable[str]) -> SliceWord:
    return SliceWord.parse(f"n={n}:" + ".".join(events))
