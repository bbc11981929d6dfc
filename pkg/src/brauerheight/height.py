"""Left-height of pair partitions.

The search runs over *sweeps*: slice words in which every pair of chords
that interleave on the boundary circle crosses exactly once and no other
pair crosses.  A sweep is described by the row of strands at each level,
each strand tagged by the chord it belongs to.  For such words the number
of lines a path must cross from a gap to the left alcove is bounded below
by the number of chords with an odd number of strands to its left, so the
search minimises that count and afterwards checks the certificate with the
face graph of :mod:`brauerheight.picture`.

Normal form used by the search (both moves change no crossing height):

* a northern arc is capped as soon as its legs are adjacent and it has
  crossed every chord it interleaves with;
* a southern arc is cupped immediately before its first crossing; it may
  also be cupped on its own, which is needed when its first crossing is with
  an arc not yet cupped or when other arcs end inside it;
* southern arcs that never cross and enclose nothing still present are
  cupped at the very end.
"""
from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path

from .diagram import (Diagram, compose, e_n, identity, pair_partitions, sigma,
                      tl_generator)
from .picture import (Event, SliceWord, frame_alcove_connected, picture_height,
                      realize)

INF = 1 << 20
MAX_POINTS = 12  # desk-scale cap on n + m for enumeration
CACHE_ENV = "BRAUERHEIGHT_CACHE"


@dataclass(frozen=True)
class HeightResult:
    value: int
    certificate: SliceWord
    exact: bool

    def to_record(self, p: Diagram) -> dict:
        return {"pairs": [list(b) for b in p.blocks], "height": self.value,
                "cert": str(self.certificate), "exact": self.exact}


@dataclass
class HeightTable:
    n: int
    m: int
    results: dict = field(default_factory=dict)  # Diagram -> HeightResult

    def census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.results.values():
            out[r.value] = out.get(r.value, 0) + 1
        return dict(sorted(out.items()))

    def at_most(self, l: int) -> list[Diagram]:
        return [p for p, r in self.results.items() if r.value <= l]

    def height(self, p: Diagram) -> int:
        return self.results[p.unscaled].value


# ---------------------------------------------------------------- chords

class Chords:
    """Boundary geometry of a pair partition.

    Boundary points are placed on a circle in the order 1..n, m'..1'; the
    left alcove touches the frame between 1' and 1.
    """

    def __init__(self, p: Diagram):
        if not p.is_pair:
            raise ValueError("height is defined for pair partitions")
        self.p = p
        n, m = p.n, p.m
        self.pos = {i: i - 1 for i in range(1, n + 1)}
        self.pos.update({-j: n + m - j for j in range(1, m + 1)})
        self.pairs = sorted(p.blocks, key=lambda b: min(self.pos[x] for x in b))
        self.span = [tuple(sorted(self.pos[x] for x in b)) for b in self.pairs]
        self.chord_of = {x: c for c, b in enumerate(self.pairs) for x in b}
        self.kind = []
        for b in self.pairs:
            north = sum(1 for x in b if x > 0)
            self.kind.append("N" if north == 2 else "S" if north == 0 else "P")
        k = len(self.pairs)
        self.inter = [[self._interleave(a, b) for b in range(k)] for a in range(k)]
        self.pair_bit = {}
        for a in range(k):
            for b in range(a + 1, k):
                if self.inter[a][b]:
                    self.pair_bit[(a, b)] = self.pair_bit[(b, a)] = 1 << len(self.pair_bit) // 2
        self.full = (1 << (len(self.pair_bit) // 2)) - 1
        self.partners = [[b for b in range(k) if self.inter[a][b]] for a in range(k)]
        self.encloses = [kind == "S" and hi - lo > 1 for kind, (lo, hi) in zip(self.kind, self.span)]
        self.top = tuple(self.chord_of[i] for i in range(1, n + 1))
        self.bottom = tuple(self.chord_of[-j] for j in range(1, m + 1))
        legs: dict = {}
        for k, c in enumerate(self.bottom):
            legs.setdefault(c, []).append(k)
        self.bottom_arcs = {c: tuple(v) for c, v in legs.items() if len(v) == 2}

    def _interleave(self, a, b):
        (a0, a1), (b0, b1) = self.span[a], self.span[b]
        return a0 < b0 < a1 < b1 or b0 < a0 < b1 < a1

    def crossing_number(self) -> int:
        return len(self.pair_bit) // 2

    def separation(self, x: float) -> int:
        """Chords separating the frame position x from the left alcove."""
        return sum(1 for lo, hi in self.span if lo < x < hi)


def interleaving_pairs(p: Diagram) -> int:
    """Minimal number of crossings in any picture of p."""
    return Chords(p).crossing_number()


def is_noncrossing(p: Diagram) -> bool:
    """Balanced-parenthesis test around the boundary (1..n then m'..1')."""
    order = list(range(1, p.n + 1)) + list(range(-p.m, 0))
    stack = []
    partner = p.partner
    for x in order:
        if stack and stack[-1] == partner[x]:
            stack.pop()
        else:
            stack.append(x)
    return not stack


# ---------------------------------------------------------------- the search

class _Sweep:
    def __init__(self, p: Diagram):
        self.ch = Chords(p)
        self.memo: dict = {}

    def _cap(self, seq: tuple, mask: int):
        """Apply forced caps; returns (seq, tokens)."""
        ch = self.ch
        tokens = []
        changed = True
        while changed:
            changed = False
            for j in range(len(seq) - 1):
                c = seq[j]
                if c == seq[j + 1] and ch.kind[c] == "N" and all(
                        mask & ch.pair_bit[(c, b)] for b in ch.partners[c]):
                    tokens.append(f"C{j + 1}")
                    seq = seq[:j] + seq[j + 2:]
                    changed = True
                    break
        return seq, tokens

    def _cross_height(self, seq, j):
        par = 0
        for c in seq[:j]:
            par ^= 1 << c
        a, b = seq[j], seq[j + 1]
        left = bin(par).count("1")
        upper = bin(par ^ (1 << a)).count("1")
        lower = bin(par ^ (1 << b)).count("1")
        right = bin(par ^ (1 << a) ^ (1 << b)).count("1")
        return min(left, right, upper, lower)

    def _moves(self, seq, mask):
        """Yield (token string, local height, next seq, next mask)."""
        ch = self.ch
        for j in range(len(seq) - 1):
            a, b = seq[j], seq[j + 1]
            if a != b and ch.inter[a][b] and not mask & ch.pair_bit[(a, b)]:
                h = self._cross_height(seq, j)
                nxt = seq[:j] + (b, a) + seq[j + 2:]
                nmask = mask | ch.pair_bit[(a, b)]
                nseq, caps = self._cap(nxt, nmask)
                yield ".".join([f"X{j + 1}"] + caps), h, nseq, nmask
        present = set(seq)
        for c, kind in enumerate(ch.kind):
            if kind != "S" or c in present:
                continue
            # a bare cup is needed when the arc's first crossing is with an arc
            # not yet cupped, or when it must enclose arcs cupped before it
            bare = ch.encloses[c] or any(b not in present for b in ch.partners[c])
            if not bare and not ch.partners[c]:
                continue
            for g in range(len(seq) + 1):
                ins = seq[:g] + (c, c) + seq[g:]
                if bare:
                    # its first crossing may be with another arc not yet cupped
                    yield f"U{g + 1}", -1, ins, mask
                for j in (g - 1, g + 1):
                    if j < 0 or j + 1 >= len(ins):
                        continue
                    a, b = ins[j], ins[j + 1]
                    if not ch.inter[a][b] or mask & ch.pair_bit[(a, b)]:
                        continue
                    h = self._cross_height(ins, j)
                    nxt = ins[:j] + (b, a) + ins[j + 2:]
                    nmask = mask | ch.pair_bit[(a, b)]
                    nseq, caps = self._cap(nxt, nmask)
                    yield ".".join([f"U{g + 1}", f"X{j + 1}"] + caps), h, nseq, nmask

    def _terminal(self, seq, mask) -> bool:
        ch = self.ch
        if mask != ch.full:
            return False
        if any(ch.kind[c] == "N" for c in seq):
            return False
        present = set(seq)
        if seq != tuple(c for c in ch.bottom if c in present):
            return False
        # arcs still to be cupped go in last, so nothing present may sit inside them
        for c, (lo, hi) in ch.bottom_arcs.items():
            if c not in present and any(x in present for x in ch.bottom[lo + 1:hi]):
                return False
        return True

    def best(self, seq, mask) -> int:
        key = (seq, mask)
        if key in self.memo:
            return self.memo[key]
        if self._terminal(seq, mask):
            val = -1
        else:
            val = INF
            for _, h, nseq, nmask in self._moves(seq, mask):
                if h >= val:
                    continue
                val = min(val, max(h, self.best(nseq, nmask)))
        self.memo[key] = val
        return val

    def _closing_cups(self, seq) -> list[str]:
        """Cup the never-crossing southern arcs in, outermost first."""
        ch = self.ch
        present = set(seq)
        pending = [c for c, k in enumerate(ch.kind) if k == "S" and c not in present]
        pending.sort(key=lambda c: ch.span[c][1] - ch.span[c][0], reverse=True)
        tokens = []
        for c in pending:
            present.add(c)
            target = [x for x in ch.bottom if x in present]
            g = target.index(c)
            tokens.append(f"U{g + 1}")
        return tokens

    def solve(self) -> tuple[int, SliceWord]:
        ch = self.ch
        seq, tokens = self._cap(ch.top, 0)
        value = self.best(seq, 0)
        if value >= INF:
            raise RuntimeError(f"no sweep realizes {ch.p}")
        mask = 0
        while not self._terminal(seq, mask):
            options = []
            for tok, h, nseq, nmask in self._moves(seq, mask):
                if max(h, self.best(nseq, nmask)) <= value:
                    options.append((tok + ".", nseq, nmask))
            tok, seq, mask = min(options)
            tokens.extend(tok[:-1].split("."))
        tokens.extend(self._closing_cups(seq))
        word = SliceWord(ch.p.n, tuple(Event(t[0], int(t[1:])) for t in tokens))
        return value, word


# exactness beyond height 0 is certified by the walk-count identity, see
# certify_by_counts; the sizes that passed are recorded here
_CERTIFIED_HALF_SIZES: set[int] = set()


def partition_height(p: Diagram, budget: int | None = None) -> HeightResult:
    """Minimal picture height of p, with a verified certificate.

    With ``budget`` set, every slice word of at most that many events (and
    width at most n + m + 2) is searched as well, and a lower value found
    there replaces the sweep result.
    """
    p = p.unscaled
    value, word = _Sweep(p).solve()
    got = realize(word)
    if got != p:
        raise AssertionError(f"certificate {word} realizes {got}, not {p}")
    if picture_height(word) != value:
        raise AssertionError(f"certificate {word} has face-graph height {picture_height(word)}, "
                             f"search value {value}")
    if budget is not None:
        found = bounded_search(p.n, p.m, budget).get(p)
        if found is not None and found[0] < value:
            value, word = found
    exact = value <= 0 or _certified((p.n + p.m) // 2)
    return HeightResult(value, word, exact)


CERTIFY_MAX = 5  # largest N for which certify_by_counts runs automatically
_ATTEMPTED: set[int] = set()


def _certified(N: int) -> bool:
    if N not in _ATTEMPTED and N <= CERTIFY_MAX:
        _ATTEMPTED.add(N)
        certify_by_counts(N)
    return N in _CERTIFIED_HALF_SIZES


@lru_cache(maxsize=None)
def _height_value(p: Diagram) -> int:
    if is_noncrossing(p):
        return -1
    return partition_height(p).value


def height(p: Diagram) -> int:
    """Just the value; memoised."""
    return _height_value(p.unscaled)


# ---------------------------------------------------------------- bounded brute force

@lru_cache(maxsize=None)
def bounded_search(n: int, m: int, max_events: int, max_width: int | None = None) -> dict:
    """Minimal face-graph height over *all* slice words with few events.

    Returns {diagram: (height, word)} for every pair partition of J(n,m)
    realized by a word of at most ``max_events`` events whose levels never
    exceed ``max_width`` strands.  Words that close a loop are skipped.
    """
    if max_width is None:
        max_width = max(n, m) + 2
    best: dict = {}

    def rec(events, k):
        if k == m:
            w = SliceWord(n, tuple(events))
            d = realize(w)
            if d.delta_exp == 0:
                h = picture_height(w)
                old = best.get(d)
                if old is None or h < old[0]:
                    best[d] = (h, w)
        if len(events) == max_events:
            return
        for i in range(1, k):
            if events and events[-1] == Event("X", i):
                continue  # an immediate double crossing never helps
            events.append(Event("X", i))
            rec(events, k)
            events.pop()
        for i in range(1, k):
            events.append(Event("C", i))
            rec(events, k - 2)
            events.pop()
        if k + 2 <= max_width:
            for i in range(1, k + 2):
                events.append(Event("U", i))
                rec(events, k + 2)
                events.pop()

    rec([], n)
    return best


# ---------------------------------------------------------------- tables

def _cache_path(n: int, m: int) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"heights_{n}_{m}.jsonl"


def enumerate_by_height(n: int, m: int, use_cache: bool = True) -> HeightTable:
    if (n + m) % 2:
        raise ValueError("n + m must be even")
    if n + m > MAX_POINTS:
        raise ValueError(f"n + m = {n + m} exceeds the enumeration cap {MAX_POINTS}")
    table = HeightTable(n, m)
    path = _cache_path(n, m) if use_cache else None
    if path is not None and path.exists():
        for line in path.read_text().splitlines():
            rec = json.loads(line)
            p = Diagram(n, m, tuple(tuple(b) for b in rec["pairs"]))
            table.results[p] = HeightResult(rec["height"], SliceWord.parse(rec["cert"]), rec["exact"])
        if len(table.results) == _double_factorial(n + m - 1):
            return table
        table.results.clear()
    for p in pair_partitions(n, m):
        table.results[p] = partition_height(p)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text("".join(json.dumps(r.to_record(p)) + "\n" for p, r in table.results.items()))
        tmp.replace(path)
    return table


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def height_set(l: int, n: int, m: int | None = None) -> list[Diagram]:
    """J_{<=l}(n, m) in enumeration order."""
    m = n if m is None else m
    return [p for p in pair_partitions(n, m) if height(p) <= l]


def certify_by_counts(N: int) -> bool:
    """Compare |J_{<=l}(N,N)| with closed walks on the Rollet graph for every l.

    Sweep values are upper bounds on the true height.  If every level count
    agrees with the walk count no value can be too large, so all heights of
    diagrams with N + N (equivalently n + m = 2N) points are exact.
    """
    from .bratteli import count_closed_walks
    values = [height(p) for p in pair_partitions(N, N)]
    ok = all(sum(1 for v in values if v <= l) == count_closed_walks(l, N)
             for l in range(-1, max(N - 1, 0)))
    if ok:
        _CERTIFIED_HALF_SIZES.add(N)
    return ok


# ---------------------------------------------------------------- closure

@dataclass
class ClosureReport:
    l: int | None
    n: int
    checked: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_closure(l: int | None, n: int, samples: int | None = None, seed: int = 0) -> ClosureReport:
    """height(p*q) <= max(height(p), height(q)) on J_{<=l}(n,n) (all of J(n,n) if l is None).

    Exhaustive when ``samples`` is None, otherwise random pairs.
    """
    basis = pair_partitions(n, n)
    if l is not None:
        basis = [p for p in basis if height(p) <= l]
    rep = ClosureReport(l, n, 0)
    if samples is None:
        pairs = product(basis, repeat=2)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(basis), rng.choice(basis)) for _ in range(samples))
    for p, q in pairs:
        r = compose(p, q).unscaled
        hp, hq, hr = height(p), height(q), height(r)
        rep.checked += 1
        if hr > max(hp, hq):
            rep.violations.append((p, q, r, hp, hq, hr))
    return rep


def monoid_closure(l: int, n: int, include_basis: bool = False) -> set[Diagram]:
    """Multiplicative closure (delta dropped) of 1, the U_i and sigma_j with j <= l+1."""
    gens = {identity(n)}
    gens |= {tl_generator(i, n) for i in range(1, n)}
    gens |= {sigma(j, n) for j in range(1, min(l + 1, n - 1) + 1)}
    if include_basis:
        gens |= set(height_set(l, n))
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                for r in (compose(a, g).unscaled, compose(g, a).unscaled):
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
        frontier = nxt
    return seen


# ---------------------------------------------------------------- left-simple

def frame_zero_segments(p: Diagram) -> list[int]:
    """Frame segments (between boundary positions x and x+1, circularly) not separated from L."""
    ch = Chords(p)
    total = p.n + p.m
    return [x for x in range(total - 1) if ch.separation(x + 0.5) == 0]


def is_left_simple(p: Diagram) -> bool:
    """The left alcove meets the frame in one arc.

    The segment between 1' and 1 is always in the left alcove and its two
    neighbours never are, so the intersection is connected exactly when no
    other segment has separation zero.
    """
    return not frame_zero_segments(p)


@dataclass
class LeftSimpleReport:
    n: int
    l: int
    count: int
    examined: int
    disagreements: list = field(default_factory=list)


def count_left_simple(n: int, l: int = 0, budget: int | None = None) -> LeftSimpleReport:
    """Count left-simple diagrams in J_{<=l}(n,n).

    The combinatorial test is compared with the face-graph frame test on each
    diagram's certificate picture, and with ``budget`` also on every minimal
    picture that the bounded word search finds.
    """
    count = 0
    examined = 0
    bad = []
    extra = bounded_search(n, n, budget) if budget is not None else {}
    for p in height_set(l, n):
        simple = is_left_simple(p)
        pictures = [partition_height(p).certificate]
        if p in extra and extra[p][0] <= l:
            pictures.append(extra[p][1])
        for w in pictures:
            examined += 1
            if frame_alcove_connected(w) != simple:
                bad.append((p, str(w)))
        count += simple
    return LeftSimpleReport(n, l, count, examined, bad)


def lower_bound(p: Diagram) -> int:
    """-1 for non-crossing diagrams, else 0."""
    return -1 if is_noncrossing(p) else 0


__all__ = [
    "HeightResult", "HeightTable", "Chords", "is_noncrossing", "partition_height", "height",
    "enumerate_by_height", "height_set", "check_closure", "monoid_closure", "count_left_simple",
    "is_left_simple", "bounded_search", "certify_by_counts", "interleaving_pairs", "e_n",
]
