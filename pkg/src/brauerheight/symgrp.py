"""Symmetric groups, Young symmetrizers and Specht modules.

Permutations are tuples of 1-based images, read as permutation diagrams:
north i is joined to south perm[i-1].  Products follow diagram stacking, so
``mul(a, b)`` puts a on top and sends i to b[a[i]-1].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

Perm = tuple


# ---------------------------------------------------------------- partitions

@lru_cache(maxsize=None)
def partitions(m: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of m in reverse lexicographic order, e.g. (3,), (2,1), (1,1,1)."""
    if largest is None:
        largest = m
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            out.append((first,) + rest)
    return tuple(out)


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if text in ("", "0", "empty"):
        return ()
    lam = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(x <= 0 for x in lam):
        raise ValueError(f"{text!r} is not a partition")
    return lam


def add_box_neighbours(lam: tuple) -> list[tuple]:
    out = []
    for r in range(len(lam) + 1):
        row = lam[r] if r < len(lam) else 0
        if r == 0 or lam[r - 1] > row:
            new = list(lam) + [0] if r == len(lam) else list(lam)
            new[r] += 1
            out.append(tuple(new))
    return out


def remove_box_neighbours(lam: tuple) -> list[tuple]:
    out = []
    for r in range(len(lam)):
        nxt = lam[r + 1] if r + 1 < len(lam) else 0
        if lam[r] > nxt:
            new = list(lam)
            new[r] -= 1
            out.append(tuple(x for x in new if x))
    return out


def hook_dimension(lam: tuple) -> int:
    m = sum(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(m) // hooks


def standard_tableaux(lam: tuple) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of shape lam, rows as tuples of entries 1..m."""
    m = sum(lam)
    out = []

    def rec(k, rows):
        if k > m:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1, rows)
                rows[i].pop()

    rec(1, [[] for _ in lam])
    return out


def specht_dims(m: int) -> dict[tuple, int]:
    return {lam: len(standard_tableaux(lam)) for lam in partitions(m)}


# ---------------------------------------------------------------- group algebra

def identity_perm(m: int) -> Perm:
    return tuple(range(1, m + 1))


def mul(a: Perm, b: Perm) -> Perm:
    return tuple(b[x - 1] for x in a)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a, start=1):
        out[x - 1] = i
    return tuple(out)


def sign(a: Perm) -> int:
    s, seen = 1, set()
    for i in range(len(a)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = a[j] - 1
            length += 1
        s *= -1 if length % 2 == 0 else 1
    return s


@dataclass(frozen=True)
class GroupAlgebraElement:
    m: int
    terms: tuple  # sorted ((perm, Fraction), ...) with nonzero coefficients

    @classmethod
    def from_dict(cls, m: int, d: dict) -> "GroupAlgebraElement":
        return cls(m, tuple(sorted((k, Fraction(v)) for k, v in d.items() if v != 0)))

    @classmethod
    def basis(cls, g: Perm) -> "GroupAlgebraElement":
        return cls(len(g), ((tuple(g), Fraction(1)),))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other):
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, 0) + v
        return GroupAlgebraElement.from_dict(self.m, d)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        return GroupAlgebraElement.from_dict(self.m, {k: v * c for k, v in self.terms})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        d: dict = {}
        for a, x in self.terms:
            for b, y in other.terms:
                k = mul(a, b)
                d[k] = d.get(k, 0) + x * y
        return GroupAlgebraElement.from_dict(self.m, d)

    def flip(self) -> "GroupAlgebraElement":
        """Anti-involution g -> g^{-1} (the vertical flip of permutation diagrams)."""
        return GroupAlgebraElement.from_dict(self.m, {inverse(k): v for k, v in self.terms})

    def coefficient(self, g: Perm) -> Fraction:
        return self.as_dict().get(tuple(g), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def vector(self, order: list[Perm]) -> list[Fraction]:
        d = self.as_dict()
        return [d.get(g, Fraction(0)) for g in order]

    def ratio_to(self, other: "GroupAlgebraElement") -> Fraction | None:
        """c with self == c * other, or None if not proportional."""
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        g, v = other.terms[0]
        c = self.coefficient(g) / v
        return c if self == other.scale(c) else None

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{list(k)}" for k, v in self.terms)


def _row_and_column_groups(lam: tuple):
    rows, k = [], 1
    for r in lam:
        rows.append(list(range(k, k + r)))
        k += r
    cols = [[rows[i][j] for i in range(len(lam)) if lam[i] > j] for j in range(lam[0] if lam else 0)]
    return rows, cols


def _subgroup(m: int, blocks: list[list[int]]) -> list[Perm]:
    out = []
    for choice in product(*[list(permutations(b)) for b in blocks]):
        g = list(range(1, m + 1))
        for blk, img in zip(blocks, choice):
            for x, y in zip(blk, img):
                g[x - 1] = y
        out.append(tuple(g))
    return out


@lru_cache(maxsize=None)
def young_symmetrizer(lam: tuple) -> GroupAlgebraElement:
    """Row sum times signed column sum of the row-filled canonical tableau."""
    lam = tuple(lam)
    m = sum(lam)
    rows, cols = _row_and_column_groups(lam)
    row_sum = GroupAlgebraElement.from_dict(m, {g: 1 for g in _subgroup(m, rows)})
    col_sum = GroupAlgebraElement.from_dict(m, {g: sign(g) for g in _subgroup(m, cols)})
    return row_sum * col_sum


def symmetrizer_constant(lam: tuple) -> Fraction:
    """c with eps^2 = c eps."""
    return Fraction(factorial(sum(lam)), hook_dimension(lam))


# ---------------------------------------------------------------- linear algebra over Q

def _rank(vectors: list[list[Fraction]]) -> int:
    rows = [list(v) for v in vectors]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def solve_coordinates(basis: list[list[Fraction]], target: list[Fraction]) -> list[Fraction]:
    """Coefficients c with sum c_i basis[i] == target; raises if target is outside the span."""
    k, ncols = len(basis), len(target)
    # augmented system: columns are basis vectors
    rows = [[basis[i][j] for i in range(k)] + [target[j]] for j in range(ncols)]
    piv_cols = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, ncols) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(ncols):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, ncols)):
        raise ValueError("target is not in the span")
    out = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        out[c] = rows[i][k]
    return out


# ---------------------------------------------------------------- Specht modules

@dataclass(frozen=True)
class SpechtBasis:
    lam: tuple
    perms: tuple            # g with vector g * eps
    vectors: tuple          # GroupAlgebraElement

    def __len__(self):
        return len(self.vectors)

    def coordinates(self, x: GroupAlgebraElement) -> list[Fraction]:
        order = sorted(permutations(range(1, sum(self.lam) + 1)))
        return solve_coordinates([v.vector(order) for v in self.vectors], x.vector(order))

    def action_matrix(self, g: Perm) -> list[list[Fraction]]:
        """Matrix of left multiplication by g; column j is g * vectors[j]."""
        cols = [self.coordinates(GroupAlgebraElement.basis(g) * v) for v in self.vectors]
        return [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]


def _tableau_perm(lam: tuple, tableau) -> Perm:
    rows, _ = _row_and_column_groups(lam)
    g = [0] * sum(lam)
    for canon_row, t_row in zip(rows, tableau):
        for x, y in zip(canon_row, t_row):
            g[x - 1] = y
    return tuple(g)


@lru_cache(maxsize=None)
def specht_basis(lam: tuple) -> SpechtBasis:
    """Vectors g_T * eps for standard tableaux T, topped up if ever dependent."""
    lam = tuple(lam)
    m = sum(lam)
    eps = young_symmetrizer(lam)
    target = hook_dimension(lam)
    order = sorted(permutations(range(1, m + 1)))
    candidates = [_tableau_perm(lam, t) for t in standard_tableaux(lam)]
    candidates += [g for g in order if g not in candidates]
    perms, vecs, rows = [], [], []
    for g in candidates:
        v = GroupAlgebraElement.basis(g) * eps
        trial = rows + [v.vector(order)]
        if _rank(trial) == len(trial):
            perms.append(g)
            vecs.append(v)
            rows = trial
            if len(vecs) == target:
                break
    return SpechtBasis(lam, tuple(perms), tuple(vecs))


def all_perms(m: int) -> list[Perm]:
    return sorted(permutations(range(1, m + 1)))
