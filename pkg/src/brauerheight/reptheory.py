"""The algebras J_{l,n}, their standard modules and Gram forms.

Everything lives over Q(delta) with delta kept symbolic: coefficients are
:class:`~brauerheight.exact.DeltaPoly` and loops become powers of ``D``.

A standard module with label (p, lam), lam a partition of p_l = min(p, l+2),
has basis x (y (x) 1_{p - p_l}) where x runs over half-diagrams in J(n, p)
of height at most l whose p propagating lines do not cross, and y over a
Specht basis of S_lam.  Diagrams acting on it are reduced modulo the span of
diagrams with fewer than p propagating lines.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from itertools import product

from .diagram import (Diagram, compose, e_n, e_nt, flip, identity, order_preserving_half,
                      propagating_number, restrict_last_two, tensor)
from .exact import (D, ONE, ZERO, DeltaPoly, PolyMatrix, format_poly, generic_rank,
                    rank_at, rank_mod, rational_and_quadratic_roots)
from .height import height, height_set
from .symgrp import (GroupAlgebraElement, SpechtBasis, hook_dimension, partitions,
                     specht_basis, young_symmetrizer)


def _dpow(k: int) -> DeltaPoly:
    return D ** k if k else ONE


# ---------------------------------------------------------------- the algebra

@dataclass(frozen=True)
class AlgebraElement:
    l: int
    n: int
    terms: tuple  # ((Diagram with delta_exp 0, DeltaPoly), ...)

    @classmethod
    def from_dict(cls, l: int, n: int, d: dict) -> "AlgebraElement":
        items = [(k, v) for k, v in d.items() if not v.is_zero()]
        items.sort(key=lambda kv: kv[0].blocks)
        return cls(l, n, tuple(items))

    @classmethod
    def from_diagram(cls, l: int, n: int, p: Diagram, coeff=ONE) -> "AlgebraElement":
        if p.n != n or p.m != n:
            raise ValueError(f"{p} is not in J({n},{n})")
        if height(p) > l:
            raise ValueError(f"{p} has height {height(p)} > {l}")
        return cls.from_dict(l, n, {p.unscaled: DeltaPoly.coerce(coeff) * _dpow(p.delta_exp)})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def _check(self, other):
        if (self.l, self.n) != (other.l, other.n):
            raise ValueError(f"J_{{{self.l},{self.n}}} and J_{{{other.l},{other.n}}} do not match")

    def __add__(self, other):
        self._check(other)
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, ZERO) + v
        return AlgebraElement.from_dict(self.l, self.n, d)

    def scale(self, c) -> "AlgebraElement":
        c = DeltaPoly.coerce(c)
        return AlgebraElement.from_dict(self.l, self.n, {k: v * c for k, v in self.terms})

    def __mul__(self, other):
        return multiply(self, other)

    def flip(self) -> "AlgebraElement":
        return AlgebraElement.from_dict(self.l, self.n, {flip(k): v for k, v in self.terms})

    def coefficient(self, p: Diagram) -> DeltaPoly:
        return self.as_dict().get(p.unscaled, ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({format_poly(v)})*{k}" for k, v in self.terms)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    out: dict = {}
    for p, x in a.terms:
        for q, y in b.terms:
            r = compose(p, q)
            key = r.unscaled
            if height(key) > a.l:
                raise AssertionError(f"product {p}*{q} = {key} left J_<={a.l}")
            out[key] = out.get(key, ZERO) + x * y * _dpow(r.delta_exp)
    return AlgebraElement.from_dict(a.l, a.n, out)


def localize_psi(x: AlgebraElement) -> AlgebraElement:
    """e J_{l,n} e -> J_{l,n-2}: strip the trailing U from every diagram."""
    if x.n < 2:
        raise ValueError("localization needs n >= 2")
    out = {}
    for p, c in x.terms:
        out[restrict_last_two(p)] = c
    return AlgebraElement.from_dict(x.l, x.n - 2, out)


def include(x: AlgebraElement, extra: int = 2) -> AlgebraElement:
    """d -> d (x) 1_extra."""
    one = identity(extra)
    return AlgebraElement.from_dict(x.l, x.n + extra, {tensor(p, one): c for p, c in x.terms})


def basis_element(l: int, n: int, p: Diagram) -> AlgebraElement:
    return AlgebraElement.from_diagram(l, n, p)


# ---------------------------------------------------------------- ideals

@dataclass
class IdealReport:
    l: int
    n: int
    t: int
    target: set
    generated: set
    outside: set = field(default_factory=set)  # products that left J_<=l (must stay empty)

    @property
    def ok(self) -> bool:
        return self.target == self.generated and not self.outside

    @property
    def ranks(self) -> tuple[int, int]:
        """Dimensions of the two spans; both are spans of distinct basis diagrams."""
        return len(self.generated), len(self.target)


def ideal_basis(l: int, n: int, t: int) -> set[Diagram]:
    """{p in J_<=l(n,n) : #p <= n - 2t}."""
    return {p for p in height_set(l, n) if propagating_number(p) <= n - 2 * t}


def ideal_check(l: int, n: int, t: int) -> IdealReport:
    """Compare J e_{n,t} J with the low-propagating span.

    Each product a e b of basis diagrams is a power of delta times a single
    diagram, and delta is invertible, so the span of all products is the
    span of the diagrams that occur.
    """
    basis = height_set(l, n)
    e = e_nt(n, t)
    left = {compose(a, e).unscaled for a in basis}
    gen, outside = set(), set()
    for a, b in product(left, basis):
        r = compose(a, b).unscaled
        (gen if height(r) <= l else outside).add(r)
    return IdealReport(l, n, t, ideal_basis(l, n, t), gen, outside)


# ---------------------------------------------------------------- index sets

def index_set(l: int, n: int) -> list[tuple[int, tuple]]:
    """Labels (p, lam): p = n, n-2, ..., lam a partition of min(p, l+2)."""
    return [(p, lam) for p in range(n, -1, -2) for lam in partitions(min(p, l + 2))]


def top_group(l: int, n: int) -> list[tuple[int, ...]]:
    """Permutations in J_<=l(n,n): the group J_{l,n} / (lower propagating ideal) is built on."""
    from itertools import permutations
    return sorted(g for g in permutations(range(1, n + 1))
                  if height(Diagram.from_permutation(g)) <= l)


def index_set_recursive(l: int, n: int) -> list[tuple[int, tuple]]:
    """Lambda(J_{l,n}) = Lambda(S_k) for the top group S_k (with the rest of the
    n strands fixed), followed by Lambda(J_{l,n-2})."""
    if n < 0:
        return []
    group = top_group(l, n)
    moved = max((i + 1 for g in group for i in range(n) if g[i] != i + 1), default=0)
    k = max(moved, 1) if n else 0
    k = min(k, n)
    if len(group) != factorial(k) or any(g[i] != i + 1 for g in group for i in range(k, n)):
        raise AssertionError(f"top group of J_{{{l},{n}}} is not a standard S_{k}")
    return [(n, lam) for lam in partitions(k)] + index_set_recursive(l, n - 2)


def check_label(l: int, n: int, p: int, lam: tuple):
    if not (0 <= p <= n and (n - p) % 2 == 0):
        raise ValueError(f"propagating number {p} is not allowed for n={n}")
    if tuple(lam) not in partitions(min(p, l + 2)):
        raise ValueError(f"{lam} is not a partition of min(p, l+2) = {min(p, l + 2)}")


# ---------------------------------------------------------------- standard modules

def _arc_matchings(points: list[int], arcs: int):
    """Ways to pick ``arcs`` disjoint pairs from points; yields (pairs, leftover)."""
    if arcs == 0:
        yield [], points
        return
    if len(points) < 2 * arcs:
        return
    first, rest = points[0], points[1:]
    # first stays unpaired
    for pairs, left in _arc_matchings(rest, arcs):
        yield pairs, [first] + left
    for k, other in enumerate(rest):
        for pairs, left in _arc_matchings(rest[:k] + rest[k + 1:], arcs - 1):
            yield [(first, other)] + pairs, left


@lru_cache(maxsize=None)
def half_diagrams(l: int, n: int, p: int) -> tuple[Diagram, ...]:
    """J(n, p) diagrams with p non-crossing propagating lines and height <= l.

    Ordered by height, then by the sorted list of (length, start) of the arcs.
    """
    out = []
    for pairs, singles in _arc_matchings(list(range(1, n + 1)), (n - p) // 2):
        blocks = pairs + [(a, -(r + 1)) for r, a in enumerate(singles)]
        x = Diagram(n, p, tuple(blocks))
        h = height(x)
        if h <= l:
            key = (h, tuple(sorted((b - a, a) for a, b in pairs)))
            out.append((key, x))
    out.sort(key=lambda kx: kx[0])
    return tuple(x for _, x in out)


def _embed(g: tuple, p: int) -> tuple:
    return tuple(g) + tuple(range(len(g) + 1, p + 1))


@dataclass(frozen=True)
class StandardModule:
    l: int
    n: int
    p: int
    lam: tuple
    half: tuple          # half-diagrams
    specht: SpechtBasis

    @property
    def p_l(self) -> int:
        return min(self.p, self.l + 2)

    @property
    def elements(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self.half)) for j in range(len(self.specht))]

    @property
    def dim(self) -> int:
        return len(self.half) * len(self.specht)

    def index(self, i: int, j: int) -> int:
        return i * len(self.specht) + j

    def act_on(self, a: Diagram, elem: int) -> dict[int, DeltaPoly]:
        """a . basis[elem] as {index: coefficient}."""
        i, j = divmod(elem, len(self.specht))
        z = compose(a, self.half[i])
        if propagating_number(z) < self.p:
            return {}
        x2, pi = order_preserving_half(z.unscaled)
        k = self.p_l
        if any(pi[r] != r + 1 for r in range(k, self.p)):
            raise AssertionError(f"{a} moves strands beyond the first {k} of a half-diagram")
        try:
            i2 = self.half.index(x2)
        except ValueError:
            raise AssertionError(f"{x2} is not a half-diagram of height <= {self.l}") from None
        y = GroupAlgebraElement.basis(pi[:k]) * self.specht.vectors[j]
        coords = self.specht.coordinates(y)
        scale = _dpow(z.delta_exp)
        return {self.index(i2, j2): scale * DeltaPoly.const(c)
                for j2, c in enumerate(coords) if c != 0}

    def action_matrix(self, a) -> PolyMatrix:
        """Matrix of a (Diagram or AlgebraElement); column e is a . basis[e]."""
        terms = a.terms if isinstance(a, AlgebraElement) else ((a, ONE),)
        cols: list[dict] = [dict() for _ in range(self.dim)]
        for d, c in terms:
            c = c * _dpow(d.delta_exp)
            for e in range(self.dim):
                for r, v in self.act_on(d.unscaled, e).items():
                    cols[e][r] = cols[e].get(r, ZERO) + c * v
        return PolyMatrix.from_rows([[cols[e].get(r, ZERO) for e in range(self.dim)]
                                     for r in range(self.dim)])

    def to_json(self) -> str:
        return json.dumps({"l": self.l, "n": self.n, "p": self.p, "lambda": list(self.lam),
                           "basis": [[json.loads(self.half[i].to_json()), j] for i, j in self.elements]})


@lru_cache(maxsize=None)
def standard_module(l: int, n: int, p: int, lam: tuple) -> StandardModule:
    lam = tuple(lam)
    check_label(l, n, p, lam)
    return StandardModule(l, n, p, lam, half_diagrams(l, n, p), specht_basis(lam))


def standard_module_dimension(l: int, n: int, p: int, lam: tuple) -> int:
    check_label(l, n, p, lam)
    return len(half_diagrams(l, n, p)) * hook_dimension(tuple(lam))


# ---------------------------------------------------------------- Gram forms

@dataclass(frozen=True)
class GramForm:
    l: int
    n: int
    p: int
    lam: tuple
    matrix: PolyMatrix

    def det(self) -> DeltaPoly:
        return self.matrix.det()

    def to_csv(self) -> str:
        return self.matrix.to_csv()


@lru_cache(maxsize=None)
def gram_matrix(l: int, n: int, p: int, lam: tuple) -> GramForm:
    """<e_i, e_j> with flip(e_i) e_j = <e_i, e_j> E_n(p, lam) modulo fewer lines.

    flip(x_i) x_j is delta^k times a permutation pi of the p lines (or drops
    below p lines and gives 0); the scalar is delta^k times s where
    flip(y_i) pi y_j = s flip(eps) eps in the group algebra.
    """
    mod = standard_module(l, n, p, tuple(lam))
    k = mod.p_l
    eps = young_symmetrizer(mod.lam)
    norm = eps.flip() * eps
    ys = mod.specht.vectors
    entries = []
    for i, ji in mod.elements:
        for j, jj in mod.elements:
            m = compose(flip(mod.half[i]), mod.half[j])
            if propagating_number(m) < p:
                entries.append(ZERO)
                continue
            _, pi = order_preserving_half(m.unscaled)
            if any(pi[r] != r + 1 for r in range(k, p)):
                raise AssertionError("middle permutation moves fixed strands")
            prod = ys[ji].flip() * GroupAlgebraElement.basis(pi[:k]) * ys[jj]
            s = prod.ratio_to(norm)
            if s is None:
                raise AssertionError(f"{prod} is not proportional to flip(eps) eps")
            entries.append(_dpow(m.delta_exp) * DeltaPoly.const(s))
    n_el = mod.dim
    return GramForm(l, n, p, mod.lam, PolyMatrix(n_el, n_el, tuple(entries)))


# ---------------------------------------------------------------- reports

@dataclass
class LabelReport:
    label: tuple
    dim: int
    det: DeltaPoly
    roots: list
    rank_at: dict
    rank_drops: dict  # root description -> rank at that root

    def as_dict(self) -> dict:
        return {"p": self.label[0], "lambda": list(self.label[1]), "dim": self.dim,
                "det": format_poly(self.det), "roots": self.roots,
                "rank_at": {str(k): v for k, v in self.rank_at.items()},
                "rank_at_roots": self.rank_drops}


@dataclass
class SemisimplicityReport:
    l: int
    n: int
    generic: Fraction
    labels: list
    algebra_dim: int

    @property
    def sum_of_squares(self) -> int:
        return sum(x.dim ** 2 for x in self.labels)

    @property
    def generic_full_rank(self) -> bool:
        return all(x.rank_at[self.generic] == x.dim for x in self.labels)

    @property
    def drops_at_roots(self) -> bool:
        return all(r < x.dim for x in self.labels for r in x.rank_drops.values())

    @property
    def bad_deltas(self) -> list[str]:
        return sorted({r for x in self.labels for r in x.roots})

    @property
    def ok(self) -> bool:
        return (self.sum_of_squares == self.algebra_dim and self.generic_full_rank
                and self.drops_at_roots)

    def to_json(self) -> str:
        return json.dumps({"l": self.l, "n": self.n, "generic_delta": str(self.generic),
                           "sum_dim_squared": self.sum_of_squares, "algebra_dim": self.algebra_dim,
                           "non_semisimple_at": self.bad_deltas, "ok": self.ok,
                           "labels": [x.as_dict() for x in self.labels]}, indent=2)


def semisimplicity_report(l: int, n: int, deltas=(), generic=7) -> SemisimplicityReport:
    generic = Fraction(generic)
    values = [generic] + [Fraction(x) for x in deltas if Fraction(x) != generic]
    labels = []
    for p, lam in index_set(l, n):
        g = gram_matrix(l, n, p, lam)
        det = g.det()
        roots, drops = [], {}
        if not det.is_zero():
            for f, mult in rational_and_quadratic_roots(det):
                if f.degree == 0:
                    continue
                texts = f.roots_text()
                roots += texts * mult
                r = rank_mod(g.matrix, f.poly.monic()) if f.irreducible else None
                for t in texts:
                    drops[t] = r
        ranks = {x: rank_at(g.matrix, x) for x in values}
        labels.append(LabelReport((p, lam), g.matrix.rows, det, roots, ranks, drops))
    return SemisimplicityReport(l, n, generic, labels, len(height_set(l, n)))


@dataclass
class RestrictionReport:
    l: int
    n: int            # the module lives over J_{l,n}; restriction goes to J_{l,n-1}
    label: tuple
    regime: str
    dim: int
    sub_terms: list
    quotient_terms: list
    sub_dim: int      # dimension of the last-strand-propagating span
    stable: bool

    @property
    def predicted_sub(self) -> int:
        return sum(d for _, d in self.sub_terms)

    @property
    def predicted_quotient(self) -> int:
        return sum(d for _, d in self.quotient_terms)

    @property
    def ok(self) -> bool:
        return (self.dim == self.predicted_sub + self.predicted_quotient
                and self.sub_dim == self.predicted_sub and self.stable)


def _valid(l, n, p, lam) -> bool:
    try:
        check_label(l, n, p, lam)
    except ValueError:
        return False
    return True


def restriction_terms(l: int, n: int, p: int, lam: tuple):
    """(regime, submodule labels, quotient labels) for restricting Delta^n_{p,lam} to J_{l,n-1}."""
    if p < l + 2:
        regime = "<"
        from .symgrp import add_box_neighbours, remove_box_neighbours
        sub = [(p - 1, mu) for mu in remove_box_neighbours(lam)]
        quo = [(p + 1, mu) for mu in add_box_neighbours(lam)]
    elif p == l + 2:
        regime = "="
        from .symgrp import remove_box_neighbours
        sub = [(p - 1, mu) for mu in remove_box_neighbours(lam)]
        quo = [(p + 1, lam)]
    else:
        regime = ">"
        sub = [(p - 1, lam)]
        quo = [(p + 1, lam)]
    sub = [x for x in sub if _valid(l, n - 1, *x)]
    quo = [x for x in quo if _valid(l, n - 1, *x)]
    return regime, sub, quo


def restriction_check(l: int, n: int, p: int, lam: tuple) -> RestrictionReport:
    """Restrict Delta^n_{p,lam} (a J_{l,n}-module) to J_{l,n-1} acting on the first n-1 strands."""
    lam = tuple(lam)
    mod = standard_module(l, n, p, lam)
    regime, sub, quo = restriction_terms(l, n, p, lam)
    sub_terms = [(x, standard_module_dimension(l, n - 1, *x)) for x in sub]
    quo_terms = [(x, standard_module_dimension(l, n - 1, *x)) for x in quo]
    span = {mod.index(i, j) for i, j in mod.elements
            if p > 0 and {n, -p} in [set(b) for b in mod.half[i].blocks]}
    stable = True
    one = identity(1)
    for a in height_set(l, n - 1):
        big = tensor(a, one)
        for e in span:
            if any(r not in span for r in mod.act_on(big, e)):
                stable = False
                break
        if not stable:
            break
    return RestrictionReport(l, n, (p, lam), regime, mod.dim, sub_terms, quo_terms, len(span), stable)


@dataclass
class GlobalizationReport:
    l: int
    n: int
    label: tuple
    image_dim: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.image_dim == self.expected


def globalization_check(l: int, n: int, p: int, lam: tuple) -> GlobalizationReport:
    """dim e . Delta^{n+2}_{p,lam} against dim Delta^n_{p,lam} (0 when p = n+2)."""
    lam = tuple(lam)
    mod = standard_module(l, n + 2, p, lam)
    image = generic_rank(mod.action_matrix(e_n(n + 2)))
    expected = standard_module_dimension(l, n, p, lam) if p <= n else 0
    return GlobalizationReport(l, n, (p, lam), image, expected)
