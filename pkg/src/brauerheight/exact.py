"""Exact scalars and matrices over Z[d] (d standing for the loop parameter delta).

Coefficients are held as ``Fraction`` so that the same type covers Z[d] and Q[d];
every Gram matrix built by this package has integer coefficients, and
determinants are computed by Bareiss elimination, which never leaves the ring.
"""
from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class NotDivisible(ArithmeticError):
    pass


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class DeltaPoly:
    """Polynomial in d; ``coeffs[i]`` is the coefficient of d**i, no trailing zeros."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def const(cls, c) -> "DeltaPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "DeltaPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def coerce(cls, x) -> "DeltaPoly":
        if isinstance(x, DeltaPoly):
            return x
        return cls((x,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = DeltaPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DeltaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return DeltaPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-DeltaPoly.coerce(other))

    def __rsub__(self, other):
        return DeltaPoly.coerce(other) - self

    def __mul__(self, other):
        other = DeltaPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return DeltaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DeltaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = DeltaPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "DeltaPoly") -> tuple["DeltaPoly", "DeltaPoly"]:
        other = DeltaPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        q = [Fraction(0)] * max(len(rem) - dq, 0)
        while len(rem) - 1 >= dq and rem:
            shift = len(rem) - 1 - dq
            f = rem[-1] / other.lead
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[i + shift] -= f * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return DeltaPoly(q), DeltaPoly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> "DeltaPoly":
        q, r = self.divmod(DeltaPoly.coerce(other))
        if r:
            raise NotDivisible(f"{other} does not divide {self}")
        return q

    def divides(self, other: "DeltaPoly") -> bool:
        return not (DeltaPoly.coerce(other) % self)

    def content(self) -> Fraction:
        """Positive rational c with self/c a primitive integer polynomial."""
        if not self.coeffs:
            return Fraction(0)
        den = math.lcm(*(c.denominator for c in self.coeffs))
        num = math.gcd(*(int(c * den) for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> "DeltaPoly":
        """Primitive integer polynomial with positive leading coefficient."""
        c = self.content()
        if self.lead < 0:
            c = -c
        return DeltaPoly(x / c for x in self.coeffs)

    def monic(self) -> "DeltaPoly":
        return DeltaPoly(c / self.lead for c in self.coeffs)

    def derivative(self) -> "DeltaPoly":
        return DeltaPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"DeltaPoly({format_poly(self)!r})"


def poly_gcd(a: DeltaPoly, b: DeltaPoly) -> DeltaPoly:
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def poly_xgcd(a: DeltaPoly, b: DeltaPoly):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = DeltaPoly.const(1), DeltaPoly()
    t0, t1 = DeltaPoly(), DeltaPoly.const(1)
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lead
    return r0.monic(), s0 * (1 / lc), t0 * (1 / lc)


D = DeltaPoly.monomial(1)
ONE = DeltaPoly.const(1)
ZERO = DeltaPoly()


# ---------------------------------------------------------------- text format

def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: DeltaPoly) -> str:
    """``c_k*d^k + ... + c_0``; zero is ``0``."""
    if not p.coeffs:
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _fmt_coeff(mag)
        else:
            mono = "d" if k == 1 else f"d^{k}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?(d(?:\^(\d+))?)?$")


def parse_poly(text: str) -> DeltaPoly:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    out = DeltaPoly()
    for sign, term in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad polynomial term {term!r} in {text!r}")
        c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        k = 0 if not m.group(2) else int(m.group(3) or 1)
        out = out + DeltaPoly.monomial(k, -c if sign == "-" else c)
    return out


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[DeltaPoly, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(DeltaPoly.coerce(x) for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij) -> DeltaPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list[DeltaPoly]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    acc = acc + self[i, k] * other[k, j]
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, tuple(out))

    def leading_block(self, k: int) -> "PolyMatrix":
        return PolyMatrix.from_rows([[self[i, j] for j in range(k)] for i in range(k)])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)])

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def evaluate(self, x) -> list[list[Fraction]]:
        return [[e.evaluate(x) for e in row] for row in self.row_lists()]

    def det(self) -> DeltaPoly:
        return det_fraction_free(self)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in self.row_lists():
            w.writerow([format_poly(e) for e in row])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "PolyMatrix":
        rows = [r for r in csv.reader(io.StringIO(text)) if r]
        return cls.from_rows([[parse_poly(x) for x in r] for r in rows])


def det_fraction_free(m: PolyMatrix) -> DeltaPoly:
    """Bareiss determinant; each division by the previous pivot is exact."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ONE
    a = m.row_lists()
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def _bareiss_rank(rows: list[list[Fraction]]) -> int:
    a = [list(r) for r in rows]
    if not a:
        return 0
    nr, nc = len(a), len(a[0])
    rank = 0
    prev = Fraction(1)
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, nr):
            for j in range(col + 1, nc):
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev
            a[i][col] = Fraction(0)
        prev = a[rank][col]
        rank += 1
        if rank == nr:
            break
    return rank


def rank_at(m: PolyMatrix, delta_value) -> int:
    """Exact rank of ``m`` with d set to a rational value."""
    return _bareiss_rank(m.evaluate(Fraction(delta_value)))


GENERIC_POINTS = (Fraction(7), Fraction(1009, 3), Fraction(-65537, 11))


def generic_rank(m: PolyMatrix) -> int:
    """Rank over Q(d).

    Evaluation can only lower the rank, and it does so at finitely many
    points, so the maximum over a few unrelated values is the generic rank
    unless all of them are roots of the relevant minors.
    """
    return max(rank_at(m, x) for x in GENERIC_POINTS)


def rank_mod(m: PolyMatrix, modulus: DeltaPoly) -> int:
    """Rank of ``m`` over the field Q[d]/(modulus); modulus must be irreducible.

    With a linear modulus d - r this is ``rank_at(m, r)``; with an irreducible
    quadratic it is the rank at either conjugate irrational root.
    """
    if modulus.degree < 1:
        raise ValueError("modulus must have positive degree")
    a = [[e % modulus for e in row] for row in m.row_lists()]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    rank = 0
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        g, s, _ = poly_xgcd(a[rank][col], modulus)
        if g.degree != 0:
            raise ValueError(f"modulus {modulus} is reducible")
        inv = s
        for i in range(nr):
            if i == rank or not a[i][col]:
                continue
            f = (a[i][col] * inv) % modulus
            a[i] = [(x - f * y) % modulus for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------- root analysis

@dataclass(frozen=True)
class Factor:
    """An irreducible factor over Q of degree 1 or 2, or an unfactored residual."""

    poly: DeltaPoly
    irreducible: bool = True

    @property
    def degree(self) -> int:
        return self.poly.degree

    def roots_text(self) -> list[str]:
        p = self.poly
        if not self.irreducible or p.degree > 2:
            return [f"root of {format_poly(p)}"]
        if p.degree == 1:
            return [_fmt_coeff(-p.coeffs[0] / p.coeffs[1])]
        c, b, a = (int(x) for x in p.primitive().coeffs)
        return [_quadratic_root_text(-b, b * b - 4 * a * c, 2 * a, s) for s in "+-"]

    def rational_root(self):
        if self.irreducible and self.degree == 1:
            return -self.poly.coeffs[0] / self.poly.coeffs[1]
        return None

    def numeric_roots(self) -> list[complex]:
        p = self.poly
        if p.degree == 1:
            return [complex(-p.coeffs[0] / p.coeffs[1])]
        if p.degree == 2:
            c, b, a = (float(x) for x in p.coeffs)
            disc = complex(b * b - 4 * a * c) ** 0.5
            return [(-b + disc) / (2 * a), (-b - disc) / (2 * a)]
        return []


def _quadratic_root_text(num: int, disc: int, den: int, sign: str) -> str:
    # (num +- sqrt(disc)) / den with the surd reduced to k*sqrt(r), r squarefree
    k, r = 1, abs(disc)
    f = 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            k *= f
        f += 1
    surd = f"sqrt({'-' if disc < 0 else ''}{r})"
    g = math.gcd(num, k, den)
    num, k, den = num // g, k // g, den // g
    rad = surd if k == 1 else f"{k}*{surd}"
    body = f"{sign}{rad}" if num == 0 else f"{num}{sign}{rad}"
    if body.startswith("+"):
        body = body[1:]
    return body if den == 1 else f"({body})/{den}"


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _root_bound(p: DeltaPoly) -> Fraction:
    return 1 + max(abs(c / p.lead) for c in p.coeffs[:-1])


def rational_and_quadratic_roots(p: DeltaPoly) -> list[tuple[Factor, int]]:
    """Factor ``p`` into linear and irreducible quadratic factors over Q.

    Linear factors come from the rational root test, quadratic ones from a
    bounded search over integer trinomials; a residual factor that neither
    search splits is returned with ``irreducible=False``.  The constant
    content is dropped, so the product of ``factor**mult`` equals ``p`` up
    to a rational scalar (see :func:`expand_factors`).
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rest = p.primitive()
    found: dict[DeltaPoly, int] = {}

    def strip(f: DeltaPoly):
        nonlocal rest
        while rest.degree >= f.degree:
            q, r = rest.divmod(f)
            if r:
                break
            rest = q.primitive()
            found[f] = found.get(f, 0) + 1

    changed = True
    while changed and rest.degree >= 1:
        changed = False
        if rest.coeffs[0] == 0:
            strip(D)
            changed = True
            continue
        lead, const = int(rest.lead), int(rest.coeffs[0])
        for q in _divisors(lead):
            for r in _divisors(const):
                for s in (1, -1):
                    root = Fraction(s * r, q)
                    if rest.degree >= 1 and rest.evaluate(root) == 0:
                        strip(DeltaPoly((-root.numerator, root.denominator)))
                        changed = True
    if rest.degree >= 4:
        # quadratic factors a d^2 + b d + c with a | lead, c | const
        bound = _root_bound(rest)
        changed = True
        while changed and rest.degree >= 4:
            changed = False
            lead, const = int(rest.lead), int(rest.coeffs[0])
            for a in _divisors(lead):
                bmax = int(2 * a * bound) + 1
                for c0 in _divisors(const):
                    for c in (c0, -c0):
                        for b in range(-bmax, bmax + 1):
                            f = DeltaPoly((c, b, a))
                            if b * b - 4 * a * c >= 0 and math.isqrt(b * b - 4 * a * c) ** 2 == b * b - 4 * a * c:
                                continue
                            if not (rest % f):
                                strip(f)
                                changed = True
                                break
                        if changed:
                            break
                    if changed:
                        break
                if changed:
                    break
    out = [(Factor(f), k) for f, k in found.items()]
    if rest.degree in (2, 3) and rest.degree >= 1:
        # no rational roots remain, so a quadratic (or cubic) residual is irreducible
        out.append((Factor(rest, True), 1))
    elif rest.degree >= 4:
        out.append((Factor(rest, False), 1))
    elif rest.degree == 1:
        out.append((Factor(rest), 1))
    out.sort(key=lambda fk: (fk[0].degree, [float(c) for c in fk[0].poly.coeffs]))
    return out


def expand_factors(factors: list[tuple[Factor, int]]) -> DeltaPoly:
    out = ONE
    for f, k in factors:
        out = out * f.poly ** k
    return out


def root_multiset(p: DeltaPoly) -> list[str]:
    """Flat, sorted list of root descriptions with multiplicity (desk-scale helper)."""
    out = []
    for f, k in rational_and_quadratic_roots(p):
        out.extend(f.roots_text() * k)
    return out
