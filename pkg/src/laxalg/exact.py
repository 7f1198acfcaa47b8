"""Exact scalar and polynomial arithmetic over the rationals.

Everything downstream (root systems, matrix algebras, current algebras)
computes with the types defined here: arbitrary-precision rationals,
dense univariate polynomials, canonical rational functions, truncated
Laurent expansions, and exact dense linear algebra.  No floating point
appears anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(value: int | str | Fraction) -> Fraction:
    """Parse an exact rational from an int, Fraction, or a "p/q" string.

    Floats are rejected: decimal input would silently break exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Poly:
    """Dense univariate polynomial over Fraction, ascending coefficients.

    The zero polynomial is the empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence[Fraction | int] = ()):
        cs = [Fraction(a) for a in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.c: tuple[Fraction, ...] = tuple(cs)

    @staticmethod
    def zero() -> Poly:
        return Poly()

    @staticmethod
    def const(a: Fraction | int) -> Poly:
        return Poly([a])

    @staticmethod
    def x() -> Poly:
        return Poly([0, 1])

    @staticmethod
    def linear(root: Fraction) -> Poly:
        """The monic factor z - root."""
        return Poly([-root, 1])

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.c) - 1

    @property
    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __neg__(self) -> Poly:
        return Poly([-a for a in self.c])

    def __add__(self, other: Poly) -> Poly:
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly(out)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        a, b = self.c, other.c
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return Poly(out)

    def scale(self, a: Fraction | int) -> Poly:
        a = Fraction(a)
        if a == 0:
            return Poly()
        return Poly([a * v for v in self.c])

    def __call__(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        acc = ZERO
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def derivative(self) -> Poly:
        return Poly([i * a for i, a in enumerate(self.c)][1:])

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [ZERO] * max(0, len(rem) - len(other.c) + 1)
        dlead = other.c[-1]
        dn = len(other.c)
        while len(rem) >= dn:
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < dn:
                break
            f = rem[-1] / dlead
            k = len(rem) - dn
            q[k] = f
            for i, b in enumerate(other.c):
                rem[k + i] -= f * b
            rem.pop()
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        lead = self.c[-1]
        if lead == 1:
            return self
        return Poly([a / lead for a in self.c])

    def shift(self, c: Fraction) -> Poly:
        """Compose with z -> z + c (Taylor shift), exact."""
        if c == 0:
            return self
        zc = Poly([c, 1])
        acc = Poly()
        for a in reversed(self.c):
            acc = acc * zc + Poly.const(a)
        return acc

    def order_at(self, z0: Fraction) -> int:
        """Multiplicity of z0 as a root (0 when p(z0) != 0)."""
        if self.is_zero:
            raise ValueError("order of the zero polynomial is undefined")
        p, n = self, 0
        lin = Poly.linear(z0)
        while p(z0) == 0:
            p = p // lin
            n += 1
        return n

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = [f"{a}*z^{i}" for i, a in enumerate(self.c) if a]
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm, remainders kept monic."""
    a, b = a.monic() if not a.is_zero else a, b.monic() if not b.is_zero else b
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic() if not a.is_zero else Poly()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly()
    return ((a * b) // poly_gcd(a, b)).monic()


def rational_roots(p: Poly) -> dict[Fraction, int]:
    """All rational roots with multiplicities.

    Uses the rational root bound on an integer-cleared copy; factors of
    irrational or complex roots are left untouched.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    roots: dict[Fraction, int] = {}
    # strip z = 0 first so the constant term is nonzero
    n0 = p.order_at(ZERO)
    if n0:
        roots[ZERO] = n0
        for _ in range(n0):
            p = p // Poly.x()
    if p.degree < 1:
        return roots
    den_lcm = 1
    for a in p.c:
        den_lcm = den_lcm * a.denominator // _gcd(den_lcm, a.denominator)
    ints = [int(a * den_lcm) for a in p.c]
    a0, an = abs(ints[0]), abs(ints[-1])
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in roots:
                    continue
                if p(cand) == 0:
                    m = p.order_at(cand)
                    roots[cand] = m
                    for _ in range(m):
                        p = p // Poly.linear(cand)
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFun:
    """Rational function in canonical form: coprime num/den, monic den.

    Equality of values coincides with structural equality of the stored
    pair, so these may be used as dict keys and compared exactly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = Poly([1]), *, _canonical: bool = False):
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if _canonical:
            self.num, self.den = num, den
            return
        if num.is_zero:
            self.num, self.den = Poly(), Poly([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.c[-1]
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num, self.den = num, den

    @staticmethod
    def zero() -> RatFun:
        return RatFun(Poly(), Poly([1]), _canonical=True)

    @staticmethod
    def one() -> RatFun:
        return RatFun(Poly([1]), Poly([1]), _canonical=True)

    @staticmethod
    def const(a: Fraction | int) -> RatFun:
        return RatFun(Poly.const(a))

    @staticmethod
    def x() -> RatFun:
        return RatFun(Poly.x())

    @staticmethod
    def from_fraction(num: Poly, den: Poly) -> RatFun:
        return RatFun(num, den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RatFun) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> RatFun:
        return RatFun(-self.num, self.den, _canonical=True)

    def __add__(self, other: RatFun) -> RatFun:
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RatFun) -> RatFun:
        return self + (-other)

    def __mul__(self, other: RatFun) -> RatFun:
        if self.is_zero or other.is_zero:
            return RatFun.zero()
        # cross-cancel first: keeps the final gcd calls small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num // g1 if g1.degree > 0 else self.num
        d2 = other.den // g1 if g1.degree > 0 else other.den
        n2 = other.num // g2 if g2.degree > 0 else other.num
        d1 = self.den // g2 if g2.degree > 0 else self.den
        return RatFun(n1 * n2, d1 * d2)

    def __truediv__(self, other: RatFun) -> RatFun:
        if other.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return self * RatFun(other.den, other.num)

    def scale(self, a: Fraction | int) -> RatFun:
        if a == 0:
            return RatFun.zero()
        return RatFun(self.num.scale(a), self.den, _canonical=True)

    def __call__(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def derivative(self) -> RatFun:
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def degree_at_infinity(self) -> int:
        """deg num - deg den; <= 0 means holomorphic at infinity."""
        if self.is_zero:
            raise ValueError("degree at infinity of 0 is undefined")
        return self.num.degree - self.den.degree

    def order_at(self, z0: Fraction) -> int:
        """Valuation at z0: negative for a pole, positive for a zero."""
        if self.is_zero:
            raise ValueError("order of the zero function is undefined")
        return self.num.order_at(z0) - self.den.order_at(z0)

    def __repr__(self) -> str:
        return f"RatFun({self.num!r} / {self.den!r})"


# ---------------------------------------------------------------------------
# Laurent expansions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentSeries:
    """Truncated Laurent expansion around a finite base point.

    Coefficients are stored for exponents lo..hi inclusive; anything
    beyond hi is genuinely unknown, not zero.
    """

    center: Fraction
    lo: int
    hi: int
    coeffs: tuple

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError("truncation order below the lowest exponent")
        if len(self.coeffs) != self.hi - self.lo + 1:
            raise ValueError("coefficient count does not match the exponent range")

    def coeff(self, p: int):
        if p < self.lo or p > self.hi:
            raise IndexError(f"exponent {p} outside the computed range [{self.lo}, {self.hi}]")
        return self.coeffs[p - self.lo]


def laurent_expand(f: RatFun, z0: Fraction, lo: int, hi: int) -> LaurentSeries:
    """Exact Laurent coefficients of f in powers of (z - z0) for lo..hi."""
    if hi < lo:
        raise ValueError("empty expansion range")
    z0 = Fraction(z0)
    if f.is_zero:
        return LaurentSeries(z0, lo, hi, tuple([ZERO] * (hi - lo + 1)))
    num = f.num.shift(z0)
    den = f.den.shift(z0)
    a = num.order_at(ZERO)
    b = den.order_at(ZERO)
    for _ in range(a):
        num = num // Poly.x()
    for _ in range(b):
        den = den // Poly.x()
    e = a - b  # valuation of f at z0
    # power series of num/den up to w^(hi - e)
    terms = hi - e + 1
    series: list[Fraction] = []
    if terms > 0:
        inv0 = 1 / den.c[0]
        dc = den.c
        nc = num.c
        for t in range(terms):
            acc = nc[t] if t < len(nc) else ZERO
            for j in range(1, min(t, len(dc) - 1) + 1):
                acc -= dc[j] * series[t - j]
            series.append(acc * inv0)
    out = []
    for p in range(lo, hi + 1):
        t = p - e
        out.append(series[t] if 0 <= t < len(series) else ZERO)
    return LaurentSeries(z0, lo, hi, tuple(out))


def residue(f: RatFun, z0: Fraction) -> Fraction:
    """Coefficient of (z - z0)^(-1) in the expansion of f at z0."""
    if f.is_zero:
        return ZERO
    e = f.order_at(Fraction(z0))
    if e >= 0:
        return ZERO
    return laurent_expand(f, Fraction(z0), -1, -1).coeff(-1)


# ---------------------------------------------------------------------------
# exact dense linear algebra
# ---------------------------------------------------------------------------

Matrix = list  # list of rows, each a list of Fraction


def rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int], int]:
    """Reduced row-echelon form; returns (rref, pivot columns, rank)."""
    rows = [[Fraction(a) for a in row] for row in matrix]
    if not rows:
        return [], [], 0
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots, len(pivots)


def null_space(matrix: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column of the rref."""
    rows = [list(row) for row in matrix if any(a != 0 for a in row)]
    if ncols is None:
        if not matrix:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(matrix[0])
    if not rows:
        return [[ONE if j == i else ZERO for j in range(ncols)] for i in range(ncols)]
    red, pivots, _ = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        basis.append(v)
    return basis


def solve_linear(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """One exact solution of A x = b, or None when inconsistent."""
    if not matrix:
        return None if any(b != 0 for b in rhs) else []
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots, rank = rref(aug)
    ncols = len(matrix[0])
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def invert_matrix(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(row) + [ONE if j == i else ZERO for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots, rank = rref(aug)
    if rank < n or pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def mat_rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    rows = [row for row in matrix if any(a != 0 for a in row)]
    if not rows:
        return 0
    return rref(rows)[2]


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    if not a or not b:
        return []
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt] for row in a]


def mat_vec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a]
