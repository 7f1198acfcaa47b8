"""Root systems of types A, B, C, D and G2 with integer expansion data.

Conventions: type A is keyed by matrix size, so ``build_root_system("A", n)``
describes sl(n) with simple roots a_i = e_i - e_{i+1}, i = 1..n-1.  For
B_n/C_n/D_n the parameter is the subscript (matrix sizes 2n+1, 2n, 2n).
G2 is realized rationally inside the plane x1+x2+x3 = 0, which keeps every
coordinate a rational number; only length ratios and expansions matter here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import ZERO, Fraction as Q


@dataclass(frozen=True)
class Root:
    """A root as an ambient vector plus its integer expansion over simple roots."""

    vector: tuple[Fraction, ...]
    expansion: tuple[int, ...]

    def negated(self) -> Root:
        return Root(tuple(-a for a in self.vector), tuple(-m for m in self.expansion))

    @property
    def is_positive(self) -> bool:
        return any(m > 0 for m in self.expansion)


GradingSpec = tuple  # nonnegative integers, one per simple root


def validate_spec(rs: RootSystem, spec: Sequence[int]) -> tuple[int, ...]:
    spec = tuple(int(p) for p in spec)
    if len(spec) != rs.rank:
        raise ValueError(f"grading spec has length {len(spec)}, expected rank {rs.rank}")
    if any(p < 0 for p in spec):
        raise ValueError("grading spec entries must be nonnegative")
    return spec


@dataclass(frozen=True)
class RootSystem:
    type: str
    n: int  # matrix-size key for A, subscript for B/C/D, 2 for G2
    rank: int
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]

    @property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(r.negated() for r in self.positive_roots)

    def __repr__(self) -> str:
        return f"RootSystem({self.type}, n={self.n}, rank={self.rank})"


def _vec(n: int, entries: dict[int, int | Fraction]) -> tuple[Fraction, ...]:
    v = [ZERO] * n
    for i, a in entries.items():
        v[i] = Q(a)
    return tuple(v)


def _expansion(rank: int, entries: dict[int, int]) -> tuple[int, ...]:
    m = [0] * rank
    for i, a in entries.items():
        m[i] = a
    return tuple(m)


def build_root_system(type_: str, n: int) -> RootSystem:
    type_ = type_.upper().replace("₂", "2")
    if type_ == "A":
        return _build_A(n)
    if type_ == "B":
        return _build_B(n)
    if type_ == "C":
        return _build_C(n)
    if type_ == "D":
        return _build_D(n)
    if type_ == "G2" or (type_ == "G" and n == 2):
        return _build_G2()
    raise ValueError(f"unsupported root system: type {type_!r}, n = {n}")


def _build_A(n: int) -> RootSystem:
    if n < 2:
        raise ValueError("type A needs matrix size >= 2")
    rank = n - 1
    simple = tuple(
        Root(_vec(n, {i: 1, i + 1: -1}), _expansion(rank, {i: 1})) for i in range(rank)
    )
    positive = []
    for i in range(n):
        for j in range(i + 1, n):
            # e_i - e_j = a_i + ... + a_{j-1}
            positive.append(
                Root(_vec(n, {i: 1, j: -1}), _expansion(rank, {t: 1 for t in range(i, j)}))
            )
    return RootSystem("A", n, rank, simple, tuple(positive), _cartan_from_vectors(simple))


def _build_B(n: int) -> RootSystem:
    if n < 1:
        raise ValueError("type B needs n >= 1")
    simple = [
        Root(_vec(n, {i: 1, i + 1: -1}), _expansion(n, {i: 1})) for i in range(n - 1)
    ]
    simple.append(Root(_vec(n, {n - 1: 1}), _expansion(n, {n - 1: 1})))
    positive = []
    for i in range(n):
        for j in range(i + 1, n):
            positive.append(
                Root(_vec(n, {i: 1, j: -1}), _expansion(n, {t: 1 for t in range(i, j)}))
            )
    for i in range(n):
        # e_i = a_i + ... + a_n
        positive.append(Root(_vec(n, {i: 1}), _expansion(n, {t: 1 for t in range(i, n)})))
    for i in range(n):
        for j in range(i + 1, n):
            # e_i + e_j = a_i + ... + a_{j-1} + 2a_j + ... + 2a_n
            exp = {t: 1 for t in range(i, j)}
            exp.update({t: 2 for t in range(j, n)})
            positive.append(Root(_vec(n, {i: 1, j: 1}), _expansion(n, exp)))
    return RootSystem("B", n, n, tuple(simple), tuple(positive), _cartan_from_vectors(simple))


def _build_C(n: int) -> RootSystem:
    if n < 1:
        raise ValueError("type C needs n >= 1")
    simple = [
        Root(_vec(n, {i: 1, i + 1: -1}), _expansion(n, {i: 1})) for i in range(n - 1)
    ]
    simple.append(Root(_vec(n, {n - 1: 2}), _expansion(n, {n - 1: 1})))
    positive = []
    for i in range(n):
        for j in range(i + 1, n):
            positive.append(
                Root(_vec(n, {i: 1, j: -1}), _expansion(n, {t: 1 for t in range(i, j)}))
            )
    for i in range(n):
        for j in range(i + 1, n):
            # e_i + e_j = a_i + ... + a_{j-1} + 2a_j + ... + 2a_{n-1} + a_n
            exp = {t: 1 for t in range(i, j)}
            exp.update({t: 2 for t in range(j, n - 1)})
            exp[n - 1] = 1
            positive.append(Root(_vec(n, {i: 1, j: 1}), _expansion(n, exp)))
    for i in range(n):
        # 2e_i = 2a_i + ... + 2a_{n-1} + a_n  (and 2e_n = a_n)
        exp = {t: 2 for t in range(i, n - 1)}
        exp[n - 1] = 1
        positive.append(Root(_vec(n, {i: 2}), _expansion(n, exp)))
    return RootSystem("C", n, n, tuple(simple), tuple(positive), _cartan_from_vectors(simple))


def _build_D(n: int) -> RootSystem:
    if n < 3:
        raise ValueError("type D needs n >= 3 to be simple of type D")
    simple = [
        Root(_vec(n, {i: 1, i + 1: -1}), _expansion(n, {i: 1})) for i in range(n - 1)
    ]
    simple.append(Root(_vec(n, {n - 2: 1, n - 1: 1}), _expansion(n, {n - 1: 1})))
    positive = []
    for i in range(n):
        for j in range(i + 1, n):
            positive.append(
                Root(_vec(n, {i: 1, j: -1}), _expansion(n, {t: 1 for t in range(i, j)}))
            )
    for i in range(n):
        for j in range(i + 1, n):
            if j <= n - 3:
                exp = {t: 1 for t in range(i, j)}
                exp.update({t: 2 for t in range(j, n - 2)})
                exp[n - 2] = 1
                exp[n - 1] = 1
            elif j == n - 2:
                exp = {t: 1 for t in range(i, n - 1)}
                exp[n - 1] = 1
            elif j == n - 1 and i <= n - 3:
                exp = {t: 1 for t in range(i, n - 2)}
                exp[n - 1] = 1
            else:  # i = n-2, j = n-1
                exp = {n - 1: 1}
            positive.append(Root(_vec(n, {i: 1, j: 1}), _expansion(n, exp)))
    return RootSystem("D", n, n, tuple(simple), tuple(positive), _cartan_from_vectors(simple))


def _build_G2() -> RootSystem:
    # rational planar model inside {x : x1+x2+x3 = 0}; short/long length
    # ratio 1:3 as required
    a1 = Root((Q(1), Q(-1), Q(0)), (1, 0))
    a2 = Root((Q(-2), Q(1), Q(1)), (0, 1))
    simple = (a1, a2)
    expansions = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
    positive = []
    for m1, m2 in expansions:
        vec = tuple(m1 * x + m2 * y for x, y in zip(a1.vector, a2.vector))
        positive.append(Root(vec, (m1, m2)))
    return RootSystem("G2", 2, 2, simple, tuple(positive), ((2, -1), (-3, 2)))


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def _cartan_from_vectors(simple: Sequence[Root]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for a in simple:
        row = []
        for b in simple:
            val = 2 * _dot(a.vector, b.vector) / _dot(b.vector, b.vector)
            if val.denominator != 1:
                raise ValueError("non-integer Cartan pairing")
            row.append(int(val))
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def expand_in_simple(rs: RootSystem, root: Root) -> tuple[int, ...]:
    """Integer expansion of a positive root over the simple roots."""
    for r in rs.positive_roots:
        if r.vector == root.vector:
            return r.expansion
    raise ValueError(f"root {root.vector} is not a positive root of {rs}")


def highest_root(rs: RootSystem) -> Root:
    """The unique positive root dominating every other expansion componentwise."""
    best = None
    for r in rs.positive_roots:
        if best is None or all(a >= b for a, b in zip(r.expansion, best.expansion)):
            best = r
    assert best is not None
    for r in rs.positive_roots:
        if not all(a >= b for a, b in zip(best.expansion, r.expansion)):
            raise AssertionError("highest root does not dominate the root table")
    return best


def level(rs: RootSystem, spec: Sequence[int], root: Root) -> int:
    """The grading level of a root: its expansion paired with the p-vector."""
    spec = validate_spec(rs, spec)
    return sum(m * p for m, p in zip(root.expansion, spec))


def depth(rs: RootSystem, spec: Sequence[int]) -> int:
    """Largest level over all roots; attained at the highest root."""
    spec = validate_spec(rs, spec)
    k = level(rs, spec, highest_root(rs))
    assert k == max(level(rs, spec, r) for r in rs.positive_roots)
    return k
