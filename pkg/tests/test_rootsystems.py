import itertools
from fractions import Fraction as Q

import pytest

from laxalg.rootsystems import (
    Root,
    build_root_system,
    depth,
    expand_in_simple,
    highest_root,
    level,
)


def enumerate_D_roots(n):
    """Independent enumeration oracle: e_i +- e_j for 1 <= i < j <= n."""
    return [(i, j, s) for i in range(n) for j in range(i + 1, n) for s in (1, -1)]


class TestCounts:
    def test_sl2(self):
        rs = build_root_system("A", 2)
        assert len(rs.positive_roots) == 1 and rs.rank == 1

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_D_count(self, n):
        rs = build_root_system("D", n)
        assert len(rs.positive_roots) == len(enumerate_D_roots(n)) == n * (n - 1)

    @pytest.mark.parametrize("n,count", [(2, 4), (3, 9), (4, 16)])
    def test_B_C_counts(self, n, count):
        assert len(build_root_system("B", n).positive_roots) == count
        assert len(build_root_system("C", n).positive_roots) == count

    def test_A_count(self):
        for n in (2, 3, 4, 5):
            assert len(build_root_system("A", n).positive_roots) == n * (n - 1) // 2

    def test_G2(self):
        rs = build_root_system("G2", 2)
        expansions = {r.expansion for r in rs.positive_roots}
        assert expansions == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}

    def test_unsupported(self):
        with pytest.raises(ValueError):
            build_root_system("E", 8)
        with pytest.raises(ValueError):
            build_root_system("D", 2)


class TestExpansions:
    def test_expansions_reconstruct_vectors(self):
        for type_, n in [("A", 4), ("B", 3), ("C", 3), ("D", 4), ("G2", 2)]:
            rs = build_root_system(type_, n)
            for root in rs.positive_roots:
                vec = [Q(0)] * len(root.vector)
                for m, simple in zip(root.expansion, rs.simple_roots):
                    for t, a in enumerate(simple.vector):
                        vec[t] += m * a
                assert tuple(vec) == root.vector

    def test_B_short_root_expansion(self):
        # e_i = a_i + ... + a_n
        rs = build_root_system("B", 4)
        e2 = Root((Q(0), Q(1), Q(0), Q(0)), ())
        exp = expand_in_simple(rs, Root(e2.vector, (0, 1, 1, 1)))
        assert exp == (0, 1, 1, 1)

    def test_C_long_root_expansion(self):
        # 2e_1 = 2a_1 + ... + 2a_{n-1} + a_n
        rs = build_root_system("C", 4)
        exp = expand_in_simple(rs, Root((Q(2), Q(0), Q(0), Q(0)), ()))
        assert exp == (2, 2, 2, 1)

    def test_simple_roots_are_unit_vectors(self):
        rs = build_root_system("D", 4)
        for i, simple in enumerate(rs.simple_roots):
            exp = expand_in_simple(rs, simple)
            assert exp == tuple(1 if t == i else 0 for t in range(rs.rank))

    def test_not_in_system(self):
        rs = build_root_system("A", 3)
        with pytest.raises(ValueError):
            expand_in_simple(rs, Root((Q(5), Q(0), Q(0)), ()))


class TestHighestRoot:
    def test_D5(self):
        assert highest_root(build_root_system("D", 5)).expansion == (1, 2, 2, 1, 1)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_B(self, n):
        expected = tuple([1] + [2] * (n - 1)) if n > 1 else (1,)
        assert highest_root(build_root_system("B", n)).expansion == expected

    def test_sl2(self):
        assert highest_root(build_root_system("A", 2)).expansion == (1,)

    def test_G2(self):
        assert highest_root(build_root_system("G2", 2)).expansion == (3, 2)


class TestLevelsAndDepth:
    def test_G2_by_alpha2(self):
        rs = build_root_system("G2", 2)
        theta = highest_root(rs)
        assert level(rs, (0, 1), theta) == 2
        assert depth(rs, (0, 1)) == 2

    def test_G2_by_alpha1(self):
        assert depth(build_root_system("G2", 2), (1, 0)) == 3

    def test_zero_spec(self):
        rs = build_root_system("C", 3)
        for root in rs.positive_roots:
            assert level(rs, (0, 0, 0), root) == 0

    def test_C_long_root_level(self):
        rs = build_root_system("C", 3)
        two_e1 = next(r for r in rs.positive_roots if r.vector == (Q(2), Q(0), Q(0)))
        assert level(rs, (1, 0, 0), two_e1) == 2

    def test_A_depth_always_one(self):
        for n in (2, 3, 4, 5):
            rs = build_root_system("A", n)
            for i in range(rs.rank):
                spec = tuple(1 if t == i else 0 for t in range(rs.rank))
                assert depth(rs, spec) == 1

    def test_B_by_last_root(self):
        assert depth(build_root_system("B", 3), (0, 0, 1)) == 2

    def test_negative_root_level(self):
        rs = build_root_system("A", 3)
        root = rs.positive_roots[0]
        assert level(rs, (1, 0), root.negated()) == -level(rs, (1, 0), root)


class TestStructuralInvariants:
    ALL = [("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4), ("G2", 2)]

    @pytest.mark.parametrize("type_,n", ALL)
    def test_level_symmetry(self, type_, n):
        rs = build_root_system(type_, n)
        for i in range(rs.rank):
            spec = tuple(1 if t == i else 0 for t in range(rs.rank))
            levels = [level(rs, spec, r) for r in rs.all_roots]
            for p in set(levels):
                assert levels.count(p) == levels.count(-p)

    @pytest.mark.parametrize("type_,n", ALL)
    def test_ladder_property(self, type_, n):
        # every positive non-simple root stays positive after removing some simple root
        rs = build_root_system(type_, n)
        positive_vectors = {r.vector for r in rs.positive_roots}
        for root in rs.positive_roots:
            if sum(root.expansion) == 1:
                continue
            found = False
            for simple in rs.simple_roots:
                candidate = tuple(a - b for a, b in zip(root.vector, simple.vector))
                if candidate in positive_vectors:
                    found = True
                    break
            assert found, f"no ladder step down from {root.expansion}"

    @pytest.mark.parametrize("type_,n", ALL)
    def test_depth_attained_at_theta(self, type_, n):
        rs = build_root_system(type_, n)
        theta = highest_root(rs)
        for spec in itertools.product((0, 1), repeat=rs.rank):
            if not any(spec):
                continue
            assert depth(rs, spec) == level(rs, spec, theta)

    def test_cartan_matrices(self):
        assert build_root_system("G2", 2).cartan_matrix == ((2, -1), (-3, 2))
        assert build_root_system("A", 3).cartan_matrix == ((2, -1), (-1, 2))
        b2 = build_root_system("B", 2).cartan_matrix
        assert b2 == ((2, -2), (-1, 2))
