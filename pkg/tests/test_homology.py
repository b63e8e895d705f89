import random
from fractions import Fraction

import pytest

from curveobs.homology import (HVec, LatticeWitness, abelianize, basis_pairing,
                               intersection, is_integral, lattice_member)
from curveobs.words import boundary_word, parse_word, random_word


def hv(genus, **coords):
    out = HVec.zero(genus)
    for name, c in coords.items():
        k = 2 * (int(name[1:]) - 1) + (0 if name[0] == "X" else 1)
        out = out + HVec.basis(genus, k).scale(c)
    return out


class TestAbelianize:
    def test_paper_a(self):
        assert abelianize(parse_word("x1 x2 y2 x2^-1", 2)) == hv(2, X1=1, Y2=1)

    def test_paper_b(self):
        assert abelianize(parse_word("y2 x1^-1", 2)) == hv(2, X1=-1, Y2=1)

    def test_boundary_is_zero(self):
        for g in range(1, 6):
            assert abelianize(boundary_word(g)).is_zero()

    def test_homomorphism(self):
        rng = random.Random(0)
        for i in range(200):
            g = rng.randint(1, 3)
            u = random_word(g, rng.randint(0, 12), 2 * i)
            v = random_word(g, rng.randint(0, 12), 2 * i + 1)
            assert abelianize(u * v) == abelianize(u) + abelianize(v)
            assert abelianize(u.inverse()) == -abelianize(u)


class TestIntersection:
    def test_basis_pairing(self):
        assert intersection(hv(1, X1=1), hv(1, Y1=1)) == 1

    def test_paper_pair_meets_zero(self):
        assert intersection(hv(2, X1=1, Y2=1), hv(2, X1=-1, Y2=1)) == 0

    def test_gram_matrix(self):
        g = 3
        for i in range(2 * g):
            for j in range(2 * g):
                val = intersection(HVec.basis(g, i), HVec.basis(g, j))
                assert val == basis_pairing(i, j)
                same_pair = i // 2 == j // 2
                if same_pair and i % 2 == 0 and j % 2 == 1:
                    assert val == 1
                elif same_pair and i % 2 == 1 and j % 2 == 0:
                    assert val == -1
                else:
                    assert val == 0

    def test_antisymmetry_on_random(self):
        rng = random.Random(1)
        for _ in range(200):
            g = rng.randint(1, 3)
            u = HVec.from_coords(g, [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                                     for _ in range(2 * g)])
            v = HVec.from_coords(g, [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                                     for _ in range(2 * g)])
            assert intersection(u, u) == 0
            assert intersection(u, v) == -intersection(v, u)

    def test_genus_mismatch(self):
        with pytest.raises(ValueError):
            intersection(HVec.zero(1), HVec.zero(2))


class TestIsIntegral:
    def test_examples(self):
        assert is_integral(hv(1, X1=1))
        assert not is_integral(hv(1, X1=Fraction(1, 2)))

    def test_abelianized_words(self):
        rng = random.Random(2)
        for i in range(500):
            g = rng.randint(1, 3)
            assert is_integral(abelianize(random_word(g, rng.randint(0, 15), i)))


class TestLatticeMember:
    def test_paper_nonmember(self):
        w = lattice_member(hv(2, X1=1), hv(2, X1=1, Y2=1), hv(2, X1=-1, Y2=1))
        assert w == LatticeWitness(False)

    def test_zero_vector(self):
        u1, u2 = hv(2, X1=1, Y2=1), hv(2, X1=-1, Y2=1)
        assert lattice_member(HVec.zero(2), u1, u2) == LatticeWitness(True, 0, 0)

    def test_constructed_combination(self):
        u1, u2 = hv(2, X1=1, Y2=1), hv(2, X1=-1, Y2=1)
        v = u1.scale(3) + u2.scale(-2)
        assert lattice_member(v, u1, u2) == LatticeWitness(True, 3, -2)

    def test_rank_one_gcd(self):
        u0 = hv(1, X1=1, Y1=2)
        # 4*u0 and 6*u0 generate (gcd 2)*u0
        assert lattice_member(u0.scale(2), u0.scale(4), u0.scale(6)).member
        assert not lattice_member(u0, u0.scale(4), u0.scale(6)).member
        assert not lattice_member(u0.scale(3), u0.scale(4), u0.scale(6)).member

    def test_rank_one_zero_generator(self):
        u0 = hv(1, X1=1)
        got = lattice_member(u0.scale(3), HVec.zero(1), u0.scale(3))
        assert got.member and got.m * 0 == 0 and got.n == 1

    def test_off_line_vector_in_rank_one(self):
        assert not lattice_member(hv(1, Y1=1), hv(1, X1=1), hv(1, X1=2)).member

    def test_non_integral_generators_rejected(self):
        with pytest.raises(ValueError):
            lattice_member(hv(1, X1=1), hv(1, X1=Fraction(1, 2)), hv(1, Y1=1))

    def _random_instances(self, count, seed):
        rng = random.Random(seed)
        for _ in range(count):
            g = rng.randint(1, 2)
            u1 = abelianize(random_word(g, rng.randint(0, 6), rng.randrange(10**6)))
            u2 = abelianize(random_word(g, rng.randint(0, 6), rng.randrange(10**6)))
            roll = rng.random()
            if roll < 0.15:
                u2 = u1.scale(rng.randint(-2, 2))  # force rank <= 1
            elif roll < 0.25:
                u1 = HVec.zero(g)
            if rng.random() < 0.4:
                v = u1.scale(rng.randint(-8, 8)) + u2.scale(rng.randint(-8, 8))
            else:
                v = HVec.from_coords(
                    g, [Fraction(rng.randint(-8, 8), rng.choice([1, 1, 2]))
                        for _ in range(2 * g)])
            yield v, u1, u2

    def test_matches_bruteforce_oracle(self):
        bound = 20
        for v, u1, u2 in self._random_instances(300, 17):
            got = lattice_member(v, u1, u2)
            a = [int(c) for c in u1.coords]
            b = [int(c) for c in u2.coords]
            brute = any(
                all(m * a[i] + n * b[i] == v.coords[i] for i in range(len(a)))
                for m in range(-bound, bound + 1)
                for n in range(-bound, bound + 1)
            )
            assert got.member == brute, (v, u1, u2)
            if got.member:
                assert u1.scale(got.m) + u2.scale(got.n) == v

    def test_membership_symmetric_in_generators(self):
        for v, u1, u2 in self._random_instances(200, 23):
            assert lattice_member(v, u1, u2).member == lattice_member(v, u2, u1).member
