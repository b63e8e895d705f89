import random
from fractions import Fraction

import pytest

from curveobs.ell import ell, ell_of_letters, obstruction_vector
from curveobs.homology import HVec, abelianize
from curveobs.wedge import Wedge2, act2, omega, wedge
from curveobs.words import (Word, boundary_word, commutator, generator,
                            parse_word, random_word, random_word_rng)

X1, Y1, X2, Y2 = 0, 1, 2, 3
HALF = Fraction(1, 2)


class TestGoldenValues:
    def test_paper_ell_a(self):
        got = ell(parse_word("x1 x2 y2 x2^-1", 2))
        assert got == Wedge2.make(2, [((X1, Y1), HALF), ((X2, Y2), HALF),
                                      ((X1, Y2), HALF)])

    def test_paper_ell_b(self):
        # 1/2(-X2^Y2 - X1^Y1 - Y2^X1); the last term normalizes to +1/2 X1^Y2
        got = ell(parse_word("y2 x1^-1", 2))
        assert got == Wedge2.make(2, [((X2, Y2), -HALF), ((X1, Y1), -HALF),
                                      ((X1, Y2), HALF)])

    def test_identity_maps_to_zero(self):
        assert ell(Word.identity(2)).is_zero()

    def test_generators(self):
        for g in range(1, 4):
            for j in range(1, g + 1):
                xy = (2 * (j - 1), 2 * (j - 1) + 1)
                assert ell(generator(g, "x", j)) == Wedge2.make(g, [(xy, HALF)])
                assert ell(generator(g, "y", j)) == Wedge2.make(g, [(xy, -HALF)])

    @pytest.mark.parametrize("g", range(1, 6))
    def test_boundary_maps_to_omega(self, g):
        assert ell(boundary_word(g)) == omega(g)


class TestIdentities:
    def test_cocycle_and_friends(self):
        rng = random.Random(0)
        for _ in range(1000):
            g = rng.randint(1, 3)
            u = random_word_rng(g, rng.randint(0, 20), rng)
            v = random_word_rng(g, rng.randint(0, 20), rng)
            au, av = abelianize(u), abelianize(v)
            assert ell(u * v) == ell(u) + ell(v) + wedge(au, av).scale(HALF)
            assert ell(u.inverse()) == -ell(u)
            assert ell(u.conjugate(v)) == ell(v) + wedge(au, av)
            assert ell(commutator(u, v)) == wedge(au, av)

    def test_reduction_invariance(self):
        rng = random.Random(1)
        for _ in range(100):
            g = rng.randint(1, 3)
            w = random_word_rng(g, rng.randint(0, 15), rng)
            seq = list(w.letters)
            for _ in range(100):
                s = rng.choice([1, -1]) * rng.randrange(1, 2 * g + 1)
                pos = rng.randint(0, len(seq))
                seq = seq[:pos] + [s, -s] + seq[pos:]
            assert ell_of_letters(g, seq) == ell(w)

    def test_half_integrality(self):
        rng = random.Random(2)
        for i in range(500):
            g = rng.randint(1, 3)
            w = random_word(g, rng.randint(0, 20), i)
            for c in ell(w).terms.values():
                assert (2 * c).denominator == 1

    def test_simple_curve_catalog_rational_multiple(self):
        # conjugated generators: ell(c)(|c|) must be a rational multiple of |c|
        rng = random.Random(3)
        for _ in range(200):
            g = rng.randint(1, 3)
            kind = rng.choice(["x", "y"])
            gen = generator(g, kind, rng.randint(1, g))
            if rng.random() < 0.5:
                gen = gen.inverse()
            c = random_word_rng(g, rng.randint(0, 6), rng).conjugate(gen)
            ac = abelianize(c)
            acted = act2(ell(c), ac)
            k = next(i for i, x in enumerate(ac.coords) if x != 0)
            ratio = acted.coords[k] / ac.coords[k]
            assert acted == ac.scale(ratio)


class TestObstructionVector:
    def test_paper_example(self):
        a = parse_word("x1 x2 y2 x2^-1", 2)
        b = parse_word("y2 x1^-1", 2)
        assert obstruction_vector(a, b) == HVec.basis(2, X1)

    def test_remark_zero(self):
        a = parse_word("x1", 2)
        b = parse_word("x2^-1", 2)
        assert obstruction_vector(a, b).is_zero()

    def test_remark_minus_a(self):
        a = parse_word("x1", 2)
        b = parse_word("x2^-1 [y1,zeta] zeta", 2)
        assert obstruction_vector(a, b) == -HVec.basis(2, X1)

    def test_genus_mismatch(self):
        with pytest.raises(ValueError):
            obstruction_vector(parse_word("x1", 1), parse_word("x1", 2))
