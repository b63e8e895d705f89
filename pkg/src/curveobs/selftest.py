"""Seeded property suites over all modules, runnable from the CLI.

Each check draws its own instances from a deterministic RNG and returns the
number of cases it ran; a failure raises SelfTestFailure with a description of
the offending instance.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import obstruction, words
from .ell import ell, ell_of_letters
from .expansion import L_theta, johnson_twist
from .homology import HVec, abelianize, intersection, is_integral, lattice_member
from .tensor import TruncTensor, cyclic_N, cyclic_nu, derive, trunc_exp, trunc_log
from .wedge import Wedge2, act2, act3, embed2, embed3, omega, wedge, wedge3
from .words import (Word, boundary_word, commutator, random_letters,
                    random_word_rng)


class SelfTestFailure(AssertionError):
    pass


def _fail(name: str, detail: str):
    raise SelfTestFailure(f"{name}: {detail}")


def _rand_hvec(genus: int, rng: random.Random) -> HVec:
    return HVec.from_coords(
        genus,
        [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2 * genus)],
    )


def check_word_group_laws(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        u = random_word_rng(g, rng.randint(0, 12), rng)
        v = random_word_rng(g, rng.randint(0, 12), rng)
        w = random_word_rng(g, rng.randint(0, 12), rng)
        if (u * v) * w != u * (v * w):
            _fail("word_group_laws", f"associativity on {u}, {v}, {w}")
        e = Word.identity(g)
        if u * e != u or e * u != u:
            _fail("word_group_laws", f"identity on {u}")
        if u * u.inverse() != e or u.inverse().inverse() != u:
            _fail("word_group_laws", f"inverse on {u}")
    return n


def check_reduction_confluence(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        seq = random_letters(g, rng.randint(0, 14), rng)
        scanned = words.reduce_letters(seq)
        work = list(seq)
        while True:
            pairs = [i for i in range(len(work) - 1) if work[i] == -work[i + 1]]
            if not pairs:
                break
            i = rng.choice(pairs)
            del work[i:i + 2]
        if tuple(work) != scanned:
            _fail("reduction_confluence", f"sequence {seq}")
    return n


def check_parse_format_roundtrip(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        w = random_word_rng(g, rng.randint(0, 14), rng)
        if words.parse_word(words.format_word(w), g) != w:
            _fail("parse_format_roundtrip", f"word {w}")
    return n


def check_homology_basics(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        u = random_word_rng(g, rng.randint(0, 12), rng)
        v = random_word_rng(g, rng.randint(0, 12), rng)
        if abelianize(u * v) != abelianize(u) + abelianize(v):
            _fail("homology_basics", f"homomorphism on {u}, {v}")
        if abelianize(u.inverse()) != -abelianize(u):
            _fail("homology_basics", f"inverse on {u}")
        if not abelianize(commutator(u, v)).is_zero():
            _fail("homology_basics", f"commutator abelianization on {u}, {v}")
        a = _rand_hvec(g, rng)
        b = _rand_hvec(g, rng)
        if intersection(a, b) != -intersection(b, a) or intersection(a, a) != 0:
            _fail("homology_basics", f"antisymmetry on {a}, {b}")
    return n


def check_lattice_vs_bruteforce(rng: random.Random, n: int) -> int:
    bound = 20
    for _ in range(n):
        g = rng.randint(1, 2)
        u1 = abelianize(random_word_rng(g, rng.randint(0, 6), rng))
        u2 = abelianize(random_word_rng(g, rng.randint(0, 6), rng))
        if rng.random() < 0.2:
            u2 = u1.scale(rng.randint(-2, 2))
        if rng.random() < 0.3:
            m0, n0 = rng.randint(-5, 5), rng.randint(-5, 5)
            v = u1.scale(m0) + u2.scale(n0)
        else:
            v = HVec.from_coords(
                g, [Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2]))
                    for _ in range(2 * g)])
        got = lattice_member(v, u1, u2)
        brute = any(
            u1.scale(m) + u2.scale(k) == v
            for m in range(-bound, bound + 1)
            for k in range(-bound, bound + 1)
        )
        if got.member != brute:
            _fail("lattice_vs_bruteforce", f"v={v} u1={u1} u2={u2}")
        if got.member and u1.scale(got.m) + u2.scale(got.n) != v:
            _fail("lattice_vs_bruteforce", f"bad witness for v={v}")
    return n


def check_wedge_actions(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        u = _rand_hvec(g, rng)
        v = _rand_hvec(g, rng)
        z = _rand_hvec(g, rng)
        lhs = act2(wedge(u, v), z)
        rhs = v.scale(intersection(z, u)) - u.scale(intersection(z, v))
        if lhs != rhs:
            _fail("wedge_actions", f"act2 on {u}, {v}, {z}")
        if act2(omega(g), z) != -z:
            _fail("wedge_actions", f"omega action on {z}")
        w = wedge(u, v)
        lhs3 = act3(wedge3(z, w), v)
        rhs3 = w.scale(intersection(v, z)) - wedge(z, act2(w, v))
        if lhs3 != rhs3:
            _fail("wedge_actions", f"act3 on {z}, {w}, {v}")
    return n


def check_embed_compatibility(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        u = _rand_hvec(g, rng)
        v = _rand_hvec(g, rng)
        z = _rand_hvec(g, rng)
        w = wedge(u, v)
        acted = derive(embed2(w), TruncTensor.from_hvec(z)).degree_part(1)
        if acted != TruncTensor.from_hvec(act2(w, z)).degree_part(1):
            _fail("embed_compatibility", f"embed2 on {w}, {z}")
        t = wedge3(u, wedge(v, z))
        zz = _rand_hvec(g, rng)
        acted3 = derive(embed3(t), TruncTensor.from_hvec(zz)).degree_part(2)
        if acted3 != embed2(act3(t, zz)).degree_part(2):
            _fail("embed_compatibility", f"embed3 on {t}, {zz}")
    return n


def check_ell_identities(rng: random.Random, n: int) -> int:
    half = Fraction(1, 2)
    for _ in range(n):
        g = rng.randint(1, 3)
        u = random_word_rng(g, rng.randint(0, 12), rng)
        v = random_word_rng(g, rng.randint(0, 12), rng)
        if ell(u * v) != ell(u) + ell(v) + wedge(abelianize(u), abelianize(v)).scale(half):
            _fail("ell_identities", f"cocycle on {u}, {v}")
        if ell(u.inverse()) != -ell(u):
            _fail("ell_identities", f"inverse on {u}")
        if ell(u.conjugate(v)) != ell(v) + wedge(abelianize(u), abelianize(v)):
            _fail("ell_identities", f"conjugation on {u}, {v}")
        if ell(commutator(u, v)) != wedge(abelianize(u), abelianize(v)):
            _fail("ell_identities", f"commutator on {u}, {v}")
        for c in ell(u).terms.values():
            if (2 * c).denominator != 1:
                _fail("ell_identities", f"half-integrality on {u}")
        # insert a trivial pair at a random spot: ell must not move
        seq = list(u.letters)
        s = rng.choice([1, -1]) * rng.randrange(1, 2 * g + 1)
        pos = rng.randint(0, len(seq))
        noisy = seq[:pos] + [s, -s] + seq[pos:]
        if ell_of_letters(g, noisy) != ell(u):
            _fail("ell_identities", f"reduction invariance on {u}")
    return n


def check_tensor_algebra(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 2)
        ts = [_rand_tensor(g, rng) for _ in range(3)]
        if (ts[0] * ts[1]) * ts[2] != ts[0] * (ts[1] * ts[2]):
            _fail("tensor_algebra", "associativity")
        one = TruncTensor.one(g)
        if ts[0] * one != ts[0] or one * ts[0] != ts[0]:
            _fail("tensor_algebra", "unit law")
        h = _rand_tensor(g, rng, min_deg=1)
        if trunc_exp(trunc_log(one + h)) != one + h:
            _fail("tensor_algebra", "log/exp roundtrip")
        if trunc_log(trunc_exp(h)) != h:
            _fail("tensor_algebra", "exp/log roundtrip")
        # Leibniz under truncation: sample factors whose degrees cannot
        # overflow the bound, where the untruncated identity is visible
        p = _rand_tensor(g, rng, maxdeg=3, min_deg=0, max_deg=1)
        q = _rand_tensor(g, rng, maxdeg=3, min_deg=0, max_deg=2)
        if derive(h, p * q) != derive(h, p) * q + p * derive(h, q):
            _fail("tensor_algebra", "Leibniz")
        # nu^k = id per degree; N(nu - id) = 0
        for k in (2, 3):
            part = ts[0].degree_part(k)
            rotated = part
            for _ in range(k):
                rotated = cyclic_nu(rotated)
            if rotated != part:
                _fail("tensor_algebra", "cyclic order")
            if cyclic_N(cyclic_nu(part) - part) != TruncTensor.zero(g):
                _fail("tensor_algebra", "N annihilates nu - id")
    return n


def _rand_tensor(genus: int, rng: random.Random, maxdeg: int = 3,
                 min_deg: int = 0, max_deg: int | None = None) -> TruncTensor:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        d = rng.randint(min_deg, maxdeg if max_deg is None else max_deg)
        seq = tuple(rng.randrange(0, 2 * genus) for _ in range(d))
        terms[seq] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    return TruncTensor(genus, maxdeg, terms)


def check_derivation_props(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        a = random_word_rng(g, rng.randint(1, 10), rng)
        av = abelianize(a)
        L2 = TruncTensor.from_hvec(av) * TruncTensor.from_hvec(av)
        u = wedge(_rand_hvec(g, rng), _rand_hvec(g, rng))
        eu = embed2(u)
        lhs = derive(L2, eu).degree_part(2)
        rhs = embed2(wedge(av, act2(u, av)).scale(-1)).degree_part(2)
        if lhs != rhs:
            _fail("derivation_props", f"L2 action on {a}, {u}")
        if not derive(L2, derive(L2, eu)).degree_part(2).is_zero():
            _fail("derivation_props", f"L2 squared on {a}, {u}")
    return n


def check_L_dual_path(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        a = random_word_rng(g, rng.randint(0, 10), rng)
        L = L_theta(a)
        av = abelianize(a)
        if L.degree_part(2) != TruncTensor.from_hvec(av) * TruncTensor.from_hvec(av):
            _fail("L_dual_path", f"degree 2 of {a}")
        if L.degree_part(3) != embed3(wedge3(av, ell(a))).degree_part(3):
            _fail("L_dual_path", f"degree 3 of {a}")
        gword = random_word_rng(g, rng.randint(0, 8), rng)
        if L_theta(a.inverse()) != L or L_theta(gword.conjugate(a)) != L:
            _fail("L_dual_path", f"invariance of {a}")
    return n


def check_twist_degree1(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        a = random_word_rng(g, rng.randint(1, 10), rng)
        av = abelianize(a)
        for k in range(2 * g):
            x = HVec.basis(g, k)
            got = johnson_twist(a, TruncTensor.from_hvec(x, 2)).degree_part(1)
            expect = x + av.scale(intersection(av, x))
            if got != TruncTensor.from_hvec(expect, 2).degree_part(1):
                _fail("twist_degree1", f"a={a} basis {k}")
    return n


def check_twist_lemma(rng: random.Random, n: int) -> int:
    done = 0
    while done < n:
        g = rng.randint(1, 3)
        a = random_word_rng(g, rng.randint(1, 7), rng)
        b = random_word_rng(g, rng.randint(0, 7), rng)
        if intersection(abelianize(a), abelianize(b)) != 0:
            continue
        ok, lhs, rhs = obstruction.twist_consistency(g, a, b)
        if not ok:
            _fail("twist_lemma", f"a={a} b={b} lhs={lhs!r} rhs={rhs!r}")
        done += 1
    return n


def check_verdict_conjugation(rng: random.Random, n: int) -> int:
    for _ in range(n):
        g = rng.randint(1, 3)
        a = random_word_rng(g, rng.randint(1, 8), rng)
        b = random_word_rng(g, rng.randint(1, 8), rng)
        c = random_word_rng(g, rng.randint(0, 6), rng)
        d = random_word_rng(g, rng.randint(0, 6), rng)
        base = obstruction.analyze(g, a, b).verdict
        conj = obstruction.analyze(g, c.conjugate(a), d.conjugate(b)).verdict
        if base != conj:
            _fail("verdict_conjugation", f"a={a} b={b} c={c} d={d}")
    return n


def check_dependent_class(rng: random.Random, n: int) -> int:
    # b is a conjugate of a^{+-1}, so both words genuinely represent the same
    # simple closed curve (up to orientation) and the dependent-class verdict
    # must be inconclusive with a half-integral obstruction vector.
    for _ in range(n):
        g = rng.randint(1, 3)
        gen = rng.choice([words.generator(g, "x", rng.randint(1, g)),
                          words.generator(g, "y", rng.randint(1, g))])
        if rng.random() < 0.5:
            gen = gen.inverse()
        conj = random_word_rng(g, rng.randint(0, 5), rng)
        a = conj.conjugate(gen)
        eps = rng.choice([1, -1])
        b = random_word_rng(g, rng.randint(0, 5), rng).conjugate(a ** eps)
        rep = obstruction.analyze(g, a, b)
        if rep.i_A != 0 or rep.verdict != obstruction.VERDICT_INCONCLUSIVE:
            _fail("dependent_class", f"a={a} b={b} verdict={rep.verdict}")
        if not rep.lattice.member:
            _fail("dependent_class", f"a={a} b={b} not a member")
        if not is_integral(rep.v.scale(2)):
            _fail("dependent_class", f"a={a} b={b} v={rep.v} not half-integral")
    return n


def check_symplectic_condition(rng: random.Random, n: int) -> int:
    for g in range(1, 6):
        if ell(boundary_word(g)) != omega(g):
            _fail("symplectic_condition", f"boundary class at genus {g}")
    for _ in range(n):
        g = rng.randint(1, 5)
        z = _rand_hvec(g, rng)
        if act2(omega(g), z) != -z:
            _fail("symplectic_condition", f"omega action on {z}")
    return n


ALL_CHECKS = [
    ("word_group_laws", check_word_group_laws),
    ("reduction_confluence", check_reduction_confluence),
    ("parse_format_roundtrip", check_parse_format_roundtrip),
    ("homology_basics", check_homology_basics),
    ("lattice_vs_bruteforce", check_lattice_vs_bruteforce),
    ("wedge_actions", check_wedge_actions),
    ("embed_compatibility", check_embed_compatibility),
    ("ell_identities", check_ell_identities),
    ("tensor_algebra", check_tensor_algebra),
    ("derivation_props", check_derivation_props),
    ("L_dual_path", check_L_dual_path),
    ("twist_degree1", check_twist_degree1),
    ("twist_lemma", check_twist_lemma),
    ("verdict_conjugation", check_verdict_conjugation),
    ("dependent_class", check_dependent_class),
    ("symplectic_condition", check_symplectic_condition),
]

# per-check case counts at iterations=1; heavier checks run fewer cases
_BASE_COUNTS = {
    "lattice_vs_bruteforce": 20,
    "twist_lemma": 10,
    "twist_degree1": 10,
    "L_dual_path": 15,
    "verdict_conjugation": 25,
    "dependent_class": 15,
    "tensor_algebra": 15,
}
_DEFAULT_COUNT = 50


def run_selftest(seed: int, iterations: int = 1):
    """Run every property suite; yields (name, cases, error_or_None)."""
    results = []
    for name, fn in ALL_CHECKS:
        rng = random.Random(f"{seed}:{name}")
        count = _BASE_COUNTS.get(name, _DEFAULT_COUNT) * iterations
        try:
            cases = fn(rng, count)
            results.append((name, cases, None))
        except SelfTestFailure as exc:
            results.append((name, count, str(exc)))
    return results
