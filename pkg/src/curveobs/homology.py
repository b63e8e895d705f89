"""Rational first homology of the surface with the symplectic intersection form.

Vectors live in Q^{2g} over the ordered basis X1, Y1, ..., Xg, Yg; basis index
k in 0..2g-1 is X_{k//2+1} for even k and Y_{k//2+1} for odd k. All arithmetic
is exact (fractions.Fraction), never floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .words import Word


def basis_label(k: int) -> str:
    return ("X" if k % 2 == 0 else "Y") + str(k // 2 + 1)


def basis_pairing(i: int, j: int) -> int:
    """Intersection of basis vectors: X_j . Y_j = 1, Y_j . X_j = -1, else 0."""
    if i // 2 != j // 2:
        return 0
    if i % 2 == 0 and j % 2 == 1:
        return 1
    if i % 2 == 1 and j % 2 == 0:
        return -1
    return 0


@dataclass(frozen=True)
class HVec:
    genus: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != 2 * self.genus:
            raise ValueError("coordinate count must be 2*genus")

    @classmethod
    def zero(cls, genus: int) -> "HVec":
        return cls(genus, (Fraction(0),) * (2 * genus))

    @classmethod
    def basis(cls, genus: int, k: int) -> "HVec":
        coords = [Fraction(0)] * (2 * genus)
        coords[k] = Fraction(1)
        return cls(genus, tuple(coords))

    @classmethod
    def from_coords(cls, genus: int, coords) -> "HVec":
        return cls(genus, tuple(Fraction(c) for c in coords))

    def _check_genus(self, other: "HVec"):
        if self.genus != other.genus:
            raise ValueError(f"genus mismatch: {self.genus} vs {other.genus}")

    def __add__(self, other: "HVec") -> "HVec":
        self._check_genus(other)
        return HVec(self.genus, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "HVec") -> "HVec":
        self._check_genus(other)
        return HVec(self.genus, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "HVec":
        return HVec(self.genus, tuple(-a for a in self.coords))

    def scale(self, c) -> "HVec":
        c = Fraction(c)
        return HVec(self.genus, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def to_json(self) -> dict[str, str]:
        return {
            basis_label(k): str(c)
            for k, c in enumerate(self.coords)
            if c != 0
        }

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coords):
            if c == 0:
                continue
            if c == 1:
                term = basis_label(k)
            elif c == -1:
                term = "-" + basis_label(k)
            else:
                term = f"{c}*{basis_label(k)}"
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def abelianize(w: Word) -> HVec:
    counts = [0] * (2 * w.genus)
    for l in w.letters:
        counts[abs(l) - 1] += 1 if l > 0 else -1
    return HVec(w.genus, tuple(Fraction(c) for c in counts))


def intersection(u: HVec, v: HVec) -> Fraction:
    u._check_genus(v)
    total = Fraction(0)
    for j in range(u.genus):
        xi, yi = 2 * j, 2 * j + 1
        total += u.coords[xi] * v.coords[yi] - u.coords[yi] * v.coords[xi]
    return total


def is_integral(v: HVec) -> bool:
    return all(c.denominator == 1 for c in v.coords)


@dataclass(frozen=True)
class LatticeWitness:
    member: bool
    m: Optional[int] = None
    n: Optional[int] = None

    def to_json(self):
        return {"member": self.member, "m": self.m, "n": self.n}


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_member(v: HVec, u1: HVec, u2: HVec) -> LatticeWitness:
    """Decide v in Z*u1 + Z*u2, with an integer witness (m, n) when it holds."""
    v._check_genus(u1)
    v._check_genus(u2)
    if not (is_integral(u1) and is_integral(u2)):
        raise ValueError("lattice generators must have integer coordinates")
    a = [int(c) for c in u1.coords]
    b = [int(c) for c in u2.coords]
    n2g = len(a)

    if all(x == 0 for x in a) and all(x == 0 for x in b):
        if v.is_zero():
            return LatticeWitness(True, 0, 0)
        return LatticeWitness(False)

    # rank 1 iff all 2x2 minors of the two rows vanish
    dependent = all(
        a[i] * b[j] - a[j] * b[i] == 0
        for i in range(n2g)
        for j in range(i + 1, n2g)
    )
    if dependent:
        w = a if any(a) else b
        g0 = math.gcd(*w)
        u0 = [x // g0 for x in w]
        i0 = next(i for i, x in enumerate(u0) if x != 0)
        p, _ = divmod(a[i0], u0[i0])
        q, _ = divmod(b[i0], u0[i0])
        t = v.coords[i0] / u0[i0]
        if any(v.coords[i] != t * u0[i] for i in range(n2g)):
            return LatticeWitness(False)
        if t.denominator != 1:
            return LatticeWitness(False)
        t = int(t)
        d, s, w2 = _ext_gcd(p, q)
        if t % d != 0:
            return LatticeWitness(False)
        k = t // d
        return LatticeWitness(True, k * s, k * w2)

    # rank 2: Cramer on two independent rows, verify the rest
    pivot = next(
        (i, j)
        for i in range(n2g)
        for j in range(i + 1, n2g)
        if a[i] * b[j] - a[j] * b[i] != 0
    )
    i, j = pivot
    det = Fraction(a[i] * b[j] - a[j] * b[i])
    m = (v.coords[i] * b[j] - v.coords[j] * b[i]) / det
    n = (a[i] * v.coords[j] - a[j] * v.coords[i]) / det
    for k in range(n2g):
        if m * a[k] + n * b[k] != v.coords[k]:
            return LatticeWitness(False)
    if m.denominator != 1 or n.denominator != 1:
        return LatticeWitness(False)
    return LatticeWitness(True, int(m), int(n))
