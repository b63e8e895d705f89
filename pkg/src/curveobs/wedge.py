"""Exterior powers of the homology: degree 2 and 3, their tensor embeddings,
and their actions on homology vectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .homology import HVec, basis_label, basis_pairing
from .tensor import TruncTensor


def _norm2(items) -> dict[tuple[int, int], Fraction]:
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j), c in items:
        if i == j or c == 0:
            continue
        if i > j:
            i, j, c = j, i, -c
        v = out.get((i, j), Fraction(0)) + c
        if v:
            out[(i, j)] = v
        else:
            out.pop((i, j), None)
    return out


def _norm3(items) -> dict[tuple[int, int, int], Fraction]:
    out: dict[tuple[int, int, int], Fraction] = {}
    for key, c in items:
        if c == 0 or len(set(key)) < 3:
            continue
        i, j, k = key
        sign = 1
        # sort the triple, tracking the permutation sign
        if i > j:
            i, j, sign = j, i, -sign
        if j > k:
            j, k, sign = k, j, -sign
        if i > j:
            i, j, sign = j, i, -sign
        v = out.get((i, j, k), Fraction(0)) + sign * c
        if v:
            out[(i, j, k)] = v
        else:
            out.pop((i, j, k), None)
    return out


@dataclass(frozen=True)
class Wedge2:
    genus: int
    terms: dict[tuple[int, int], Fraction]

    @classmethod
    def make(cls, genus: int, items) -> "Wedge2":
        return cls(genus, _norm2((k, Fraction(c)) for k, c in items))

    @classmethod
    def zero(cls, genus: int) -> "Wedge2":
        return cls(genus, {})

    def _check_genus(self, other):
        if self.genus != other.genus:
            raise ValueError(f"genus mismatch: {self.genus} vs {other.genus}")

    def __add__(self, other: "Wedge2") -> "Wedge2":
        self._check_genus(other)
        return Wedge2.make(self.genus,
                           list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "Wedge2") -> "Wedge2":
        return self + other.scale(-1)

    def __neg__(self) -> "Wedge2":
        return self.scale(-1)

    def scale(self, c) -> "Wedge2":
        c = Fraction(c)
        return Wedge2(self.genus, _norm2(((k, c * v) for k, v in self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list[dict[str, str]]:
        items = [
            {"basis": f"{basis_label(i)}^{basis_label(j)}", "coeff": str(c)}
            for (i, j), c in self.terms.items()
        ]
        return sorted(items, key=lambda t: t["basis"])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items()):
            label = f"{basis_label(i)}^{basis_label(j)}"
            if c == 1:
                parts.append(label)
            elif c == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"{c}*{label}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


@dataclass(frozen=True)
class Wedge3:
    genus: int
    terms: dict[tuple[int, int, int], Fraction]

    @classmethod
    def make(cls, genus: int, items) -> "Wedge3":
        return cls(genus, _norm3((k, Fraction(c)) for k, c in items))

    @classmethod
    def zero(cls, genus: int) -> "Wedge3":
        return cls(genus, {})

    def __add__(self, other: "Wedge3") -> "Wedge3":
        if self.genus != other.genus:
            raise ValueError("genus mismatch")
        return Wedge3.make(self.genus,
                           list(self.terms.items()) + list(other.terms.items()))

    def scale(self, c) -> "Wedge3":
        c = Fraction(c)
        return Wedge3(self.genus, _norm3(((k, c * v) for k, v in self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms


def wedge(u: HVec, v: HVec) -> Wedge2:
    u._check_genus(v)
    items = []
    for i, a in enumerate(u.coords):
        if a == 0:
            continue
        for j, b in enumerate(v.coords):
            if b == 0:
                continue
            items.append(((i, j), a * b))
    return Wedge2.make(u.genus, items)


def act2(w: Wedge2, z: HVec) -> HVec:
    """(X^Y)(Z) = (Z.X)Y - (Z.Y)X, extended bilinearly."""
    w._check_genus(z)
    out = HVec.zero(w.genus)
    for (i, j), c in w.terms.items():
        zi = _pair_with_basis(z, i)
        zj = _pair_with_basis(z, j)
        if zi:
            out = out + HVec.basis(w.genus, j).scale(c * zi)
        if zj:
            out = out - HVec.basis(w.genus, i).scale(c * zj)
    return out


def wedge3(u: HVec, w: Wedge2) -> Wedge3:
    if u.genus != w.genus:
        raise ValueError("genus mismatch")
    items = []
    for i, a in enumerate(u.coords):
        if a == 0:
            continue
        for (j, k), c in w.terms.items():
            items.append(((i, j, k), a * c))
    return Wedge3.make(u.genus, items)


def act3(t: Wedge3, z: HVec) -> Wedge2:
    """(X^u)(Z) = (Z.X)u - X^(u(Z)) for u in degree two, extended linearly."""
    if t.genus != z.genus:
        raise ValueError("genus mismatch")
    out = Wedge2.zero(t.genus)
    for (i, j, k), c in t.terms.items():
        pair = Wedge2.make(t.genus, [((j, k), c)])
        zi = _pair_with_basis(z, i)
        if zi:
            out = out + pair.scale(zi)
        acted = act2(pair, z)
        out = out - wedge(HVec.basis(t.genus, i), acted)
    return out


def _pair_with_basis(z: HVec, i: int) -> Fraction:
    """z . e_i over the symplectic pairing."""
    mate = i + 1 if i % 2 == 0 else i - 1
    return z.coords[mate] * basis_pairing(mate, i)


def omega(genus: int) -> Wedge2:
    """Sum of X_j ^ Y_j; the image of the boundary class."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    return Wedge2.make(genus, [((2 * j, 2 * j + 1), 1) for j in range(genus)])


def embed2(w: Wedge2, maxdeg: int = 3) -> TruncTensor:
    """X^Y -> XY - YX."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for (i, j), c in w.terms.items():
        terms[(i, j)] = terms.get((i, j), Fraction(0)) + c
        terms[(j, i)] = terms.get((j, i), Fraction(0)) - c
    return TruncTensor(w.genus, maxdeg, terms)


def embed3(t: Wedge3, maxdeg: int = 3) -> TruncTensor:
    """X^Y^Z -> XYZ + YZX + ZXY - XZY - ZYX - YXZ."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for (i, j, k), c in t.terms.items():
        for seq, sign in (((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1),
                          ((i, k, j), -1), ((k, j, i), -1), ((j, i, k), -1)):
            terms[seq] = terms.get(seq, Fraction(0)) + sign * c
    return TruncTensor(t.genus, maxdeg, terms)
