"""The degree-2 invariant of words and the obstruction vector.

ell sends a word to an element of the second exterior power of homology. It is
fixed on generators (ell(x_j) = 1/2 X_j^Y_j, ell(y_j) = -1/2 X_j^Y_j) and
extended by the cocycle rule ell(uv) = ell(u) + ell(v) + 1/2 |u|^|v|. The fold
is evaluated on raw letter sequences and is invariant under free reduction.
"""

from __future__ import annotations

from fractions import Fraction

from .homology import HVec, abelianize, intersection
from .wedge import Wedge2, act2, wedge
from .words import Word


def _letter_ell(genus: int, letter: int) -> Wedge2:
    k = abs(letter) - 1
    j = k // 2
    # x_j carries +1/2 X_j^Y_j, y_j carries -1/2; inversion flips the sign
    sign = Fraction(1, 2)
    if k % 2 == 1:
        sign = -sign
    if letter < 0:
        sign = -sign
    return Wedge2.make(genus, [((2 * j, 2 * j + 1), sign)])


def _letter_hvec(genus: int, letter: int) -> HVec:
    v = HVec.basis(genus, abs(letter) - 1)
    return v if letter > 0 else -v


def ell_of_letters(genus: int, letters) -> Wedge2:
    """Left-to-right cocycle fold over a (possibly unreduced) letter sequence."""
    acc = Wedge2.zero(genus)
    ab = HVec.zero(genus)
    for l in letters:
        lv = _letter_hvec(genus, l)
        acc = acc + _letter_ell(genus, l) + wedge(ab, lv).scale(Fraction(1, 2))
        ab = ab + lv
    return acc


def ell(w: Word) -> Wedge2:
    return ell_of_letters(w.genus, w.letters)


def obstruction_vector(a: Word, b: Word) -> HVec:
    """ell(a) acting on |b| plus ell(b) acting on |a|."""
    if a.genus != b.genus:
        raise ValueError(f"genus mismatch: {a.genus} vs {b.genus}")
    return act2(ell(a), abelianize(b)) + act2(ell(b), abelianize(a))
