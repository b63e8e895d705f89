"""Verdict engine: assemble homology classes, the degree-2 invariant, the
obstruction vector and the lattice decision into an auditable report, plus the
twist cross-check that validates the machinery on concrete inputs.

The verdict is one-sided: a fired obstruction certifies positive geometric
intersection, but membership never certifies zero intersection.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .ell import ell, obstruction_vector
from .expansion import EXPANSION_NAME, johnson_twist, theta0
from .homology import (HVec, LatticeWitness, abelianize, intersection,
                       lattice_member)
from .tensor import TruncTensor
from .wedge import Wedge2, embed2, wedge
from .words import Word, format_word

VERDICT_HOMOLOGICAL = "certified_positive_homological"
VERDICT_THEOREM = "certified_positive_theorem"
VERDICT_INCONCLUSIVE = "inconclusive"

DISCLAIMER = (
    "inputs are trusted to represent simple closed curves; for other words "
    "the algebra still runs but the verdict has no geometric meaning"
)


@dataclass(frozen=True)
class Report:
    genus: int
    a: str
    b: str
    abs_a: HVec
    abs_b: HVec
    i_A: int
    ell_a: Wedge2
    ell_b: Wedge2
    v: Optional[HVec]
    lattice: Optional[LatticeWitness]
    verdict: str
    expansion: str = EXPANSION_NAME
    disclaimer: str = DISCLAIMER

    def to_json_dict(self) -> dict:
        return {
            "genus": self.genus,
            "a": self.a,
            "b": self.b,
            "abs": {"a": self.abs_a.to_json(), "b": self.abs_b.to_json()},
            "iA": self.i_A,
            "ell": {"a": self.ell_a.to_json(), "b": self.ell_b.to_json()},
            "obstruction": self.v.to_json() if self.v is not None else None,
            "lattice": self.lattice.to_json() if self.lattice is not None else None,
            "verdict": self.verdict,
            "expansion": self.expansion,
            "disclaimer": self.disclaimer,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_text(self) -> str:
        lines = [
            f"genus      : {self.genus}",
            f"a          : {self.a}",
            f"b          : {self.b}",
            f"|a|        : {self.abs_a}",
            f"|b|        : {self.abs_b}",
            f"i_A        : {self.i_A}",
            f"ell(a)     : {self.ell_a}",
            f"ell(b)     : {self.ell_b}",
        ]
        if self.v is not None:
            lines.append(f"v = ell(a)|b| + ell(b)|a| : {self.v}")
            assert self.lattice is not None
            if self.lattice.member:
                lines.append(
                    f"lattice    : v = {self.lattice.m}*|a| + {self.lattice.n}*|b|"
                    " (member of Z|a| + Z|b|)"
                )
            else:
                lines.append("lattice    : v is NOT in Z|a| + Z|b|")
        lines.append(f"verdict    : {self.verdict}")
        lines.append(f"expansion  : {self.expansion}")
        lines.append(f"note       : {self.disclaimer}")
        return "\n".join(lines)


def analyze(genus: int, a: Word, b: Word) -> Report:
    if a.genus != genus or b.genus != genus:
        raise ValueError("word genus does not match the requested genus")
    abs_a = abelianize(a)
    abs_b = abelianize(b)
    i_a = intersection(abs_a, abs_b)
    assert i_a.denominator == 1
    ell_a = ell(a)
    ell_b = ell(b)
    if i_a != 0:
        v = None
        witness = None
        verdict = VERDICT_HOMOLOGICAL
    else:
        v = obstruction_vector(a, b)
        witness = lattice_member(v, abs_a, abs_b)
        verdict = VERDICT_INCONCLUSIVE if witness.member else VERDICT_THEOREM
    return Report(
        genus=genus,
        a=format_word(a),
        b=format_word(b),
        abs_a=abs_a,
        abs_b=abs_b,
        i_A=int(i_a),
        ell_a=ell_a,
        ell_b=ell_b,
        v=v,
        lattice=witness,
        verdict=verdict,
    )


def twist_consistency(genus: int, a: Word, b: Word) -> tuple[bool, TruncTensor, TruncTensor]:
    """Compare the degree-2 change of b's expansion under the twist along a
    (derivation-exponential path) against the closed form |a| ^ v.

    Returns (equal, twisted side, closed-form side); expected always equal.
    """
    if a.genus != genus or b.genus != genus:
        raise ValueError("word genus does not match the requested genus")
    abs_a = abelianize(a)
    abs_b = abelianize(b)
    if intersection(abs_a, abs_b) != 0:
        raise ValueError("twist cross-check requires algebraic intersection 0")
    tb = theta0(b, 2)
    lhs = johnson_twist(a, tb).degree_part(2) - tb.degree_part(2)
    v = obstruction_vector(a, b)
    rhs = embed2(wedge(abs_a, v), 2)
    return lhs == rhs, lhs, rhs
