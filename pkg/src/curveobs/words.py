"""Free-group words over the symplectic generators x1, y1, ..., xg, yg.

A letter is encoded as a nonzero signed int ±(k+1), where k in 0..2g-1 indexes
the generator (x_j -> 2(j-1), y_j -> 2j-1) and the sign is the exponent sign.
Words are always stored freely reduced.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass


class WordError(ValueError):
    """Invalid word input: bad token, bad index, genus mismatch."""


def reduce_letters(letters) -> tuple[int, ...]:
    """Freely reduce a letter sequence (cancel adjacent inverse pairs)."""
    stack: list[int] = []
    for l in letters:
        if stack and stack[-1] == -l:
            stack.pop()
        else:
            stack.append(l)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    genus: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.genus < 1:
            raise WordError(f"genus must be >= 1, got {self.genus}")
        n = 2 * self.genus
        for l in self.letters:
            if l == 0 or abs(l) > n:
                raise WordError(f"letter {l} out of range for genus {self.genus}")
        for a, b in zip(self.letters, self.letters[1:]):
            if a == -b:
                raise WordError("word is not freely reduced")

    @classmethod
    def from_letters(cls, genus: int, letters) -> "Word":
        return cls(genus, reduce_letters(letters))

    @classmethod
    def identity(cls, genus: int) -> "Word":
        return cls(genus, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def _check_genus(self, other: "Word"):
        if self.genus != other.genus:
            raise WordError(
                f"genus mismatch: {self.genus} vs {other.genus}"
            )

    def __mul__(self, other: "Word") -> "Word":
        self._check_genus(other)
        return Word.from_letters(self.genus, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.genus, tuple(-l for l in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word.identity(self.genus)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self, h: "Word") -> "Word":
        """g.conjugate(h) = g h g^-1."""
        self._check_genus(h)
        return self * h * self.inverse()

    def __str__(self) -> str:
        return format_word(self)


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return w.inverse()


def conjugate(g: Word, h: Word) -> Word:
    return g.conjugate(h)


def commutator(g: Word, h: Word) -> Word:
    """[g, h] = g h g^-1 h^-1."""
    g._check_genus(h)
    return g * h * g.inverse() * h.inverse()


def generator(genus: int, kind: str, index: int, sign: int = 1) -> Word:
    if not 1 <= index <= genus:
        raise WordError(f"generator index {index} out of range for genus {genus}")
    k = 2 * (index - 1) + (0 if kind == "x" else 1)
    return Word(genus, (sign * (k + 1),))


def boundary_word(genus: int) -> Word:
    """The boundary class: the product of the commutators [x_j, y_j]."""
    out = Word.identity(genus)
    for j in range(1, genus + 1):
        out = out * commutator(generator(genus, "x", j), generator(genus, "y", j))
    return out


# --- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s+|\*"                     # separators, skipped
    r"|(?P<gen>[xy][0-9]+)"
    r"|(?P<zeta>zeta)"
    r"|(?P<caret>\^)"
    r"|(?P<int>-?[0-9]+)"
    r"|(?P<open>[\[(])"
    r"|(?P<close>[\])])"
    r"|(?P<comma>,)"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise WordError(f"unknown token at {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.lastgroup is not None:
            tokens.append((m.lastgroup, m.group()))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]], genus: int):
        self.tokens = tokens
        self.genus = genus
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, "")

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse_word(self) -> list[int]:
        letters: list[int] = []
        while True:
            kind, _ = self.peek()
            if kind in (None, "comma") or (kind == "close"):
                return letters
            letters.extend(self.parse_term())

    def parse_term(self) -> list[int]:
        kind, text = self.take()
        if kind == "gen":
            idx = int(text[1:])
            if not 1 <= idx <= self.genus:
                raise WordError(
                    f"generator index {idx} out of range 1..{self.genus} in {text!r}"
                )
            base = [generator(self.genus, text[0], idx).letters[0]]
        elif kind == "zeta":
            base = list(boundary_word(self.genus).letters)
        elif kind == "int" and text == "1":
            base = []
        elif kind == "open":
            closing = "]" if text == "[" else ")"
            inner = self.parse_word()
            if text == "[":
                ck, _ = self.take()
                if ck != "comma":
                    raise WordError("expected ',' inside commutator bracket")
                second = self.parse_word()
                u = reduce_letters(inner)
                v = reduce_letters(second)
                ui = [-l for l in reversed(u)]
                vi = [-l for l in reversed(v)]
                base = list(u) + list(v) + ui + vi
            else:
                base = inner
            ck, ct = self.take()
            if ck != "close" or ct != closing:
                raise WordError(f"unbalanced bracket, expected {closing!r}")
        else:
            raise WordError(f"unexpected token {text!r}")
        return self.apply_exponent(base)

    def apply_exponent(self, base: list[int]) -> list[int]:
        kind, _ = self.peek()
        if kind != "caret":
            return base
        self.take()
        kind, text = self.take()
        if kind != "int":
            raise WordError(f"expected integer exponent, got {text!r}")
        n = int(text)
        if n == 0:
            raise WordError("exponent 0 is not allowed")
        if n < 0:
            base = [-l for l in reversed(base)]
            n = -n
        return base * n


def parse_word(text: str, genus: int) -> Word:
    if genus < 1:
        raise WordError(f"genus must be >= 1, got {genus}")
    tokens = _tokenize(text)
    if not tokens:
        raise WordError("empty input (use '1' for the identity)")
    parser = _Parser(tokens, genus)
    letters = parser.parse_word()
    if parser.pos != len(tokens):
        raise WordError(f"unexpected token {parser.peek()[1]!r}")
    return Word.from_letters(genus, letters)


def format_word(w: Word) -> str:
    """Canonical text: run-length-compressed letters, '1' for the identity."""
    if not w.letters:
        return "1"
    parts = []
    i = 0
    letters = w.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        l = letters[i]
        k = abs(l) - 1
        name = ("x" if k % 2 == 0 else "y") + str(k // 2 + 1)
        exp = (j - i) * (1 if l > 0 else -1)
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return " ".join(parts)


# --- random generation -------------------------------------------------------

def random_letters(genus: int, length: int, rng: random.Random) -> list[int]:
    """Uniform unreduced letter sequence; may reduce to something shorter."""
    n = 2 * genus
    return [rng.choice([1, -1]) * rng.randrange(1, n + 1) for _ in range(length)]


def random_word(genus: int, length: int, seed: int) -> Word:
    rng = random.Random(seed)
    return Word.from_letters(genus, random_letters(genus, length, rng))


def random_word_rng(genus: int, length: int, rng: random.Random) -> Word:
    return Word.from_letters(genus, random_letters(genus, length, rng))


def random_commutator_element(genus: int, count: int, seed: int) -> Word:
    """Product of `count` commutators of random words; abelianizes to zero."""
    rng = random.Random(seed)
    return random_commutator_element_rng(genus, count, rng)


def random_commutator_element_rng(genus: int, count: int, rng: random.Random) -> Word:
    out = Word.identity(genus)
    for _ in range(count):
        u = random_word_rng(genus, rng.randint(1, 5), rng)
        v = random_word_rng(genus, rng.randint(1, 5), rng)
        out = out * commutator(u, v)
    return out
