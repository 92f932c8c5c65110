"""Words over small integer alphabets, uniform morphisms, and power-free word
generation/enumeration.

A word is represented as a plain string of digit characters ('0'-'9'); symbol
ids are the digit values.  All exponent comparisons are exact (integer cross
multiplication or fractions.Fraction), never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def check_word(w: str, alphabet_size: int) -> None:
    """Raise ValueError unless every symbol of w is a digit < alphabet_size."""
    for ch in w:
        if not ch.isdigit() or int(ch) >= alphabet_size:
            raise ValueError(f"symbol {ch!r} out of range for alphabet of size {alphabet_size}")


def reverse_word(w: str) -> str:
    """The reversal of w."""
    return w[::-1]


def factors(w: str, length: int) -> set[str]:
    """All distinct contiguous factors of w of the given length."""
    if length < 0 or length > len(w):
        raise ValueError(f"factor length {length} out of range for word of length {len(w)}")
    return {w[i:i + length] for i in range(len(w) - length + 1)}


@dataclass(frozen=True)
class Morphism:
    """A uniform morphism given by one image word per source symbol.

    All images must have a common length (the uniform width); an empty image
    tuple or all-empty images give the empty morphism of width 0.
    """

    images: tuple[str, ...]

    def __post_init__(self):
        widths = {len(img) for img in self.images}
        if len(widths) > 1:
            raise ValueError(f"images have differing lengths {sorted(widths)}; morphism must be uniform")

    @property
    def source_alphabet_size(self) -> int:
        return len(self.images)

    @property
    def uniform_width(self) -> int:
        return len(self.images[0]) if self.images else 0

    @property
    def image_alphabet_size(self) -> int:
        return max((int(c) for img in self.images for c in img), default=-1) + 1

    def to_text(self) -> str:
        """Serialize as one 'symbol -> image' line per source symbol."""
        return "\n".join(f"{i} -> {img}" for i, img in enumerate(self.images))

    @classmethod
    def from_text(cls, text: str) -> "Morphism":
        images = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            sym, _, img = line.partition("->")
            if int(sym.strip()) != len(images):
                raise ValueError("morphism lines must list symbols 0,1,2,... in order")
            images.append(img.strip())
        return cls(tuple(images))


def apply_morphism(m: Morphism, w: str) -> str:
    """Concatenation of the images of the symbols of w, in order."""
    out = []
    for ch in w:
        s = int(ch) if ch.isdigit() else -1
        if not 0 <= s < m.source_alphabet_size:
            raise ValueError(f"symbol {ch!r} not in source alphabet of size {m.source_alphabet_size}")
        out.append(m.images[s])
    return "".join(out)


# The two hard-coded branch-coloring morphisms (12-uniform and 21-uniform).
G2 = Morphism((
    "011220012201",
    "122001120012",
    "200112201120",
))

G5 = Morphism((
    "001101110001010110010",
    "001101110001001110101",
    "001101110001001101010",
))

NAMED_MORPHISMS = {"g2": G2, "g5": G5}


@dataclass(frozen=True)
class PowerFreeSpec:
    """Freeness parameters: forbid repetitions of exponent beyond exponent_bound
    with period at least min_period.

    strict=True forbids exponent strictly greater than the bound (the "beta-plus"
    reading); strict=False also forbids exponent equal to the bound.
    """

    exponent_bound: Fraction
    min_period: int = 1
    strict: bool = True

    def __post_init__(self):
        if self.exponent_bound < 1:
            raise ValueError("exponent bound must be >= 1")
        if self.min_period < 1:
            raise ValueError("min period must be >= 1")

    def violates(self, length: int, period: int) -> bool:
        """Does a factor of this length with this period break the spec?"""
        if period < self.min_period:
            return False
        num, den = self.exponent_bound.numerator, self.exponent_bound.denominator
        if self.strict:
            return length * den > num * period
        return length * den >= num * period


# Dejean's threshold for three symbols: repetitions of exponent > 7/4 are
# avoidable, and that bound is tight.
TERNARY_THRESHOLD = PowerFreeSpec(Fraction(7, 4), min_period=1, strict=True)


def _suffix_ok(word: list[int], num: int = 7, den: int = 4) -> bool:
    # Check only repetitions ending at the last symbol; callers extend one
    # symbol at a time, so earlier violations were already rejected.
    n = len(word)
    last = word[-1]
    for p in range(1, n):
        if word[-1 - p] != last:
            continue
        m = 1
        while m < n - p and word[-1 - m] == word[-1 - m - p]:
            m += 1
        if (p + m) * den > num * p:
            return False
    return True


def iter_powerfree_ternary(length: int):
    """Yield every ternary word of exactly the given length containing no
    repetition of exponent > 7/4, in lexicographic order."""
    if length < 0:
        raise ValueError("length must be >= 0")
    if length == 0:
        yield ""
        return
    word: list[int] = []

    def rec():
        if len(word) == length:
            yield "".join(map(str, word))
            return
        for c in range(3):
            word.append(c)
            if _suffix_ok(word):
                yield from rec()
            word.pop()

    yield from rec()


def enumerate_powerfree_ternary(length: int) -> set[str]:
    """All ternary words of exactly the given length with no factor of
    exponent > 7/4.  Every length-`length` factor of every infinite
    (7/4+)-free ternary word is among them."""
    return set(iter_powerfree_ternary(length))


def generate_powerfree_ternary(length: int, margin: int = 50) -> str:
    """The lexicographically least (7/4+)-free ternary word of the given
    length that extends to a (7/4+)-free word `margin` symbols longer.

    The lookahead margin makes the output a prefix of the result for any
    larger length (checked as a property test), so generation is
    deterministic and prefix-stable.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    target = length + margin
    word: list[int] = []

    def rec() -> bool:
        if len(word) == target:
            return True
        for c in range(3):
            word.append(c)
            if _suffix_ok(word) and rec():
                return True
            word.pop()
        return False

    if not rec():
        raise RuntimeError("no extendable power-free word found; margin too small")
    return "".join(map(str, word[:length]))
