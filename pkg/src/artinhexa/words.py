"""Exact algebra of reduced words in a finitely generated free group.

Words are kept in syllable (run-length) form: a sequence of
``(generator, exponent)`` pairs with nonzero exponents and distinct adjacent
generators.  Generators are numbered from 1.  All values are immutable and
every operation is a pure function, so everything here is safe to use from
many threads without synchronization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

Syllable = tuple[int, int]


class WordError(ValueError):
    """Malformed word data: bad generator index or zero exponent."""


class WordSyntaxError(WordError):
    """Unparsable word text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _reduce_syllables(pairs: Iterable[Syllable]) -> tuple[Syllable, ...]:
    stack: list[Syllable] = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True, slots=True)
class Word:
    """A freely reduced word.  Construct via :func:`reduce_word` or the
    parser; the constructor only checks the reducedness invariant."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        prev = 0
        for gen, exp in self.syllables:
            if gen < 1:
                raise WordError(f"generator index {gen} out of range")
            if exp == 0:
                raise WordError(f"zero exponent on generator {gen}")
            if gen == prev:
                raise WordError(f"unreduced word: repeated generator {gen}")
            prev = gen

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __str__(self) -> str:
        return serialize_word(self)

    def __len__(self) -> int:
        """Letter length, counting each generator with multiplicity."""
        return sum(abs(exp) for _, exp in self.syllables)

    def letters(self) -> Iterator[int]:
        """Yield signed generator indices letter by letter."""
        for gen, exp in self.syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen * step

    def max_generator(self) -> int:
        return max((gen for gen, _ in self.syllables), default=0)


IDENTITY = Word()


def generator(index: int, exp: int = 1) -> Word:
    if exp == 0:
        return IDENTITY
    return Word(((index, exp),))


def reduce_word(pairs: Iterable[Syllable], rank: int | None = None) -> Word:
    """Freely reduce a raw syllable sequence.

    Pairs with exponent 0 are dropped.  ``rank``, when given, bounds the
    allowed generator indices (1..rank).  Reduction is idempotent:
    ``reduce_word(w.syllables) == w`` for any :class:`Word` ``w``.
    """
    pairs = tuple(pairs)
    for gen, _ in pairs:
        if gen < 1 or (rank is not None and gen > rank):
            raise WordError(f"generator index {gen} out of range")
    return Word(_reduce_syllables(pairs))


def concat(*words: Word) -> Word:
    """Reduced product of words, left to right."""
    pairs: list[Syllable] = []
    for w in words:
        pairs.extend(w.syllables)
    return Word(_reduce_syllables(pairs))


def invert(w: Word) -> Word:
    return Word(tuple((gen, -exp) for gen, exp in reversed(w.syllables)))


def power(w: Word, k: int) -> Word:
    if k < 0:
        w, k = invert(w), -k
    return concat(*([w] * k)) if k else IDENTITY


def conjugate(w: Word, g: Word) -> Word:
    """Right conjugation ``g^-1 * w * g`` (fixed convention)."""
    return concat(invert(g), w, g)


def abelianize(w: Word, rank: int) -> tuple[int, ...]:
    """Exponent-sum vector of length ``rank``."""
    sums = [0] * rank
    for gen, exp in w.syllables:
        if gen > rank:
            raise WordError(f"generator index {gen} exceeds rank {rank}")
        sums[gen - 1] += exp
    return tuple(sums)


@dataclass(frozen=True, slots=True)
class CyclicWord:
    """Canonical form of a conjugacy class: the lexicographically least
    rotation (ordering syllables by generator, then exponent) of a
    cyclically reduced word."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        syls = self.syllables
        if len(syls) > 1 and syls[0][0] == syls[-1][0]:
            raise WordError("cyclic word is not cyclically reduced")
        if syls != _least_rotation(syls):
            raise WordError("cyclic word is not in canonical rotation")

    def to_word(self) -> Word:
        return Word(self.syllables)

    def __str__(self) -> str:
        return serialize_word(self.to_word())


def _least_rotation(syls: tuple[Syllable, ...]) -> tuple[Syllable, ...]:
    if len(syls) <= 1:
        return syls
    return min(syls[i:] + syls[:i] for i in range(len(syls)))


def cyclic_reduce(w: Word) -> tuple[CyclicWord, Word]:
    """Split ``w`` into its cyclic canonical form and a conjugator.

    Returns ``(c, t)`` with ``w == conjugate(c.to_word(), t)`` exactly: the
    rotation offset of the canonicalization is folded into ``t``.
    """
    syls = list(w.syllables)
    conj: list[Syllable] = []
    while len(syls) >= 2 and syls[0][0] == syls[-1][0]:
        gen, last_exp = syls.pop()
        first_exp = syls[0][1]
        merged = first_exp + last_exp
        if merged:
            syls[0] = (gen, merged)
        else:
            syls.pop(0)
        conj.insert(0, (gen, last_exp))
    core = tuple(syls)
    rotation = _least_rotation(core)
    # fold the rotation offset into the conjugator so the exact identity
    # w == conjugate(canonical, t) survives canonicalization
    if rotation != core:
        for i in range(len(core)):
            if core[i:] + core[:i] == rotation:
                conj = list(core[i:]) + conj
                break
    return CyclicWord(rotation), reduce_word(conj)


def is_conjugate(a: Word, b: Word) -> bool:
    """Conjugacy test: equality of cyclic canonical forms."""
    return cyclic_reduce(a)[0] == cyclic_reduce(b)[0]


_SYLLABLE_RE = re.compile(r"x(\d+)(?:\^(-?\d+))?\Z")


def parse_word(text: str) -> Word:
    """Parse the word grammar ``WORD := "1" | SYL ("*" SYL)*`` with
    ``SYL := "x" INT ["^" NONZERO-INT]``.  The result is freely reduced."""
    stripped = text.strip()
    if stripped == "1":
        return IDENTITY
    if not stripped:
        raise WordSyntaxError("empty word text", 0)
    pairs: list[Syllable] = []
    pos = 0
    for chunk in text.split("*"):
        token = chunk.strip()
        at = pos + chunk.index(token) if token else pos
        m = _SYLLABLE_RE.match(token)
        if not m:
            raise WordSyntaxError(f"expected syllable, got {token!r}", at)
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if gen < 1:
            raise WordSyntaxError(f"generator index {gen} out of range", at)
        if exp == 0:
            raise WordSyntaxError("exponent 0 is not allowed", at)
        pairs.append((gen, exp))
        pos += len(chunk) + 1
    return Word(_reduce_syllables(pairs))


def serialize_word(w: Word | CyclicWord) -> str:
    """Canonical text form; always reduced, ``^1`` omitted, ``1`` for the
    identity."""
    if not w.syllables:
        return "1"
    parts = []
    for gen, exp in w.syllables:
        parts.append(f"x{gen}" if exp == 1 else f"x{gen}^{exp}")
    return "*".join(parts)
