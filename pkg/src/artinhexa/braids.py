"""Pure 3-braid blocks and the hyperbolicity classification of their
closures.

A pure 3-braid is stored as block exponents: ``beta = prod_i sigma1^(2 e_i)
sigma2^(2 f_i)`` followed by ``(sigma1 sigma2 sigma1)^(2 e)`` (the full-twist
power, central in B3).  The closure is hyperbolic unless one of the torus /
splittable / connected-sum clauses fires; clause codes name the theorem
clause that applied.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .freeprod import (
    EvenPowerForm,
    FPWord,
    fp_concat,
    fp_power,
    fp_is_even_power_form,
    rho,
)

HYPERBOLIC = "Hyperbolic"
ESSENTIAL_TORUS = "EssentialTorus"
SPLITTABLE = "Splittable"
CONNECTED_SUM = "ConnectedSum"


class BraidError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class PureBraid:
    blocks: tuple[tuple[int, int], ...] = ()
    twist: int = 0

    def __str__(self) -> str:
        return f"{format_blocks(self.blocks)} --twist {self.twist}"


@dataclass(frozen=True, slots=True)
class BraidClass:
    """Classification of a closed pure 3-braid; ``clauses`` lists every
    theorem clause that matched, first one deciding the tag."""

    tag: str
    clauses: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.tag} {','.join(self.clauses)}".strip()


def normalize(b: PureBraid) -> PureBraid:
    """Merge blocks across zero exponents and drop all-zero blocks.

    ``(e,0),(e',f')`` becomes ``(e+e',f')`` and ``(e,f),(0,f')`` becomes
    ``(e,f+f')``; the expanded braid word is unchanged up to free
    cancellation.
    """
    out: list[list[int]] = []
    for e, f in b.blocks:
        if out and out[-1][1] == 0:
            out[-1] = [out[-1][0] + e, f]
        elif out and e == 0:
            out[-1][1] += f
        else:
            out.append([e, f])
        if out[-1] == [0, 0]:
            out.pop()
    return PureBraid(tuple((e, f) for e, f in out), b.twist)


def _cyclic_blocks(blocks: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Canonical block list of the *closure*: zero runs are also merged
    across the wrap-around, which is a conjugation of the braid."""
    runs: list[tuple[int, int]] = []  # (generator 1|2, exponent)
    for e, f in blocks:
        for gen, exp in ((1, e), (2, f)):
            if exp == 0:
                continue
            if runs and runs[-1][0] == gen:
                merged = runs[-1][1] + exp
                runs.pop()
                if merged:
                    runs.append((gen, merged))
            else:
                runs.append((gen, exp))
    while len(runs) >= 2 and runs[0][0] == runs[-1][0]:
        gen, exp = runs.pop()
        merged = runs[0][1] + exp
        runs.pop(0)
        if merged:
            runs.insert(0, (gen, merged))
    if not runs:
        return ()
    if len(runs) == 1:
        gen, exp = runs[0]
        return ((exp, 0),) if gen == 1 else ((0, exp),)
    starts = [i for i, (gen, _) in enumerate(runs) if gen == 1]
    rotations = [tuple(runs[i:] + runs[:i]) for i in starts]
    best = min(rotations)
    return tuple((best[i][1], best[i + 1][1]) for i in range(0, len(best), 2))


def to_braid_word(b: PureBraid) -> tuple[int, ...]:
    """Literal letter expansion, with the half twist spelled as
    sigma1 sigma2 sigma1; length is ``sum(2|e_i| + 2|f_i|) + 6|e|``."""
    letters: list[int] = []
    for e, f in b.blocks:
        letters.extend([1 if e > 0 else -1] * (2 * abs(e)))
        letters.extend([2 if f > 0 else -2] * (2 * abs(f)))
    half = (1, 2, 1) if b.twist > 0 else (-1, -2, -1)
    letters.extend(half * (2 * abs(b.twist)))
    return tuple(letters)


def classify(b: PureBraid) -> BraidClass:
    """Decide the closure's type: hyperbolic unless a torus, splittable or
    connected-sum clause applies.

    The braid is first put in cyclic normal form (zero exponents merged
    away, including around the closure), so the answer is invariant under
    block rotation.  Overlapping clauses are resolved by fixed priority:
    splittable, then essential torus, then connected sum; every matching
    clause is recorded, tag-deciding clause first.
    """
    blocks = _cyclic_blocks(normalize(b).blocks)
    e = b.twist
    n = len(blocks)
    if n == 0:
        if e == 0:
            return BraidClass(SPLITTABLE, ("Thm4.6-ii",))
        # closed full-twist powers are torus links; both all-blocks clauses
        # hold vacuously
        return BraidClass(ESSENTIAL_TORUS, ("Thm4.6-iii", "Thm4.6-iv"))
    if n == 1:
        e1, f1 = blocks[0]
        if e1 == 0 or f1 == 0:
            if e == 0:
                return BraidClass(SPLITTABLE, ("Thm4.2-i", "Thm4.6-ii"))
            return BraidClass(ESSENTIAL_TORUS, ("Thm4.2-i",))
        if e1 == f1 and abs(e1) == 1:
            clauses = ["Thm4.2-ii"]
            if e == 0:
                clauses.append("Thm4.2-iii")
            return BraidClass(ESSENTIAL_TORUS, tuple(clauses))
        if e == 0:
            return BraidClass(CONNECTED_SUM, ("Thm4.2-iii",))
        return BraidClass(HYPERBOLIC)
    if all(block == (1, 1) for block in blocks):
        return BraidClass(ESSENTIAL_TORUS, ("Thm4.6-iii",))
    if all(block == (-1, -1) for block in blocks):
        return BraidClass(ESSENTIAL_TORUS, ("Thm4.6-iv",))
    return BraidClass(HYPERBOLIC)


_S1 = rho([1])
_S2 = rho([2])


def rho_torus_witness(b: PureBraid) -> EvenPowerForm | None:
    """Independent torus oracle: image of the block product in Z2 * Z3 is an
    even power of y^2*D or D*y exactly for the all-(1,1) / all-(-1,-1)
    braids.  The full twist is ignored (it dies under the quotient).

    Requires every block exponent nonzero; normalize the braid differently
    first if not.
    """
    parts: list[FPWord] = []
    for e, f in b.blocks:
        if e == 0 or f == 0:
            raise BraidError(f"block ({e},{f}) has a zero exponent")
        parts.append(fp_power(_S1, 2 * e))
        parts.append(fp_power(_S2, 2 * f))
    return fp_is_even_power_form(fp_concat(*parts))


def parse_blocks(text: str) -> tuple[tuple[int, int], ...]:
    """Parse the block format ``"e1,f1;e2,f2;..."``; empty text means no
    blocks."""
    stripped = text.strip()
    if not stripped:
        return ()
    blocks = []
    for part in stripped.split(";"):
        pieces = part.split(",")
        if len(pieces) != 2:
            raise BraidError(f"bad block {part!r}; expected e,f")
        try:
            blocks.append((int(pieces[0]), int(pieces[1])))
        except ValueError:
            raise BraidError(f"bad block {part!r}; expected integers") from None
    return tuple(blocks)


def format_blocks(blocks: Iterable[tuple[int, int]]) -> str:
    return ";".join(f"{e},{f}" for e, f in blocks)


_BRAID_SYL_RE = re.compile(r"s([12])(?:\^(-?\d+))?\Z")


def parse_braid_word(text: str) -> tuple[int, ...]:
    """Parse braid words like ``"s1*s2^-1*s1"`` into signed letters."""
    stripped = text.strip()
    if stripped == "1":
        return ()
    letters: list[int] = []
    for chunk in stripped.split("*"):
        token = chunk.strip()
        m = _BRAID_SYL_RE.match(token)
        if not m:
            raise BraidError(f"expected s1 or s2 syllable, got {token!r}")
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([gen if exp > 0 else -gen] * abs(exp))
    return tuple(letters)
