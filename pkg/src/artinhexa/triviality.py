"""Triviality certification for presentations: abelian invariants by exact
integer Smith normal form, then a bounded deterministic Tietze-style
simplifier.

A ``Trivial`` verdict carries a replayable move log; ``NotTrivial`` carries
the nontrivial divisors; ``Unknown`` is an honest outcome when the move
budget runs out or the greedy search stalls (triviality is undecidable in
general, so no answer is forced).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .artin import Presentation
from .words import IDENTITY, Word, abelianize, concat, cyclic_reduce, invert, power

DEFAULT_BUDGET = 100_000

Move = tuple


def smith_invariants(rows: Sequence[Sequence[int]], width: int) -> tuple[int, ...]:
    """Elementary divisors of an integer matrix, in divisibility order,
    padded with zeros to ``min(len(rows), width)`` entries."""
    m = [list(r) for r in rows]
    if any(len(r) != width for r in m):
        raise ValueError("ragged matrix")
    R, C = len(m), width
    divisors: list[int] = []
    t = 0
    while t < R and t < C:
        pivot = None
        best = None
        for i in range(t, R):
            for j in range(t, C):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        m[t], m[i0] = m[i0], m[t]
        for row in m:
            row[t], row[j0] = row[j0], row[t]
        while True:
            # clear column t, swapping up any nonzero remainder (each swap
            # shrinks |m[t][t]|, so this terminates)
            restart = False
            for i in range(t + 1, R):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    for j in range(t, C):
                        m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, C):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for i in range(t, R):
                        m[i][j] -= q * m[i][t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        restart = True
                        break
            if restart:
                continue
            # enforce the divisibility chain before moving on
            p = m[t][t]
            offender = None
            for i in range(t + 1, R):
                for j in range(t + 1, C):
                    if m[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, C):
                m[t][j] += m[offender][j]
        divisors.append(abs(m[t][t]))
        t += 1
    divisors.extend([0] * (min(R, C) - len(divisors)))
    return tuple(divisors)


def abelian_invariants(pres: Presentation) -> tuple[int, ...]:
    """Divisor chain of the relator exponent matrix, one entry per
    generator (zeros encode free factors)."""
    rows = [abelianize(r, pres.rank) for r in pres.relators]
    divisors = list(smith_invariants(rows, pres.rank))
    divisors.extend([0] * (pres.rank - len(divisors)))
    return tuple(divisors)


@dataclass(frozen=True)
class TrivialityVerdict:
    tag: str  # "Trivial" | "NotTrivial" | "Unknown"
    divisors: tuple[int, ...]
    moves: tuple[Move, ...]
    budget_spent: int

    def as_json_dict(self) -> dict:
        return {
            "tag": self.tag,
            "divisors": list(self.divisors),
            "moves": [list(m) for m in self.moves],
            "budget_spent": self.budget_spent,
        }


@dataclass
class _State:
    rank: int
    relators: list[Word]


def _canonical(relators: Iterable[Word]) -> list[Word]:
    out = []
    for r in relators:
        core = cyclic_reduce(r)[0].to_word()
        if core:
            out.append(core)
    return out


def _renumber(w: Word, gen: int) -> Word:
    return Word(tuple((g - 1 if g > gen else g, e) for g, e in w.syllables))


def _replace(w: Word, gen: int, repl: Word) -> Word:
    parts = []
    for g, e in w.syllables:
        parts.append(power(repl, e) if g == gen else Word(((g, e),)))
    return concat(*parts)


def _eliminate(state: _State, rel_index: int, gen: int, repl: Word) -> None:
    new = []
    for k, other in enumerate(state.relators):
        if k == rel_index:
            continue
        new.append(_renumber(_replace(other, gen, repl), gen))
    state.relators = new
    state.rank -= 1


def _solve(relator: Word, gen: int) -> Word:
    """Solve ``u x^s v = 1`` for ``x``; ``gen`` must occur exactly once in
    the relator and with exponent +-1."""
    positions = [i for i, (g, _) in enumerate(relator.syllables) if g == gen]
    if len(positions) != 1 or abs(relator.syllables[positions[0]][1]) != 1:
        raise ValueError(f"generator {gen} is not solvable in {relator}")
    i = positions[0]
    s = relator.syllables[i][1]
    u = Word(relator.syllables[:i])
    v = Word(relator.syllables[i + 1 :])
    return power(concat(invert(u), invert(v)), s)


def apply_move(state: _State, move: Move) -> None:
    kind = move[0]
    if kind == "reduce":
        state.relators = _canonical(state.relators)
    elif kind == "kill":
        _, rel_index, gen = move
        _eliminate(state, rel_index, gen, IDENTITY)
    elif kind == "subst":
        _, rel_index, gen = move
        repl = _solve(state.relators[rel_index], gen)
        _eliminate(state, rel_index, gen, repl)
    elif kind == "mult":
        _, i, j, sign, rot = move
        syls = state.relators[i].syllables
        rotated = Word(syls[rot:] + syls[:rot])
        other = state.relators[j] if sign == 1 else invert(state.relators[j])
        state.relators[i] = concat(rotated, other)
    else:
        raise ValueError(f"unknown move {move!r}")


def replay(pres: Presentation, moves: Iterable[Move]) -> tuple[int, tuple[Word, ...]]:
    """Re-apply a move log from scratch; returns the final (rank, relators).
    A valid Trivial certificate replays to ``(0, ())``."""
    state = _State(pres.rank, list(pres.relators))
    for move in moves:
        apply_move(state, move)
    return state.rank, tuple(state.relators)


def _best_mult(relators: list[Word]) -> Move | None:
    """Smallest-result-first greedy multiplication move, with a fixed
    lexicographic tie-break for reproducibility."""
    best_key = None
    best_move = None
    for i, ri in enumerate(relators):
        base_len = len(ri)
        syls = ri.syllables
        for rot in range(max(len(syls), 1)):
            rotated = Word(syls[rot:] + syls[:rot])
            for j, rj in enumerate(relators):
                if i == j:
                    continue
                for sign in (1, -1):
                    other = rj if sign == 1 else invert(rj)
                    cand = concat(rotated, other)
                    if len(cand) >= base_len:
                        continue
                    key = (len(cand), cand.syllables, i, j, sign, rot)
                    if best_key is None or key < best_key:
                        best_key = key
                        best_move = ("mult", i, j, sign, rot)
    return best_move


def simplify(pres: Presentation, budget: int = DEFAULT_BUDGET) -> TrivialityVerdict:
    """Bounded deterministic search for a trivialization.

    Move order per round: (a) free+cyclic reduction of all relators,
    (b) deleting a generator whose relator is a bare ``x^+-1``,
    (c) Tietze elimination of a generator occurring exactly once in some
    relator, (d) greedy length-reducing relator multiplication over all
    cyclic rotations.  An abelian-invariant check short-circuits to
    NotTrivial up front, so Trivial is never reported for a group with
    nontrivial homology.
    """
    divisors = abelian_invariants(pres)
    if any(d != 1 for d in divisors):
        return TrivialityVerdict("NotTrivial", divisors, (), 0)
    state = _State(pres.rank, list(pres.relators))
    moves: list[Move] = []
    spent = 0

    def apply(move: Move) -> None:
        nonlocal spent
        apply_move(state, move)
        moves.append(move)
        spent += 1

    while True:
        if state.rank == 0:
            return TrivialityVerdict("Trivial", divisors, tuple(moves), spent)
        if spent >= budget:
            return TrivialityVerdict("Unknown", divisors, tuple(moves), spent)
        if _canonical(state.relators) != state.relators:
            apply(("reduce",))
            continue
        move = _pick_structural(state) or _best_mult(state.relators)
        if move is None:
            return TrivialityVerdict("Unknown", divisors, tuple(moves), spent)
        apply(move)


def _pick_structural(state: _State) -> Move | None:
    for idx, r in enumerate(state.relators):
        syls = r.syllables
        if len(syls) == 1 and abs(syls[0][1]) == 1:
            return ("kill", idx, syls[0][0])
    for idx, r in enumerate(state.relators):
        counts: dict[int, int] = {}
        for g, e in r.syllables:
            counts[g] = counts.get(g, 0) + abs(e)
        for g, e in r.syllables:
            if counts[g] == 1 and abs(e) == 1:
                return ("subst", idx, g)
    return None
