"""Hexatangle fillings, their tetrahedral symmetries, and the surgery
correspondence.

The six boundary boxes carry integer fillings named alpha..eta; the
canonical parameter order everywhere in memory is
``(alpha, beta, gamma, delta, epsilon, eta)``.  The bundled tables ship in
other column orders; loaders carry an explicit per-table column map so
nothing gets silently transposed.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .braids import PureBraid

SLOTS = ("alpha", "beta", "gamma", "delta", "epsilon", "eta")
_SLOT_INDEX = {name: i for i, name in enumerate(SLOTS)}


class HexError(ValueError):
    pass


class CellSyntaxError(HexError):
    pass


@dataclass(frozen=True, slots=True)
class HexFilling:
    alpha: int
    beta: int
    gamma: int
    delta: int
    epsilon: int
    eta: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.alpha, self.beta, self.gamma, self.delta, self.epsilon, self.eta)

    @classmethod
    def from_tuple(cls, values: Iterable[int]) -> "HexFilling":
        values = tuple(int(v) for v in values)
        if len(values) != 6:
            raise HexError(f"expected 6 parameters, got {len(values)}")
        return cls(*values)

    def mirror(self) -> "HexFilling":
        """Candidate mirror image: every integral tangle negated.
        Experimental; negating every parameter is one candidate reading of
        the mirror, not a pinned-down convention."""
        return HexFilling(*(-v for v in self.as_tuple()))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.as_tuple())


@dataclass(frozen=True, slots=True)
class HexSymmetry:
    """One row of the symmetry table: ``sources[i]`` is the slot whose old
    value the canonical slot ``SLOTS[i]`` takes."""

    index: int
    sources: tuple[str, ...]

    def __post_init__(self):
        if sorted(self.sources) != sorted(SLOTS):
            raise HexError(f"symmetry {self.index} is not a bijection on slots")

    def apply(self, h: HexFilling) -> HexFilling:
        old = h.as_tuple()
        return HexFilling(*(old[_SLOT_INDEX[src]] for src in self.sources))

    def compose(self, other: "HexSymmetry") -> tuple[str, ...]:
        """Sources of `apply other first, then self` (index is not tracked)."""
        return tuple(other.sources[_SLOT_INDEX[src]] for src in self.sources)

    def is_identity(self) -> bool:
        return self.sources == SLOTS


def apply_symmetry(sym: HexSymmetry, h: HexFilling) -> HexFilling:
    return sym.apply(h)


def orbit(
    h: HexFilling,
    symmetries: Iterable[HexSymmetry],
    include_mirror: bool = False,
) -> tuple[HexFilling, ...]:
    """All images of ``h`` under the symmetries (and their mirrors when
    requested), deduplicated and sorted for a deterministic order."""
    images = {sym.apply(h).as_tuple() for sym in symmetries}
    if include_mirror:
        images |= {tuple(-v for v in img) for img in set(images)}
    return tuple(HexFilling(*img) for img in sorted(images))


@dataclass(frozen=True)
class SymmetryReport:
    distinct: bool
    duplicates: tuple[tuple[int, int], ...]
    has_identity: bool
    closed: bool
    missing_products: tuple[tuple[int, int], ...]
    opposite_pairings: tuple[tuple[tuple[str, str], ...], ...]

    @property
    def passed(self) -> bool:
        return (
            self.distinct
            and self.has_identity
            and self.closed
            and len(self.opposite_pairings) == 1
        )

    def lines(self) -> list[str]:
        out = [
            f"distinct assignments: {'pass' if self.distinct else 'FAIL ' + str(self.duplicates)}",
            f"identity present: {'pass' if self.has_identity else 'FAIL'}",
            "closed under composition: "
            + ("pass" if self.closed else f"FAIL {self.missing_products[:10]}"),
        ]
        if len(self.opposite_pairings) == 1:
            pairs = " ".join("{%s,%s}" % p for p in self.opposite_pairings[0])
            out.append(f"opposite-box pairing: pass {pairs}")
        else:
            out.append(
                f"opposite-box pairing: FAIL ({len(self.opposite_pairings)} invariant pairings)"
            )
        return out


def _pairings() -> list[tuple[tuple[str, str], ...]]:
    out = []
    for p1 in SLOTS[1:]:
        rest1 = [s for s in SLOTS[1:] if s != p1]
        for p2 in rest1[1:]:
            rest2 = [s for s in rest1[1:] if s != p2]
            out.append(((SLOTS[0], p1), (rest1[0], p2), (rest2[0], rest2[1])))
    return out


def validate_symmetry_table(symmetries: Iterable[HexSymmetry]) -> SymmetryReport:
    """Check a candidate symmetry table: 24 pairwise distinct assignments,
    identity present, closure under composition, and a unique 3-pair
    opposite-box partition preserved by every row.  Failures are report
    content, never exceptions."""
    syms = tuple(symmetries)
    seen: dict[tuple[str, ...], int] = {}
    duplicates = []
    for sym in syms:
        if sym.sources in seen:
            duplicates.append((seen[sym.sources], sym.index))
        else:
            seen[sym.sources] = sym.index
    has_identity = any(sym.is_identity() for sym in syms)
    source_set = set(seen)
    missing = []
    for a, b in itertools.product(syms, repeat=2):
        if a.compose(b) not in source_set:
            missing.append((a.index, b.index))
    pairings = []
    for candidate in _pairings():
        pair_sets = {frozenset(p) for p in candidate}
        if all(
            frozenset(sym.sources[_SLOT_INDEX[x]] for x in pair) in pair_sets
            for sym in syms
            for pair in candidate
        ):
            pairings.append(candidate)
    return SymmetryReport(
        distinct=not duplicates,
        duplicates=tuple(duplicates),
        has_identity=has_identity,
        closed=not missing,
        missing_products=tuple(missing),
        opposite_pairings=tuple(pairings),
    )


_TETRA_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def tetrahedral_control() -> tuple[HexSymmetry, ...]:
    """Known-good control: the S4 vertex action of the tetrahedron on its
    six edges, with edges labelled by the canonical slots.  Opposite slots
    are the complementary edge pairs."""
    edge_slot = {frozenset(edge): SLOTS[i] for i, edge in enumerate(_TETRA_EDGES)}
    syms = []
    for index, perm in enumerate(sorted(itertools.permutations(range(4))), start=1):
        # perm moves the box at edge E to edge perm(E), so slot t receives
        # the old value of the slot at perm^-1(E_t)
        inv = tuple(perm.index(v) for v in range(4))
        sources = tuple(
            edge_slot[frozenset(inv[v] for v in _TETRA_EDGES[i])] for i in range(6)
        )
        syms.append(HexSymmetry(index, sources))
    return tuple(syms)


@dataclass(frozen=True, slots=True)
class SurgerySpec:
    """Dehn-surgery description of the double branched cover of a filled
    hexatangle: integral framings on a single-block closed pure 3-braid."""

    framings: tuple[int, int, int]
    braid: PureBraid


def to_surgery(h: HexFilling) -> SurgerySpec:
    """Surgery correspondence: the double branched cover of the filling is
    the ``(-a-d-h, -b-d-g-h, -e-g-h)`` surgery on
    ``sigma1^(-2 delta) sigma2^(-2 gamma) Delta^(-2 eta)``."""
    a, b, g, d, e, h_ = h.as_tuple()
    framings = (-a - d - h_, -b - d - g - h_, -e - g - h_)
    return SurgerySpec(framings, PureBraid(((-d, -g),), -h_))


@dataclass(frozen=True, slots=True)
class LinearCell:
    """A table cell: an optional leading +- sign on the constant, plus at
    most one slot variable with coefficient +-1.  Value(s) are
    ``(+-c0) + c1 * var``."""

    pm: bool = False
    c0: int = 0
    c1: int = 0
    var: str | None = None

    def __post_init__(self):
        if self.var is not None and self.var not in SLOTS:
            raise HexError(f"unknown variable {self.var!r}")
        if (self.var is None) != (self.c1 == 0):
            raise HexError("variable and coefficient must come together")
        if self.c1 not in (-1, 0, 1):
            raise HexError(f"variable coefficient {self.c1} not in -1..1")
        if self.pm and self.c0 <= 0:
            raise HexError("pm cells need a positive constant part")

    def values(self, assignment: Mapping[str, int]) -> tuple[int, ...]:
        """Concrete value(s); pm cells give the + branch first."""
        base = 0
        if self.var is not None:
            if self.var not in assignment:
                raise HexError(f"unbound variable {self.var!r}")
            base = self.c1 * assignment[self.var]
        if self.pm:
            return (self.c0 + base, -self.c0 + base)
        return (self.c0 + base,)

    @property
    def is_concrete(self) -> bool:
        return self.var is None and not self.pm


_INT_RE = re.compile(r"-?\d+\Z")
_TERM_RE = re.compile(r"([+-])?\s*(\d+|[a-z]+)")


def parse_cell(text: str) -> LinearCell:
    """Parse ``CELL := ["±"] TERM (("+"|"-") TERM)*`` with
    ``TERM := INT | VAR`` and at most one variable per cell."""
    s = text.strip()
    original = s
    pm = s.startswith("±")
    if pm:
        s = s[1:].lstrip()
    pos = 0
    c0 = 0
    c1 = 0
    var = None
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m:
            raise CellSyntaxError(f"bad cell {original!r} near {s[pos:]!r}")
        sign_tok, term = m.groups()
        if sign_tok is None and not first:
            raise CellSyntaxError(f"missing +/- between terms in {original!r}")
        sign = -1 if sign_tok == "-" else 1
        if term.isdigit():
            if pm and first:
                if sign_tok is not None:
                    raise CellSyntaxError(f"± must prefix an unsigned term in {original!r}")
                c0 = int(term)
            else:
                c0 += sign * int(term)
        else:
            if var is not None:
                raise CellSyntaxError(f"more than one variable in {original!r}")
            if term not in SLOTS:
                raise CellSyntaxError(f"unknown variable {term!r} in {original!r}")
            if pm and first:
                raise CellSyntaxError(f"± must prefix a constant in {original!r}")
            var = term
            c1 = sign
        first = False
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    if first:
        raise CellSyntaxError(f"empty cell {original!r}")
    return LinearCell(pm=pm, c0=c0, c1=c1, var=var)


def serialize_cell(cell: LinearCell) -> str:
    """Canonical cell text; parse_cell round-trips it."""
    if cell.var is None:
        return ("±" if cell.pm else "") + str(cell.c0)
    var_part = cell.var if cell.c1 > 0 else "-" + cell.var
    if cell.pm:
        return f"±{cell.c0}{'+' if cell.c1 > 0 else '-'}{cell.var}"
    if cell.c0 == 0:
        return var_part
    return f"{cell.c0}{'+' if cell.c1 > 0 else '-'}{cell.var}"


@dataclass(frozen=True)
class ParamRow:
    """One table row: six cells in the table's own (declared) column order."""

    table_id: int
    row: int
    column_order: tuple[str, ...]
    cells: tuple[LinearCell, ...]

    def __post_init__(self):
        if sorted(self.column_order) != sorted(SLOTS):
            raise HexError(f"bad column order {self.column_order}")
        if len(self.cells) != 6:
            raise HexError("a row needs exactly 6 cells")
        if len(self.variables()) > 2:
            raise HexError(f"row {self.table_id}.{self.row} has >2 free variables")

    def variables(self) -> tuple[str, ...]:
        seen = []
        for cell in self.cells:
            if cell.var is not None and cell.var not in seen:
                seen.append(cell.var)
        return tuple(seen)

    def pm_count(self) -> int:
        return sum(1 for cell in self.cells if cell.pm)

    def printed_cells(self) -> tuple[str, ...]:
        return tuple(serialize_cell(cell) for cell in self.cells)


def instantiate_row(
    row: ParamRow, assignment: Mapping[str, int]
) -> list[tuple[str, HexFilling]]:
    """Expand a row at a variable assignment into concrete fillings, one per
    combination of the +-/- branches of its pm cells (labelled like "+-+"),
    reordered from the printed column order into canonical slot order."""
    for var in row.variables():
        if var not in assignment:
            raise HexError(f"unbound variable {var!r} in row {row.table_id}.{row.row}")
    per_cell = [cell.values(assignment) for cell in row.cells]
    pm_positions = [i for i, cell in enumerate(row.cells) if cell.pm]
    out = []
    for choice in itertools.product(*(range(len(v)) for v in per_cell)):
        values = {row.column_order[i]: per_cell[i][choice[i]] for i in range(6)}
        branch = "".join("+" if choice[i] == 0 else "-" for i in pm_positions)
        out.append((branch, HexFilling(*(values[s] for s in SLOTS))))
    return out
