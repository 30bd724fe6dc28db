import random

from artinhexa.artin import Presentation, gen_from_hex
from artinhexa.hexa import HexFilling
from artinhexa.triviality import (
    abelian_invariants,
    replay,
    simplify,
    smith_invariants,
)
from artinhexa.words import concat, conjugate, invert, parse_word, reduce_word


def pres(*texts, rank=3):
    return Presentation(rank, tuple(parse_word(t) for t in texts))


# ---- Smith normal form -------------------------------------------------------

def test_smith_known_matrix():
    # classic example with chain 1 | 10 | 30
    m = [[12, 6, 4], [3, 9, 6], [2, 16, 14]]
    assert smith_invariants(m, 3) == (1, 10, 30)


def test_smith_zero_and_identity():
    assert smith_invariants([[0, 0], [0, 0]], 2) == (0, 0)
    assert smith_invariants([[1, 0], [0, 1]], 2) == (1, 1)
    assert smith_invariants([], 3) == ()


def test_smith_rank_deficient():
    assert smith_invariants([[1, 1, 1], [1, 1, 1], [1, 1, 1]], 3) == (1, 0, 0)


def test_smith_against_sympy_oracle():
    sympy = __import__("sympy")
    from sympy.matrices.normalforms import smith_normal_form

    rng = random.Random(101)
    for _ in range(120):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        got = smith_invariants([r[:] for r in m], cols)
        snf = smith_normal_form(sympy.Matrix(m))
        expected = tuple(abs(int(snf[i, i])) for i in range(min(rows, cols)))
        assert got == expected, m


def test_smith_divisor_product_is_determinant():
    rng = random.Random(103)
    for _ in range(100):
        m = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        divisors = smith_invariants([r[:] for r in m], 3)
        product = 1
        for d in divisors:
            product *= d
        assert product == abs(det)


# ---- abelian invariants --------------------------------------------------------

def test_abelian_invariants_table5_row1():
    p = pres("x1^-1", "x2^-1*x3^-1*x2^-1", "x3^-1*x2^-1")
    assert abelian_invariants(p) == (1, 1, 1)


def test_abelian_invariants_torsion():
    assert abelian_invariants(pres("x1^2", "x2", "x3")) == (1, 1, 2)


def test_abelian_invariants_free():
    assert abelian_invariants(pres("1", "1", "1")) == (0, 0, 0)
    assert abelian_invariants(Presentation(3, ())) == (0, 0, 0)


def test_abelian_invariants_deficiency():
    assert abelian_invariants(pres("x1*x2*x3", "x1*x2*x3", "x1*x2*x3")) == (1, 0, 0)


def test_invariants_stable_under_nielsen_style_moves():
    rng = random.Random(107)
    for _ in range(60):
        relators = [
            reduce_word(
                [(rng.randint(1, 3), rng.choice([-2, -1, 1, 2])) for _ in range(5)]
            )
            for _ in range(3)
        ]
        base = abelian_invariants(Presentation(3, tuple(relators)))
        g = reduce_word([(rng.randint(1, 3), rng.choice([-1, 1])) for _ in range(4)])
        i, j = rng.sample(range(3), 2)

        conjugated = list(relators)
        conjugated[i] = conjugate(relators[i], g)
        assert abelian_invariants(Presentation(3, tuple(conjugated))) == base

        inverted = list(relators)
        inverted[i] = invert(relators[i])
        assert abelian_invariants(Presentation(3, tuple(inverted))) == base

        multiplied = list(relators)
        multiplied[i] = concat(relators[i], relators[j])
        assert abelian_invariants(Presentation(3, tuple(multiplied))) == base


# ---- simplify -------------------------------------------------------------------

def test_simplify_table5_row1_trivial():
    verdict = simplify(pres("x1^-1", "x2^-1*x3^-1*x2^-1", "x3^-1*x2^-1"))
    assert verdict.tag == "Trivial"
    assert verdict.budget_spent <= 10


def test_simplify_refutes_by_invariants():
    verdict = simplify(pres("x1^2", "x2", "x3"))
    assert verdict.tag == "NotTrivial"
    assert verdict.divisors == (1, 1, 2)
    assert verdict.budget_spent == 0


def test_simplify_repeated_relator_not_trivial():
    verdict = simplify(pres("x1*x2*x3", "x1*x2*x3", "x1*x2*x3"))
    assert verdict.tag == "NotTrivial"
    assert verdict.divisors == (1, 0, 0)


def test_simplify_budget_exhaustion_is_unknown():
    # a trivial-group filling whose search needs more than two moves
    p = gen_from_hex(HexFilling(1, -1, -2, -2, -3, 0))
    assert simplify(p).tag == "Trivial"
    verdict = simplify(p, budget=2)
    assert verdict.tag == "Unknown"
    assert verdict.budget_spent == 2


def test_simplify_never_trivial_with_nontrivial_homology():
    rng = random.Random(109)
    for _ in range(100):
        relators = tuple(
            reduce_word(
                [(rng.randint(1, 3), rng.choice([-2, -1, 1, 2])) for _ in range(4)]
            )
            for _ in range(3)
        )
        p = Presentation(3, relators)
        verdict = simplify(p, budget=200)
        if any(d != 1 for d in abelian_invariants(p)):
            assert verdict.tag == "NotTrivial"


def test_trivial_certificates_replay_to_empty():
    # instantiated table rows present the trivial group, so most reach
    # Trivial; every certificate must replay to the empty presentation
    from artinhexa.hexa import instantiate_row
    from artinhexa.pipeline import assignments_for
    from artinhexa.tables import load_table

    replayed = 0
    for row in load_table(1):
        for assignment in assignments_for(row.variables(), (-1, 1)):
            for _, h in instantiate_row(row, dict(assignment)):
                p = gen_from_hex(h)
                verdict = simplify(p)
                if verdict.tag == "Trivial":
                    assert replay(p, verdict.moves) == (0, ())
                    replayed += 1
    assert replayed > 80


def test_simplify_deterministic():
    p = gen_from_hex(HexFilling(0, 0, 2, -1, -1, 1))
    a = simplify(p, budget=500)
    b = simplify(p, budget=500)
    assert a == b


def test_verdict_json_shape():
    verdict = simplify(pres("x1", "x2", "x3"))
    payload = verdict.as_json_dict()
    assert set(payload) == {"tag", "divisors", "moves", "budget_spent"}
    assert payload["tag"] == "Trivial"
    assert all(isinstance(m, list) for m in payload["moves"])
