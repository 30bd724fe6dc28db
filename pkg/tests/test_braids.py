import random

import pytest

from artinhexa.braids import (
    CONNECTED_SUM,
    ESSENTIAL_TORUS,
    HYPERBOLIC,
    SPLITTABLE,
    BraidError,
    PureBraid,
    classify,
    format_blocks,
    normalize,
    parse_blocks,
    parse_braid_word,
    rho_torus_witness,
    to_braid_word,
)
from artinhexa.freeprod import rho


def test_normalize_merges_across_zero():
    b = normalize(PureBraid(((2, 0), (3, 1)), 1))
    assert b == PureBraid(((5, 1),), 1)


def test_normalize_drops_zero_blocks():
    assert normalize(PureBraid(((0, 0),), 0)) == PureBraid((), 0)
    assert normalize(PureBraid(((1, 2),), -1)) == PureBraid(((1, 2),), -1)


def test_normalize_merges_zero_sigma1():
    assert normalize(PureBraid(((1, 2), (0, 3)), 0)) == PureBraid(((1, 5),), 0)


def test_normalize_preserves_expansion():
    rng = random.Random(41)
    for _ in range(300):
        blocks = tuple(
            (rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(rng.randint(0, 4))
        )
        b = PureBraid(blocks, rng.randint(-2, 2))
        letters_reduce = lambda ls: _reduce_letters(ls)
        assert letters_reduce(to_braid_word(b)) == letters_reduce(to_braid_word(normalize(b)))


def _reduce_letters(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def test_to_braid_word_examples():
    assert to_braid_word(PureBraid(((1, 1),), 0)) == (1, 1, 2, 2)
    assert to_braid_word(PureBraid((), 1)) == (1, 2, 1, 1, 2, 1)
    assert to_braid_word(PureBraid(((-1, 0),), 0)) == (-1, -1)


def test_to_braid_word_length_formula():
    rng = random.Random(43)
    for _ in range(100):
        blocks = tuple(
            (rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(rng.randint(0, 3))
        )
        e = rng.randint(-3, 3)
        expected = sum(2 * abs(x) + 2 * abs(y) for x, y in blocks) + 6 * abs(e)
        assert len(to_braid_word(PureBraid(blocks, e))) == expected


def test_classify_examples():
    c = classify(PureBraid(((1, 1),), 5))
    assert c.tag == ESSENTIAL_TORUS and c.clauses == ("Thm4.2-ii",)

    c = classify(PureBraid(((2, 3),), 0))
    assert c.tag == CONNECTED_SUM and c.clauses == ("Thm4.2-iii",)

    assert classify(PureBraid(((2, 3),), 1)).tag == HYPERBOLIC

    c = classify(PureBraid(((1, 1), (1, 1)), 7))
    assert c.tag == ESSENTIAL_TORUS and c.clauses == ("Thm4.6-iii",)


def test_classify_torus_beats_connected_sum_on_overlap():
    # e1 = f1 = 1 with e = 0 satisfies both clauses; torus wins, both recorded
    c = classify(PureBraid(((1, 1),), 0))
    assert c.tag == ESSENTIAL_TORUS
    assert set(c.clauses) == {"Thm4.2-ii", "Thm4.2-iii"}


def test_classify_zero_exponent_and_degenerate_cases():
    assert classify(PureBraid((), 0)).tag == SPLITTABLE
    assert classify(PureBraid((), 2)).tag == ESSENTIAL_TORUS
    assert classify(PureBraid(((3, 0),), 0)).tag == SPLITTABLE
    assert classify(PureBraid(((3, 0),), 2)).tag == ESSENTIAL_TORUS
    assert classify(PureBraid(((0, -2),), 4)).tag == ESSENTIAL_TORUS
    assert classify(PureBraid(((-1, -1), (-1, -1)), 1)).clauses == ("Thm4.6-iv",)


def test_classify_invariant_under_rotation():
    rng = random.Random(47)
    for _ in range(1000):
        n = rng.randint(1, 4)
        blocks = [(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(n)]
        e = rng.randint(-2, 2)
        base = classify(PureBraid(tuple(blocks), e))
        k = rng.randrange(n)
        rotated = blocks[k:] + blocks[:k]
        assert classify(PureBraid(tuple(rotated), e)) == base


def test_classify_invariant_under_normalize():
    rng = random.Random(53)
    for _ in range(300):
        blocks = tuple(
            (rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(rng.randint(0, 4))
        )
        b = PureBraid(blocks, rng.randint(-2, 2))
        assert classify(b) == classify(normalize(b))


def test_rho_torus_witness_examples():
    for e in (-2, 0, 3):
        hit = rho_torus_witness(PureBraid(((1, 1),), e))
        assert hit is not None
    assert rho_torus_witness(PureBraid(((-1, -1),), 5)) is not None
    assert rho_torus_witness(PureBraid(((2, 1),), 0)) is None


def test_rho_torus_witness_rejects_zero_blocks():
    with pytest.raises(BraidError):
        rho_torus_witness(PureBraid(((1, 0),), 0))


def test_witness_agrees_with_classifier_small_grid():
    import itertools

    for n in (1, 2):
        for combo in itertools.product([1, -1, 2, -2], repeat=2 * n):
            blocks = tuple((combo[2 * i], combo[2 * i + 1]) for i in range(n))
            for e in (-1, 0, 2):
                b = PureBraid(blocks, e)
                witness = rho_torus_witness(b) is not None
                c = classify(b)
                fires = c.tag == ESSENTIAL_TORUS and any(
                    cl in ("Thm4.2-ii", "Thm4.6-iii", "Thm4.6-iv") for cl in c.clauses
                )
                assert witness == fires, (blocks, e)


def test_rho_of_expansion_matches_blockwise():
    from artinhexa.freeprod import fp_concat, fp_power

    s1, s2 = rho([1]), rho([2])
    rng = random.Random(59)
    for _ in range(200):
        blocks = tuple(
            (rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(rng.randint(0, 3))
        )
        e = rng.randint(-2, 2)
        b = PureBraid(blocks, e)
        blockwise = fp_concat(
            *[fp_concat(fp_power(s1, 2 * x), fp_power(s2, 2 * y)) for x, y in blocks]
        )
        assert rho(to_braid_word(b)) == blockwise  # full twist dies under rho


def test_block_text_round_trip():
    assert parse_blocks("1,1") == ((1, 1),)
    assert parse_blocks("2,-3;0,1") == ((2, -3), (0, 1))
    assert parse_blocks("") == ()
    assert format_blocks(((2, -3), (0, 1))) == "2,-3;0,1"
    with pytest.raises(BraidError):
        parse_blocks("1")
    with pytest.raises(BraidError):
        parse_blocks("a,b")


def test_parse_braid_word():
    assert parse_braid_word("s1*s2^-1*s1") == (1, -2, 1)
    assert parse_braid_word("s2^3") == (2, 2, 2)
    assert parse_braid_word("1") == ()
    with pytest.raises(BraidError):
        parse_braid_word("s3")
