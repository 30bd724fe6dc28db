import itertools
import random

import pytest

from artinhexa.artin import (
    ArtinCheck,
    Presentation,
    PresentationError,
    RatGroupWarning,
    SurgeryParams,
    gen_from_hex,
    gen_from_params,
    hex_consistency,
    rat_group,
    surgery_presentation,
    verify_artin,
)
from artinhexa.hexa import HexFilling, to_surgery
from artinhexa.words import IDENTITY, abelianize, parse_word, reduce_word


def params(m, n, p, e, e1, f1):
    return gen_from_params(SurgeryParams(m, n, p, e, e1, f1))


def test_gen_from_params_power_case():
    pres = params(3, -2, 5, 0, 0, 0)
    assert pres.serialized_relators() == ("x1^3", "x2^-2", "x3^5")


def test_gen_from_params_substitution_case():
    # m=n=1, p=0, f1=1: direct substitution into the relator formulas
    pres = params(1, 1, 0, 0, 0, 1)
    assert pres.serialized_relators() == ("x1", "x2*x3", "x3^-1*x2*x3")
    check = verify_artin(pres)
    assert check.w and not check.f


def test_gen_from_params_full_twist_case():
    pres = params(1, 1, 1, 1, 0, 0)
    assert pres.serialized_relators() == ("x1*x2*x3",) * 3


def test_gen_from_hex_table5_row1():
    pres = gen_from_hex(HexFilling(1, 1, 1, 0, 0, 0))
    assert pres.serialized_relators() == ("x1^-1", "x2^-1*x3^-1*x2^-1", "x3^-1*x2^-1")


def test_gen_from_hex_zero_filling():
    pres = gen_from_hex(HexFilling(0, 0, 0, 0, 0, 0))
    assert pres.relators == (IDENTITY,) * 3


def test_gen_from_hex_table5_row14_shape():
    pres = gen_from_hex(HexFilling(1, 1, 0, 0, 1, 0))
    assert pres.serialized_relators() == ("x1^-1", "x2^-1", "x3^-1")


def test_presentation_rank_check():
    with pytest.raises(PresentationError):
        Presentation(2, (parse_word("x3"),))


def test_verify_artin_powers():
    pres = Presentation(3, (parse_word("x1^4"), parse_word("x2^-2"), parse_word("x3")))
    assert verify_artin(pres) == ArtinCheck(w=True, f=True)


def test_verify_artin_figure6_open_book():
    pres = Presentation(
        3,
        (
            parse_word("x1*x2*x3*x1*x2*x1"),
            parse_word("x1*x2*x3*x1*x2^2"),
            parse_word("x1*x2*x3^2"),
        ),
    )
    check = verify_artin(pres)
    assert check.f
    assert not check.w


def test_verify_artin_rank_mismatch():
    with pytest.raises(PresentationError):
        verify_artin(Presentation(3, (parse_word("x1"),)))


def test_verify_artin_invariant_under_reduction():
    # handing unreduced relator data to the constructor is impossible, so
    # check the equivalent: reduced forms of random raw syllables verify
    # identically however they were assembled
    rng = random.Random(79)
    for _ in range(50):
        raw = [
            [(rng.randint(1, 3), rng.choice([-2, -1, 1, 2])) for _ in range(6)]
            for _ in range(3)
        ]
        pres = Presentation(3, tuple(reduce_word(r) for r in raw))
        doubled = [r + [(1, 1), (1, -1)] for r in raw]
        pres2 = Presentation(3, tuple(reduce_word(r) for r in doubled))
        assert verify_artin(pres) == verify_artin(pres2)


def test_w_identity_exhaustive_small():
    for combo in itertools.product(range(-1, 2), repeat=6):
        assert verify_artin(gen_from_params(SurgeryParams(*combo))).w


def test_w_identity_random_samples():
    rng = random.Random(83)
    for _ in range(300):
        combo = [rng.randint(-4, 4) for _ in range(6)]
        assert verify_artin(gen_from_params(SurgeryParams(*combo))).w


def test_w_abelianization_sanity():
    # both sides of the W identity abelianize to (1, 1, 1): conjugation dies
    rng = random.Random(89)
    for _ in range(50):
        pres = gen_from_params(SurgeryParams(*(rng.randint(-3, 3) for _ in range(6))))
        total = (0, 0, 0)
        for i in range(1, 4):
            total = tuple(a + b for a, b in zip(total, abelianize(parse_word(f"x{i}"), 3)))
        assert total == (1, 1, 1)


def test_hex_params_consistency_sampled():
    rng = random.Random(97)
    for _ in range(400):
        h = HexFilling(*(rng.randint(-3, 3) for _ in range(6)))
        assert hex_consistency(h)


def test_surgery_presentation_matches_hex_route():
    h = HexFilling(2, -1, 3, -2, 0, 1)
    assert surgery_presentation(to_surgery(h)).relators == gen_from_hex(h).relators


def test_rat_group_drops_last_relator():
    pres = gen_from_hex(HexFilling(1, 1, 0, 0, 1, 0))
    rat = rat_group(pres, certified=True)
    assert rat.rank == 3
    assert rat.serialized_relators() == ("x1^-1", "x2^-1")


def test_rat_group_table5_row1():
    pres = gen_from_hex(HexFilling(1, 1, 1, 0, 0, 0))
    rat = rat_group(pres, certified=True)
    assert rat.serialized_relators() == ("x1^-1", "x2^-1*x3^-1*x2^-1")


def test_rat_group_warns_on_non_artin_input():
    pres = Presentation(3, (parse_word("x1*x2"), parse_word("x2*x3"), parse_word("x3*x1")))
    check = verify_artin(pres)
    assert not (check.w or check.f)
    with pytest.warns(RatGroupWarning):
        out = rat_group(pres)
    assert len(out.relators) == 2


def test_rat_group_no_warning_when_certified():
    import warnings

    pres = Presentation(3, (parse_word("x1*x2"), parse_word("x2*x3"), parse_word("x3*x1")))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        rat_group(pres, certified=True)


def test_rat_group_requires_a_relator():
    with pytest.raises(PresentationError):
        rat_group(Presentation(3, ()), certified=True)
