"""Pattern / relative-gcd decomposition of 4-term solutions."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest

from unitfrac.decomposition import (
    INCOMPARABLE_PAIRS,
    decompose,
    pattern_of,
    reconstruct,
    relative_gcds,
    verify,
)
from unitfrac.enumeration import enumerate_representations
from unitfrac.errors import InputError, IntegralityError


def test_pattern_of():
    assert pattern_of((2, 4, 6, 12), 1) == (1, 1, 1, 1)
    assert pattern_of((4, 8, 10, 40), 2) == (2, 2, 2, 2)
    assert pattern_of((3, 12, 14, 28), 7) == (1, 1, 7, 7)


def test_relative_gcds_reconstruct_cofactors():
    x = relative_gcds((2, 4, 6, 12))
    # every cofactor is the product of its containing x-parameters
    for i, t in enumerate((2, 4, 6, 12), start=1):
        product = 1
        for name, value in x.items():
            if str(i) in name[1:]:
                product *= value
        assert product == t
    assert x["x1"] == x["x2"] == x["x3"] == x["x4"] == 1


def test_incomparable_pairs_count():
    assert len(INCOMPARABLE_PAIRS) == 33


def test_worked_example():
    dec = decompose((2, 4, 6, 12), 1)
    assert dec.m == 1 and dec.n == 1
    assert dec.pattern == (1, 1, 1, 1)
    assert dec.t == (2, 4, 6, 12)
    assert dec.terms == (6, 3, 2, 1)
    assert dec.m * dec.master_product() == sum(dec.terms) == 12
    assert dec.x["x24"] == 2 and dec.x["x34"] == 3 and dec.x["x1234"] == 2
    assert dec.z["z34"] == 1 and dec.z["z234"] == 1 and dec.z["z123"] == 11
    assert reconstruct(dec) == (2, 4, 6, 12)


def test_worked_example_verify_report():
    report = verify(decompose((2, 4, 6, 12), 1))
    assert report.passed
    detail = {c.name: c.detail for c in report.checks}
    assert detail["master"] == "12 = 6 + 3 + 2 + 1"
    assert detail["ineq:z234"] == "2 <= 3"
    assert detail["ineq:t1"] == "2 <= 4"


def test_both_conventions_on_q_half_solution():
    std = decompose((4, 8, 10, 40), Fraction(1, 2))
    assert std.pattern == (2, 2, 2, 2)
    assert std.z["z12"] == 3
    assert reconstruct(std) == (4, 8, 10, 40)
    # the further-divided pair quotient is 3/5 here: not an integer
    with pytest.raises(IntegralityError) as err:
        decompose((4, 8, 10, 40), Fraction(1, 2), convention="reduced")
    assert err.value.param == "z12"
    assert (err.value.numerator, err.value.denominator) == (15, 25)


def test_reduced_convention_when_integral():
    std = decompose((2, 4, 6, 12), 1)
    red = decompose((2, 4, 6, 12), 1, convention="reduced")
    assert red.t == std.t and red.x == std.x
    for pair, (i, j, k, l) in (("z12", (1, 2, 3, 4)), ("z34", (3, 4, 1, 2))):
        kl = "x%d%d" % (min(k, l), max(k, l))
        assert std.z[pair] == red.z[pair] * std.x[kl]
    # triple quotients do not depend on the convention
    for name in ("z123", "z124", "z134", "z234"):
        assert red.z[name] == std.z[name]


def test_roundtrip_over_enumerated_solutions():
    for m, n in ((1, 1), (3, 7), (4, 9), (5, 6)):
        for sol in enumerate_representations(m, n, 4).solutions:
            dec = decompose(tuple(sol), Fraction(m, n))
            assert reconstruct(dec) == tuple(sol)
            assert dec.m * dec.master_product() == sum(dec.terms)
            assert verify(dec).passed


def test_env_contains_all_symbols():
    env = decompose((2, 4, 6, 12), 1).env()
    for key in ("m", "n", "mT", "n1", "nn1", "d12", "d234", "x12", "x1234",
                "z12", "z234", "term1", "term4"):
        assert key in env
    assert env["mT"] == sum(env["term%d" % i] for i in (1, 2, 3, 4))


def test_coprimality_of_incomparable_pairs_holds_on_samples():
    for m, n in ((1, 1), (2, 5), (3, 4)):
        for sol in enumerate_representations(m, n, 4).solutions[:40]:
            dec = decompose(tuple(sol), Fraction(m, n))
            for a, b in INCOMPARABLE_PAIRS:
                assert gcd(dec.x[a], dec.x[b]) == 1


def test_input_validation():
    with pytest.raises(InputError):
        decompose((4, 2, 6, 12), 1)  # not nondecreasing
    with pytest.raises(InputError):
        decompose((2, 4, 6), 1)  # wrong arity
    with pytest.raises(InputError):
        decompose((2, 4, 6, 13), 1)  # wrong sum
    with pytest.raises(InputError):
        decompose((2, 4, 6, 12), 1, convention="other")
