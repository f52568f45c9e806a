"""Generated closure-rule catalog and inequality templates."""

from __future__ import annotations

from fractions import Fraction

import pytest

from unitfrac import params as P
from unitfrac.catalog import (
    FAMILY_NAMES,
    build_inequalities,
    build_rules,
    evaluate_rule,
    export_rules,
    family_counts,
    inequality_index,
    rule_index,
)
from unitfrac.decomposition import decompose
from unitfrac.enumeration import enumerate_representations
from unitfrac.errors import InputError


def test_rule_count_and_family_sizes():
    rules = build_rules()
    assert len(rules) == 96
    assert family_counts(rules) == (55, 6, 4, 12, 4, 6, 3, 6)
    assert sorted(FAMILY_NAMES) == [1, 2, 3, 4, 5, 6, 7, 8]
    # rules come out grouped by family, in family order
    families = [r.family for r in rules]
    assert families == sorted(families)


def test_rule_keys_unique_and_indexable():
    rules = build_rules()
    keys = [r.key for r in rules]
    assert len(set(keys)) == 96
    index = rule_index()
    for rule in rules:
        assert index[rule.key] == rule


def test_known_rule_shapes():
    index = rule_index()
    assert index["zpair:z23"].equation == (
        "z23*x23 = (n/(n2*d23))*x13*x34*x134 + (n/(n3*d23))*x12*x24*x124")
    assert index["tprod:z234"].equation == (
        "m*x12*x13*x14*x123*x124*x134*x1234 = d234*z234 + (n/n1)")
    assert index["split:z12+z34"].equation == (
        "m*x13*x14*x23*x24*x123*x124*x134*x234*x1234 = d12*z12 + d34*z34")
    assert index["zprod:z134*z234"].inputs == frozenset(
        {"z34", "x12", "x123", "x124", "x1234"})
    assert index["zprod:z134*z234"].outputs == frozenset({"z134", "z234"})


def test_factor_family_structure():
    rules = [r for r in build_rules() if r.family == 1]
    assert len(rules) == 55  # one per unordered pair of the 11 x-parameters
    for rule in rules:
        assert len(rule.outputs) == 2
        assert rule.inputs == frozenset(P.X_PARAMS) - rule.outputs


def test_all_rules_hold_on_enumerated_solutions():
    for convention in P.CONVENTIONS:
        rules = build_rules(convention)
        for m, n in ((1, 1), (3, 7), (1, 2)):
            for sol in enumerate_representations(m, n, 4).solutions[:25]:
                try:
                    dec = decompose(tuple(sol), Fraction(m, n), convention)
                except ArithmeticError:
                    continue  # no decomposition under this convention
                env = dec.env()
                for rule in rules:
                    assert rule.evaluate(env), (convention, tuple(sol),
                                                rule.key)


def test_rule_check_on_worked_example():
    dec = decompose((2, 4, 6, 12), 1)
    index = rule_index()
    left, parts = index["tprod:z234"].sides(dec.env())
    assert (left, tuple(parts)) == (2, (1, 1))
    assert evaluate_rule(index["zpair:z34"], dec) is True


def test_conventions_differ_only_where_pair_quotients_appear():
    std = {r.key: r.equation for r in build_rules("standard")}
    red = {r.key: r.equation for r in build_rules("reduced")}
    assert set(std) == set(red)
    changed = {k for k in std if std[k] != red[k]}
    assert changed  # the pair-quotient rescaling is visible somewhere
    pair_zs = {"z12", "z13", "z14", "z23", "z24", "z34"}
    index = rule_index()
    for key in changed:
        rule = index[key]
        assert (rule.inputs | rule.outputs) & pair_zs, key


def test_export_format():
    text = export_rules(build_rules())
    lines = text.strip().split("\n")
    assert len(lines) == 96
    first = lines[0].split("|")
    assert first[0] == "1"
    assert set(first[1].split(",")) | set(first[2].split(",")) == set(
        P.X_PARAMS)
    for line in lines:
        family, inputs, outputs = line.split("|")
        assert 1 <= int(family) <= 8
        assert inputs and outputs


def test_inequality_templates():
    templates = build_inequalities()
    assert len(templates) == 13
    assert [t.key for t in templates] == [
        "z12", "z13", "z14", "z23", "z24", "z34",
        "z123", "z124", "z134", "z234", "t1", "t2", "t3"]
    index = inequality_index()
    t1, t2, t3 = index["t1"], index["t2"], index["t3"]
    assert (t1.n_exp, t1.m_exp, t1.constant) == (1, -1, 4)
    assert (t2.n_exp, t2.m_exp, t2.constant) == (2, -1, 12)
    assert (t3.n_exp, t3.m_exp, t3.constant) == (4, -2, 96)
    # the pair template for indices (1,4) uses the x-parameters containing
    # 4 but not 1 on the right
    z14 = index["z14"]
    assert z14.rhs == {"x24": 1, "x34": 1, "x234": 1}
    z23 = index["z23"]
    assert z23.lhs == {"z23": 1, "x23": 1}
    assert z23.pattern == {"n2": 1, "d23": 1}
    assert z23.constant == 2 and z23.n_exp == 1 and z23.m_exp == 0


def test_inequalities_hold_on_enumerated_solutions():
    templates = build_inequalities()
    for m, n in ((1, 1), (3, 7)):
        for sol in enumerate_representations(m, n, 4).solutions[:30]:
            env = decompose(tuple(sol), Fraction(m, n)).env()
            for template in templates:
                lhs, rhs = template.evaluate_sides(env)
                assert lhs <= rhs, (tuple(sol), template.key)
                assert template.evaluate(env)


def test_inequality_worked_values():
    env = decompose((2, 4, 6, 12), 1).env()
    index = inequality_index()
    assert index["z234"].evaluate_sides(env) == (2, 3)
    assert index["t1"].evaluate_sides(env) == (2, 4)


def test_convention_validation():
    with pytest.raises(InputError):
        build_rules("other")
