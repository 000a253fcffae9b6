import itertools

import pytest

from softmtl.filters import (classify_filter, crisp_decomposition_check,
                             enumerate_filters, generated_filter, is_filter,
                             labels_of, mask_of)
from softmtl.fixtures import load_fixture


def test_singleton_top_is_filter(a1):
    assert is_filter(a1, mask_of(a1, ["1"]))


def test_b_1_not_a_filter(a1):
    # b (.) b = a escapes the set
    assert not is_filter(a1, mask_of(a1, ["b", "1"]))


@pytest.mark.parametrize("name", ["a1", "a2", "a3", "b2"])
def test_full_carrier_is_filter(name):
    alg = load_fixture(name)
    assert is_filter(alg, (1 << alg.n) - 1)


def test_empty_set_rejected(a1):
    with pytest.raises(ValueError):
        is_filter(a1, 0)


@pytest.mark.parametrize("name", ["a1", "a2", "a3"])
def test_both_filter_definitions_agree_everywhere(name):
    # is_filter raises if the two definitional routes ever disagree
    alg = load_fixture(name)
    for mask in range(1, 1 << alg.n):
        is_filter(alg, mask)


def test_a1_filter_census(a1):
    expected = [{"1"}, {"a", "b", "1"}, {"0", "a", "b", "1"}]
    got = [set(labels_of(a1, m)) for m in enumerate_filters(a1)]
    assert got == expected


def test_two_element_census(b2):
    got = [set(labels_of(b2, m)) for m in enumerate_filters(b2)]
    assert got == [{"1"}, {"0", "1"}]


def test_a3_census_contains_1a(a3):
    assert mask_of(a3, ["1", "a"]) in enumerate_filters(a3)


def test_a1_abu_is_boolean(a1):
    cls = classify_filter(a1, mask_of(a1, ["a", "b", "1"]))
    assert cls.is_filter and cls.boolean


def test_a2_top_is_mv_only(a2):
    cls = classify_filter(a2, mask_of(a2, ["1"]))
    assert cls.is_filter and cls.mv and not cls.g and not cls.boolean
    # the recorded witnesses are genuine violations
    x, y = (a2.index(l) for l in cls.witnesses["g"])
    assert a2.res[a2.prod[x][x]][y] == a2.top  # premise in {1}
    assert a2.res[x][y] != a2.top              # conclusion escapes


def test_a3_1a_is_g_only(a3):
    cls = classify_filter(a3, mask_of(a3, ["1", "a"]))
    assert cls.is_filter and cls.g and not cls.mv and not cls.boolean
    assert cls.witnesses["mv"] == ("0", "b")


def test_non_filter_has_witness(a1):
    cls = classify_filter(a1, mask_of(a1, ["b", "1"]))
    assert not cls.is_filter
    assert cls.witnesses["filter"] == ("prod", "b", "b")


@pytest.mark.parametrize("name", ["a1", "a2", "a3", "b2"])
def test_filters_contain_top_and_respect_flags(name):
    alg = load_fixture(name)
    for m in enumerate_filters(alg):
        assert m >> alg.top & 1
        cls = classify_filter(alg, m)
        assert cls.is_filter
        # boolean implies both decomposition components
        if cls.boolean:
            assert cls.g and cls.mv


@pytest.mark.parametrize("name", ["a1", "a2", "a3", "b2"])
def test_crisp_decomposition(name):
    assert crisp_decomposition_check(load_fixture(name)) == []


def test_generated_filter_examples(a1, a3):
    assert set(labels_of(a1, generated_filter(a1, mask_of(a1, ["b"])))) == {"a", "b", "1"}
    assert set(labels_of(a1, generated_filter(a1, mask_of(a1, ["1"])))) == {"1"}
    got = generated_filter(a3, mask_of(a3, ["c"]))
    assert got & mask_of(a3, ["c", "a", "b", "1"]) == mask_of(a3, ["c", "a", "b", "1"])
    assert is_filter(a3, got)


@pytest.mark.parametrize("name", ["a1", "a2", "a3"])
def test_generated_filter_is_a_closure_operator(name):
    alg = load_fixture(name)
    masks = list(range(1, 1 << alg.n))
    for s in masks:
        g = generated_filter(alg, s)
        assert g & s == s                       # extensive
        assert generated_filter(alg, g) == g    # idempotent
        assert is_filter(alg, g)
    for s, t in itertools.combinations(masks, 2):
        if s & t == s:  # s subset of t
            gs, gt = generated_filter(alg, s), generated_filter(alg, t)
            assert gs & gt == gs                # monotone
    for f in enumerate_filters(alg):
        assert generated_filter(alg, f) == f    # filters are fixpoints


def test_enumeration_cap(a3):
    with pytest.raises(ValueError, match="cap"):
        enumerate_filters(a3, cap=4)
