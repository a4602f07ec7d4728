"""Family generators, text round trips, illustrated witnesses, recognition."""

import random

import pytest

from paircoal import (
    are_isomorphic,
    classify_vertices,
    girth,
    is_pc_partition,
    mask_of,
    pc_number,
    structure_class,
)
from paircoal.families import (
    UNICYCLIC_PC_N2_KINDS,
    FamilyError,
    FamilySpec,
    family_order,
    format_family,
    generate,
    illustrated_partition,
    parse_family,
    recognize,
)

ALL_TEXT_FORMS = [
    "P(6)", "C(8)", "K(5)", "K(2,3)", "K(1,2,2)", "Star(5)", "S(2,3)",
    "SD(1,2)", "T(3)", "B", "B1(2)", "B2(1,1)", "D1(2)", "D2(1,1)",
    "E1(1,2)", "E2(1,1,1)", "E3(1)", "E4(2,1)", "E5(1)", "E6(2)",
    "E7(2,3)", "NoPcTree", "AttachLeaves(P(4);2,2,2,2)",
]


def test_text_round_trip_and_orders():
    for text in ALL_TEXT_FORMS:
        fs = parse_family(text)
        assert format_family(fs) == text
        assert generate(fs).n == family_order(fs)


def test_parameter_validation():
    for bad in ["C(2)", "B1(0)", "E7(0,1)", "S(0,3)", "T(0)", "Star(1)",
                "Nope(3)", "AttachLeaves(P(2);1,2)", "K()"]:
        with pytest.raises(FamilyError):
            parse_family(bad)


def test_family_shapes(path, cycle):
    assert are_isomorphic(generate(parse_family("SD(2,2)")), generate(parse_family("T(2)")))
    assert are_isomorphic(generate(parse_family("AttachLeaves(P(2);2,2)")),
                          generate(parse_family("S(2,2)")))
    assert are_isomorphic(generate(parse_family("P(4)")), generate(parse_family("S(1,1)")))
    assert are_isomorphic(generate(parse_family("P(5)")), generate(parse_family("SD(1,1)")))
    assert girth(generate(parse_family("B2(1,1)"))) == 5
    d2 = generate(parse_family("D2(1,1)"))
    assert d2.n == 6 and girth(d2) == 4
    assert generate(parse_family("B1(3)")).n == 8
    assert generate(parse_family("D2(2,3)")).n == 9
    assert generate(parse_family("E4(2,3)")).n == 9
    for text in ["B", "B1(1)", "D1(1)", "E1(1,1)", "E7(1,2)"]:
        assert structure_class(generate(parse_family(text))).unicyclic
    g = generate(parse_family("NoPcTree"))
    cls = classify_vertices(g)
    assert g.n == 15
    assert cls.strong_support == mask_of([0, 1, 2, 3])
    assert sorted(c for _, c in cls.leaf_counts) == [2, 2, 3, 4]


def test_girth_by_catalogue():
    assert girth(generate(parse_family("B1(2)"))) == 5
    assert girth(generate(parse_family("D1(2)"))) == 4
    assert girth(generate(parse_family("E6(2)"))) == 3


def test_illustrated_partitions_are_valid():
    cases = {
        "B": 3, "B1(1)": 4, "B2(1,2)": 6, "D1(2)": 4, "D2(1,1)": 4,
        "E1(2,1)": 4, "E2(1,2,1)": 5, "E3(2)": 4, "E4(1,2)": 5,
        "E5(2)": 5, "E6(1)": 4, "E7(1,1)": 5,
        "S(1,3)": 4, "S(4,1)": 5, "SD(2,2)": 5,
        "P(2)": 2, "P(4)": 2, "P(5)": 3, "P(6)": 3, "P(9)": 3, "P(10)": 3,
        "C(6)": 3, "C(8)": 4, "C(12)": 4,
        "Star(7)": 7, "K(4)": 4, "K(2,2)": 4, "K(1,1,3)": 5,
        "T(1)": 3, "T(3)": 3, "T(5)": 3,
    }
    for text, order in cases.items():
        fs = parse_family(text)
        g = generate(fs)
        part = illustrated_partition(fs)
        assert part is not None, text
        assert part.order == order, text
        assert is_pc_partition(g, part).valid, text
    assert illustrated_partition(parse_family("NoPcTree")) is None
    assert illustrated_partition(parse_family("T(4)")) is None


def test_catalogue_members_reach_n_minus_2():
    # forward direction of the unicyclic characterization, small instances
    texts = ["B", "B1(1)", "B1(2)", "B2(1,1)", "B2(2,1)", "D1(1)", "D1(2)",
             "D2(1,1)", "D2(2,1)", "E1(1,1)", "E1(2,1)", "E2(1,1,1)",
             "E3(1)", "E3(2)", "E4(1,1)", "E5(1)", "E5(2)", "E6(1)",
             "E6(2)", "E7(1,1)"]
    for text in texts:
        g = generate(parse_family(text))
        assert pc_number(g).pc == g.n - 2, text


def test_every_catalogue_instance_up_to_order_12_has_pc_n_minus_2():
    from paircoal.families import _param_candidates
    from paircoal.suites import pc_many

    small, large = [], []
    for kind in UNICYCLIC_PC_N2_KINDS:
        for n in range(5, 13):
            for params in _param_candidates(kind, n):
                g = generate(FamilySpec(kind, params))
                (small if g.n <= 9 else large).append(g)
    # all members keep a leaf except the bare 5-cycle, so the support-block
    # search covers the large ones
    values = pc_many(small) + pc_many(large, lemma_pruning=True)
    for g, pc in zip(small + large, values):
        assert pc == g.n - 2, (g.label, pc)


def test_recognize_round_trip_small_orders():
    # every parameter choice of every kind up to order 14 comes back intact
    from paircoal.families import _param_candidates

    kinds = ("P", "C", "K", "Star", "KB", "S", "SD", "T") + UNICYCLIC_PC_N2_KINDS
    for kind in kinds:
        for n in range(1, 15):
            for params in _param_candidates(kind, n):
                fs = FamilySpec(kind, params)
                got = recognize(generate(fs), (kind,))
                assert got == fs, (kind, params, got)


def test_recognize_after_relabeling():
    rng = random.Random(77)
    for text in ["E7(2,1)", "B2(1,3)", "D2(2,2)", "SD(2,3)", "S(1,4)",
                 "T(2)", "K(2,4)", "K(1,1,2)", "NoPcTree"]:
        fs = parse_family(text)
        g = generate(fs)
        perm = list(range(g.n))
        rng.shuffle(perm)
        got = recognize(g.relabel(perm))
        assert got == fs, (text, got)
        got_narrow = recognize(g.relabel(perm), (fs.kind,))
        assert got_narrow == fs, (text, got_narrow)


def test_recognize_negative_and_priority(path, cycle, star):
    assert recognize(path(7), UNICYCLIC_PC_N2_KINDS) is None
    assert recognize(cycle(6), UNICYCLIC_PC_N2_KINDS) is None
    assert recognize(cycle(5), UNICYCLIC_PC_N2_KINDS) == FamilySpec("B")
    assert recognize(star(7)) == FamilySpec("Star", (7,))
