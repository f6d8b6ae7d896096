import pytest

from valleyforge.eco import (
    EcoLabel,
    children,
    generate,
    invert_first_peak,
    label_of,
    rule_counts,
)
from valleyforge.errors import EmptyPath, NotInClass, UnsupportedParams
from valleyforge.oracle import enumerate_dyck
from valleyforge.paths import EMPTY_PATH, ClassParams, is_in_class, parse_path

H4K3 = ClassParams(4, 3)


class TestLabelOf:
    def test_axiom(self):
        assert label_of(EMPTY_PATH, H4K3) == EcoLabel.num(1)

    def test_single_peak(self):
        assert label_of(parse_path("UD"), H4K3) == EcoLabel.num(2)

    def test_saturated_run_gets_h_minus_one(self):
        # U^4 (DU) D^4: one valley at height 3 = k-2, so label (h-1) = (3)
        p = parse_path("UUUUDUDDDD")
        assert label_of(p, H4K3) == EcoLabel.num(3)
        assert len(children(p, H4K3)) == 3

    def test_full_run_no_valley(self):
        assert label_of(parse_path("UUUUDDDD"), H4K3) == EcoLabel.hdx(0)

    def test_indexed_label_k4(self):
        params = ClassParams(4, 4)
        assert label_of(parse_path("UUUUDUDDDD"), params) == EcoLabel.hdx(1)

    def test_k2_full_run(self):
        params = ClassParams(4, 2)
        assert label_of(parse_path("UUUUDDDD"), params) == EcoLabel.num(3)

    def test_rejects_out_of_class(self):
        with pytest.raises(NotInClass):
            label_of(parse_path("UUUUUDDDDD"), H4K3)

    def test_rejects_unsupported(self):
        with pytest.raises(UnsupportedParams):
            label_of(EMPTY_PATH, ClassParams(2, 3))


class TestChildren:
    def test_axiom_child(self):
        assert [p.word for p in children(EMPTY_PATH, H4K3)] == ["UD"]

    def test_ud_children(self):
        assert [p.word for p in children(parse_path("UD"), H4K3)] == ["UDUD", "UUDD"]

    def test_saturated_children_avoid_top_site(self):
        p = parse_path("UUUUDUDDDD")
        kids = children(p, H4K3)
        assert len(kids) == 3
        for q in kids:
            assert is_in_class(q, H4K3)

    def test_child_count_matches_label(self):
        for n in range(9):
            for p in generate(H4K3, n):
                label = label_of(p, H4K3)
                assert len(children(p, H4K3)) == label.child_count(H4K3.h)


class TestGenerate:
    def test_n0(self):
        assert generate(H4K3, 0) == [EMPTY_PATH]

    def test_n3_is_all_dyck(self):
        got = {p.word for p in generate(H4K3, 3)}
        assert got == {p.word for p in enumerate_dyck(3)}
        assert len(got) == 5

    def test_n6_count(self):
        paths = generate(H4K3, 6)
        assert len(paths) == 121
        brute = [p for p in enumerate_dyck(6) if is_in_class(p, H4K3)]
        assert {p.word for p in paths} == {p.word for p in brute}

    def test_no_duplicates(self):
        for n in range(9):
            paths = generate(H4K3, n)
            assert len({p.word for p in paths}) == len(paths)

    def test_membership(self):
        for n in range(8):
            for p in generate(H4K3, n):
                assert is_in_class(p, H4K3)

    def test_sorted_canonically(self):
        words = [p.word for p in generate(H4K3, 5)]
        assert words == sorted(words)

    def test_disjoint_union_property(self):
        for n in range(7):
            parents = generate(H4K3, n)
            all_children = [c.word for p in parents for c in children(p, H4K3)]
            assert len(all_children) == len(set(all_children))
            assert sorted(all_children) == [p.word for p in generate(H4K3, n + 1)]


class TestInvertFirstPeak:
    @pytest.mark.parametrize("word,expected", [("UD", ""), ("UUDD", "UD"), ("UDUD", "UD")])
    def test_examples(self, word, expected):
        assert invert_first_peak(parse_path(word)).word == expected

    def test_empty_rejected(self):
        with pytest.raises(EmptyPath):
            invert_first_peak(EMPTY_PATH)

    def test_reverse_map_property(self):
        for n in range(7):
            for q in generate(H4K3, n + 1):
                parent = invert_first_peak(q)
                assert is_in_class(parent, H4K3)
                assert q.word in {c.word for c in children(parent, H4K3)}


class TestRuleCounts:
    def test_axiom(self):
        assert rule_counts(H4K3, 0).counts == {EcoLabel.num(1): 1}

    def test_first_step(self):
        assert rule_counts(H4K3, 1).counts == {EcoLabel.num(2): 1}

    def test_total_matches_generation(self):
        for n in range(9):
            assert rule_counts(H4K3, n).total() == len(generate(H4K3, n))

    def test_label_histogram_matches_paths(self):
        for n in range(8):
            hist: dict[EcoLabel, int] = {}
            for p in generate(H4K3, n):
                label = label_of(p, H4K3)
                hist[label] = hist.get(label, 0) + 1
            assert hist == rule_counts(H4K3, n).counts

    def test_k2_totals_match_generation(self):
        params = ClassParams(3, 2)
        for n in range(9):
            assert rule_counts(params, n).total() == len(generate(params, n))

    def test_unsupported(self):
        with pytest.raises(UnsupportedParams):
            rule_counts(ClassParams(3, 4), 2)
