import pytest
from hypothesis import given
from hypothesis import strategies as st

from morphic.errors import ContradictionError
from morphic.taxonomy import (
    CLASS_CLAUSES,
    LABELS,
    PropertyAssignment,
    RULES,
    class_assignment,
    class_label,
    classify_evidence,
    closure,
    consistent,
    enumerate_classes,
    partial_assignments,
)

A = PropertyAssignment.of

partials = st.tuples(st.integers(0, 1023), st.integers(0, 1023)).map(lambda tf: PropertyAssignment(tf[0], tf[1] & ~tf[0]))


class TestAssignment:
    def test_of_and_getitem(self):
        a = A(P6=True, P1=False)
        assert a[6] is True and a[1] is False and a[2] is None

    def test_parse(self):
        assert PropertyAssignment.parse("P1=true, p10=false,P3=?") == A({1: True, 10: False})

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            PropertyAssignment.parse("P1=maybe")

    def test_no_such_property(self):
        with pytest.raises(ValueError):
            A({11: True})

    def test_both_ways(self):
        with pytest.raises(ValueError):
            PropertyAssignment(1, 1)


class TestRules:
    def test_rule_inventory(self):
        extra = {(r.antecedents, r.consequent) for r in RULES if r.provenance != "definition"}
        assert extra == {
            (frozenset({6}), 9),
            (frozenset({6, 4}), 8),
            (frozenset({3, 9}), 7),
            (frozenset({2, 9}), 6),
        }
        trivial = {(min(r.antecedents), r.consequent) for r in RULES if r.provenance == "definition"}
        assert {a for a, _ in trivial} == {1, 3, 4, 5, 6, 7, 8, 9}
        assert (7, 8) in trivial and (9, 10) in trivial

    def test_rules_hold_for_every_class(self):
        for lbl in LABELS:
            a = class_assignment(lbl)
            for r in RULES:
                if all(a[p] for p in r.antecedents):
                    assert a[r.consequent]


class TestClosure:
    def test_p7_forces_everything(self):
        assert closure(A(P7=True)) == PropertyAssignment((1 << 10) - 1, 0)

    def test_durand_contradiction(self):
        with pytest.raises(ContradictionError) as exc:
            closure(A(P2=True, P9=True, P6=False))
        assert "Durand" in exc.value.rule.provenance

    def test_empty_unchanged(self):
        assert closure(A()) == A()

    def test_contrapositive(self):
        c = closure(A(P10=False))
        assert c[9] is False and c[6] is False and c[8] is False

    def test_exhaustive_idempotent_and_monotone(self):
        n = bad = 0
        for a in partial_assignments():
            n += 1
            try:
                c = closure(a)
            except ContradictionError:
                bad += 1
                continue
            assert c.extends(a)
            assert closure(c) == c
        assert n == 3**10
        assert 0 < bad < n

    @given(partials, partials)
    def test_more_evidence_closes_further(self, a, b):
        if a.true & b.false or a.false & b.true:
            return
        both = PropertyAssignment(a.true | b.true, a.false | b.false)
        if not consistent(both):
            return
        assert closure(both).extends(closure(a))


class TestClasses:
    def test_twenty(self):
        classes = enumerate_classes()
        assert len(classes) == 20 == len(set(classes))
        assert all(closure(c) == c for c in classes)

    def test_extremes_present(self):
        classes = enumerate_classes()
        assert PropertyAssignment((1 << 10) - 1, 0) in classes
        assert PropertyAssignment(0, (1 << 10) - 1) in classes
        assert class_label(PropertyAssignment((1 << 10) - 1, 0)) == "t"
        assert class_label(PropertyAssignment(0, (1 << 10) - 1)) == "a"

    def test_bijection_with_labels(self):
        assert len(LABELS) == 20 == len(CLASS_CLAUSES)
        assigned = {class_assignment(lbl) for lbl in LABELS}
        assert assigned == set(enumerate_classes())
        for lbl in LABELS:
            assert class_label(class_assignment(lbl)) == lbl

    @pytest.mark.parametrize(
        "evidence, label",
        [(A(P8=True, P1=False), "i"), (A(P3=True, P6=False, P10=False), "r"), (A(P5=True, P4=False), "m")],
    )
    def test_clause_examples(self, evidence, label):
        assert class_label(closure(evidence)) == label

    def test_partial_label_rejected(self):
        with pytest.raises(ValueError):
            class_label(A(P1=True))


class TestEvidence:
    def test_primitive_not_pure(self):
        assert classify_evidence(A(P6=True, P1=False)) == ["f", "i"]

    def test_nothing_known(self):
        assert classify_evidence(A()) == list(LABELS)

    def test_not_recurrent(self):
        assert classify_evidence(A(P10=False)) == ["a", "d", "g", "j", "n", "r"]

    def test_contradiction_propagates(self):
        with pytest.raises(ContradictionError):
            classify_evidence(A(P2=True, P9=True, P6=False))

    @given(partials)
    def test_candidates_extend_evidence(self, e):
        if not consistent(e):
            return
        labels = classify_evidence(e)
        assert labels
        assert all(class_assignment(lbl).extends(e) for lbl in labels)
