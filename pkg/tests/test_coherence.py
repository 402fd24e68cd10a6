from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from probarg.coherence import (
    Assessment,
    AssessmentEntry,
    Bounds,
    ClassificationConfig,
    Coherent,
    Incoherent,
    IncoherentPremises,
    ResponseCategory,
    check_coherence,
    classify,
    propagate,
    structural_bounds,
)
from probarg.events import And, Atom, ConditionalObject, Not, Or, constituents

from oracles import vertex_bounds, witness_satisfies

A = Atom("A")
C = Atom("C")


def entry(obj, lo, hi=None):
    hi = lo if hi is None else hi
    return AssessmentEntry(obj, F(lo), F(hi))


class TestAssessment:
    def test_interval_validation(self):
        with pytest.raises(ValueError):
            AssessmentEntry(ConditionalObject(A), F(3, 4), F(1, 2))
        with pytest.raises(ValueError):
            AssessmentEntry(ConditionalObject(A), F(-1, 2), F(1, 2))

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            AssessmentEntry(ConditionalObject(A), 0.5, 0.5)


class TestCheckCoherence:
    def test_additivity_violation(self):
        a = Assessment((entry(ConditionalObject(A), F(3, 5)), entry(ConditionalObject(Not(A)), F(1, 2))))
        verdict = check_coherence(a, ["A"])
        assert isinstance(verdict, Incoherent)
        assert verdict.level == 0
        assert "unsolvable" in verdict.description

    def test_zero_layer_rescue(self):
        # p(C|A)=1 with p(A and C)=0 pushes the conditional to a deeper
        # layer where it is satisfiable: coherent
        a = Assessment((entry(ConditionalObject(C, A), 1), entry(ConditionalObject(And(A, C)), 0)))
        verdict = check_coherence(a, ["A", "C"])
        assert isinstance(verdict, Coherent)

    def test_self_defeating_conditional(self):
        a = Assessment((entry(ConditionalObject(A, Not(A)), 1),))
        verdict = check_coherence(a, ["A"])
        assert isinstance(verdict, Incoherent)
        assert verdict.level == 1

    def test_empty_assessment_coherent(self):
        assert isinstance(check_coherence(Assessment(), ["A"]), Coherent)

    def test_witness_revalidates(self):
        a = Assessment(
            (
                entry(ConditionalObject(A), F(2, 5), F(3, 5)),
                entry(ConditionalObject(C, A), F(1, 2)),
            )
        )
        verdict = check_coherence(a, ["A", "C"])
        assert isinstance(verdict, Coherent)
        assert witness_satisfies(a.entries, constituents(["A", "C"]), verdict.witness)

    def test_undeclared_atom_rejected(self):
        a = Assessment((entry(ConditionalObject(C), F(1, 2)),))
        with pytest.raises(ValueError, match="undeclared"):
            check_coherence(a, ["A"])

    def test_deterministic_witness(self):
        a = Assessment((entry(ConditionalObject(A), F(1, 3), F(2, 3)),))
        v1 = check_coherence(a, ["A", "C"])
        v2 = check_coherence(a, ["A", "C"])
        assert v1 == v2


class TestStructuralBounds:
    def test_reflexive(self):
        b = structural_bounds(ConditionalObject(Not(A), Not(A)))
        assert (b.lo, b.hi) == (1, 1)

    def test_contradiction(self):
        b = structural_bounds(ConditionalObject(A, Not(A)))
        assert (b.lo, b.hi) == (0, 0)

    def test_independent_atoms(self):
        assert structural_bounds(ConditionalObject(C, A)) is None

    def test_entailment(self):
        b = structural_bounds(ConditionalObject(Or(A, C), A))
        assert (b.lo, b.hi) == (1, 1)


class TestPropagate:
    def test_paradox_non_informative(self):
        for x in (F(0), F(1, 4), F(1, 2), F(3, 4), F(9, 10), F(1)):
            prem = Assessment((entry(ConditionalObject(Not(A)), x),))
            b = propagate(prem, ConditionalObject(C, A), ["A", "C"])
            assert (b.lo, b.hi) == (0, 1)

    def test_modus_ponens_formula(self):
        x, y = F(9, 10), F(9, 10)
        prem = Assessment((entry(ConditionalObject(A), x), entry(ConditionalObject(C, A), y)))
        b = propagate(prem, ConditionalObject(C), ["A", "C"])
        assert (b.lo, b.hi) == (x * y, x * y + 1 - x)

    def test_structural_short_circuit(self):
        b = propagate(Assessment(), ConditionalObject(Not(A), Not(A)), ["A"])
        assert (b.lo, b.hi) == (1, 1)

    def test_incoherent_premises_raise_with_certificate(self):
        prem = Assessment((entry(ConditionalObject(A), F(3, 5)), entry(ConditionalObject(Not(A)), F(3, 5))))
        with pytest.raises(IncoherentPremises) as exc:
            propagate(prem, ConditionalObject(C), ["A", "C"])
        assert isinstance(exc.value.certificate, Incoherent)

    def test_degenerate_antecedent_falls_to_zero_layer(self):
        # premises force p(A) = 0; nothing constrains C there, so [0, 1]
        prem = Assessment((entry(ConditionalObject(Not(A)), 1),))
        b = propagate(prem, ConditionalObject(C, A), ["A", "C"])
        assert (b.lo, b.hi) == (0, 1)
        assert b.attained_lo and b.attained_hi

    def test_zero_layer_constraint_survives(self):
        # p(not A) = 1 and p(C|A) = 9/10: the conditional premise lives at
        # the zero layer and still pins the query there
        prem = Assessment(
            (entry(ConditionalObject(Not(A)), 1), entry(ConditionalObject(C, A), F(9, 10)))
        )
        b = propagate(prem, ConditionalObject(C, A), ["A", "C"])
        assert (b.lo, b.hi) == (F(9, 10), F(9, 10))

    def test_matches_vertex_enumeration(self):
        cases = [
            Assessment((entry(ConditionalObject(A), F(1, 2)),)),
            Assessment((entry(ConditionalObject(A), F(1, 3), F(2, 3)),)),
            Assessment(
                (
                    entry(ConditionalObject(A), F(3, 4)),
                    entry(ConditionalObject(C, A), F(2, 3)),
                )
            ),
            Assessment((entry(ConditionalObject(Or(A, C)), F(1, 2), F(4, 5)),)),
        ]
        worlds = constituents(["A", "C"])
        queries = [ConditionalObject(C), ConditionalObject(And(A, C)), ConditionalObject(C, A)]
        for prem in cases:
            for q in queries:
                got = propagate(prem, q, ["A", "C"])
                expected = vertex_bounds(prem.entries, worlds, q)
                if expected is None:
                    continue
                assert (got.lo, got.hi) == expected, (prem, q)

    def test_grid_oracle_agreement(self):
        # brute-force: denominator-40 mass grids, premises satisfied exactly
        prem = Assessment(
            (entry(ConditionalObject(A), F(3, 4)), entry(ConditionalObject(C, A), F(2, 3)))
        )
        q = ConditionalObject(C)
        got = propagate(prem, q, ["A", "C"])
        worlds = constituents(["A", "C"])
        values = []
        n = 40
        for i in range(n + 1):
            for j in range(n + 1 - i):
                for k in range(n + 1 - i - j):
                    lam = [F(i, n), F(j, n), F(k, n), F(n - i - j - k, n)]
                    pa = lam[2] + lam[3]
                    if pa != F(3, 4) or lam[3] != F(2, 3) * pa:
                        continue
                    values.append(lam[1] + lam[3])
        assert values
        assert abs(min(values) - got.lo) <= F(1, 100)
        assert abs(max(values) - got.hi) <= F(1, 100)


class TestMonotonicity:
    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(0, 12), min_size=4, max_size=4).filter(lambda m: sum(m) > 0))
    def test_adding_entry_never_widens(self, raw):
        # derive a guaranteed-coherent assessment from a random mass vector
        total = sum(raw)
        lam = [F(x, total) for x in raw]
        worlds = constituents(["A", "C"])
        pa = lam[2] + lam[3]
        pc = lam[1] + lam[3]
        base = Assessment((entry(ConditionalObject(A), pa),))
        extended = base.extended(ConditionalObject(C), pc, pc)
        q = ConditionalObject(Or(A, C))
        before = propagate(base, q, ["A", "C"])
        after = propagate(extended, q, ["A", "C"])
        assert before.lo <= after.lo <= after.hi <= before.hi


class TestClassify:
    def test_non_informative(self):
        assert classify(Bounds(F(0), F(1))) is ResponseCategory.NON_INFORMATIVE

    def test_holds_examples(self):
        assert classify(Bounds(F(81, 100), F(1))) is ResponseCategory.HOLDS
        assert classify(Bounds(F(1), F(1))) is ResponseCategory.HOLDS

    def test_does_not_hold(self):
        assert classify(Bounds(F(0), F(1, 10))) is ResponseCategory.DOES_NOT_HOLD

    def test_indeterminate(self):
        assert classify(Bounds(F(1, 4), F(3, 4))) is ResponseCategory.INDETERMINATE

    def test_thresholds_respected(self):
        cfg = ClassificationConfig(theta=F(9, 10), tau_high=F(9, 10), tau_low=F(1, 10))
        assert classify(Bounds(F(4, 5), F(9, 10)), cfg) is ResponseCategory.INDETERMINATE
        assert classify(Bounds(F(19, 20), F(1)), cfg) is ResponseCategory.HOLDS
        assert classify(Bounds(F(0), F(1, 20)), cfg) is ResponseCategory.DOES_NOT_HOLD

    def test_config_validation(self):
        with pytest.raises(ValueError):
            ClassificationConfig(theta=F(1, 2))
        with pytest.raises(ValueError):
            ClassificationConfig(tau_high=F(1, 4), tau_low=F(1, 2))
