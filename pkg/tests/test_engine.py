from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minpoly.engine import (
    EngineState,
    InitVariant,
    Sequence,
    complexity_profile,
    discrepancy,
    initial_state,
    is_characteristic,
    iter_states,
    massey_form,
    minimal_polynomial,
    naive_construct,
    run,
    step,
    trace_records,
)
from minpoly.errors import (
    EmptySequenceError,
    FieldMismatchError,
    ParityError,
    ZeroPolynomialError,
)
from minpoly.field import GF2, QQ, PrimeField
from minpoly.lfsr import feedback_to_characteristic
from minpoly.poly import Poly, parse_poly

GF3 = PrimeField(3)
GF5 = PrimeField(5)

B0 = InitVariant.B_ZERO
B1 = InitVariant.B_ONE


def seq(field, values):
    return Sequence.from_ints(field, values)


def gf_sequences(field, max_len=10):
    return st.lists(st.integers(0, field.p - 1), max_size=max_len).map(
        lambda vs: Sequence.from_ints(field, vs)
    )


def all_sequences(field, max_len):
    for n in range(1, max_len + 1):
        for values in product(range(field.p), repeat=n):
            yield Sequence.from_ints(field, values)


class TestSequence:
    def test_from_ints_canonicalizes(self):
        s = seq(GF3, [5, -1])
        assert [t.value for t in s] == [2, 2]

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            Sequence(GF2, [GF3.one])

    def test_empty_allowed(self):
        assert len(Sequence(GF2)) == 0


class TestDiscrepancy:
    def test_after_two_zeros_sees_third_term(self):
        # state after consuming (0, 1) of s = (0,1,1,0): C = x^2, e = 1
        s = seq(GF2, [0, 1, 1, 0])
        state = EngineState(i=2, C=Poly(GF2, [0, 0, 1]), B=Poly.one(GF2), b=GF2.one, e=1)
        assert discrepancy(state, s) == GF2.one  # equals s_3

    def test_window_sum(self):
        # state after (1,1,0) of s = (1,1,0,0): C = x^2+x+1, e = 0
        s = seq(GF2, [1, 1, 0, 0])
        state = EngineState(i=3, C=Poly(GF2, [1, 1, 1]), B=Poly(GF2, [1, 1]), b=GF2.one, e=0)
        assert discrepancy(state, s) == GF2.one  # s_4 + s_3 + s_2

    def test_all_zero_sequence(self):
        s = seq(GF5, [0, 0, 0, 0])
        state = initial_state(GF5)
        for _ in range(4):
            assert not discrepancy(state, s)
            state = step(state, s)

    def test_past_the_end(self):
        s = seq(GF2, [1])
        state = next(iter_states(s))
        with pytest.raises(IndexError):
            discrepancy(state, s)

    def test_parity_corruption_detected(self):
        state = EngineState(i=1, C=Poly.one(GF2), B=Poly.zero(GF2), b=GF2.one, e=1)
        with pytest.raises(ParityError):
            discrepancy(state, seq(GF2, [1, 1]))


class TestStepTraces:
    def test_leading_zero_example(self):
        states = list(iter_states(seq(GF2, [0, 1, 1, 0])))
        assert [str(st.C) for st in states] == ["1", "x^2", "x^2 + x", "x^2 + x + 1"]

    def test_jump_heavy_example(self):
        states = list(iter_states(seq(GF2, [1, 1, 0, 0])))
        assert [str(st.C) for st in states] == ["x", "x + 1", "x^2 + x + 1", "x^2"]

    def test_gf3_state_fields(self):
        states = list(iter_states(seq(GF3, [1, 2])))
        first, second = states
        assert (str(first.C), first.b, first.e) == ("x", GF3.one, 0)
        assert str(second.C) == "x + 1"

    def test_v_accessor(self):
        for state in iter_states(seq(GF2, [1, 1, 0, 0])):
            assert state.v == -state.e


class TestMinimalPolynomial:
    @pytest.mark.parametrize(
        "field,values,variant,expected",
        [
            (GF2, [0, 1, 1, 0], B0, "x^2 + x + 1"),
            (GF2, [1, 1, 0, 0], B0, "x^2"),
            (GF2, [0, 0, 0], B0, "1"),
            (GF3, [0, 0, 0], B1, "1"),
            (GF2, [1, 0, 1], B0, "x^2 + 1"),
            (GF2, [0, 1], B0, "x^2"),
            (GF2, [0, 1], B1, "x^2 + 1"),
        ],
    )
    def test_examples(self, field, values, variant, expected):
        assert minimal_polynomial(seq(field, values), variant) == parse_poly(expected, field)

    def test_empty_sequence(self):
        assert minimal_polynomial(Sequence(GF2)) == Poly.one(GF2)
        assert minimal_polynomial(Sequence(QQ), B1) == Poly.one(QQ)

    def test_output_always_monic_and_characteristic(self):
        for s in all_sequences(GF3, 5):
            for variant in (B0, B1):
                out = minimal_polynomial(s, variant)
                assert out.is_monic
                assert is_characteristic(out, s)

    def test_quotient_not_always_monic(self, capsys):
        """The raw C/b can fail to be monic; normalization must fix it."""
        nonmonic = []
        for s in all_sequences(GF3, 5):
            r = run(s)
            assert r.output.is_monic
            assert r.output.degree == r.quotient.degree
            if not r.quotient.is_monic:
                nonmonic.append(s)
        assert nonmonic, "expected raw-quotient counterexamples over GF(3)"
        smallest = min(nonmonic, key=len)
        print(f"raw C/b non-monic for {len(nonmonic)} of 363 GF(3) sequences, "
              f"e.g. {[t.value for t in smallest]}")

    def test_b_one_formula_after_leading_zeros(self):
        # with B initialized to 1 and k-1 leading zeros, step k yields x^k - s_k
        for k, s_k in [(1, 1), (2, 1), (3, 2), (4, 1)]:
            values = [0] * (k - 1) + [s_k]
            states = list(iter_states(seq(GF3, values), B1))
            expected = Poly(GF3, [-s_k] + [0] * (k - 1) + [1])
            assert states[-1].C == expected


class TestProfile:
    def test_leading_zero_profile(self):
        entries = complexity_profile(seq(GF2, [0, 1, 1, 0]))
        assert [e.complexity for e in entries] == [0, 2, 2, 2]
        assert [e.disc.value for e in entries] == [0, 1, 1, 1]

    def test_jump_profile(self):
        entries = complexity_profile(seq(GF2, [1, 1, 0, 0]))
        assert [e.complexity for e in entries] == [1, 1, 2, 2]

    def test_all_zero(self):
        assert [e.complexity for e in complexity_profile(seq(GF3, [0] * 5))] == [0] * 5

    def test_matches_generic_states(self):
        for s in all_sequences(GF3, 5):
            entries = complexity_profile(s)
            states = list(iter_states(s))
            assert [e.complexity for e in entries] == [st.complexity for st in states]
            assert [e.disc for e in entries] == [st.disc for st in states]

    @given(gf_sequences(GF2, 12))
    def test_last_entry_is_output_degree(self, s):
        entries = complexity_profile(s)
        out = minimal_polynomial(s)
        if entries:
            assert entries[-1].complexity == out.degree
        else:
            assert out == Poly.one(GF2)

    def test_rational_profile(self):
        s = Sequence(QQ, [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)])
        entries = complexity_profile(s)
        assert [e.complexity for e in entries] == [1, 1, 1]
        out = minimal_polynomial(s)
        assert str(out) == "x - 1/2"


class TestIsCharacteristic:
    def test_examples(self):
        C = Poly(GF2, [1, 1, 1])
        assert is_characteristic(C, seq(GF2, [0, 1, 1, 0]))
        assert not is_characteristic(C, seq(GF2, [1, 1, 0, 0]))

    def test_vacuous_when_degree_reaches_n(self):
        assert is_characteristic(Poly.x_power(GF2, 4), seq(GF2, [1, 0, 1, 1]))

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            is_characteristic(Poly.zero(GF2), seq(GF2, [1]))

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            is_characteristic(Poly.one(GF3), seq(GF2, [1]))


class TestNaiveConstruct:
    def test_reference_traces(self):
        got = [str(p) for p in naive_construct(seq(GF2, [0, 1, 1, 0]))]
        assert got == ["1", "x^2", "x^2 + x", "x^2 + x + 1"]
        got = [str(p) for p in naive_construct(seq(GF2, [1, 1, 0, 0]))]
        assert got == ["x", "x + 1", "x^2 + x + 1", "x^2"]

    def test_two_leading_zeros(self):
        got = [str(p) for p in naive_construct(seq(GF2, [0, 0, 1]))]
        assert got == ["1", "1", "x^3"]

    def test_empty_rejected(self):
        with pytest.raises(EmptySequenceError):
            naive_construct(Sequence(GF2))

    def test_agrees_with_engine_degrees(self):
        for field, max_len in ((GF2, 7), (GF3, 5)):
            for s in all_sequences(field, max_len):
                history = naive_construct(s)
                profile = complexity_profile(s)
                for i, (poly, entry) in enumerate(zip(history, profile), start=1):
                    assert poly.make_monic().degree == entry.complexity
                    assert is_characteristic(poly, Sequence(field, s.terms[:i]))


class TestMasseyForm:
    def test_power_collapse(self):
        F, L = massey_form(seq(GF2, [1, 1, 0, 0]))
        assert (F, L) == (Poly.one(GF2), 2)

    def test_palindrome(self):
        F, L = massey_form(seq(GF2, [0, 1, 1, 0]))
        assert (str(F), L) == ("x^2 + x + 1", 2)

    def test_all_zero(self):
        F, L = massey_form(seq(GF3, [0, 0, 0]))
        assert (F, L) == (Poly.one(GF3), 0)

    def test_empty_rejected(self):
        with pytest.raises(EmptySequenceError):
            massey_form(Sequence(GF2))

    def test_constant_term_is_one(self):
        for s in all_sequences(GF3, 5):
            F, _ = massey_form(s)
            assert F.coefficient(0) == GF3.one

    def test_round_trip(self):
        for s in all_sequences(GF3, 5):
            F, L = massey_form(s)
            assert feedback_to_characteristic(F, L) == minimal_polynomial(s)


class TestStepInvariants:
    @given(gf_sequences(GF2, 12))
    def test_gf2_invariants(self, s):
        self._check(s)

    @given(gf_sequences(GF5, 8))
    def test_gf5_invariants(self, s):
        self._check(s)

    @settings(max_examples=30)
    @given(
        st.lists(
            st.fractions(min_value=-5, max_value=5, max_denominator=5), max_size=8
        ).map(lambda vs: Sequence(QQ, vs))
    )
    def test_rational_invariants(self, s):
        self._check(s)

    @staticmethod
    def _check(s):
        for variant in (B0, B1):
            prev_L = 0
            for state in iter_states(s, variant):
                i = state.i
                # parity and the implicit degree ledger
                assert (state.e + i) % 2 == 1
                assert state.C.degree == state.complexity
                assert state.b
                # complexity jump rule and its lower bound
                if state.disc:
                    assert state.complexity == max(prev_L, i - prev_L)
                    assert state.complexity >= i - prev_L
                else:
                    assert state.complexity == prev_L
                prev_L = state.complexity
            out = minimal_polynomial(s, variant)
            assert is_characteristic(out, s)


class TestVariants:
    def test_outputs_agree_in_degree_and_validity(self):
        for field, max_len in ((GF2, 8), (GF3, 5)):
            for s in all_sequences(field, max_len):
                a = minimal_polynomial(s, B0)
                b = minimal_polynomial(s, B1)
                assert a.degree == b.degree
                assert is_characteristic(a, s) and is_characteristic(b, s)

    def test_traces_differ_at_first_nonzero_term(self):
        # with B=1 the very first correction subtracts it: x - s_1 instead of x
        s = seq(GF2, [1])
        assert minimal_polynomial(s, B0) == Poly(GF2, [0, 1])
        assert minimal_polynomial(s, B1) == Poly(GF2, [1, 1])


class TestMonicSteps:
    def test_degrees_and_output_preserved(self):
        for s in all_sequences(GF3, 5):
            plain = list(iter_states(s))
            monic = list(iter_states(s, monic_steps=True))
            assert [st.complexity for st in plain] == [st.complexity for st in monic]
            for st_m in monic:
                assert st_m.C.is_monic
            if plain:
                normalized = monic[-1].C.scaled_by(monic[-1].b.inverse()).make_monic()
                assert normalized == minimal_polynomial(s)


class TestTraceRecords:
    def test_golden_lines(self):
        lines = [r.line() for r in trace_records(seq(GF2, [0, 1, 1, 0]))]
        assert lines == [
            "i=1 c=0 e=-2 L=0 C=1",
            "i=2 c=1 e=1 L=2 C=x^2",
            "i=3 c=1 e=0 L=2 C=x^2 + x",
            "i=4 c=1 e=-1 L=2 C=x^2 + x + 1",
        ]

    def test_record_fields(self):
        records = trace_records(seq(GF2, [1, 1, 0, 0]))
        assert records[0].e_before == -1 and records[0].e_after == 0
        assert records[0].B == "1" and records[0].b == "1"
        assert records[2].e_before == -1 and records[2].e_after == 0


def test_run_empty_sequence():
    r = run(Sequence(GF2))
    assert r.final is None
    assert r.output == Poly.one(GF2)
