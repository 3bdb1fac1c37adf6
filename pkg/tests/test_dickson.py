"""Dickson evaluation and the exact counting formulas.

The recurrence, the closed-form coefficients, and the functional equation
D_n(y + a/y, a) = y^n + (a/y)^n are three independent routes to the same
values; the counting formulas are then checked against full enumeration.
"""

from fractions import Fraction

import pytest

from dicksonrs import (
    DicksonSpec,
    FiniteField,
    dickson_coeffs,
    dickson_eval,
    dickson_poly,
    preimage_count,
    value_counts,
    value_set,
    value_set_size_formula,
)
from dicksonrs.dickson import values_vector


def test_spec_validation():
    F = FiniteField(7)
    with pytest.raises(ValueError):
        DicksonSpec(F, 0, 1)
    with pytest.raises(ValueError):
        DicksonSpec(F, 2, 9)  # a outside the field


# --- closed-form coefficients ----------------------------------------------


def test_dickson_coeffs_small():
    assert dickson_coeffs(1) == [1]  # x
    assert dickson_coeffs(2) == [1, -2]  # x^2 - 2a
    assert dickson_coeffs(3) == [1, -3]  # x^3 - 3ax
    assert dickson_coeffs(4) == [1, -4, 2]  # x^4 - 4ax^2 + 2a^2


def test_dickson_coeffs_match_integer_recurrence():
    # symbolic recurrence over Z[a]: represent D_j as {i: coeff of a^i x^(j-2i)}
    prev, cur = {0: 2}, {0: 1}
    for n in range(2, 17):
        nxt = dict(cur)  # x * D_{j-1} keeps each a-power, raises x-power
        for i, c in prev.items():
            nxt[i + 1] = nxt.get(i + 1, 0) - c
        prev, cur = cur, nxt
        got = dickson_coeffs(n)
        assert got == [cur[i] for i in range(n // 2 + 1)]


# --- evaluation -------------------------------------------------------------


def test_degree_one_is_identity():
    F = FiniteField(3, 2)
    spec = DicksonSpec(F, 1, 4)
    assert all(dickson_eval(spec, x) == x for x in F.elements())


def test_a_zero_gives_monomial():
    for F in [FiniteField(7), FiniteField(2, 3), FiniteField(3, 2)]:
        for n in range(1, 8):
            spec = DicksonSpec(F, n, 0)
            assert all(dickson_eval(spec, x) == F.pow(x, n) for x in F.elements())


def test_degree_three_closed_form():
    # D_3(x, a) = x^3 - 3ax (= x^3 + ax in characteristic 2)
    for F in [FiniteField(7), FiniteField(2, 4)]:
        for a in F.units():
            spec = DicksonSpec(F, 3, a)
            for x in F.elements():
                want = F.sub(F.pow(x, 3), F.mul(F.mul(F.from_int(3), a), x))
                assert dickson_eval(spec, x) == want


def test_recurrence_matches_closed_form(grid_fields):
    # two genuinely different code paths: O(n) recurrence vs binomial sums,
    # exhaustive over the whole grid, n <= 16, all a, all x
    for F in grid_fields.values():
        for n in range(1, 17):
            for a in F.elements():
                poly = dickson_poly(DicksonSpec(F, n, a))
                spec = DicksonSpec(F, n, a)
                for x in F.elements():
                    assert dickson_eval(spec, x) == poly.evaluate(x)


def test_functional_equation_over_quadratic_extension():
    # D_n(y + a/y, a) = y^n + (a/y)^n over F_{q^2}, an oracle that never
    # touches the recurrence's coefficients; quadratic extensions of all
    # base fields with q <= 16
    for K in [FiniteField(2, 2), FiniteField(3, 2), FiniteField(2, 4),
              FiniteField(5, 2), FiniteField(7, 2), FiniteField(2, 6),
              FiniteField(3, 4), FiniteField(11, 2), FiniteField(13, 2),
              FiniteField(2, 8)]:
        stride = 5 if K.q > 100 else 1
        for a in range(1, K.q, stride):
            for y in range(1, K.q, stride):
                ay = K.mul(a, K.inv(y))
                x = K.add(y, ay)
                for n in (2, 3, 5, 8):
                    want = K.add(K.pow(y, n), K.pow(ay, n))
                    assert dickson_eval(DicksonSpec(K, n, a), x) == want


def test_frobenius_degeneration(grid_fields):
    # D_p(x, a) == x^p as a function in characteristic p
    for q in [4, 5, 7, 9, 27]:
        F = grid_fields[q]
        for a in F.units():
            spec = DicksonSpec(F, F.p, a)
            assert all(dickson_eval(spec, x) == F.pow(x, F.p) for x in F.elements())


# --- value sets -------------------------------------------------------------


def test_value_set_examples(grid_fields):
    assert value_set(DicksonSpec(grid_fields[7], 2, 1)).elems == (0, 2, 5, 6)
    assert value_set(DicksonSpec(grid_fields[7], 8, 3)).elems == (1, 3, 6)
    assert value_set(DicksonSpec(grid_fields[8], 3, 1)).elems == (0, 1, 3, 5, 7)


def test_value_set_monomial_bijection(grid_fields):
    # a = 0 with gcd(n, q-1) = 1: the map is x -> x^n, a bijection
    F = grid_fields[8]
    assert value_set(DicksonSpec(F, 3, 0)).elems == tuple(F.elements())


def test_value_set_budget():
    with pytest.raises(ValueError):
        value_set(DicksonSpec(FiniteField(11), 2, 1), budget=7)


def test_formula_examples(grid_fields):
    rep = value_set_size_formula(DicksonSpec(grid_fields[7], 2, 1))
    assert rep.size == 4
    assert rep.delta == Fraction(1, 2)
    assert rep.terms == (Fraction(3, 2), Fraction(2))

    rep = value_set_size_formula(DicksonSpec(grid_fields[7], 8, 3))
    assert rep.size == 3
    assert rep.delta == 1
    assert rep.terms == (Fraction(3, 2), Fraction(1, 2))


def test_formula_2_16(f2_16):
    # 65535/6 + 65537/2 + 0 = 43691
    rep = value_set_size_formula(DicksonSpec(f2_16, 3, 1))
    assert rep.size == 43691
    assert rep.delta == 0
    assert rep.terms == (Fraction(65535, 6), Fraction(65537, 2))


def test_formula_rejects_out_of_domain(grid_fields):
    with pytest.raises(ValueError):
        value_set_size_formula(DicksonSpec(grid_fields[7], 2, 0))
    with pytest.raises(ValueError):
        value_set_size_formula(DicksonSpec(grid_fields[7], 1, 1))


def test_formula_matches_enumeration_subgrid(grid_fields):
    # unit-level subgrid; the full grid is acceptance criterion 1
    for q in [4, 5, 7, 8, 9]:
        F = grid_fields[q]
        for n in range(2, 13):
            for a in F.units():
                spec = DicksonSpec(F, n, a)
                assert value_set_size_formula(spec).size == value_set(spec).size


# --- preimage counts --------------------------------------------------------


def test_preimage_examples(grid_fields):
    rep = preimage_count(DicksonSpec(grid_fields[7], 2, 1), 1)
    assert (rep.count, rep.case_label) == (2, "eta-plus")
    assert rep.value == 6

    rep = preimage_count(DicksonSpec(grid_fields[7], 2, 1), 0)
    assert (rep.count, rep.case_label) == (1, "C-minus")
    assert rep.value == 5  # -2

    rep = preimage_count(DicksonSpec(grid_fields[4], 3, 1), 0)
    assert (rep.count, rep.case_label) == (2, "zero-even")


def test_preimage_even_q_case_labels(grid_fields):
    F = grid_fields[8]
    labels = {preimage_count(DicksonSpec(F, 3, 1), x0).case_label for x0 in F.elements()}
    assert labels <= {"A", "B", "zero-even"}
    assert "A" in labels and "B" in labels


def test_preimage_matches_bruteforce_subgrid(grid_fields):
    for q in [4, 5, 7, 8, 9]:
        F = grid_fields[q]
        for n in range(2, 13):
            for a in F.units():
                spec = DicksonSpec(F, n, a)
                counts = value_counts(spec)
                vals = values_vector(spec)
                for x0 in F.elements():
                    assert preimage_count(spec, x0).count == counts[vals[x0]]


def test_preimage_partition_identity(grid_fields):
    # summing the formula count once per distinct value recovers q
    for F in grid_fields.values():
        for n in range(2, 13):
            for a in range(1, F.q, 5 if F.q > 16 else 1):
                spec = DicksonSpec(F, n, a)
                vals = values_vector(spec)
                representative = {}
                for x0, v in enumerate(vals):
                    representative.setdefault(v, x0)
                total = sum(
                    preimage_count(spec, x0).count for x0 in representative.values()
                )
                assert total == F.q
