"""Additive character sums over F_q and over Dickson value sets.

An additive character is psi_b(x) = exp(2*pi*i * Tr(b*x) / p); it is
nontrivial exactly when b != 0.  In characteristic 2 every character value
is +-1 and all sums here are accumulated as exact signed integers, so the
even-q results carry no floating-point error at all.  For odd p the values
are double-precision p-th roots of unity; each verified sum has at most
2^16 terms, so accumulated rounding stays far below the tolerances used
by the bound checks (1e-6 for inequalities, 1e-9 for identities).

Summation always runs in element-encoding order, so results are
deterministic and independent of any partitioning a caller might do.

The four verified estimates, all of Weil type with explicit constants:

    lemma:  |sum_{y in D} psi(y)|                      <= (n+1) sqrt(q)
    weil1:  |sum_{x in F_q} psi(D_n(x,a))|             <= (n-1) sqrt(q)
    weil2:  |sum eta(x^2-4a) psi(D_n(x,a))|            <= (n+1) sqrt(q)   (odd q)
    weil3:  |sum_{x != 0} psi_Tr(b D_n(x,a) + a/x^2)|  <= (n+1) sqrt(q)   (even q)

plus the exact weighted identity
    sum_{y in D} psi(y) = sum_{x in F_q} psi(D_n(x,a)) / N_x
whose right side uses the preimage-count formula for N_x, making the
check an end-to-end validation of that formula.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import sqrt

from .dickson import DicksonSpec, EvaluationSet, preimage_count, values_vector
from .gf import FiniteField

__all__ = [
    "AdditiveCharacter",
    "CharSumReport",
    "char_eval",
    "characters",
    "nontrivial_characters",
    "sum_over_value_set",
    "weighted_identity_check",
    "weil_sum_1",
    "weil_sum_2",
    "weil_sum_3",
]


@dataclass(frozen=True)
class AdditiveCharacter:
    """psi_b; the twist b selects one of the q characters of (F_q, +)."""

    field: FiniteField
    b: int

    def __post_init__(self):
        self.field._check(self.b)

    @property
    def is_trivial(self) -> bool:
        return self.b == 0

    def eval(self, x: int) -> complex:
        return char_eval(self, x)


@dataclass(frozen=True)
class CharSumReport:
    """One evaluated sum against its bound; pass iff slack >= -tolerance."""

    sum: complex
    magnitude: float
    bound: float
    slack: float
    terms: int
    bound_applies: bool = True


def characters(field: FiniteField):
    """All q additive characters, trivial one first."""
    return (AdditiveCharacter(field, b) for b in field.elements())


def nontrivial_characters(field: FiniteField):
    return (AdditiveCharacter(field, b) for b in field.units())


@lru_cache(maxsize=None)
def _roots_of_unity(p: int) -> tuple[complex, ...]:
    if p == 2:
        return (1.0 + 0j, -1.0 + 0j)
    return tuple(cmath.exp(2j * cmath.pi * k / p) for k in range(p))


@lru_cache(maxsize=None)
def _psi_table(field: FiniteField, b: int):
    """Value of psi_b at every element.  In characteristic 2 the entries
    are exact ints +-1; otherwise complex roots of unity."""
    if field.p == 2:
        return tuple(1 - 2 * field.trace(field.mul(b, x)) for x in field.elements())
    roots = _roots_of_unity(field.p)
    return tuple(roots[field.trace(field.mul(b, x))] for x in field.elements())


def char_eval(psi: AdditiveCharacter, x: int) -> complex:
    """psi_b(x) as a unit-modulus complex number (exact +-1 when p = 2)."""
    psi.field._check(x)
    return complex(_psi_table(psi.field, psi.b)[x])


def _report(total, terms: int, bound: float, bound_applies: bool = True) -> CharSumReport:
    total = complex(total)
    mag = abs(total)
    return CharSumReport(
        sum=total,
        magnitude=mag,
        bound=bound,
        slack=bound - mag,
        terms=terms,
        bound_applies=bound_applies,
    )


def sum_over_value_set(psi: AdditiveCharacter, evalset: EvaluationSet) -> CharSumReport:
    """sum_{y in D} psi(y) against the (n+1)*sqrt(q) estimate.

    A trivial psi sums to |D| exactly; the Weil-type bound does not apply
    there, so the report carries bound = |D| and bound_applies = False.
    """
    F = psi.field
    spec = evalset.spec
    if F != spec.field:
        raise ValueError("character and evaluation set live in different fields")
    tab = _psi_table(F, psi.b)
    total = sum(tab[y] for y in evalset.elems)
    if psi.is_trivial:
        return _report(total, evalset.size, float(evalset.size), bound_applies=False)
    spec._require_formula_domain()
    return _report(total, evalset.size, (spec.n + 1) * sqrt(F.q))


def weil_sum_1(psi: AdditiveCharacter, spec: DicksonSpec) -> CharSumReport:
    """sum over all of F_q of psi(D_n(x,a)), bound (n-1)*sqrt(q)."""
    if psi.is_trivial:
        raise ValueError("bound requires a nontrivial character")
    if spec.a == 0:
        raise ValueError("bound requires a != 0")
    F = spec.field
    tab = _psi_table(F, psi.b)
    dv = values_vector(spec)
    total = sum(tab[v] for v in dv)
    return _report(total, F.q, (spec.n - 1) * sqrt(F.q))


@lru_cache(maxsize=None)
def _eta_vector(field: FiniteField, a: int) -> tuple[int, ...]:
    """eta(x^2 - 4a) for every x, odd q."""
    four_a = field.mul(field.from_int(4), a)
    return tuple(
        field.quad_char(field.sub(field.mul(x, x), four_a)) for x in field.elements()
    )


def weil_sum_2(psi: AdditiveCharacter, spec: DicksonSpec) -> CharSumReport:
    """sum of eta(x^2-4a) * psi(D_n(x,a)) over F_q, odd q only."""
    F = spec.field
    if F.q % 2 == 0:
        raise ValueError("quadratic-character sum requires odd q")
    if psi.is_trivial:
        raise ValueError("bound requires a nontrivial character")
    if spec.a == 0:
        raise ValueError("bound requires a != 0")
    tab = _psi_table(F, psi.b)
    eta = _eta_vector(F, spec.a)
    dv = values_vector(spec)
    total = sum(e * tab[v] for e, v in zip(eta, dv) if e)
    return _report(total, F.q, (spec.n + 1) * sqrt(F.q))


@lru_cache(maxsize=None)
def _weil3_shift_tables(field: FiniteField, a: int):
    """psi_Tr(a/x^2) and psi_Tr(a^(q/2)/x) for x in F_q^*, even q."""
    tab1 = _psi_table(field, 1)
    sqrt_a = field.pow(a, field.q // 2)
    t_sq = tuple(tab1[field.mul(a, field.inv(field.mul(x, x)))] for x in field.units())
    t_lin = tuple(tab1[field.mul(sqrt_a, field.inv(x))] for x in field.units())
    return t_sq, t_lin


def weil_sum_3(b: int, spec: DicksonSpec) -> tuple[CharSumReport, CharSumReport]:
    """The paired even-q sums over F_q^*:

        sum psi_Tr(b*D_n(x,a) + a/x^2)   and   sum psi_Tr(b*D_n(x,a) + a^(q/2)/x).

    They agree termwise: Tr(z) = Tr(z^2) in characteristic 2, and
    (a^(q/2)/x)^2 = a/x^2, so the two shift factors carry the same trace.
    Both sums obey (n+1)*sqrt(q).
    """
    F = spec.field
    if F.q % 2 == 1:
        raise ValueError("this sum is defined for even q")
    if spec.a == 0 or b == 0:
        raise ValueError("requires a != 0 and b != 0")
    F._check(b)
    tab_b = _psi_table(F, b)
    t_sq, t_lin = _weil3_shift_tables(F, spec.a)
    dv = values_vector(spec)
    units = range(1, F.q)
    total1 = sum(tab_b[dv[x]] * t_sq[x - 1] for x in units)
    total2 = sum(tab_b[dv[x]] * t_lin[x - 1] for x in units)
    bound = (spec.n + 1) * sqrt(F.q)
    return _report(total1, F.q - 1, bound), _report(total2, F.q - 1, bound)


@lru_cache(maxsize=None)
def _preimage_weights(spec: DicksonSpec) -> tuple[float, ...]:
    """1/N_x for every x, with N_x from the preimage-count formula."""
    return tuple(1.0 / preimage_count(spec, x).count for x in spec.field.elements())


def weighted_identity_check(psi: AdditiveCharacter, spec: DicksonSpec) -> float:
    """|sum_{y in D} psi(y) - sum_x psi(D_n(x,a))/N_x|.

    N_x comes from the formula, the left side from enumeration, so a small
    deviation certifies the formula at every point of this (n, a) grid cell.
    """
    spec._require_formula_domain()
    F = spec.field
    tab = _psi_table(F, psi.b)
    dv = values_vector(spec)
    lhs = sum(tab[y] for y in sorted(set(dv)))
    w = _preimage_weights(spec)
    rhs = sum(tab[v] * w[x] for x, v in enumerate(dv))
    return abs(complex(lhs) - complex(rhs))
