"""Exact arithmetic in finite fields GF(p^m).

Field elements are plain Python ints.  The element with coefficient vector
(c0, c1, ..., c_{m-1}) against the power basis 1, t, ..., t^{m-1} is encoded
as the base-p integer

    enc(x) = c0 + c1*p + ... + c_{m-1}*p^(m-1),

a bijection onto [0, q).  The interpretation of an int is carried by the
FiniteField object it belongs to; 0 and 1 always encode the additive and
multiplicative identities.  Keeping elements unboxed makes exhaustive scans
over small fields cheap, which is what most of this package does.

For extension fields with q <= 2^16 the field lazily builds exp/log tables
over a fixed primitive element, so mul/inv/pow are O(1) lookups.  Larger
fields (supported up to q <= 2^32) fall back to direct polynomial
arithmetic modulo the defining polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "FiniteField",
    "TwoAdicData",
    "field_create",
    "parse_field_spec",
    "two_adic",
]

_Q_CAP = 1 << 32
_TABLE_Q_CAP = 1 << 16


def _is_prime(n: int) -> bool:
    """Deterministic trial division; n <= 2^32 so this is instant."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# --- dense polynomial helpers over GF(p), used for irreducibility testing
# and as the multiplication fallback for odd-characteristic extensions.
# Polynomials are lists of ints (low-to-high), not necessarily trimmed.


def _ptrim(u: list[int]) -> list[int]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _pmul(u: list[int], v: list[int], p: int) -> list[int]:
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                out[i + j] = (out[i + j] + ui * vj) % p
    return _ptrim(out)


def _pmod(u: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    u = list(u)
    df = len(f) - 1
    while len(u) > df:
        c = u[-1]
        if c:
            off = len(u) - 1 - df
            for i in range(df):
                u[off + i] = (u[off + i] - c * f[i]) % p
        u.pop()
    return _ptrim(u)


def _ppowmod(u: list[int], e: int, f: list[int], p: int) -> list[int]:
    r = [1]
    b = _pmod(u, f, p)
    while e:
        if e & 1:
            r = _pmod(_pmul(r, b, p), f, p)
        b = _pmod(_pmul(b, b, p), f, p)
        e >>= 1
    return r


def _pgcd(u: list[int], v: list[int], p: int) -> list[int]:
    u, v = list(u), list(v)
    while v:
        # make v monic so _pmod applies
        lc_inv = pow(v[-1], p - 2, p)
        vm = [(c * lc_inv) % p for c in v]
        u, v = vm, _pmod(u, vm, p)
    return u


def _psub(u: list[int], v: list[int], p: int) -> list[int]:
    out = [0] * max(len(u), len(v))
    for i in range(len(out)):
        a = u[i] if i < len(u) else 0
        b = v[i] if i < len(v) else 0
        out[i] = (a - b) % p
    return _ptrim(out)


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's deterministic test for a monic polynomial over GF(p)."""
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    # x^(p^m) == x mod f
    t = x
    for _ in range(m):
        t = _ppowmod(t, p, f, p)
    if _psub(t, x, p):
        return False
    # gcd(x^(p^(m/ell)) - x, f) == 1 for every prime ell | m
    for ell in _prime_factors(m):
        t = x
        for _ in range(m // ell):
            t = _ppowmod(t, p, f, p)
        if len(_pgcd(f, _psub(t, x, p), p)) - 1 != 0:
            return False
    return True


@lru_cache(maxsize=None)
def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, the non-leading coefficients
    compared low-to-high as base-p digits.  Deterministic across runs."""
    if m == 1:
        return (0, 1)
    for key in range(p**m):
        coeffs, k = [], key
        for _ in range(m):
            coeffs.append(k % p)
            k //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise ArithmeticError(f"no irreducible polynomial of degree {m} over GF({p})")


@dataclass(frozen=True)
class TwoAdicData:
    """Exact 2-adic valuations: 2^r || q^2-1 and 2^t || n."""

    r: int
    t: int


def two_adic(q: int, n: int) -> TwoAdicData:
    """Valuations used by the value-set and preimage formulas.

    For even q, q^2-1 is odd and r = 0.
    """
    r = 0
    if q % 2 == 1:
        v = q * q - 1
        while v % 2 == 0:
            v //= 2
            r += 1
    t = 0
    v = n
    while v > 0 and v % 2 == 0:
        v //= 2
        t += 1
    return TwoAdicData(r=r, t=t)


class FiniteField:
    """GF(p^m) with an explicit monic irreducible modulus.

    Immutable after construction and safe to share; every operation is a
    pure function of its int arguments.
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m = {m} must be >= 1")
        q = p**m
        if q > _Q_CAP:
            raise ValueError(f"q = p^m = {q} exceeds the supported cap 2^32")
        if modulus is None:
            modulus = _default_modulus(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m (low-to-high coefficients)")
        if m > 1 and not _is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        # int encoding of the modulus for the characteristic-2 bit path
        self._mod_int = sum(c << i for i, c in enumerate(modulus)) if p == 2 else None
        self._ppow = [p**i for i in range(m + 1)]
        self._exp = None  # exp/log tables, built lazily
        self._log = None
        self._trace_tab = None

    # -- identity / representation ------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FiniteField({self.spec_string()!r})"

    def spec_string(self) -> str:
        """Wire form "p^m" (default modulus) or "p^m/c0,c1,...,cm"."""
        if self.m == 1:
            return str(self.p)
        base = f"{self.p}^{self.m}"
        if self.modulus == _default_modulus(self.p, self.m):
            return base
        return base + "/" + ",".join(str(c) for c in self.modulus)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def encode(self, coeffs) -> int:
        return sum((c % self.p) * self._ppow[i] for i, c in enumerate(coeffs))

    def decode(self, x: int) -> tuple[int, ...]:
        self._check(x)
        out = []
        for _ in range(self.m):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def from_int(self, c: int) -> int:
        """Embed an ordinary integer as a constant of the prime subfield."""
        return c % self.p

    def _check(self, x: int):
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element encoding of {self!r}")

    # -- ring operations ------------------------------------------------

    def add(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if self.m == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        p, out, ppow = self.p, 0, self._ppow
        for i in range(self.m):
            out += ((x // ppow[i] + y // ppow[i]) % p) * ppow[i]
        return out

    def neg(self, x: int) -> int:
        self._check(x)
        if self.m == 1:
            return (-x) % self.p
        if self.p == 2:
            return x
        p, out, ppow = self.p, 0, self._ppow
        for i in range(self.m):
            out += (-(x // ppow[i]) % p) * ppow[i]
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if self.m == 1:
            return (x * y) % self.p
        if x == 0 or y == 0:
            return 0
        if self.q <= _TABLE_Q_CAP:
            if self._exp is None:
                self._build_tables()
            return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]
        return self._mul_direct(x, y)

    def inv(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.m == 1:
            return pow(x, self.p - 2, self.p)
        if self.q <= _TABLE_Q_CAP:
            if self._exp is None:
                self._build_tables()
            return self._exp[(-self._log[x]) % (self.q - 1)]
        return self.pow(x, self.q - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        """x^e with exponent reduced mod q-1 for nonzero x; 0^0 = 1."""
        self._check(x)
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0
        e %= self.q - 1
        if self.m == 1:
            return pow(x, e, self.p)
        if self.q <= _TABLE_Q_CAP:
            if self._exp is None:
                self._build_tables()
            return self._exp[(self._log[x] * e) % (self.q - 1)]
        r, b = 1, x
        while e:
            if e & 1:
                r = self._mul_direct(r, b)
            b = self._mul_direct(b, b)
            e >>= 1
        return r

    def _mul_direct(self, x: int, y: int) -> int:
        if self.p == 2:
            m, mod = self.m, self._mod_int
            r = 0
            while y:
                if y & 1:
                    r ^= x
                y >>= 1
                x <<= 1
                if (x >> m) & 1:
                    x ^= mod
            return r
        u = list(self.decode(x))
        v = list(self.decode(y))
        w = _pmod(_pmul(u, v, self.p), list(self.modulus), self.p)
        return self.encode(w)

    def _build_tables(self):
        q = self.q
        # find a primitive element: smallest enc whose order is q-1
        factors = _prime_factors(q - 1)
        g = None
        for cand in range(2, q):
            if all(self._pow_direct(cand, (q - 1) // ell) != 1 for ell in factors):
                g = cand
                break
        if g is None:  # pragma: no cover - the unit group is always cyclic
            raise ArithmeticError("no primitive element found")
        exp = [0] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_direct(acc, g)
        self._exp = exp
        self._log = log

    def _pow_direct(self, x: int, e: int) -> int:
        r, b = 1, x
        while e:
            if e & 1:
                r = self._mul_direct(r, b)
            b = self._mul_direct(b, b)
            e >>= 1
        return r

    # -- field invariants used throughout ------------------------------

    def trace(self, x: int) -> int:
        """Absolute trace Tr(x) = x + x^p + ... + x^(p^(m-1)), in [0, p)."""
        self._check(x)
        if self.m == 1:
            return x
        if self._trace_tab is None and self.q <= _TABLE_Q_CAP:
            self._trace_tab = [self._trace_direct(v) for v in range(self.q)]
        if self._trace_tab is not None:
            return self._trace_tab[x]
        return self._trace_direct(x)

    def _trace_direct(self, x: int) -> int:
        acc, t = x, x
        for _ in range(self.m - 1):
            t = self.pow(t, self.p)
            acc = self.add(acc, t)
        # the trace lands in the prime subfield, whose encodings are < p
        assert acc < self.p
        return acc

    def quad_char(self, x: int) -> int:
        """Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise."""
        if self.q % 2 == 0:
            raise ValueError("quadratic character requires odd q")
        self._check(x)
        if x == 0:
            return 0
        if self.m == 1:
            return 1 if pow(x, (self.p - 1) // 2, self.p) == 1 else -1
        if self._exp is None:
            self._build_tables()
        return 1 if self._log[x] % 2 == 0 else -1


def field_create(p: int, m: int = 1, modulus=None) -> FiniteField:
    """Construct GF(p^m); with modulus omitted the deterministic default
    (lexicographically smallest monic irreducible) is used."""
    return FiniteField(p, m, modulus)


def parse_field_spec(spec: str) -> FiniteField:
    """Parse "p", "p^m", or "p^m/c0,c1,...,cm" into a field."""
    spec = spec.strip()
    mod = None
    if "/" in spec:
        spec, modpart = spec.split("/", 1)
        mod = [int(c) for c in modpart.split(",")]
    if "^" in spec:
        ppart, mpart = spec.split("^", 1)
        p, m = int(ppart), int(mpart)
    else:
        p, m = int(spec), 1
    return FiniteField(p, m, mod)
