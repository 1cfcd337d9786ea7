"""Exact arithmetic over cyclotomic fields and Laurent rational functions.

The scalar tower used throughout the package:

* ``CycRat``: an element of Q(zeta_m), stored as the reduced residue of a
  polynomial in zeta_m modulo the m-th cyclotomic polynomial Phi_m.  The
  symbolic layer works with m = p (the order of eps); specialization points
  may use any conductor N with p | N.
* ``LaurentPoly``: a Laurent polynomial in q, Q_1, ..., Q_d (variable 0 is
  always q) with CycRat coefficients.
* ``RatFunc``: an unreduced ratio of Laurent polynomials.  Equality is
  cross-multiplication equality; construction performs a cheap content
  normalization (a common monomial shift and a scaling that makes the
  denominator's lex-least coefficient 1) so values do not drift into huge
  representations.  No multivariate gcd is ever computed.
* ``SpecPoint``: an exact evaluation point (eps, q, Q_1, ..., Q_d) with all
  coordinates in Q(zeta_N) and eps = zeta_N^(N/p).

All values are immutable and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

__all__ = [
    "PoleError",
    "CycRat",
    "LaurentPoly",
    "RatFunc",
    "SpecPoint",
    "GenericField",
    "cyclotomic_poly",
    "eps_pow",
    "generic_field",
    "specialize",
    "is_separated",
    "is_semisimple",
    "sample_point",
    "laurent_to_json",
    "ratfunc_to_json",
]


class PoleError(ArithmeticError):
    """A denominator vanished while specializing a rational function."""


def _poly_div_exact(num: list, den: Sequence) -> list:
    """Divide num by monic den in Z[x] (coefficients low to high), exactly."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple:
    """Coefficients of Phi_m(x), low to high, as integers."""
    if m < 1:
        raise ValueError("cyclotomic polynomial needs m >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for k in range(1, m):
        if m % k == 0:
            poly = _poly_div_exact(poly, cyclotomic_poly(k))
    return tuple(poly)


@lru_cache(maxsize=None)
def _field_data(order: int):
    """Degree of Q(zeta_order) and reduction rows for x^deg .. x^(2deg-2)."""
    phi = cyclotomic_poly(order)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(-c) for c in phi[:deg]]
    rows.append(tuple(cur))
    for _ in range(deg - 2):
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            cur = [a + top * b for a, b in zip(cur, rows[0])]
        rows.append(tuple(cur))
    return deg, tuple(rows)


def _poly_mod(order: int, coeffs: Sequence[Fraction]) -> tuple:
    """Reduce an arbitrary-degree polynomial in zeta_order modulo Phi_order."""
    deg, _ = _field_data(order)
    phi = cyclotomic_poly(order)
    work = [Fraction(c) for c in coeffs]
    if len(work) < deg:
        work += [Fraction(0)] * (deg - len(work))
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            for j in range(deg + 1):
                work[i - deg + j] -= c * phi[j]
    return tuple(work[:deg])


def _poly_xgcd(a: list, b: list):
    """Extended gcd in Q[x]; returns (g, s) with s*a = g mod b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], [Fraction(0)]

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    r0, r1 = trim(r0), trim(r1)
    while r1:
        q = [Fraction(0)] * (len(r0) - len(r1) + 1) if len(r0) >= len(r1) else []
        rem = list(r0)
        for i in range(len(rem) - 1, len(r1) - 2, -1):
            if i - len(r1) + 1 < 0:
                break
            c = rem[i] / r1[-1]
            if c:
                q[i - len(r1) + 1] = c
                for j, bc in enumerate(r1):
                    rem[i - len(r1) + 1 + j] -= c * bc
        rem = trim(rem)
        new_s = list(s0)
        for i, qc in enumerate(q):
            if qc:
                while len(new_s) < i + len(s1):
                    new_s.append(Fraction(0))
                for j, sc in enumerate(s1):
                    new_s[i + j] -= qc * sc
        r0, r1 = r1, rem
        s0, s1 = s1, trim(new_s)
    return r0, s0


class CycRat:
    """An element of Q(zeta_order), reduced modulo Phi_order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: tuple):
        self.order = order
        self.coeffs = coeffs

    @staticmethod
    def make(order: int, coeffs: Iterable[Rational]) -> "CycRat":
        return CycRat(order, _poly_mod(order, [Fraction(c) for c in coeffs]))

    @staticmethod
    def from_rational(order: int, value: Rational) -> "CycRat":
        deg, _ = _field_data(order)
        return CycRat(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @staticmethod
    def zeta(order: int) -> "CycRat":
        return CycRat.make(order, [0, 1])

    def _coerce(self, other):
        if isinstance(other, CycRat):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycRat.from_rational(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycRat(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycRat(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycRat(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        deg, rows = _field_data(self.order)
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        res = conv[:deg]
        for k in range(deg, 2 * deg - 1):
            c = conv[k]
            if c:
                row = rows[k - deg]
                for j in range(deg):
                    if row[j]:
                        res[j] += c * row[j]
        return CycRat(self.order, tuple(res))

    __rmul__ = __mul__

    def inverse(self) -> "CycRat":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        g, s = _poly_xgcd(list(self.coeffs), [Fraction(c) for c in cyclotomic_poly(self.order)])
        if len(g) != 1:
            raise ArithmeticError("zero divisor in cyclotomic field")
        inv = [c / g[0] for c in s]
        return CycRat(self.order, _poly_mod(self.order, inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "CycRat":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycRat.from_rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __repr__(self):
        return f"CycRat({self.order}, {[str(c) for c in self.coeffs]})"


def eps_pow(p: int, k: int) -> CycRat:
    """eps^k in Q(eps), eps a primitive p-th root of unity; needs p >= 2."""
    if p < 2:
        raise ValueError("invalid order: a primitive root of unity needs p >= 2")
    return CycRat.zeta(p) ** (k % p)


class LaurentPoly:
    """Laurent polynomial in q, Q_1..Q_d over Q(zeta_order); variable 0 is q."""

    __slots__ = ("order", "nvars", "terms")

    def __init__(self, order: int, nvars: int, terms: dict):
        self.order = order
        self.nvars = nvars
        self.terms = terms

    @staticmethod
    def zero(order: int, nvars: int) -> "LaurentPoly":
        return LaurentPoly(order, nvars, {})

    @staticmethod
    def constant(order: int, nvars: int, value) -> "LaurentPoly":
        c = value if isinstance(value, CycRat) else CycRat.from_rational(order, value)
        if c.order != order:
            raise ValueError("coefficient from a different cyclotomic order")
        if not c:
            return LaurentPoly.zero(order, nvars)
        return LaurentPoly(order, nvars, {(0,) * nvars: c})

    @staticmethod
    def monomial(order: int, nvars: int, exps: Sequence[int], coeff) -> "LaurentPoly":
        c = coeff if isinstance(coeff, CycRat) else CycRat.from_rational(order, coeff)
        if not c:
            return LaurentPoly.zero(order, nvars)
        return LaurentPoly(order, nvars, {tuple(exps): c})

    @staticmethod
    def variable(order: int, nvars: int, i: int) -> "LaurentPoly":
        exps = [0] * nvars
        exps[i] = 1
        return LaurentPoly.monomial(order, nvars, exps, 1)

    def _check(self, other: "LaurentPoly"):
        if self.order != other.order or self.nvars != other.nvars:
            raise ValueError("Laurent polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            if cur is None:
                terms[e] = c
            else:
                s = cur + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return LaurentPoly(self.order, self.nvars, terms)

    def __neg__(self):
        return LaurentPoly(self.order, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                cur = terms.get(e)
                if cur is None:
                    if c:
                        terms[e] = c
                else:
                    s = cur + c
                    if s:
                        terms[e] = s
                    else:
                        del terms[e]
        return LaurentPoly(self.order, self.nvars, terms)

    def scale(self, coeff: CycRat) -> "LaurentPoly":
        if not coeff:
            return LaurentPoly.zero(self.order, self.nvars)
        return LaurentPoly(self.order, self.nvars, {e: c * coeff for e, c in self.terms.items()})

    def shift(self, vec: Sequence[int]) -> "LaurentPoly":
        vec = tuple(vec)
        return LaurentPoly(
            self.order, self.nvars,
            {tuple(a + b for a, b in zip(e, vec)): c for e, c in self.terms.items()},
        )

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial; use RatFunc")
        result = LaurentPoly.constant(self.order, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.order, self.nvars, self.terms) == (other.order, other.nvars, other.terms)

    def __bool__(self):
        return bool(self.terms)

    def content(self) -> tuple:
        """Componentwise minimum exponent over all terms (zero poly: origin)."""
        if not self.terms:
            return (0,) * self.nvars
        its = iter(self.terms)
        mins = list(next(its))
        for e in its:
            for i, v in enumerate(e):
                if v < mins[i]:
                    mins[i] = v
        return tuple(mins)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0])

    def lex_least_coeff(self) -> CycRat:
        if not self.terms:
            return CycRat.from_rational(self.order, 0)
        return self.terms[min(self.terms)]

    def eval(self, values: Sequence, embed) -> CycRat:
        """Evaluate with variable i set to values[i]; embed maps coefficients."""
        total = None
        for e, c in self.terms.items():
            term = embed(c)
            for i, k in enumerate(e):
                if k:
                    term = term * values[i] ** k
            total = term if total is None else total + term
        if total is None:
            return embed(CycRat.from_rational(self.order, 0))
        return total

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        names = ["q"] + [f"Q{i}" for i in range(1, self.nvars)]
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{names[i]}^{k}" if k != 1 else names[i]
                for i, k in enumerate(e) if k
            )
            bits.append(f"({c!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


class RatFunc:
    """Unreduced ratio of Laurent polynomials over Q(zeta_order)."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = None):
        if den is None:
            den = LaurentPoly.constant(num.order, num.nvars, 1)
        num._check(den)
        if not den:
            raise ZeroDivisionError("zero denominator in rational function")
        if not num:
            num = LaurentPoly.zero(num.order, num.nvars)
            den = LaurentPoly.constant(num.order, num.nvars, 1)
        else:
            cn = num.content()
            cd = den.content()
            vec = tuple(-min(a, b) for a, b in zip(cn, cd))
            if any(vec):
                num = num.shift(vec)
                den = den.shift(vec)
            lead = den.lex_least_coeff()
            if lead != CycRat.from_rational(den.order, 1):
                inv = lead.inverse()
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, CycRat)):
            return RatFunc(LaurentPoly.constant(self.num.order, self.num.nvars, other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        num = self.num ** k
        den = self.den ** k
        return RatFunc(num, den)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFunc(({self.num!r}) / ({self.den!r}))"


class GenericField:
    """Handle for symbolic computation in F = Q(eps_p)(q, Q_1..Q_d)."""

    is_generic = True

    def __init__(self, p: int, d: int):
        # p = 1 (eps trivial, plain Ariki-Koike) is allowed here so that
        # block-wise computations can reuse the same tower; the public
        # factory generic_field still requires p >= 2.
        if p < 1:
            raise ValueError("invalid order: the symbolic field needs p >= 1")
        if d < 1:
            raise ValueError("need at least one parameter Q_1")
        self.p = p
        self.d = d
        self.nvars = d + 1

    def scalar(self, value) -> RatFunc:
        return RatFunc(LaurentPoly.constant(self.p, self.nvars, value))

    @property
    def zero(self) -> RatFunc:
        return RatFunc(LaurentPoly.zero(self.p, self.nvars))

    @property
    def one(self) -> RatFunc:
        return self.scalar(1)

    def eps_pow(self, k: int) -> RatFunc:
        if self.p == 1:
            return self.one
        return self.scalar(eps_pow(self.p, k))

    def monomial(self, eps_k: int = 0, q_k: int = 0, Q_ks: Sequence[int] = ()) -> RatFunc:
        exps = [q_k] + list(Q_ks) + [0] * (self.d - len(Q_ks))
        coeff = CycRat.from_rational(1, 1) if self.p == 1 else eps_pow(self.p, eps_k)
        return RatFunc(LaurentPoly.monomial(self.p, self.nvars, exps, coeff))

    def q_power(self, k: int) -> RatFunc:
        return self.monomial(q_k=k)

    @property
    def q(self) -> RatFunc:
        return self.q_power(1)

    def Q_power(self, i: int, k: int) -> RatFunc:
        if not 1 <= i <= self.d:
            raise ValueError(f"Q_{i} out of range for d={self.d}")
        exps = [0] * self.nvars
        exps[i] = k
        return RatFunc(LaurentPoly.monomial(self.p, self.nvars, exps, 1))

    def Q(self, i: int) -> RatFunc:
        return self.Q_power(i, 1)

    def __eq__(self, other):
        return (isinstance(other, GenericField)
                and (self.p, self.d) == (other.p, other.d))

    def __hash__(self):
        return hash(("GenericField", self.p, self.d))

    def __repr__(self):
        return f"GenericField(p={self.p}, d={self.d})"


def generic_field(p: int, d: int) -> GenericField:
    if p < 2:
        raise ValueError("invalid order: a primitive root of unity needs p >= 2")
    return GenericField(p, d)


def _as_cycrat(order: int, value) -> CycRat:
    if isinstance(value, CycRat):
        if value.order != order:
            raise ValueError("cyclotomic order mismatch")
        return value
    return CycRat.from_rational(order, value)


class SpecPoint:
    """Exact evaluation point: eps = zeta_N^(N/p), q and Q_i in Q(zeta_N)."""

    is_generic = False

    __slots__ = ("p", "N", "q_val", "Q_vals")

    def __init__(self, p: int, N: int, q_val, Q_vals: Sequence):
        if p < 2:
            raise ValueError("invalid order: need p >= 2")
        if N < 1 or N % p != 0:
            raise ValueError("conductor N must be a positive multiple of p")
        self.p = p
        self.N = N
        self.q_val = _as_cycrat(N, q_val)
        self.Q_vals = tuple(_as_cycrat(N, v) for v in Q_vals)
        if not self.q_val:
            raise ValueError("q must be invertible (nonzero)")
        if not all(self.Q_vals):
            raise ValueError("all Q_i must be invertible (nonzero)")
        if not self.Q_vals:
            raise ValueError("need at least one parameter Q_1")

    @property
    def d(self) -> int:
        return len(self.Q_vals)

    @property
    def eps(self) -> CycRat:
        return self.eps_pow(1)

    def scalar(self, value) -> CycRat:
        return _as_cycrat(self.N, value)

    @property
    def zero(self) -> CycRat:
        return CycRat.from_rational(self.N, 0)

    @property
    def one(self) -> CycRat:
        return CycRat.from_rational(self.N, 1)

    def eps_pow(self, k: int) -> CycRat:
        return CycRat.zeta(self.N) ** (((self.N // self.p) * k) % self.N)

    def q_power(self, k: int) -> CycRat:
        return self.q_val ** k

    @property
    def q(self) -> CycRat:
        return self.q_val

    def Q_power(self, i: int, k: int) -> CycRat:
        if not 1 <= i <= self.d:
            raise ValueError(f"Q_{i} out of range for d={self.d}")
        return self.Q_vals[i - 1] ** k

    def Q(self, i: int) -> CycRat:
        return self.Q_power(i, 1)

    def embed(self, c: CycRat) -> CycRat:
        """Embed Q(zeta_m) into Q(zeta_N) for m | N via zeta_m -> zeta_N^(N/m)."""
        if c.order == self.N:
            return c
        if self.N % c.order != 0:
            raise ValueError(f"cannot embed order {c.order} into conductor {self.N}")
        root = CycRat.zeta(self.N) ** (self.N // c.order)
        acc = CycRat.from_rational(self.N, 0)
        power = CycRat.from_rational(self.N, 1)
        for a in c.coeffs:
            if a:
                acc = acc + power * a
            power = power * root
        return acc

    def to_json(self) -> dict:
        def enc(v: CycRat):
            if v.is_rational():
                r = v.rational_value()
                return [r.numerator, r.denominator]
            return [[c.numerator, c.denominator] for c in v.coeffs]

        return {
            "p": self.p,
            "N": self.N,
            "q": enc(self.q_val),
            "Q": [enc(v) for v in self.Q_vals],
        }

    @staticmethod
    def from_json(data: dict) -> "SpecPoint":
        p = data["p"]
        N = data["N"]

        def dec(v):
            if isinstance(v, (int, float, str)):
                return Fraction(v)
            if v and isinstance(v[0], (list, tuple)):
                return CycRat.make(N, [Fraction(a, b) for a, b in v])
            a, b = v
            return Fraction(a, b)

        return SpecPoint(p, N, dec(data["q"]), [dec(v) for v in data["Q"]])

    def __eq__(self, other):
        return (isinstance(other, SpecPoint)
                and (self.p, self.N, self.q_val, self.Q_vals)
                == (other.p, other.N, other.q_val, other.Q_vals))

    def __hash__(self):
        return hash(("SpecPoint", self.p, self.N, self.q_val, self.Q_vals))

    def __repr__(self):
        return f"SpecPoint(p={self.p}, N={self.N}, q={self.q_val!r}, Q={list(self.Q_vals)!r})"


def specialize(f, pt: SpecPoint) -> CycRat:
    """Exact evaluation of f at pt; raises PoleError on a vanishing denominator."""
    if isinstance(f, RatFunc):
        num = specialize(f.num, pt)
        den = specialize(f.den, pt)
        if not den:
            raise PoleError("denominator vanishes at the specialization point")
        return num / den
    if isinstance(f, LaurentPoly):
        if f.nvars != pt.d + 1:
            raise ValueError(f"polynomial in {f.nvars} variables, point has d={pt.d}")
        values = (pt.q_val,) + pt.Q_vals
        return f.eval(values, pt.embed)
    if isinstance(f, (CycRat, int, Fraction)):
        return pt.embed(f) if isinstance(f, CycRat) else pt.scalar(f)
    raise TypeError(f"cannot specialize {type(f).__name__}")


def is_separated(pt: SpecPoint, n: int, d: int = None, p: int = None) -> bool:
    """Whether prod_{i,j<=d} prod_{|k|<n} prod_{0<t<p} (Q_i - eps^t q^k Q_j) != 0."""
    if d is None:
        d = pt.d
    if p is None:
        p = pt.p
    if d > pt.d:
        raise ValueError(f"point has only d={pt.d} parameters")
    if p != pt.p:
        raise ValueError(f"point has p={pt.p}")
    for i in range(1, d + 1):
        Qi = pt.Q_vals[i - 1]
        for j in range(1, d + 1):
            Qj = pt.Q_vals[j - 1]
            for k in range(-(n - 1), n):
                qk = pt.q_power(k)
                for t in range(1, p):
                    if not (Qi - pt.eps_pow(t) * qk * Qj):
                        return False
    return True


def is_semisimple(pt: SpecPoint, n: int, d: int = None) -> bool:
    """Semisimplicity criterion for the parameter list (eps^1 Q, ..., eps^p Q).

    Requires q^k rho_i != rho_j for all i < j, |k| < n, and the partial
    q-factorials 1 + q + ... + q^(i-1) nonzero for i <= n.  Together with
    separation this guarantees seminormal denominators never vanish.
    """
    if d is None:
        d = pt.d
    # q = 1 collapses same-component content differences q^a - q^b even
    # though [i]_q stays nonzero, so it is excluded for n >= 2
    if n >= 2 and pt.q_val == pt.one:
        return False
    rho = [pt.eps_pow(u) * pt.Q_vals[c - 1]
           for u in range(1, pt.p + 1) for c in range(1, d + 1)]
    r = len(rho)
    for i in range(r):
        for j in range(i + 1, r):
            for k in range(-(n - 1), n):
                if not (pt.q_power(k) * rho[i] - rho[j]):
                    return False
    # partial q-integers [i]_q = 1 + q + ... + q^(i-1)
    qint = pt.one
    qpow = pt.one
    for i in range(2, n + 1):
        qpow = qpow * pt.q_val
        qint = qint + qpow
        if not qint:
            return False
    return True


def sample_point(p: int, d: int, n: int, rng, lo: int = 2, hi: int = 10 ** 6) -> SpecPoint:
    """Random separated, semisimple SpecPoint with integer coordinates in [lo, hi]."""
    while True:
        q = rng.randint(lo, hi)
        Qs = [rng.randint(lo, hi) for _ in range(d)]
        pt = SpecPoint(p, p, q, Qs)
        if is_separated(pt, n) and is_semisimple(pt, n):
            return pt


def _coeff_json(c: CycRat) -> list:
    return [[f.numerator, f.denominator] for f in c.coeffs]


def laurent_to_json(poly: LaurentPoly) -> list:
    return [[list(e), _coeff_json(c)] for e, c in poly.sorted_terms()]


def ratfunc_to_json(f: RatFunc) -> dict:
    return {"num": laurent_to_json(f.num), "den": laurent_to_json(f.den)}
