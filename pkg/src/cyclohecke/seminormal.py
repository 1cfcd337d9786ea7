"""Faithful seminormal matrix models of the cyclotomic Hecke algebra.

Modules are right modules with the standard tableaux as basis, so a word
in the generators evaluates to the matrix product taken in the same
order.  T_0 is the diagonal of first contents; its cyclotomic relation
with parameters (eps Q_1, ..., eps^p Q_d) is what pins down the content
convention.
"""

from fractions import Fraction
from random import Random

from .combin import Multipartition, component_index, enumerate_all
from .exactnum import CycRat, RatFunc, generic_field, sample_point
from .matrices import (
    mat_add,
    mat_diag,
    mat_eq,
    mat_identity,
    mat_is_zero,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_trace,
)
from .tableau import beta_coeff, content, count_std, enumerate_std


def cyclotomic_params(field) -> list:
    """The T_0 eigenvalue list (eps Q_1, ..., eps^p Q_d) in block order."""
    r = field.p * field.d
    return [
        field.eps_pow(pu) * field.Q(du)
        for pu, du in (component_index(u, field.p, field.d)
                       for u in range(1, r + 1))
    ]


class SeminormalRep:
    """Exact matrices for T_0..T_{n-1} and L_1..L_n on one Specht module."""

    def __init__(self, shape: Multipartition, field):
        if (shape.p, shape.d) != (field.p, field.d):
            raise ValueError("shape and field have different (p, d) context")
        self.shape = shape
        self.field = field
        self.basis = enumerate_std(shape)
        self.dim = len(self.basis)
        self.index = {s: a for a, s in enumerate(self.basis)}
        self.n = shape.size

        self.lmat = [
            mat_diag([content(s, k, field) for s in self.basis])
            for k in range(1, self.n + 1)
        ]

        self.tmat = {}
        if self.n:
            self.tmat[0] = self.lmat[0]
        for i in range(1, self.n):
            rows = []
            for a, s in enumerate(self.basis):
                row = [field.zero] * self.dim
                bc = beta_coeff(s, i, field)
                row[a] = bc
                t = s.swap(i)
                if t.is_standard():
                    row[self.index[t]] = field.one + bc
                rows.append(tuple(row))
            self.tmat[i] = tuple(rows)

        # the recursion q^-1 T_k L_k T_k must reproduce the content diagonals
        qinv = field.q_power(-1)
        for k in range(1, self.n):
            recursed = mat_scale(
                qinv, mat_mul(self.tmat[k], mat_mul(self.lmat[k - 1],
                                                    self.tmat[k])))
            assert mat_eq(recursed, self.lmat[k]), (
                f"L_{k + 1} recursion disagrees with contents on {shape!r}")

        self._tinv = {}

    def identity(self) -> tuple:
        return mat_identity(self.dim, self.field)

    def t_matrix(self, i: int) -> tuple:
        if not 0 <= i <= self.n - 1:
            raise ValueError(f"T_{i} out of range for n={self.n}")
        return self.tmat[i]

    def l_matrix(self, k: int) -> tuple:
        if not 1 <= k <= self.n:
            raise ValueError(f"L_{k} out of range for n={self.n}")
        return self.lmat[k - 1]

    def t_inverse(self, i: int) -> tuple:
        if i in self._tinv:
            return self._tinv[i]
        field = self.field
        if i == 0:
            # from the cyclotomic identity: T_0 * sum_{k>=1} a_k T_0^(k-1)
            # = -a_0, with a_k the coefficients of prod_u (x - rho_u)
            coeffs = [field.one]
            for rho in cyclotomic_params(field):
                nxt = [field.zero] * (len(coeffs) + 1)
                for e, c in enumerate(coeffs):
                    nxt[e + 1] = nxt[e + 1] + c
                    nxt[e] = nxt[e] - rho * c
                coeffs = nxt
            acc = mat_scale(coeffs[1], self.identity())
            power = self.identity()
            for k in range(2, len(coeffs)):
                power = mat_mul(power, self.tmat[0])
                acc = mat_add(acc, mat_scale(coeffs[k], power))
            out = mat_scale(-coeffs[0].inverse(), acc)
        else:
            # quadratic relation: T_i^-1 = q^-1 (T_i + (1 - q))
            shifted = mat_add(
                self.t_matrix(i),
                mat_scale(field.one - field.q, self.identity()))
            out = mat_scale(field.q_power(-1), shifted)
        self._tinv[i] = out
        return out


_REP_CACHE = {}


def build_rep(shape: Multipartition, field) -> SeminormalRep:
    key = (shape, field)
    rep = _REP_CACHE.get(key)
    if rep is None:
        rep = _REP_CACHE[key] = SeminormalRep(shape, field)
    return rep


def check_relations(rep: SeminormalRep) -> list:
    """All defining relations as matrix identities; returns the failures."""
    failures = []
    field, n = rep.field, rep.n
    if n == 0:
        return failures
    ident = rep.identity()
    T = rep.tmat

    acc = ident
    for rho in cyclotomic_params(field):
        acc = mat_mul(acc, mat_sub(T[0], mat_scale(rho, ident)))
    if not mat_is_zero(acc):
        failures.append("cyclotomic relation for T_0")

    for i in range(1, n):
        lhs = mat_mul(mat_sub(T[i], mat_scale(field.q, ident)),
                      mat_add(T[i], ident))
        if not mat_is_zero(lhs):
            failures.append(f"quadratic relation for T_{i}")

    if n >= 2:
        t0t1 = mat_mul(T[0], T[1])
        t1t0 = mat_mul(T[1], T[0])
        if not mat_eq(mat_mul(t0t1, t0t1), mat_mul(t1t0, t1t0)):
            failures.append("braid relation T_0T_1T_0T_1 = T_1T_0T_1T_0")

    for i in range(1, n - 1):
        lhs = mat_mul(T[i], mat_mul(T[i + 1], T[i]))
        rhs = mat_mul(T[i + 1], mat_mul(T[i], T[i + 1]))
        if not mat_eq(lhs, rhs):
            failures.append(f"braid relation at T_{i}, T_{i + 1}")

    for j in range(2, n):
        if not mat_eq(mat_mul(T[0], T[j]), mat_mul(T[j], T[0])):
            failures.append(f"commutation T_0 T_{j}")

    for i in range(1, n):
        for j in range(i + 2, n):
            if not mat_eq(mat_mul(T[i], T[j]), mat_mul(T[j], T[i])):
                failures.append(f"commutation T_{i} T_{j}")

    return failures


def _scalar_token(field, value):
    if isinstance(value, (RatFunc, CycRat)):
        if isinstance(value, CycRat) and not field.is_generic:
            return field.embed(value)
        if isinstance(value, CycRat):
            return field.scalar(value)
        return value
    if isinstance(value, bool):
        raise TypeError("boolean is not a scalar")
    if isinstance(value, (int, Fraction)):
        return field.scalar(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 \
            and all(isinstance(x, int) for x in value):
        return field.scalar(Fraction(value[0], value[1]))
    raise TypeError(f"cannot read scalar token {value!r}")


def eval_word(rep: SeminormalRep, word) -> tuple:
    """Evaluate a token word; an empty word is the identity."""
    acc = None
    for item in word:
        tag = item[0]
        if tag == "T":
            m = rep.t_matrix(item[1])
        elif tag == "Tinv":
            m = rep.t_inverse(item[1])
        elif tag == "L":
            m = rep.l_matrix(item[1])
        elif tag == "scal":
            m = mat_scale(_scalar_token(rep.field, item[1]), rep.identity())
        elif tag == "sum":
            m = None
            for sub in item[1]:
                part = eval_word(rep, sub)
                m = part if m is None else mat_add(m, part)
            if m is None:
                m = mat_scale(rep.field.zero, rep.identity())
        else:
            raise ValueError(f"unknown word token {tag!r}")
        acc = m if acc is None else mat_mul(acc, m)
    return rep.identity() if acc is None else acc


def character(shape: Multipartition, word, field):
    """Trace of the word on the module labelled by the shape."""
    rep = build_rep(shape, field)
    return mat_trace(eval_word(rep, word))


def _resolve_word(word, field):
    return word(field) if callable(word) else word


def mode_fields(p, d, n, mode: str = "auto", points=None,
                trials: int = 3, rng=None) -> list:
    """Fields to check an identity over: explicit points, one generic
    field, or `trials` sampled separated semisimple points.

    The auto rule goes symbolic only while the direct sum of all modules
    stays small, since symbolic products in several variables explode.
    """
    if points is not None:
        return list(points)
    if mode == "auto":
        total = sum(count_std(s) ** 2 for s in enumerate_all(p, d, n))
        mode = "symbolic" if total <= 40 else "random"
    if mode == "symbolic":
        return [generic_field(p, d)]
    if mode == "random":
        rng = rng or Random(0)
        return [sample_point(p, d, n, rng) for _ in range(trials)]
    raise ValueError(f"unknown mode {mode!r}")


def element_equal(p, d, n, w1, w2, mode: str = "auto",
                  points=None, trials: int = 3, rng=None) -> bool:
    """Equality in the algebra via the direct sum of all modules.

    Symbolic mode is an exact proof; random mode checks the identity at
    `trials` separated semisimple specialization points.
    """
    shapes = enumerate_all(p, d, n)
    fields = mode_fields(p, d, n, mode, points, trials, rng)
    for field in fields:
        u1 = _resolve_word(w1, field)
        u2 = _resolve_word(w2, field)
        for shape in shapes:
            rep = build_rep(shape, field)
            if not mat_eq(eval_word(rep, u1), eval_word(rep, u2)):
                return False
    return True
