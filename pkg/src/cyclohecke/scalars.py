"""Schur elements and the scalars attached to block compositions.

Everything in this module is a closed formula.  The Schur element of a
multipartition is the hook-length product over pairs of components; its
block-wise analogue multiplies the d-component Schur elements of the
blocks, where the eps-twist of the block parameters cancels in every
parameter ratio.  The scalar f attached to (lam, b) is a Laurent
polynomial given by the cross-block part of the same hook product, and g
is the distinguished p_lam-th root of a root of unity times f, fixed by
choosing the trivial root.  The identities connecting these values to the
trace form and to the shift endomorphisms are exercised by the test suite
against the seminormal representations.

All exponents that are a priori rational are computed exactly and
asserted integral before use.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .combin import (
    Multipartition,
    beta,
    check_composition,
    check_partition,
    comp_stats,
    component_index,
)
from .exactnum import GenericField, sample_point

__all__ = [
    "hook",
    "hook_value",
    "schur_element",
    "schur_element_b",
    "f_lambda_closed",
    "g_lambda",
    "f_shift_factor",
    "verify_factorization",
    "ScalarBundle",
    "scalar_bundle",
]


def hook(la, mu, i: int, j: int) -> int:
    """Generalized hook length la_i - i + mu'_j - j + 1 for (i,j) in [la]."""
    la = check_partition(la)
    mu = check_partition(mu)
    if not (1 <= i <= len(la) and 1 <= j <= la[i - 1]):
        raise ValueError(f"node ({i},{j}) outside the diagram of {la}")
    mu_conj_j = sum(1 for part in mu if part >= j)
    return la[i - 1] - i + mu_conj_j - j + 1


def _twisted_hook(field, comps, p: int, d: int, i: int, j: int, s: int, t: int):
    """eps^(p_s-p_t) q^hook Q_{d_s} / Q_{d_t} for components s, t of comps."""
    ps, ds = component_index(s, p, d)
    pt, dt = component_index(t, p, d)
    value = field.q_power(hook(comps[s - 1], comps[t - 1], i, j))
    if ps != pt:
        value = value * field.eps_pow(ps - pt)
    if ds != dt:
        value = value * field.Q_power(ds, 1) * field.Q_power(dt, -1)
    return value


def hook_value(la: Multipartition, i: int, j: int, s: int, t: int, field):
    """The parameter-twisted hook of la at node (i,j,s) against component t."""
    if not 1 <= t <= la.r:
        raise ValueError(f"component index out of range: {t}")
    return _twisted_hook(field, la.comps, la.p, la.d, i, j, s, t)


def _boxes(comps):
    for s, comp in enumerate(comps, start=1):
        for i, row in enumerate(comp, start=1):
            for j in range(1, row + 1):
                yield i, j, s


def _pooled(comps) -> tuple:
    """All parts of a tuple of partitions, sorted into one partition."""
    return tuple(sorted((x for c in comps for x in c), reverse=True))


def _schur_product(field, comps, p: int, d: int):
    """Hook product formula for the Schur element of a p*d-component tuple."""
    m = p * d
    n = sum(sum(c) for c in comps)
    value = field.q_power(-beta(_pooled(comps))) / (field.q - field.one) ** n
    if (n * (m - 1)) % 2:
        value = -value
    for i, j, s in _boxes(comps):
        for t in range(1, m + 1):
            value = value * (_twisted_hook(field, comps, p, d, i, j, s, t) - field.one)
    return value


def schur_element(r: int, la: Multipartition, field):
    """Schur element of an r-parameter algebra via the hook product formula."""
    if la.r != r:
        raise ValueError(f"multipartition has {la.r} components, expected {r}")
    if (field.p, field.d) != (la.p, la.d):
        raise ValueError("field context mismatch")
    return _schur_product(field, la.comps, la.p, la.d)


def schur_element_b(la: Multipartition, b, field):
    """Product over blocks t of the d-component Schur elements at eps^t Q.

    The eps^t twist cancels in every parameter ratio Q_i/Q_j inside a
    block, so each factor is the plain d-parameter Schur element of the
    block.
    """
    b = check_composition(b)
    if la.composition() != b:
        raise ValueError(f"block sizes {la.composition()} do not match b = {b}")
    value = field.one
    for t in range(1, la.p + 1):
        value = value * _schur_product(field, la.block(t), 1, la.d)
    return value


def _assert_laurent(field, value, name: str):
    if field.is_generic:
        assert len(value.den.terms) == 1, f"{name} must be a Laurent polynomial"


class _Exponents(NamedTuple):
    orbit: int       # least block shift fixing la
    split: int       # p / orbit
    root_size: int   # size of the repeating slice
    gamma: int       # q-exponent of f
    gamma_root: int  # q-exponent of g
    eps_f: int       # eps-exponent of f
    eps_g: int       # eps-exponent of g


def _exponents(la: Multipartition, b) -> _Exponents:
    p, d, n = la.p, la.d, la.size
    ab, lwb = comp_stats(b)
    orbit, split = la.orbit_order()
    gamma = lwb - beta(la.arrow()) + sum(beta(_pooled(blk)) for blk in la.blocks())
    assert gamma % split == 0, "q-exponent of g must be an integer"
    eps_f = d * n * (p * (p - 1) // 2) - d * ab
    eps_g = Fraction(n // split * (la.r * p - d * orbit), 2) - Fraction(d * ab, split)
    assert eps_g.denominator == 1, "eps-exponent of g must be an integer"
    return _Exponents(orbit, split, n // split, gamma, gamma // split, eps_f, int(eps_g))


def f_lambda_closed(la: Multipartition, b, field):
    """Closed Laurent-polynomial formula for the scalar f attached to (la, b)."""
    b = check_composition(b)
    if la.composition() != b:
        raise ValueError(f"block sizes {la.composition()} do not match b = {b}")
    p, d, n = la.p, la.d, la.size
    exps = _exponents(la, b)
    value = field.eps_pow(exps.eps_f) * field.q_power(exps.gamma)
    for c in range(1, d + 1):
        value = value * field.Q_power(c, n * (p - 1))
    for i, j, s in _boxes(la.comps):
        ps = component_index(s, p, d)[0]
        for t in range(1, la.r + 1):
            if component_index(t, p, d)[0] == ps:
                continue
            value = value * (_twisted_hook(field, la.comps, p, d, i, j, s, t) - field.one)
    _assert_laurent(field, value, "f")
    return value


def g_lambda(la: Multipartition, b, field):
    """The distinguished split-th root of (a root of unity times) f.

    The hook product runs over the repeating slice of la with its own
    block structure, each factor further twisted by the powers of
    eps^orbit; the trivial root of unity is chosen to normalize the
    result.
    """
    b = check_composition(b)
    if la.composition() != b:
        raise ValueError(f"block sizes {la.composition()} do not match b = {b}")
    p, d = la.p, la.d
    exps = _exponents(la, b)
    root = la.orbit_slice()
    value = field.eps_pow(exps.eps_g) * field.q_power(exps.gamma_root)
    for c in range(1, d + 1):
        value = value * field.Q_power(c, exps.root_size * (p - 1))
    for i, j, s in _boxes(root.comps):
        ps = component_index(s, exps.orbit, d)[0]
        for t in range(1, exps.orbit * d + 1):
            pt = component_index(t, exps.orbit, d)[0]
            for a in range(exps.split):
                if a == 0 and pt == ps:
                    continue
                twisted = _twisted_hook(field, root.comps, exps.orbit, d, i, j, s, t)
                value = value * (field.eps_pow(a * exps.orbit) * twisted - field.one)
    _assert_laurent(field, value, "g")
    return value


def f_shift_factor(la: Multipartition, t: int, field):
    """The t-th factor in the telescoping factorization of f, t in 1..split."""
    exps = _exponents(la, la.composition())
    if not 1 <= t <= exps.split:
        raise ValueError(f"factor index {t} out of range 1..{exps.split}")
    shift = -(t - 1) * la.d * exps.orbit * exps.root_size
    return field.eps_pow(shift) * g_lambda(la, la.composition(), field)


def verify_factorization(la: Multipartition, b, mode: str = "symbolic",
                         points=None, trials: int = 3, rng=None) -> bool:
    """Check g^split = eps^E f with E = d * orbit * root_size * C(split, 2)."""
    b = check_composition(b)
    exps = _exponents(la, b)
    e_root = la.d * exps.orbit * exps.root_size * (exps.split * (exps.split - 1) // 2)

    def holds(field) -> bool:
        f = f_lambda_closed(la, b, field)
        g = g_lambda(la, b, field)
        return g ** exps.split == field.eps_pow(e_root) * f

    if mode == "symbolic":
        return holds(GenericField(la.p, la.d))
    if mode != "random":
        raise ValueError(f"unknown mode: {mode!r}")
    if points is None:
        import random

        rng = rng if rng is not None else random.Random(0)
        points = [sample_point(la.p, la.d, max(la.size, 1), rng) for _ in range(trials)]
    return all(holds(pt) for pt in points)


class ScalarBundle(NamedTuple):
    shape: Multipartition
    b: tuple
    schur: object
    schur_b: object
    f: object
    g: object
    orbit: int
    split: int
    root_size: int
    gamma_root: int
    eps_exp: int


def scalar_bundle(la: Multipartition, b, field) -> ScalarBundle:
    """All scalars attached to (la, b) over the given field, in one record."""
    b = check_composition(b)
    exps = _exponents(la, b)
    return ScalarBundle(
        shape=la,
        b=b,
        schur=schur_element(la.r, la, field),
        schur_b=schur_element_b(la, b, field),
        f=f_lambda_closed(la, b, field),
        g=g_lambda(la, b, field),
        orbit=exps.orbit,
        split=exps.split,
        root_size=exps.root_size,
        gamma_root=exps.gamma_root,
        eps_exp=exps.eps_g,
    )
