"""Distinguished algebra elements as evaluable words, and their identities.

The central object is the block shuffle element v_b attached to a
composition b of n: a product of Jucys-Murphy ladders (the LL factors)
and block transposition elements T_{a,b}.  Everything here manipulates
token words, never structure constants; equality of elements is decided
through the faithful seminormal matrices, and the canonical symmetrizing
trace is evaluated as the weighted sum of module characters with Schur
element weights.

Word builders that need scalar coefficients take the field first, so a
builder partially applied to everything but the field is exactly the
callable form the equality checker accepts.
"""

from __future__ import annotations

from itertools import permutations as _perm_tuples
from itertools import product as _cartesian
from typing import NamedTuple

from .combin import (
    Multipartition,
    check_composition,
    comp_stats,
    enumerate_all,
    inversions,
    partial_sum,
    reduced_word,
    wab_perm,
    wb_perm,
)
from .matrices import mat_eq, mat_is_zero, mat_mul, mat_rank, mat_scale
from .scalars import schur_element
from .seminormal import build_rep, element_equal, eval_word, mode_fields
from .tableau import count_std


class VerificationError(Exception):
    """A structural identity the algebra guarantees failed to check out."""


# ---------------------------------------------------------------------------
# LL ladders and transposition words

def superscripts(i: int, j: int, p: int) -> list:
    """The twist exponents of an LL^(i..j) ladder, reduced mod p.

    For i <= j this is i..j; past the end of the cycle it wraps around
    as 1..j followed by i..p, never containing the missing residue.
    """
    i = (i - 1) % p + 1
    j = (j - 1) % p + 1
    if i <= j:
        return list(range(i, j + 1))
    return list(range(1, j + 1)) + list(range(i, p + 1))


def ll_word(field, s: int, lo: int, hi: int) -> list:
    """Product of (L_k - eps^s Q_i) over k = lo..hi and i = 1..d."""
    if lo < 1:
        raise ValueError(f"L index out of range: {lo}")
    out = []
    for k in range(lo, hi + 1):
        for i in range(1, field.d + 1):
            root = field.eps_pow(s) * field.Q(i)
            out.append(("sum", [[("L", k)], [("scal", -root)]]))
    return out


def ll_range_word(field, i: int, j: int, lo: int, hi: int,
                  twist: int = 0) -> list:
    """LL ladders for every superscript in the i..j window, twisted."""
    out = []
    for s in superscripts(i, j, field.p):
        out.extend(ll_word(field, s + twist, lo, hi))
    return out


def t_word(perm: tuple) -> list:
    return [("T", i) for i in reduced_word(perm)]


def t_ab_word(a: int, b: int, shift: int = 0) -> list:
    """The block swap T_{a,b}, through a reduced word of w_{a,b}."""
    return t_word(wab_perm(a, b, shift))


def tb_word(b) -> list:
    """The full shuffle T_b moving every block past all later ones."""
    return t_word(wb_perm(b))


# ---------------------------------------------------------------------------
# the shuffle elements v_b and their rewritings

def _match_context(field, b) -> tuple:
    b = check_composition(b)
    if len(b) != field.p:
        raise ValueError(
            f"composition has {len(b)} blocks but the field has p={field.p}"
        )
    return b


def vb_word(field, b, twist: int = 0) -> list:
    """The shuffle element v_b, or its eps^twist-shifted parameter twin.

    Ladder and swap factors interleave from the last block down to the
    second, then the plain ladders close the word in increasing twist
    order.
    """
    b = _match_context(field, b)
    p = field.p
    out = []
    for k in range(p - 1, 0, -1):
        out.extend(ll_range_word(field, 1, k, 1, b[k], twist))
        out.extend(t_ab_word(b[k], partial_sum(b, 1, k)))
    for k in range(2, p + 1):
        out.extend(ll_word(field, k + twist, 1, partial_sum(b, 1, k - 1)))
    return out


def vb_pivot_word(field, b, j: int, twist: int = 0) -> list:
    """Rewriting of v_b pivoted at block j; the same element for every j.

    Four runs of factors, each read with decreasing index: mixed
    ladder-swap factors above the pivot, plain ladders below and above
    it, and swap-ladder factors back down to block two.
    """
    b = _match_context(field, b)
    p = field.p
    if not 1 <= j <= p:
        raise ValueError(f"pivot out of range: {j}")
    out = []
    for k in range(p - 1, j - 1, -1):
        out.extend(ll_range_word(field, j, k, 1, b[k], twist))
        out.extend(t_ab_word(b[k], partial_sum(b, j, k)))
    for i in range(j - 1, 0, -1):
        out.extend(ll_word(field, i + twist, 1, partial_sum(b, i + 1, p)))
    for k in range(p, j, -1):
        out.extend(ll_word(field, k + twist, 1, partial_sum(b, j, k - 1)))
    for i in range(j, 1, -1):
        out.extend(t_ab_word(partial_sum(b, i, p), b[i - 2]))
        out.extend(ll_range_word(field, i, p, 1, b[i - 2], twist))
    return out


def ub_plus_word(field, b, twist: int = 0) -> list:
    """The pure ladder tail of v_b: LL^(k) on 1..(b_1+..+b_{k-1})."""
    b = _match_context(field, b)
    out = []
    for k in range(2, field.p + 1):
        out.extend(ll_word(field, k + twist, 1, partial_sum(b, 1, k - 1)))
    return out


def ub_minus_word(field, b, twist: int = 0) -> list:
    """The pure ladder head of v_b: LL^(i) on 1..(b_{i+1}+..+b_p)."""
    b = _match_context(field, b)
    out = []
    for i in range(field.p - 1, 0, -1):
        out.extend(ll_word(field, i + twist, 1, partial_sum(b, i + 1, field.p)))
    return out


def vb_plus_word(field, b, twist: int = 0) -> list:
    """Mixed ladder-swap head with v_b = vb_plus * ub_plus."""
    b = _match_context(field, b)
    out = []
    for k in range(field.p - 1, 0, -1):
        out.extend(ll_range_word(field, 1, k, 1, b[k], twist))
        out.extend(t_ab_word(b[k], partial_sum(b, 1, k)))
    return out


def vb_minus_word(field, b, twist: int = 0) -> list:
    """Mixed swap-ladder tail with v_b = ub_minus * vb_minus."""
    b = _match_context(field, b)
    out = []
    for i in range(field.p, 1, -1):
        out.extend(t_ab_word(partial_sum(b, i, field.p), b[i - 2]))
        out.extend(ll_range_word(field, i, field.p, 1, b[i - 2], twist))
    return out


# ---------------------------------------------------------------------------
# the one-step shift factors Y_t

def shift_factor_word(field, b, t: int) -> list:
    """Y_t: the ladder over every twist except t on block t, then the
    swap moving that block past the rest.  Indices are cyclic in t."""
    b = _match_context(field, b)
    n = sum(b)
    bt = b[(t - 1) % field.p]
    out = ll_range_word(field, t + 1, t + field.p - 1, 1, bt)
    out.extend(t_ab_word(bt, n - bt))
    return out


def shift_run_word(field, b, t: int, m: int) -> list:
    """Y_{t,m}: the m-factor window Y_{tm+m} ... Y_{tm+1}, for t >= 0."""
    if m < 0:
        raise ValueError(f"window length out of range: {m}")
    out = []
    for u in range(t * m + m, t * m, -1):
        out.extend(shift_factor_word(field, b, u))
    return out


# ---------------------------------------------------------------------------
# row stabilizer words and the parameter ladder of a multipartition

def _row_sizes(la: Multipartition) -> list:
    return [part for comp in la.comps for part in comp]


def _young_perms(rows, n: int):
    """All permutations fixing the consecutive intervals of the sizes."""
    pools = []
    off = 0
    for r in rows:
        pools.append([tuple(off + x for x in w)
                      for w in _perm_tuples(range(1, r + 1))])
        off += r
    tail = tuple(range(off + 1, n + 1))
    for combo in _cartesian(*pools):
        yield tuple(x for img in combo for x in img) + tail


def young_sym_word(la: Multipartition) -> list:
    """Sum of T_w over the row stabilizer of the multipartition."""
    n = la.size
    return [("sum", [t_word(w) for w in _young_perms(_row_sizes(la), n)])]


def young_alt_word(la: Multipartition) -> list:
    """Signed sum of T_w over the row stabilizer."""
    n = la.size
    terms = []
    for w in _young_perms(_row_sizes(la), n):
        sign = [("scal", -1)] if inversions(w) % 2 else []
        terms.append(sign + t_word(w))
    return [("sum", terms)]


def ulam_plus_word(field, la: Multipartition) -> list:
    """The parameter ladder of the multipartition, block by block.

    Within block t the factor (L_j - eps^t Q_s) runs over the first
    a(s, t) positions of the block, where a(s, t) counts the boxes of
    the block's components before the s-th one.
    """
    if (field.p, field.d) != (la.p, la.d):
        raise ValueError("field and multipartition context mismatch")
    b = la.composition()
    out = []
    for t in range(1, la.p + 1):
        off = partial_sum(b, 1, t - 1)
        block = la.block(t)
        for s in range(2, la.d + 1):
            a_st = sum(sum(block[c]) for c in range(s - 1))
            root = field.eps_pow(t) * field.Q(s)
            for j in range(1, a_st + 1):
                out.append(("sum", [[("L", off + j)], [("scal", -root)]]))
    return out


# ---------------------------------------------------------------------------
# labelled element factory

def make(spec: dict):
    """Word builder (field -> token word) for a labelled element kind.

    The kinds mirror the named elements: LL and LLij ladders, Tab and Tb
    swaps, vb with its pivot rewritings and the ub/vb half words, the
    shift factors Y and Ym, and the multipartition words xla, yla, u+la.
    """
    kind = spec.get("kind")
    if kind == "LL":
        s, lo, hi = spec["s"], spec["lo"], spec["hi"]
        return lambda field: ll_word(field, s, lo, hi)
    if kind == "LLij":
        i, j, lo, hi = spec["i"], spec["j"], spec["lo"], spec["hi"]
        twist = spec.get("twist", 0)
        return lambda field: ll_range_word(field, i, j, lo, hi, twist)
    if kind == "Tab":
        a, b, shift = spec["a"], spec["b"], spec.get("shift", 0)
        return lambda field: t_ab_word(a, b, shift)
    if kind == "Tb":
        b = check_composition(spec["b"])
        return lambda field: tb_word(b)
    if kind in ("vb", "vb_pivot", "ub+", "ub-", "vb+", "vb-"):
        b = check_composition(spec["b"])
        twist = spec.get("twist", 0)
        builders = {
            "vb": vb_word, "ub+": ub_plus_word, "ub-": ub_minus_word,
            "vb+": vb_plus_word, "vb-": vb_minus_word,
        }
        if kind == "vb_pivot":
            j = spec["j"]
            return lambda field: vb_pivot_word(field, b, j, twist)
        fn = builders[kind]
        return lambda field: fn(field, b, twist)
    if kind == "Y":
        b, t = check_composition(spec["b"]), spec["t"]
        return lambda field: shift_factor_word(field, b, t)
    if kind == "Ym":
        b, t, m = check_composition(spec["b"]), spec["t"], spec["m"]
        return lambda field: shift_run_word(field, b, t, m)
    if kind in ("xla", "yla", "u+la"):
        la = Multipartition(spec["p"], spec["d"], spec["la"])
        if kind == "xla":
            word = young_sym_word(la)
            return lambda field: word
        if kind == "yla":
            word = young_alt_word(la)
            return lambda field: word
        return lambda field: ulam_plus_word(field, la)
    raise ValueError(f"unknown element kind {kind!r}")


# ---------------------------------------------------------------------------
# the canonical trace

_SCHUR_INVERSES = {}


def _schur_inverses(field, n: int) -> list:
    key = (field, n)
    if key not in _SCHUR_INVERSES:
        r = field.p * field.d
        _SCHUR_INVERSES[key] = [
            (shape, schur_element(r, shape, field).inverse())
            for shape in enumerate_all(field.p, field.d, n)
        ]
    return _SCHUR_INVERSES[key]


def trace(r: int, n: int, word, field):
    """The symmetrizing trace: characters weighted by 1/Schur element.

    On basis monomials this is the coefficient-of-identity form, so it
    vanishes on every monomial with a nonzero L part or a nontrivial
    permutation part.  The field must be semisimple for the expansion
    to exist; a vanishing Schur element raises ZeroDivisionError.
    """
    if r != field.p * field.d:
        raise ValueError(f"r={r} does not match the field ({field.p * field.d})")
    if callable(word):
        word = word(field)
    total = field.zero
    for shape, weight in _schur_inverses(field, n):
        rep = build_rep(shape, field)
        chi = field.zero
        mat = eval_word(rep, word)
        for i in range(len(mat)):
            chi = chi + mat[i][i]
        total = total + chi * weight
    return total


class TraceCheck(NamedTuple):
    value: object
    matched: bool


def vbtb_trace_closed(b, field):
    """Closed monomial value of the trace of v_b T_b."""
    b = _match_context(field, b)
    p, d, n = field.p, field.d, sum(b)
    ab, lwb = comp_stats(b)
    value = field.scalar((-1) ** (d * n * (p - 1))) * field.q_power(lwb)
    value = value * field.eps_pow(d * n * (p * (p - 1) // 2) - d * ab)
    for i in range(1, d + 1):
        value = value * field.Q_power(i, n * (p - 1))
    return value


def trace_vbtb(b, field) -> TraceCheck:
    """The closed trace of v_b T_b, cross-checked against the character
    expansion of the actual word."""
    b = _match_context(field, b)
    closed = vbtb_trace_closed(b, field)
    word = vb_word(field, b) + tb_word(b)
    expanded = trace(field.p * field.d, sum(b), word, field)
    return TraceCheck(closed, closed == expanded)


# ---------------------------------------------------------------------------
# eigenvalue extraction for the scalars f

def flam_eigen_oracle(b, field) -> dict:
    """The scalar of each module with matching block sizes, read off the
    proportionality of v_b T_b against v_b in the seminormal model.

    Left multiplication by v_b T_b is a module endomorphism of the right
    module generated by v_b, so composing its matrix on the left of the
    matrix of v_b scales the latter by f(lam) whenever the block sizes
    of lam equal b; v_b acts as zero on every other shape.  The scalar
    is extracted from the first nonzero matrix entry and the full
    proportionality, the rank, and nonvanishing are all re-checked.
    Returns a map shape -> scalar over the matching shapes.
    """
    b = _match_context(field, b)
    n = sum(b)
    vb = vb_word(field, b)
    tb = tb_word(b)
    found = {}
    for shape in enumerate_all(field.p, field.d, n):
        rep = build_rep(shape, field)
        vmat = eval_word(rep, vb)
        if shape.composition() != b:
            if not mat_is_zero(vmat):
                raise VerificationError(
                    f"v_b does not annihilate the module of shape {shape!r}"
                )
            continue
        vtb = mat_mul(vmat, eval_word(rep, tb))
        prod = mat_mul(vtb, vmat)
        scalar = None
        for row_v, row_p in zip(vmat, prod):
            for x, y in zip(row_v, row_p):
                if x:
                    scalar = y / x
                    break
            if scalar is not None:
                break
        if scalar is None:
            raise VerificationError(f"v_b vanishes on its own block {shape!r}")
        if not scalar:
            raise VerificationError(f"zero eigenvalue at shape {shape!r}")
        if not mat_eq(prod, mat_scale(scalar, vmat)):
            raise VerificationError(
                f"v_b T_b is not proportional to v_b at shape {shape!r}"
            )
        expected = 1
        for t in range(1, field.p + 1):
            expected *= count_std(Multipartition(1, field.d, shape.block(t)))
        if mat_rank(vmat) != expected:
            raise VerificationError(f"rank of v_b is off at shape {shape!r}")
        found[shape] = scalar
    return found


# ---------------------------------------------------------------------------
# identity verifiers

def verify_changing(b, d: int, j: int, mode: str = "auto", points=None,
                    trials: int = 3, rng=None) -> bool:
    """Check that the pivot-j rewriting of v_b is the same element."""
    b = check_composition(b)
    if not 1 <= j <= len(b):
        raise ValueError(f"pivot out of range: {j}")
    return element_equal(
        len(b), d, sum(b),
        lambda field: vb_word(field, b),
        lambda field: vb_pivot_word(field, b, j),
        mode, points, trials, rng,
    )


def verify_pleftmult(b, d: int, mode: str = "auto", points=None,
                     trials: int = 3, rng=None) -> bool:
    """Check that the full shift cycle Y_p ... Y_1 equals v_b T_b."""
    b = check_composition(b)
    p = len(b)

    def cycle(field):
        out = []
        for t in range(p, 0, -1):
            out.extend(shift_factor_word(field, b, t))
        return out

    return element_equal(
        p, d, sum(b),
        cycle,
        lambda field: vb_word(field, b) + tb_word(b),
        mode, points, trials, rng,
    )


def tensor_basis(d: int, b) -> list:
    """Basis monomials of the block tensor algebra: per block an
    exponent vector below d and a permutation of the block."""
    b = check_composition(b)
    blocks = []
    for bt in b:
        exps = list(_cartesian(range(d), repeat=bt))
        perms = list(_perm_tuples(range(1, bt + 1)))
        blocks.append([(e, x) for e in exps for x in perms])
    return [tuple(c) for c in _cartesian(*blocks)]


def is_identity_monomial(h) -> bool:
    return all(not any(e) and x == tuple(range(1, len(x) + 1))
               for e, x in h)


def theta_word(h, b) -> list:
    """Index-shift embedding of a tensor basis monomial: every L factor
    first in block order, then the block permutations, each shifted by
    the sizes of the earlier blocks.  Linear on monomials only."""
    b = check_composition(b)
    out = []
    off = 0
    for (exps, _), bt in zip(h, b):
        for k, a in enumerate(exps, start=1):
            out.extend([("L", off + k)] * a)
        off += bt
    off = 0
    for (_, x), bt in zip(h, b):
        out.extend(("T", off + i) for i in reduced_word(x))
        off += bt
    return out


def verify_comparison(b, d: int, mode: str = "auto", points=None,
                      trials: int = 3, rng=None) -> bool:
    """Check the trace comparison over the whole tensor basis.

    The trace of h v_b T_b, with h embedded through the index shift,
    must be the product trace of h times the trace of v_b T_b; on basis
    monomials the product trace is 1 on the identity and 0 elsewhere.
    """
    b = check_composition(b)
    p = len(b)
    n = sum(b)
    r = p * d
    basis = tensor_basis(d, b)
    for field in mode_fields(p, d, n, mode, points, trials, rng):
        vb = vb_word(field, b)
        tb = tb_word(b)
        base = trace(r, n, vb + tb, field)
        for h in basis:
            lhs = trace(r, n, vb + theta_word(h, b) + tb, field)
            rhs = base if is_identity_monomial(h) else field.zero
            if lhs != rhs:
                return False
    return True
