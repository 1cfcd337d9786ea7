"""Split decomposition numbers and assembly of labelled matrices.

Decomposition tables of the component algebras of type G(s,1,m) are
input data; nothing here computes them.  This module combines them:
for a pair with equal splitting number l the cyclic-twist relations
form an l x l Vandermonde system whose Cramer solution gives the
multiplicities [S^la_i : D^mu_j] exactly, and every other entry is
reported as a first-class unknown together with the residue-class
sums the relations do determine.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .combin import (
    Multipartition,
    class_reps,
    enumerate_all,
    shift_composition,
)
from .exactnum import CycRat, GenericField, RatFunc
from .matrices import mat_det_gauss, mat_replace_col
from .scalars import g_lambda
from .tableau import count_std


class InputDataError(ValueError):
    """Supplied tables or scalars contradict the linear relations."""


class UnknownLabelError(InputDataError):
    """A table does not list a label the computation needs."""


class NonSplittableError(ValueError):
    """The pair has unequal splitting numbers; the formula does not apply."""


class NonConstantRatioError(InputDataError):
    """The supplied g ratio does not reduce to a rational constant."""


# --- input tables ---------------------------------------------------------


class DecompTable:
    """One component algebra's decomposition table, used as input data.

    Rows label standard modules, columns label simple modules (the
    column set is supplied externally), and entries are decomposition
    multiplicities.  Valid tables are unitriangular: every column
    label appears among the rows with diagonal entry 1, and a nonzero
    entry forces the row label to dominate the column label.  A table
    carries the component count s, the size m, and the twist exponent
    of its parameters; ``eps_power=None`` marks a table valid at every
    twist, which is how the semisimple generator labels its output.
    """

    __slots__ = ("s", "m", "eps_power", "rows", "cols", "entries",
                 "semisimple", "_row_pos", "_col_pos")

    def __init__(self, s: int, m: int, rows, cols, entries,
                 semisimple: bool = False, eps_power=None):
        if s < 1 or m < 0:
            raise InputDataError(f"bad table shape: s={s}, m={m}")
        self.s = s
        self.m = m
        self.eps_power = None if eps_power is None else int(eps_power)
        self.rows = tuple(self._label(x) for x in rows)
        self.cols = tuple(self._label(x) for x in cols)
        self._row_pos = {lab: i for i, lab in enumerate(self.rows)}
        self._col_pos = {lab: i for i, lab in enumerate(self.cols)}
        if len(self._row_pos) != len(self.rows):
            raise InputDataError("duplicate row label")
        if len(self._col_pos) != len(self.cols):
            raise InputDataError("duplicate column label")
        self.semisimple = bool(semisimple)
        self.entries = {}
        for ri, ci, v in entries:
            if not (0 <= ri < len(self.rows) and 0 <= ci < len(self.cols)):
                raise InputDataError(f"entry index out of range: {(ri, ci)}")
            if not isinstance(v, int) or v < 0:
                raise InputDataError(f"entry must be a nonnegative integer: {v!r}")
            if (ri, ci) in self.entries:
                raise InputDataError(f"duplicate entry at {(ri, ci)}")
            if v:
                self.entries[ri, ci] = v
        self._validate()

    def _label(self, data) -> tuple:
        try:
            mp = Multipartition(1, self.s, data)
        except ValueError as exc:
            raise InputDataError(f"bad table label {data!r}: {exc}") from None
        if mp.size != self.m:
            raise InputDataError(
                f"label {data!r} has size {mp.size}, table holds size {self.m}"
            )
        return mp.comps

    def _validate(self) -> None:
        for lab in self.cols:
            ri = self._row_pos.get(lab)
            if ri is None:
                raise InputDataError(f"column label {lab!r} missing from rows")
            if self.entries.get((ri, self._col_pos[lab])) != 1:
                raise InputDataError(f"diagonal entry at {lab!r} must be 1")
        for (ri, ci) in self.entries:
            row = Multipartition(1, self.s, self.rows[ri])
            col = Multipartition(1, self.s, self.cols[ci])
            if not row.dominates(col):
                raise InputDataError(
                    f"nonzero entry at {self.rows[ri]!r} -> {self.cols[ci]!r} "
                    "breaks unitriangularity"
                )
        if self.semisimple:
            if set(self.rows) != set(self.cols):
                raise InputDataError("semisimple table needs rows == cols")
            for (ri, ci), v in self.entries.items():
                if self.rows[ri] != self.cols[ci] or v != 1:
                    raise InputDataError("semisimple table must be the identity")

    def entry(self, row_label, col_label) -> int:
        row = self._label(row_label)
        col = self._label(col_label)
        ri = self._row_pos.get(row)
        if ri is None:
            raise UnknownLabelError(f"unknown row label {row!r}")
        ci = self._col_pos.get(col)
        if ci is None:
            raise UnknownLabelError(f"unknown column label {col!r}")
        return self.entries.get((ri, ci), 0)

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "m": self.m,
            "params": {"eps_power": self.eps_power},
            "rows": [[list(c) for c in lab] for lab in self.rows],
            "cols": [[list(c) for c in lab] for lab in self.cols],
            "entries": [[ri, ci, v] for (ri, ci), v in sorted(self.entries.items())],
            "semisimple": self.semisimple,
        }

    @staticmethod
    def from_json(data: dict) -> "DecompTable":
        params = data.get("params") or {}
        return DecompTable(
            data["s"], data["m"], data["rows"], data["cols"], data["entries"],
            semisimple=data.get("semisimple", False),
            eps_power=params.get("eps_power"),
        )

    def __repr__(self):
        return (
            f"DecompTable(s={self.s}, m={self.m}, eps_power={self.eps_power}, "
            f"{len(self.rows)}x{len(self.cols)})"
        )


def semisimple_table(s: int, m: int, eps_power=None) -> DecompTable:
    """The identity table over all s-component multipartitions of m."""
    labels = [mp.comps for mp in enumerate_all(1, s, m)]
    entries = [[i, i, 1] for i in range(len(labels))]
    return DecompTable(s, m, labels, labels, entries,
                       semisimple=True, eps_power=eps_power)


def _table_list(tables):
    if isinstance(tables, DecompTable):
        return [tables]
    if isinstance(tables, dict):
        return list(tables.values())
    return list(tables)


def _find_table(tables, s: int, m: int, t: int, p: int) -> DecompTable:
    """The table for the component algebra of size m at twist t (mod p)."""
    for tab in _table_list(tables):
        if tab.s != s or tab.m != m:
            continue
        if tab.eps_power is None or (tab.eps_power - t) % p == 0:
            return tab
    raise InputDataError(
        f"no table for s={s}, m={m} at twist {t % p} (mod {p})"
    )


# --- block products -------------------------------------------------------


def d_product(la: Multipartition, mu: Multipartition, m: int, tables) -> int:
    """Product of the first m blockwise decomposition numbers.

    Both arguments must repeat with period m, so their first m blocks
    determine them; block i is looked up in the table at twist i.
    """
    if (la.p, la.d) != (mu.p, mu.d):
        raise ValueError("multipartition context mismatch")
    if la.composition() != mu.composition():
        raise ValueError("compositions differ; the pair has no block product")
    if la.shift(m) != la or mu.shift(m) != mu:
        raise ValueError(f"arguments are not fixed by the block shift by {m}")
    b = la.composition()
    out = 1
    for i in range(1, m + 1):
        tab = _find_table(tables, la.d, b[i - 1], i, la.p)
        out *= tab.entry(la.block(i), mu.block(i))
    return out


def orbit_sum_bound(la: Multipartition, mu: Multipartition, tables) -> int:
    """Sum over the shift orbit of mu of full blockwise products with la.

    Every multiplicity [S^la_i : D^mu_j] is bounded by this sum, so a
    zero value certifies that the whole pair contributes nothing.
    """
    if (la.p, la.d) != (mu.p, mu.d):
        raise ValueError("multipartition context mismatch")
    total = 0
    for k in range(la.p):
        muk = mu.shift(k)
        if muk.composition() != la.composition():
            continue
        total += d_product(la, muk, la.p, tables)
    return total


# --- Vandermonde system ---------------------------------------------------


def vandermonde(l: int, p: int) -> tuple:
    """The l x l matrix with (a, b) entry eps^((a-1)*b*m), m = p/l."""
    if l < 1 or p < 1 or p % l:
        raise ValueError(f"need l dividing p, got l={l}, p={p}")
    m = p // l
    zeta = CycRat.zeta(p)
    return tuple(
        tuple(zeta ** ((a * b * m) % p) for b in range(1, l + 1))
        for a in range(l)
    )


def _ring_order(sample) -> int:
    if isinstance(sample, RatFunc):
        return sample.num.order
    if isinstance(sample, CycRat):
        return sample.order
    raise TypeError(f"unsupported scalar type: {type(sample).__name__}")


def _lift_scalar(value, p: int):
    """Accept a g value as rational, CycRat, or RatFunc; rationals join Q(eps)."""
    if isinstance(value, (int, Fraction)):
        return CycRat.from_rational(p, value)
    order = _ring_order(value)
    if order % p:
        raise ValueError(
            f"scalar lives over order {order}, incompatible with eps of order {p}"
        )
    return value


def _eps_in(sample, p: int, k: int):
    """eps^k as an element of sample's ring."""
    order = _ring_order(sample)
    root = CycRat.zeta(order) ** ((order // p) * (k % p) % order)
    return sample * 0 + root


def _as_fraction(value) -> Fraction:
    """Extract the rational constant a solved value must be."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, CycRat):
        if not value.is_rational():
            raise NonConstantRatioError(
                "solved value is irrational; the g ratio is inconsistent "
                "with the tables at these parameters"
            )
        return value.rational_value()
    if isinstance(value, RatFunc):
        if not value.num.terms:
            return Fraction(0)
        exps, dc = value.den.sorted_terms()[0]
        nc = value.num.terms.get(tuple(exps))
        if nc is not None:
            cand = nc / dc
            if value == cand and cand.is_rational():
                return cand.rational_value()
        raise NonConstantRatioError(
            "the symbolic g ratio does not cancel to a rational constant; "
            "specialize it or fix the inputs"
        )
    raise TypeError(f"unsupported scalar type: {type(value).__name__}")


def _cramer(l: int, p: int, ratio, column) -> list:
    """Solve V(l) x = column in ratio's ring, by Cramer's rule."""
    rows = tuple(
        tuple(_eps_in(ratio, p, a * b * (p // l)) for b in range(1, l + 1))
        for a in range(l)
    )
    det_v = mat_det_gauss(rows)
    return [
        mat_det_gauss(mat_replace_col(rows, c, tuple(column))) / det_v
        for c in range(l)
    ]


def _twist_column(l: int, ratio, d_val: int, multiplier: int = 1) -> list:
    """Entries multiplier * ratio^t * d^gcd(l,t) for t = 0..l-1."""
    return [
        (ratio ** t) * (multiplier * d_val ** math.gcd(l, t))
        for t in range(l)
    ]


# --- split results --------------------------------------------------------


class SplitResult(NamedTuple):
    """The l twist multiplicities of a pair with equal splitting number."""

    la: Multipartition
    mu: Multipartition
    split: int
    values: tuple
    provenance: str
    char: int = None
    residues: tuple = None


class ClassSums(NamedTuple):
    """Residue-class sums of twist multiplicities when only those are pinned."""

    la: Multipartition
    mu: Multipartition
    split: int
    period: int
    sums: tuple
    provenance: str = "oracle"


def _check_counts(values, what: str) -> tuple:
    out = []
    for v in values:
        if v.denominator != 1 or v < 0:
            raise InputDataError(
                f"{what} {v} is not a nonnegative integer; input data inconsistent"
            )
        out.append(v)
    return tuple(out)


def reduce_result(result: SplitResult, char: int) -> SplitResult:
    """Attach the mod-char residues of an integral result."""
    if char < 2:
        raise ValueError(f"characteristic must be at least 2, got {char}")
    values = _check_counts(result.values, "multiplicity")
    residues = tuple(int(v) % char for v in values)
    return result._replace(char=char, residues=residues)


def splittable_number(la: Multipartition, mu: Multipartition, i: int, j: int,
                      tables, g_ratio, char: int = None) -> Fraction:
    """The multiplicity [S^la_i : D^mu_j] for a pair with p_la = p_mu.

    Replaces column (j - i mod l) of the Vandermonde matrix with the
    twisted column (g_ratio^t * d^gcd(l,t)) and returns the ratio of
    determinants; with char set, the value is validated as a count
    and reduced.
    """
    _, p_la = la.orbit_order()
    o_mu, p_mu = mu.orbit_order()
    if p_la != p_mu:
        raise NonSplittableError(
            f"splitting numbers differ: p_la = {p_la}, p_mu = {p_mu}"
        )
    l = p_la
    if not (1 <= i <= l and 1 <= j <= l):
        raise ValueError(f"summand labels out of range: i={i}, j={j}")
    d_val = d_product(la, mu, la.p // l, tables)
    if l == 1:
        value = Fraction(d_val)
    else:
        ratio = _lift_scalar(g_ratio, la.p)
        column = _twist_column(l, ratio, d_val)
        c = (j - i) % l or l
        value = _as_fraction(_cramer(l, la.p, ratio, column)[c - 1])
    if char is None:
        return value
    if char < 2:
        raise ValueError(f"characteristic must be at least 2, got {char}")
    if value.denominator != 1 or value < 0:
        raise InputDataError(
            f"multiplicity {value} is not a nonnegative integer; "
            "input data inconsistent"
        )
    return int(value) % char


def split_by_formula(la: Multipartition, mu: Multipartition, tables, g_ratio,
                     char: int = None) -> SplitResult:
    """All l twist multiplicities of a splittable pair, by Cramer's rule."""
    _, p_la = la.orbit_order()
    _, p_mu = mu.orbit_order()
    if p_la != p_mu:
        raise NonSplittableError(
            f"splitting numbers differ: p_la = {p_la}, p_mu = {p_mu}"
        )
    l = p_la
    d_val = d_product(la, mu, la.p // l, tables)
    if l == 1:
        values = (Fraction(d_val),)
    else:
        ratio = _lift_scalar(g_ratio, la.p)
        column = _twist_column(l, ratio, d_val)
        values = tuple(
            _as_fraction(v) for v in _cramer(l, la.p, ratio, column)
        )
    result = SplitResult(la, mu, l, _check_counts(values, "multiplicity"),
                         "formula")
    return reduce_result(result, char) if char is not None else result


def relations_oracle(la: Multipartition, mu: Multipartition, tables, g_powers):
    """Solve the cyclic-twist linear system directly.

    g_powers is the pair (g_la, g_mu) of scalar values.  With p_mu
    equal to l = p_la the l x l system determines every twist
    multiplicity and a SplitResult is returned; with p_mu a proper
    multiple of l only the sums over residue classes mod l are pinned
    and those come back as ClassSums.
    """
    o_la, p_la = la.orbit_order()
    _, p_mu = mu.orbit_order()
    l = p_la
    if p_mu % l:
        raise ValueError(
            f"mu is not symmetric enough: p_mu = {p_mu} is no multiple of l = {l}"
        )
    period_ratio = p_mu // l
    d_val = d_product(la, mu, o_la, tables)
    if l == 1:
        sums = (Fraction(period_ratio * d_val),)
    else:
        g_la_val = _lift_scalar(g_powers[0], la.p)
        g_mu_val = _lift_scalar(g_powers[1], la.p)
        ratio = g_la_val / (g_mu_val ** period_ratio)
        column = _twist_column(l, ratio, d_val, multiplier=period_ratio)
        sums = tuple(
            _as_fraction(v) for v in _cramer(l, la.p, ratio, column)
        )
    if p_mu == l:
        return SplitResult(la, mu, l, _check_counts(sums, "multiplicity"),
                           "oracle")
    return ClassSums(la, mu, l, p_mu, _check_counts(sums, "class sum"))


def cyclic_reindex(result: SplitResult, i: int, j: int) -> Fraction:
    """[S^la_i : D^mu_j] read off a SplitResult; only j - i matters."""
    c = (j - i) % result.split or result.split
    values = result.values
    return values[c - 1]


# --- matrix assembly ------------------------------------------------------


def _normalized_reps(items) -> list:
    """One label per shift class, aligned to a common composition.

    Within one composition class every representative is shifted to
    the least composition in the orbit, so block pairings across
    representatives line up; ties inside a class break by sort key.
    """
    groups = {}
    for la in items:
        b = la.composition()
        bstar = min(shift_composition(b, k) for k in range(len(b)))
        groups.setdefault(bstar, []).append(la)
    reps = []
    for bstar, members in groups.items():
        fixed = [la for la in members if la.composition() == bstar]
        reps.extend(class_reps(fixed, relation="b", b=bstar))
    reps.sort(key=Multipartition.sort_key, reverse=True)
    return reps


def _as_multipartition(p: int, d: int, data) -> Multipartition:
    if isinstance(data, Multipartition):
        if (data.p, data.d) != (p, d):
            raise ValueError("multipartition context mismatch")
        return data
    return Multipartition(p, d, data)


def _closed_under_shift(mps) -> bool:
    pool = set(mps)
    return all(la.shift(1) in pool for la in pool)


def assemble_matrix(r: int, p: int, n: int, tables, klesh_labels,
                    char: int = None, point=None) -> dict:
    """The labelled decomposition matrix built from the input tables.

    Rows run over (la class representative, i = 1..p_la) for all la of
    size n, columns over (mu, j) for the supplied simple labels, both
    sorted most dominant first.  Splittable entries are computed by
    the determinant formula, pairs whose orbit sum vanishes are zero,
    and the rest become named unknowns; when the twist relations apply
    their residue-class sums are attached as integer linear forms.  g
    ratios are evaluated at the given specialization point, or
    symbolically when none is supplied.
    """
    if p < 1 or r % p:
        raise ValueError(f"p must divide r, got r={r}, p={p}")
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if char is not None and char < 2:
        raise ValueError(f"characteristic must be at least 2, got {char}")
    d = r // p
    field = point if point is not None else GenericField(p, d)

    klesh = [_as_multipartition(p, d, x) for x in klesh_labels]
    if len(set(klesh)) != len(klesh):
        raise InputDataError("duplicate simple label")
    for mu in klesh:
        if mu.size != n:
            raise InputDataError(f"simple label {mu!r} has size {mu.size} != {n}")
    if not _closed_under_shift(klesh):
        raise InputDataError("simple labels are not closed under block shift")

    row_reps = _normalized_reps(enumerate_all(p, d, n))
    col_reps = _normalized_reps(klesh)

    rows = [(la, i) for la in row_reps
            for i in range(1, la.orbit_order()[1] + 1)]
    cols = [(mu, j) for mu in col_reps
            for j in range(1, mu.orbit_order()[1] + 1)]
    row_pos = {lab: k for k, lab in enumerate(rows)}
    col_pos = {lab: k for k, lab in enumerate(cols)}

    entries = {}
    unknowns = []
    g_cache = {}

    def g_value(shape):
        if shape not in g_cache:
            g_cache[shape] = g_lambda(shape, shape.composition(), field)
        return g_cache[shape]

    for la in row_reps:
        for mu in col_reps:
            _, p_la = la.orbit_order()
            _, p_mu = mu.orbit_order()
            if la == mu:
                for i in range(1, p_la + 1):
                    entries[row_pos[la, i], col_pos[mu, i]] = 1
                continue
            if la.composition() != mu.composition():
                continue
            if not la.dominates(mu):
                continue
            if orbit_sum_bound(la, mu, tables) == 0:
                continue
            if p_la == p_mu:
                ratio = g_value(la) / g_value(mu)
                result = split_by_formula(la, mu, tables, ratio, char=char)
                source = result.residues if char is not None else result.values
                for i in range(1, p_la + 1):
                    for j in range(1, p_mu + 1):
                        c = (j - i) % p_la or p_la
                        v = source[c - 1]
                        if v:
                            entries[row_pos[la, i], col_pos[mu, j]] = int(v)
                continue
            # Not splittable: entries depend only on (j - i) mod the
            # common period and stay symbolic; the twist relations pin
            # residue-class sums when mu is symmetric enough.
            k = len(unknowns)
            modulus = math.gcd(p_la, p_mu)
            names = [f"u{k}.{c}" for c in range(1, modulus + 1)]
            relations = []
            twist_names = []
            if p_mu % p_la == 0:
                try:
                    sums = relations_oracle(la, mu, tables,
                                            (g_value(la), g_value(mu)))
                except NonConstantRatioError:
                    sums = None
                if sums is not None:
                    twist_names = [f"d{k}.{j}" for j in range(1, p_mu + 1)]
                    rhs = sums.sums if isinstance(sums, ClassSums) else sums.values
                    for c in range(1, p_la + 1):
                        terms = [[1, twist_names[j - 1]]
                                 for j in range(1, p_mu + 1)
                                 if j % p_la == c % p_la]
                        value = int(rhs[c - 1])
                        if char is not None:
                            value %= char
                        relations.append({"terms": terms, "rhs": value})
            for i in range(1, p_la + 1):
                for j in range(1, p_mu + 1):
                    c = (j - i) % modulus or modulus
                    entries[row_pos[la, i], col_pos[mu, j]] = {
                        "unknown": names[c - 1]
                    }
            unknowns.append({
                "index": k,
                "lambda": la.to_json(),
                "mu": mu.to_json(),
                "split": p_la,
                "period": p_mu,
                "entries": names,
                "twist_unknowns": twist_names,
                "relations": relations,
            })

    # Unitriangularity audit: support on or above the diagonal in the
    # common dominance-compatible order, with unit diagonal.
    for (ri, ci), v in entries.items():
        la, i = rows[ri]
        mu, j = cols[ci]
        if la == mu:
            if i != j or v != 1:
                raise InputDataError("diagonal block is not the identity")
        elif not la.dominates(mu):
            raise InputDataError(
                f"entry at ({la!r}, {mu!r}) breaks unitriangularity"
            )
    for mu, j in cols:
        pos = row_pos.get((mu, j))
        if pos is None or entries.get((pos, col_pos[mu, j])) != 1:
            raise InputDataError(f"missing unit diagonal at {(mu, j)!r}")

    identity = (len(rows) == len(cols)
                and not unknowns
                and all(rows[ri] == cols[ci] and v == 1
                        for (ri, ci), v in entries.items())
                and len(entries) == len(cols))
    report = {
        "rows": len(rows),
        "cols": len(cols),
        "unitriangular": True,
        "identity": identity,
        "unknown_pairs": len(unknowns),
        "char": char,
    }
    return {
        "r": r,
        "p": p,
        "n": n,
        "char": char,
        "rows": [[la.to_json(), i] for la, i in rows],
        "cols": [[mu.to_json(), j] for mu, j in cols],
        "entries": [
            [ri, ci, v] for (ri, ci), v in sorted(
                entries.items(), key=lambda kv: kv[0]
            )
        ],
        "unknowns": unknowns,
        "report": report,
    }


# --- dimension report -----------------------------------------------------


class DimReport(NamedTuple):
    dim_specht: int
    p_lambda: int
    dim_summand: int


def dim_report(la: Multipartition) -> DimReport:
    """Standard-module dimension and its split among the p_la summands."""
    dim = count_std(la)
    _, p_la = la.orbit_order()
    if dim % p_la:
        raise RuntimeError(
            f"internal: {dim} standard tableaux do not split into {p_la} parts"
        )
    return DimReport(dim, p_la, dim // p_la)
