"""Command line front end: JSON I/O, fixtures, and batch verification.

Every subcommand reads flags and JSON files, runs one computation, and
emits a single JSON document on standard output (or to --out).  Exit
codes: 0 success, 2 validation error, 3 verification failure, 4
inconsistent input data.  All randomness is seeded; sampled points are
logged in the output so runs can be replayed.
"""

from __future__ import annotations

import functools
import json
import math
import sys
import time
from fractions import Fraction
from random import Random

import click

from .combin import (
    Multipartition,
    check_composition,
    compositions,
    enumerate_all,
    enumerate_pdb,
)
from .decomp import (
    ClassSums,
    DecompTable,
    InputDataError,
    assemble_matrix,
    cyclic_reindex,
    d_product,
    dim_report,
    relations_oracle,
    semisimple_table,
    split_by_formula,
    splittable_number,
)
from .elements import (
    VerificationError,
    flam_eigen_oracle,
    trace_vbtb,
    vbtb_trace_closed,
    verify_changing,
    verify_comparison,
    verify_pleftmult,
)
from .exactnum import (
    CycRat,
    GenericField,
    LaurentPoly,
    RatFunc,
    SpecPoint,
    generic_field,
    laurent_to_json,
    sample_point,
)
from .scalars import (
    f_lambda_closed,
    g_lambda,
    schur_element,
    schur_element_b,
    verify_factorization,
)
from .seminormal import build_rep, check_relations, mode_fields
from .tableau import count_std


# --- JSON plumbing ---------------------------------------------------------


def _emit(data, out=None) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        click.echo(json.dumps({"written": out}))
    else:
        click.echo(text, nl=False)


def _fail(kind: str, message: str, code: int) -> None:
    click.echo(json.dumps({"error": {"kind": kind, "message": message}},
                          indent=2))
    sys.exit(code)


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputDataError as exc:
            _fail("input-data", str(exc), 4)
        except VerificationError as exc:
            _fail("verification", str(exc), 3)
        except (ValueError, TypeError, KeyError, OSError) as exc:
            _fail("validation", str(exc), 2)

    return wrapper


def _json_flag(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad {what} JSON {text!r}: {exc}") from None


def _comp_flag(text: str) -> tuple:
    return check_composition(_json_flag(text, "composition"))


def _mp_flag(p: int, d: int, text: str) -> Multipartition:
    return Multipartition(p, d, _json_flag(text, "multipartition"))


def scalar_to_json(value) -> dict:
    """A scalar of any of the admissible kinds, with enough context to
    reconstruct it exactly."""
    if isinstance(value, RatFunc):
        return {
            "kind": "ratfunc",
            "order": value.num.order,
            "nvars": value.num.nvars,
            "num": laurent_to_json(value.num),
            "den": laurent_to_json(value.den),
        }
    if isinstance(value, CycRat):
        return {
            "kind": "cycrat",
            "order": value.order,
            "coeffs": [[c.numerator, c.denominator] for c in value.coeffs],
        }
    value = Fraction(value)
    return {"kind": "rational",
            "value": [value.numerator, value.denominator]}


def _laurent_from_json(rows, order: int, nvars: int) -> LaurentPoly:
    terms = {}
    for exps, coeffs in rows:
        c = CycRat.make(order, [Fraction(a, b) for a, b in coeffs])
        if c:
            terms[tuple(exps)] = c
    return LaurentPoly(order, nvars, terms)


def scalar_from_json(data: dict):
    """Inverse of scalar_to_json."""
    kind = data["kind"]
    if kind == "ratfunc":
        order, nvars = data["order"], data["nvars"]
        return RatFunc(_laurent_from_json(data["num"], order, nvars),
                       _laurent_from_json(data["den"], order, nvars))
    if kind == "cycrat":
        return CycRat.make(data["order"],
                           [Fraction(a, b) for a, b in data["coeffs"]])
    if kind == "rational":
        a, b = data["value"]
        return Fraction(a, b)
    raise ValueError(f"unknown scalar kind {kind!r}")


def _load_tables(path: str) -> list:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("tables", [data])
    return [DecompTable.from_json(tab) for tab in data]


def _load_klesh(path: str, p: int, d: int) -> list:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data["labels"]
    return [Multipartition(p, d, x) for x in data]


def _field_list(p, d, n, mode, trials, seed) -> list:
    return mode_fields(p, d, n, mode, None, trials, Random(seed))


def _field_json(field) -> dict:
    if isinstance(field, SpecPoint):
        return field.to_json()
    return {"generic": {"p": field.p, "d": field.d}}


def _check_pn(b, p, n) -> None:
    if p is not None and p != len(b):
        raise ValueError(f"--p {p} disagrees with len(b) = {len(b)}")
    if n is not None and n != sum(b):
        raise ValueError(f"--n {n} disagrees with |b| = {sum(b)}")


# --- command group ---------------------------------------------------------


@click.group()
def main():
    """Exact computations for Hecke algebras of type G(r,p,n)."""


@main.command("enumerate")
@click.option("--p", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--n", type=int, default=None)
@click.option("--b", "b_text", default=None,
              help="composition JSON, e.g. [2,1]")
@click.option("--out", default=None)
@_guarded
def enumerate_cmd(p, d, n, b_text, out):
    """Multipartitions of size n (or composition b) with orbit data."""
    if b_text is not None:
        b = _comp_flag(b_text)
        if len(b) != p:
            raise ValueError(f"composition has {len(b)} parts, expected {p}")
        if n is not None and sum(b) != n:
            raise ValueError(f"--n {n} disagrees with |b| = {sum(b)}")
        shapes = enumerate_pdb(d, b)
        n = sum(b)
    else:
        if n is None:
            raise ValueError("need --n or --b")
        shapes = enumerate_all(p, d, n)
    payload = {
        "p": p, "d": d, "n": n, "count": len(shapes),
        "shapes": [
            {
                "comps": la.to_json(),
                "b": list(la.composition()),
                "orbit": la.orbit_order()[0],
                "split": la.orbit_order()[1],
                "dim_std": count_std(la),
                "dim_summand": dim_report(la).dim_summand,
            }
            for la in shapes
        ],
    }
    _emit(payload, out)


@main.command("seminormal-check")
@click.option("--p", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--lambda", "la_text", default=None)
@click.option("--mode", type=click.Choice(["auto", "symbolic", "random"]),
              default="auto")
@click.option("--trials", type=int, default=3)
@click.option("--seed", type=int, default=0)
@click.option("--out", default=None)
@_guarded
def seminormal_check(p, d, n, la_text, mode, trials, seed, out):
    """Check the defining relations on seminormal representations."""
    if la_text is not None:
        la = _mp_flag(p, d, la_text)
        if la.size != n:
            raise ValueError(f"lambda has size {la.size}, expected {n}")
        shapes = [la]
    else:
        shapes = enumerate_all(p, d, n)
    fields = _field_list(p, d, n, mode, trials, seed)
    failures = []
    for idx, field in enumerate(fields):
        for shape in shapes:
            for relation in check_relations(build_rep(shape, field)):
                failures.append({
                    "field": idx,
                    "shape": shape.to_json(),
                    "relation": relation,
                })
    payload = {
        "op": "seminormal-check",
        "p": p, "d": d, "n": n,
        "mode": mode, "seed": seed,
        "fields": [_field_json(f) for f in fields],
        "shapes": len(shapes),
        "passed": not failures,
        "failures": failures,
    }
    _emit(payload, out)
    if failures:
        sys.exit(3)


# --- verify ----------------------------------------------------------------


def _verify_options(fn):
    for deco in (
        click.option("--b", "b_text", required=True,
                     help="composition JSON, e.g. [2,1]"),
        click.option("--d", type=int, default=1),
        click.option("--p", type=int, default=None,
                     help="consistency check against len(b)"),
        click.option("--n", type=int, default=None,
                     help="consistency check against |b|"),
        click.option("--mode", type=click.Choice(["auto", "symbolic",
                                                  "random"]),
                     default="auto"),
        click.option("--trials", type=int, default=3),
        click.option("--seed", type=int, default=0),
        click.option("--out", default=None),
    ):
        fn = deco(fn)
    return fn


@main.group()
def verify():
    """Structural element identities and trace comparisons."""


def _emit_verdict(payload, out) -> None:
    _emit(payload, out)
    if not payload["passed"]:
        sys.exit(3)


@verify.command("changing")
@_verify_options
@_guarded
def verify_changing_cmd(b_text, d, p, n, mode, trials, seed, out):
    """Pivot rewritings of v_b against the plain product, all pivots."""
    b = _comp_flag(b_text)
    _check_pn(b, p, n)
    pivots = {}
    for j in range(1, len(b) + 1):
        pivots[str(j)] = verify_changing(b, d, j, mode=mode, trials=trials,
                                         rng=Random(seed))
    _emit_verdict({
        "op": "verify changing", "b": list(b), "d": d,
        "mode": mode, "trials": trials, "seed": seed,
        "pivots": pivots, "passed": all(pivots.values()),
    }, out)


@verify.command("pleftmult")
@_verify_options
@_guarded
def verify_pleftmult_cmd(b_text, d, p, n, mode, trials, seed, out):
    """Full shift cycle against v_b T_b."""
    b = _comp_flag(b_text)
    _check_pn(b, p, n)
    passed = verify_pleftmult(b, d, mode=mode, trials=trials,
                              rng=Random(seed))
    _emit_verdict({
        "op": "verify pleftmult", "b": list(b), "d": d,
        "mode": mode, "trials": trials, "seed": seed, "passed": passed,
    }, out)


@verify.command("comparison")
@_verify_options
@_guarded
def verify_comparison_cmd(b_text, d, p, n, mode, trials, seed, out):
    """Trace comparison over the full tensor basis."""
    b = _comp_flag(b_text)
    _check_pn(b, p, n)
    passed = verify_comparison(b, d, mode=mode, trials=trials,
                               rng=Random(seed))
    _emit_verdict({
        "op": "verify comparison", "b": list(b), "d": d,
        "mode": mode, "trials": trials, "seed": seed, "passed": passed,
    }, out)


@verify.command("trace-vbtb")
@_verify_options
@_guarded
def verify_trace_vbtb_cmd(b_text, d, p, n, mode, trials, seed, out):
    """Closed trace of v_b T_b against the character expansion."""
    b = _comp_flag(b_text)
    _check_pn(b, p, n)
    fields = _field_list(len(b), d, sum(b), mode, trials, seed)
    checks = [trace_vbtb(b, field) for field in fields]
    _emit_verdict({
        "op": "verify trace-vbtb", "b": list(b), "d": d,
        "mode": mode, "seed": seed,
        "fields": [_field_json(f) for f in fields],
        "values": [scalar_to_json(c.value) for c in checks],
        "passed": all(c.matched for c in checks),
    }, out)


@verify.command("factorization")
@click.option("--p", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--n", type=int, default=None)
@click.option("--lambda", "la_text", default=None)
@click.option("--mode", type=click.Choice(["symbolic", "random"]),
              default="symbolic")
@click.option("--trials", type=int, default=3)
@click.option("--seed", type=int, default=0)
@click.option("--out", default=None)
@_guarded
def verify_factorization_cmd(p, d, n, la_text, mode, trials, seed, out):
    """g^split against the eps-power times f, per shape."""
    if la_text is not None:
        shapes = [_mp_flag(p, d, la_text)]
    elif n is not None:
        shapes = enumerate_all(p, d, n)
    else:
        raise ValueError("need --lambda or --n")
    failures = [
        la.to_json() for la in shapes
        if not verify_factorization(la, la.composition(), mode=mode,
                                    trials=trials, rng=Random(seed))
    ]
    _emit_verdict({
        "op": "verify factorization", "p": p, "d": d,
        "mode": mode, "seed": seed, "shapes": len(shapes),
        "failures": failures, "passed": not failures,
    }, out)


# --- scalars ---------------------------------------------------------------


def _scalar_options(fn):
    for deco in (
        click.option("--p", type=int, required=True),
        click.option("--d", type=int, required=True),
        click.option("--lambda", "la_text", required=True),
        click.option("--b", "b_text", default=None),
        click.option("--mode", type=click.Choice(["symbolic", "random"]),
                     default="symbolic"),
        click.option("--trials", type=int, default=3),
        click.option("--seed", type=int, default=0),
        click.option("--out", default=None),
    ):
        fn = deco(fn)
    return fn


@main.group()
def scalar():
    """Schur elements and the scalars f and g."""


def _scalar_payload(kind, p, d, la_text, b_text, mode, trials, seed, out):
    la = _mp_flag(p, d, la_text)
    b = _comp_flag(b_text) if b_text is not None else la.composition()
    if mode == "symbolic":
        fields = [GenericField(p, d)]
    else:
        rng = Random(seed)
        fields = [sample_point(p, d, max(la.size, 1), rng)
                  for _ in range(trials)]
    values = []
    for field in fields:
        if kind == "schur":
            value = (schur_element(p * d, la, field) if b_text is None
                     else schur_element_b(la, b, field))
        elif kind == "f":
            value = f_lambda_closed(la, b, field)
        else:
            value = g_lambda(la, b, field)
        values.append(value)
    _emit({
        "op": f"scalar {kind}", "p": p, "d": d,
        "lambda": la.to_json(), "b": list(b),
        "mode": mode, "seed": seed,
        "fields": [_field_json(f) for f in fields],
        "values": [scalar_to_json(v) for v in values],
    }, out)


@scalar.command("schur")
@_scalar_options
@_guarded
def scalar_schur(p, d, la_text, b_text, mode, trials, seed, out):
    """Schur element; of H_{r,n} by default, of H_{d,b} with --b."""
    _scalar_payload("schur", p, d, la_text, b_text, mode, trials, seed, out)


@scalar.command("f")
@_scalar_options
@_guarded
def scalar_f(p, d, la_text, b_text, mode, trials, seed, out):
    """The central-element scalar f."""
    _scalar_payload("f", p, d, la_text, b_text, mode, trials, seed, out)


@scalar.command("g")
@_scalar_options
@_guarded
def scalar_g(p, d, la_text, b_text, mode, trials, seed, out):
    """The distinguished root g of f."""
    _scalar_payload("g", p, d, la_text, b_text, mode, trials, seed, out)


# --- decomposition data ----------------------------------------------------


@main.command("splittable")
@click.option("--p", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--lambda", "la_text", required=True)
@click.option("--mu", "mu_text", required=True)
@click.option("--tables", "tables_path", required=True)
@click.option("--char", type=int, default=None)
@click.option("--mode", type=click.Choice(["symbolic", "random"]),
              default="symbolic")
@click.option("--seed", type=int, default=0)
@click.option("--out", default=None)
@_guarded
def splittable_cmd(p, d, la_text, mu_text, tables_path, char, mode, seed,
                   out):
    """All twist multiplicities of a splittable pair."""
    la = _mp_flag(p, d, la_text)
    mu = _mp_flag(p, d, mu_text)
    tables = _load_tables(tables_path)
    field = None
    if la.orbit_order()[1] <= 1 and mu.orbit_order()[1] <= 1:
        ratio = 1
    else:
        if la.composition() != mu.composition():
            raise ValueError("lambda and mu have different compositions")
        if mode == "symbolic":
            field = generic_field(p, d)
        else:
            field = sample_point(p, d, la.size, Random(seed))
        b = la.composition()
        ratio = g_lambda(la, b, field) / g_lambda(mu, b, field)
    result = split_by_formula(la, mu, tables, ratio, char=char)
    payload = {
        "op": "splittable", "p": p, "d": d,
        "lambda": la.to_json(), "mu": mu.to_json(),
        "split": result.split,
        "values": [[v.numerator, v.denominator] for v in result.values],
        "provenance": result.provenance,
        "char": result.char,
        "residues": None if result.residues is None
        else list(result.residues),
        "mode": mode, "seed": seed,
    }
    if field is not None:
        payload["field"] = _field_json(field)
    _emit(payload, out)


@main.command("assemble")
@click.option("--p", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--tables", "tables_path", required=True)
@click.option("--klesh", "klesh_path", required=True)
@click.option("--char", type=int, default=None)
@click.option("--mode", type=click.Choice(["symbolic", "random"]),
              default="symbolic")
@click.option("--seed", type=int, default=0)
@click.option("--out", default=None)
@_guarded
def assemble_cmd(p, d, n, tables_path, klesh_path, char, mode, seed, out):
    """The labelled decomposition matrix from input tables."""
    tables = _load_tables(tables_path)
    klesh = _load_klesh(klesh_path, p, d)
    point = None
    if mode == "random":
        point = sample_point(p, d, n, Random(seed))
    payload = assemble_matrix(p * d, p, n, tables, klesh, char=char,
                              point=point)
    payload["mode"] = mode
    payload["seed"] = seed
    if point is not None:
        payload["field"] = _field_json(point)
    _emit(payload, out)


@main.command("semisimple-tables")
@click.option("--s", type=int, required=True,
              help="components of the input algebra")
@click.option("--m", type=int, default=None, help="one table of this size")
@click.option("--n", type=int, default=None,
              help="the whole battery of sizes 0..n")
@click.option("--out", default=None)
@_guarded
def semisimple_tables_cmd(s, m, n, out):
    """Identity decomposition tables of semisimple component algebras."""
    if (m is None) == (n is None):
        raise ValueError("give exactly one of --m, --n")
    sizes = [m] if m is not None else list(range(n + 1))
    _emit({"tables": [semisimple_table(s, k).to_json() for k in sizes]}, out)


@main.command("reduce-mod")
@click.option("--matrix", "matrix_path", required=True,
              help="output JSON of the assemble command")
@click.option("--char", type=int, required=True)
@click.option("--out", default=None)
@_guarded
def reduce_mod_cmd(matrix_path, char, out):
    """Entrywise residues of an assembled matrix modulo a prime."""
    if char < 2 or any(char % k == 0 for k in range(2, int(char ** 0.5) + 1)):
        raise ValueError(f"characteristic must be prime, got {char}")
    with open(matrix_path) as fh:
        data = json.load(fh)
    entries = []
    for ri, ci, v in data["entries"]:
        if isinstance(v, dict):
            entries.append([ri, ci, v])
        elif isinstance(v, int) and not isinstance(v, bool):
            entries.append([ri, ci, v % char])
        else:
            raise InputDataError(f"entry at ({ri}, {ci}) is not integral: {v!r}")
    data["entries"] = entries
    for unknown in data.get("unknowns", []):
        for relation in unknown.get("relations", []):
            rhs = relation["rhs"]
            if not isinstance(rhs, int) or isinstance(rhs, bool):
                raise InputDataError(f"relation value is not integral: {rhs!r}")
            relation["rhs"] = rhs % char
    data["char"] = char
    if isinstance(data.get("report"), dict):
        data["report"]["char"] = char
    _emit(data, out)


# --- acceptance grids ------------------------------------------------------


def _criterion_presentation(grid) -> str:
    shapes = 0
    for r, n in grid:
        fields = mode_fields(r, 1, n, "auto", None, 3, Random(101))
        for la in enumerate_all(r, 1, n):
            for field in fields:
                bad = check_relations(build_rep(la, field))
                if bad:
                    raise AssertionError(
                        f"relations fail at (r, n) = {(r, n)}, "
                        f"{la!r}: {bad}"
                    )
            shapes += 1
    return f"{shapes} shapes across {len(grid)} parameter pairs"


def _criterion_dimension(grid) -> str:
    for r, n in grid:
        total = sum(count_std(la) ** 2 for la in enumerate_all(r, 1, n))
        want = r ** n * math.factorial(n)
        if total != want:
            raise AssertionError(
                f"sum of squared dimensions at (r, n) = {(r, n)} "
                f"is {total}, expected {want}"
            )
    return f"{len(grid)} parameter pairs"


def _criterion_elements(ps, ds, n) -> str:
    checked = 0
    for p in ps:
        for d in ds:
            points = [sample_point(p, d, n, Random(211 + 10 * p + d))
                      for _ in range(3)]
            for b in compositions(n, p):
                for j in range(1, p + 1):
                    if not verify_changing(b, d, j, points=points):
                        raise AssertionError(
                            f"changing fails at b={b}, d={d}, j={j}")
                if not verify_pleftmult(b, d, points=points):
                    raise AssertionError(f"pleftmult fails at b={b}, d={d}")
                checked += 1
    return f"{checked} compositions, 3 separated points each"


def _criterion_trace(ns) -> str:
    checked = 0
    for n in ns:
        fields = mode_fields(2, 1, n, "auto", None, 3, Random(17))
        for b in compositions(n, 2):
            for field in fields:
                if not trace_vbtb(b, field).matched:
                    raise AssertionError(f"trace mismatch at b={b}")
            if not verify_comparison(b, 1, mode="auto", trials=3,
                                     rng=Random(19)):
                raise AssertionError(f"comparison fails at b={b}")
            checked += 1
    return f"{checked} compositions over the full tensor basis"


def _criterion_scalars(ps, ds, n) -> str:
    symbolic = 0
    for p in ps:
        for d in ds:
            field = generic_field(p, d)
            for b in compositions(n, p):
                tr = vbtb_trace_closed(b, field)
                for la in enumerate_pdb(d, b):
                    f = f_lambda_closed(la, b, field)
                    lhs = f * schur_element_b(la, b, field)
                    rhs = schur_element(p * d, la, field) * tr
                    if lhs != rhs:
                        raise AssertionError(
                            f"trace identity fails at {la!r}, b={b}")
                    symbolic += 1
            points = [sample_point(p, d, n, Random(307 + 10 * p + d))
                      for _ in range(3)]
            for pt in points:
                for b in compositions(n, p):
                    oracle = flam_eigen_oracle(b, pt)
                    for la in enumerate_pdb(d, b):
                        if oracle[la] != f_lambda_closed(la, b, pt):
                            raise AssertionError(
                                f"eigen oracle mismatch at {la!r}, b={b}")
    return f"{symbolic} symbolic identities, oracle at 3 points per grid"


def _criterion_factorization(ps, ds, nmax) -> str:
    checked = 0
    for p in ps:
        for d in ds:
            for n in range(1, nmax + 1):
                for b in compositions(n, p):
                    for la in enumerate_pdb(d, b):
                        if la.orbit_order()[1] == 1:
                            continue
                        if not verify_factorization(la, b):
                            raise AssertionError(
                                f"factorization fails at {la!r}, b={b}")
                        checked += 1
    return f"{checked} shift-symmetric shapes, symbolic"


def _random_table(rng: Random, s: int, m: int) -> DecompTable:
    labels = sorted(enumerate_all(1, s, m),
                    key=Multipartition.sort_key, reverse=True)
    entries = [[i, i, 1] for i in range(len(labels))]
    for a, row in enumerate(labels):
        for c, col in enumerate(labels):
            if a != c and row.dominates(col) and rng.random() < 0.6:
                entries.append([a, c, rng.randint(1, 3)])
    data = [x.comps for x in labels]
    return DecompTable(s, m, data, data, entries)


def _splittable_sweep(p, tables, sample=None, rng=None) -> int:
    mps = enumerate_pdb(1, (2,) * p)
    pairs = [(la, mu) for la in mps for mu in mps
             if la.orbit_order()[1] == mu.orbit_order()[1]]
    if sample is not None and len(pairs) > sample:
        pairs = rng.sample(pairs, sample)
    for la, mu in pairs:
        formula = split_by_formula(la, mu, tables, 1)
        oracle = relations_oracle(la, mu, tables, (1, 1))
        if formula.values != oracle.values:
            raise AssertionError(
                f"formula disagrees with oracle at {la!r}, {mu!r}")
        l = formula.split
        if la == mu:
            want = tuple(Fraction(int(c == l)) for c in range(1, l + 1))
            if formula.values != want:
                raise AssertionError(f"diagonal pair is not a delta: {la!r}")
        d_val = d_product(la, mu, p // l, tables)
        if sum(formula.values) != d_val ** l:
            raise AssertionError(f"row sum violated at {la!r}, {mu!r}")
        for i, j in ((1, 1), (1, l)):
            if splittable_number(la, mu, i, j, tables, 1) \
                    != cyclic_reindex(formula, i, j):
                raise AssertionError(
                    f"entry extraction mismatch at {la!r}, {mu!r}")
    return len(pairs)


def _criterion_splittable(seeds) -> str:
    pairs = 0
    for p in (2, 3, 4):
        pairs += _splittable_sweep(p, [semisimple_table(1, 2)])
    for seed in range(seeds):
        rng = Random(seed)
        for p in (2, 3, 4):
            tables = [_random_table(rng, 1, 2)]
            pairs += _splittable_sweep(p, tables, sample=60, rng=rng)
        # Partial symmetry: only residue-class sums are pinned, and the
        # zeroth relation fixes their total.
        tables = [_random_table(rng, 1, 2)]
        la = Multipartition(4, 1, ((2,), (1, 1), (2,), (1, 1)))
        mu = Multipartition(4, 1, ((1, 1),) * 4)
        sums = relations_oracle(la, mu, tables, (1, 1))
        d_val = d_product(la, mu, 2, tables)
        if not isinstance(sums, ClassSums) \
                or sum(sums.sums) != 2 * d_val ** 2:
            raise AssertionError("class sums break the zeroth relation")
    return f"{pairs} splittable pairs, semisimple and {seeds} random tables"


def _label_count(p, d, n) -> int:
    total = 0
    seen = set()
    for la in enumerate_all(p, d, n):
        orbit = frozenset(la.shift(k) for k in range(p))
        if orbit not in seen:
            seen.add(orbit)
            total += la.orbit_order()[1]
    return total


def _criterion_assembly(nmax) -> str:
    for p in (2, 3):
        for n in range(1, nmax + 1):
            tables = [semisimple_table(1, m) for m in range(n + 1)]
            out = assemble_matrix(p, p, n, tables,
                                  list(enumerate_all(p, 1, n)))
            report = out["report"]
            count = _label_count(p, 1, n)
            if not (report["identity"] and report["unitriangular"]):
                raise AssertionError(
                    f"semisimple assembly is not the identity at "
                    f"p={p}, n={n}: {report}"
                )
            if report["rows"] != count or report["cols"] != count:
                raise AssertionError(
                    f"label count at p={p}, n={n} is "
                    f"{report['rows']}x{report['cols']}, expected {count}"
                )
    return f"identity matrices up to n = {nmax} for p in (2, 3)"


def _criterion_divisibility(nmax, pmax, dmax) -> str:
    checked = 0
    for p in range(1, pmax + 1):
        for d in range(1, dmax + 1):
            for n in range(1, nmax + 1):
                for la in enumerate_all(p, d, n):
                    split = la.orbit_order()[1]
                    if count_std(la) % split:
                        raise AssertionError(
                            f"dimension of {la!r} is not divisible by "
                            f"{split}"
                        )
                    checked += 1
    return f"{checked} shapes"


def desk_criteria() -> list:
    """The full acceptance grid: (name, check, time budget in seconds)."""
    grid = [(2, 2), (2, 3), (3, 3), (4, 3), (2, 4)]
    return [
        ("1 presentation suite",
         lambda: _criterion_presentation(grid), 120),
        ("2 dimension identity",
         lambda: _criterion_dimension(grid), None),
        ("3 element identities",
         lambda: _criterion_elements((2, 3), (1, 2), 3), 300),
        ("4 trace comparison",
         lambda: _criterion_trace((2, 3)), 300),
        ("5 scalar theorem",
         lambda: _criterion_scalars((2, 3), (1, 2), 3), None),
        ("6 root factorization",
         lambda: _criterion_factorization((2, 3, 4), (1, 2), 4), None),
        ("7 splittable vs oracle",
         lambda: _criterion_splittable(20), 60),
        ("8 assembly",
         lambda: _criterion_assembly(4), None),
        ("9 divisibility",
         lambda: _criterion_divisibility(6, 3, 2), None),
    ]


def quick_criteria() -> list:
    """A trimmed grid that finishes within a minute."""
    grid = [(2, 2), (2, 3)]
    return [
        ("1 presentation suite",
         lambda: _criterion_presentation(grid), 60),
        ("2 dimension identity",
         lambda: _criterion_dimension(grid), None),
        ("3 element identities",
         lambda: _criterion_elements((2,), (1,), 3), 60),
        ("4 trace comparison",
         lambda: _criterion_trace((2,)), 60),
        ("5 scalar theorem",
         lambda: _criterion_scalars((2,), (1,), 3), None),
        ("6 root factorization",
         lambda: _criterion_factorization((2, 3), (1,), 3), None),
        ("7 splittable vs oracle",
         lambda: _criterion_splittable(5), 60),
        ("8 assembly",
         lambda: _criterion_assembly(3), None),
        ("9 divisibility",
         lambda: _criterion_divisibility(4, 3, 2), None),
    ]


@main.command("fixtures")
@click.option("--suite", required=True)
@click.option("--out", default=None)
@_guarded
def fixtures_cmd(suite, out):
    """Run the acceptance grid and emit a pass/fail table."""
    suites = {"desk": desk_criteria, "quick": quick_criteria}
    if suite not in suites:
        raise ValueError(f"unknown suite {suite!r}; pick from desk, quick")
    results = []
    ok = True
    for name, check, _budget in suites[suite]():
        start = time.perf_counter()
        try:
            detail = check()
            passed = True
        except AssertionError as exc:
            detail = str(exc)
            passed = False
            ok = False
        results.append({
            "criterion": name,
            "passed": passed,
            "seconds": round(time.perf_counter() - start, 2),
            "detail": detail,
        })
    _emit({"suite": suite, "passed": ok, "results": results}, out)
    if not ok:
        sys.exit(3)


if __name__ == "__main__":
    main()
