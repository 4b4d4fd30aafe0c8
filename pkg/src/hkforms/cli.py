"""Command-line front end: reproducible verification suites with JSON reports.

Exit codes: 0 = all checks pass, 1 = a verification failed, 2 = bad input
or configuration.  Identical configurations (including seed) produce
byte-identical reports.
"""

from __future__ import annotations

import functools
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import click

from . import __version__
from .errors import InputError, TheoryViolation
from .exterior import Form
from .lefschetz import (NAMES, bracket_table, build_basis, check, hodge_check,
                        root_system, su2_check, weight_decompose)
from .quaternionic import standard_triple
from .replib import (ao_invariants_check, c_operator, degree_functional, fix_locus,
                     general_type_scan, gm_invariants, highest_weight_check,
                     random_combination, random_sphere_point, theorem21_check)
from .scalars import CRat, format_rational, parse_rational
from .serialize import dump_op, form_to_obj, load_form, load_forms, op_to_obj


def jsonable(x):
    if isinstance(x, CRat):
        return x.to_json()
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Form):
        return form_to_obj(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def common_options(f):
    @click.option("--q", type=int, default=1, show_default=True,
                  help="Quaternionic dimension (fiber R^{4q}).")
    @click.option("--seed", type=int, default=0, show_default=True,
                  help="Seed for all random sampling (HK_SEED overrides).")
    @click.option("--threads", type=int, default=1, show_default=True,
                  help="Worker threads for independent checks.")
    @click.option("--output", type=click.Path(dir_okay=False), default=None,
                  help="Write the report here instead of stdout.")
    @click.option("--format", "fmt", type=click.Choice(["json", "text"]),
                  default="json", show_default=True)
    @click.option("--allow-large", is_flag=True,
                  help="Lift the q <= 3 memory guard.")
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        return f(*args, **kwargs)

    return wrapper


def validate_config(q, seed, threads, allow_large):
    if q < 1:
        raise InputError(f"q must be >= 1, got {q}")
    if q > 3 and not allow_large:
        raise InputError(f"q={q} exceeds the memory guard; pass --allow-large")
    if threads < 1:
        raise InputError(f"threads must be >= 1, got {threads}")
    env = os.environ.get("HK_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError as exc:
            raise InputError(f"HK_SEED must be an integer, got {env!r}") from exc
    return seed


def emit(command, config, checks, fmt, output, extra=None):
    status = "pass" if all(c["status"] == "pass" for c in checks) else "fail"
    report = {
        "tool": "hkforms",
        "version": __version__,
        "command": command,
        "config": jsonable(config),
        "checks": jsonable(checks),
        "status": status,
    }
    if extra:
        report["data"] = jsonable(extra)
    if fmt == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"hkforms {__version__} :: {command} :: {report['status'].upper()}"]
        for c in checks:
            lines.append(f"  [{c['status'].upper():4}] {c['name']}")
            if c["status"] != "pass" and c.get("witness") is not None:
                lines.append(f"         witness: {json.dumps(jsonable(c['witness']))}")
        text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    sys.exit(0 if status == "pass" else 1)


def run_guarded(fn):
    try:
        fn()
    except (InputError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except TheoryViolation as exc:
        click.echo(f"theory violation (implementation bug): {exc}", err=True)
        sys.exit(1)


@click.group()
@click.version_option(__version__)
def main():
    """Exact verification suite for the quaternionic operator algebra on
    the exterior algebra of R^{4q}."""


@main.command()
@common_options
def verify(q, seed, threads, output, fmt, allow_large):
    """su(2) relations, Hodge scalar action, so(5) closure."""

    def go():
        validate_config(q, seed, threads, allow_large)
        basis = build_basis(standard_triple(q))
        suites = (lambda: su2_check(basis),
                  lambda: hodge_check(basis),
                  lambda: bracket_table(basis).checks)
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(lambda s: s(), suites))
        else:
            results = [s() for s in suites]
        checks = [c for r in results for c in r]
        emit("verify", {"q": q, "seed": seed, "threads": threads}, checks, fmt, output)

    run_guarded(go)


@main.command()
@common_options
@click.option("--figures", type=click.Path(file_okay=False), default=None,
              help="Render the root diagram (PNG + CSV) into this directory.")
def roots(q, seed, threads, output, fmt, allow_large, figures):
    """Cartan subalgebra and B2 root system of the operator algebra."""

    def go():
        validate_config(q, seed, threads, allow_large)
        basis = build_basis(standard_triple(q))
        tbl = bracket_table(basis)
        rep = root_system(tbl)
        checks = tbl.checks + rep.checks
        extra = {
            "cartan": list(rep.cartan),
            "label": rep.label,
            "epsilon": tbl.epsilon,
            "roots": [{"coords": list(r["coords"]),
                       "length2": r["length2"],
                       "vector": r["vector"]} for r in rep.roots],
        }
        if figures:
            from .figures import root_diagram
            extra["figures"] = root_diagram(rep.roots, figures)
        emit("roots", {"q": q, "seed": seed, "threads": threads}, checks, fmt, output,
             extra=extra)

    run_guarded(go)


@main.command()
@common_options
@click.option("--figures", type=click.Path(file_okay=False), default=None,
              help="Render the Hodge diamond (PNG + CSV) into this directory.")
def hodge(q, seed, threads, output, fmt, allow_large, figures):
    """Scalar Hodge action and the weight = Hodge decomposition table."""

    def go():
        validate_config(q, seed, threads, allow_large)
        basis = build_basis(standard_triple(q))
        checks = hodge_check(basis)
        entries, wchecks = weight_decompose(basis)
        checks += wchecks
        extra = {"weights": entries}
        if figures:
            from .figures import hodge_diamond
            extra["figures"] = hodge_diamond(entries, basis.m, figures)
        emit("hodge", {"q": q, "seed": seed, "threads": threads}, checks, fmt, output,
             extra=extra)

    run_guarded(go)


@main.command()
@common_options
@click.option("--degree", type=int, required=True)
def invariants(q, seed, threads, output, fmt, allow_large, degree):
    """Basis of the isotropy-invariant forms in one degree."""

    def go():
        validate_config(q, seed, threads, allow_large)
        if not 0 <= degree <= 4 * q:
            raise InputError(f"degree must be in [0, {4 * q}], got {degree}")
        basis = build_basis(standard_triple(q))
        inv = gm_invariants(basis, degree)
        checks = [check(f"invariants:deg-{degree}-kernel-exact",
                        all(basis[f"ad_{r}"].apply(f).is_zero()
                            for f in inv for r in "IJK"),
                        data={"dim": len(inv)})]
        emit("invariants", {"q": q, "seed": seed, "degree": degree}, checks, fmt,
             output, extra={"basis": inv})

    run_guarded(go)


@main.command()
@common_options
def ao(q, seed, threads, output, fmt, allow_large):
    """Invariants of the submodule generated by the determinant form."""

    def go():
        validate_config(q, seed, threads, allow_large)
        basis = build_basis(standard_triple(q))
        checks, data = ao_invariants_check(basis)
        tbl = bracket_table(basis)
        rep = root_system(tbl)
        checks += highest_weight_check(basis, rep.roots)
        emit("ao", {"q": q, "seed": seed}, checks, fmt, output, extra=data)

    run_guarded(go)


@main.command()
@common_options
@click.option("--k", type=int, default=None,
              help="Check only alpha = C^k(det).")
@click.option("--random-invariant", is_flag=True,
              help="Check seeded random invariant forms instead of C^k(det).")
@click.option("--degree", type=int, default=None,
              help="Degree of the random invariant forms.")
@click.option("--count", type=int, default=20, show_default=True)
def thm21(q, seed, threads, output, fmt, allow_large, k, random_invariant,
          degree, count):
    """The 2^s top-form identity / mod-4 divisibility obstruction."""

    def go():
        real_seed = validate_config(q, seed, threads, allow_large)
        if k is not None and random_invariant:
            raise InputError("--k and --random-invariant are mutually exclusive")
        basis = build_basis(standard_triple(q))
        checks = []
        if random_invariant:
            if degree is None:
                raise InputError("--random-invariant requires --degree")
            if degree % 2 or not 0 <= degree <= 4 * q:
                raise InputError(f"degree must be even in [0, {4 * q}]")
            inv = gm_invariants(basis, degree)
            if not inv:
                raise InputError(f"no invariant forms in degree {degree}")
            rng = random.Random(real_seed)
            for i in range(count):
                f = random_combination(rng, inv)
                rec = theorem21_check(basis, f)
                rec["name"] = f"{rec['name']}#{i}"
                checks.append(rec)
        else:
            C = c_operator(basis)
            f = basis.det
            ks = range(q + 1) if k is None else [k]
            for kk in range(max(ks) + 1):
                if kk in ks:
                    if f.is_zero():
                        raise InputError(f"C^{kk}(det) is zero")
                    rec = theorem21_check(basis, f)
                    rec["name"] = f"thm:C^{kk}det:" + rec["name"]
                    rec.setdefault("data", {})["deg_value"] = \
                        degree_functional(basis, f)
                    checks.append(rec)
                f = C.apply(f)
        emit("thm21", {"q": q, "seed": real_seed, "k": k,
                       "random_invariant": random_invariant, "degree": degree,
                       "count": count}, checks, fmt, output)

    run_guarded(go)


@main.command()
@common_options
@click.option("--form", "form_path", type=click.Path(exists=True, dir_okay=False),
              required=True)
def fixlocus(q, seed, threads, output, fmt, allow_large, form_path):
    """Fix locus on the sphere of induced structures for a form file."""

    def go():
        validate_config(q, seed, threads, allow_large)
        basis = build_basis(standard_triple(q))
        f = load_form(form_path)
        if f.dim != 4 * q:
            raise InputError(f"form dim {f.dim} does not match 4q = {4 * q}")
        loc = fix_locus(basis, f)
        checks = [check("fixlocus:kernel-dim-valid", loc.tag in ("All", "AntipodalPair", "None"),
                        data=loc.to_json())]
        emit("fixlocus", {"q": q, "form": os.path.basename(form_path)}, checks,
             fmt, output, extra=loc.to_json())

    run_guarded(go)


def _parse_point(pair):
    u, v = (parse_rational(x) for x in pair)
    from .quaternionic import rational_sphere_point
    return rational_sphere_point(u, v)


@main.command()
@common_options
@click.option("--classes", "classes_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="JSON array of integer form objects.")
@click.option("--samples", type=int, default=10, show_default=True,
              help="Number of seeded random sphere points.")
@click.option("--point", nargs=2, multiple=True, metavar="U V",
              help="Extra stereographic sample point (rationals as p/q).")
def scan(q, seed, threads, output, fmt, allow_large, classes_path, samples, point):
    """General-type probe: exclusion sets of integer classes over samples."""

    def go():
        real_seed = validate_config(q, seed, threads, allow_large)
        basis = build_basis(standard_triple(q))
        classes = load_forms(classes_path)
        for f in classes:
            if f.dim != 4 * q:
                raise InputError(f"class dim {f.dim} does not match 4q = {4 * q}")
        rng = random.Random(real_seed)
        pts = [_parse_point(p) for p in point]
        seen = {p.coords() for p in pts}
        while len(pts) < len(point) + samples:
            s = random_sphere_point(rng)
            if s.coords() not in seen:
                seen.add(s.coords())
                pts.append(s)
        data, checks = general_type_scan(basis, classes, pts)
        if not checks:
            checks = [check("scan:no-classes" if not classes else "scan:all-invariant",
                            True)]
        emit("scan", {"q": q, "seed": real_seed, "samples": samples,
                      "points": [[str(u), str(v)] for u, v in point],
                      "classes": os.path.basename(classes_path)},
             checks, fmt, output, extra=data)

    run_guarded(go)


@main.command("dump-op")
@common_options
@click.argument("name")
def dump_op_cmd(q, seed, threads, output, fmt, allow_large, name):
    """Write one of the named operators as a sparse JSON dump."""

    def go():
        validate_config(q, seed, threads, allow_large)
        basis = build_basis(standard_triple(q))
        known = dict(basis.ops)
        known["C"] = c_operator(basis)
        if name not in known:
            raise InputError(f"unknown operator {name!r}; choose from "
                             f"{', '.join(list(NAMES) + ['C'])}")
        op = known[name]
        if output:
            dump_op(op, output)
            click.echo(f"wrote {name} (q={q}) to {output}")
        else:
            click.echo(json.dumps(op_to_obj(op), indent=2, sort_keys=True))
        sys.exit(0)

    run_guarded(go)


if __name__ == "__main__":
    main()
