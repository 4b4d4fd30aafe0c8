"""JSON round-tripping for forms and operators.

Rationals travel as decimal strings "numerator/denominator" so nothing
ever passes through floating point; term and column order is canonical
(degree, then lexicographic), making dumps diff-able fixtures.
"""

from __future__ import annotations

import json

from .errors import SchemaError
from .exterior import Form, SparseOp, check_monomial
from .scalars import CRat, format_rational, parse_rational


def _term_key(item):
    S = item[0]
    return (len(S), S)


def form_to_obj(f: Form):
    return {
        "dim": f.dim,
        "terms": [
            {"indices": list(S),
             "re": format_rational(c.re),
             "im": format_rational(c.im)}
            for S, c in sorted(f.terms.items(), key=_term_key)
        ],
    }


def _parse_terms(obj, dim, where):
    if not isinstance(obj, list):
        raise SchemaError(f"{where}: terms must be a list")
    terms = {}
    for t in obj:
        if not isinstance(t, dict) or not {"indices", "re", "im"} <= set(t):
            raise SchemaError(f"{where}: term must carry indices/re/im")
        S = tuple(t["indices"])
        if not all(isinstance(i, int) for i in S):
            raise SchemaError(f"{where}: indices must be integers")
        try:
            check_monomial(S, dim)
        except Exception as exc:
            raise SchemaError(f"{where}: {exc}") from exc
        if S in terms:
            raise SchemaError(f"{where}: duplicate monomial {list(S)}")
        try:
            c = CRat(parse_rational(t["re"]), parse_rational(t["im"]))
        except Exception as exc:
            raise SchemaError(f"{where}: {exc}") from exc
        if c:
            terms[S] = c
    return terms


def form_from_obj(obj) -> Form:
    if not isinstance(obj, dict) or "dim" not in obj or "terms" not in obj:
        raise SchemaError("form object must carry dim and terms")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError(f"bad dim {dim!r}")
    return Form(dim, _parse_terms(obj["terms"], dim, "form"))


def op_to_obj(op: SparseOp):
    cols = []
    for S, f in sorted(op.columns.items(), key=_term_key):
        cols.append({"from": list(S), "image": form_to_obj(f)["terms"]})
    return {"dim": op.dim, "columns": cols}


def op_from_obj(obj) -> SparseOp:
    if not isinstance(obj, dict) or "dim" not in obj or "columns" not in obj:
        raise SchemaError("operator object must carry dim and columns")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError(f"bad dim {dim!r}")
    cols = {}
    for col in obj["columns"]:
        if not isinstance(col, dict) or not {"from", "image"} <= set(col):
            raise SchemaError("operator column must carry from/image")
        S = tuple(col["from"])
        try:
            check_monomial(S, dim)
        except Exception as exc:
            raise SchemaError(f"column: {exc}") from exc
        if S in cols:
            raise SchemaError(f"duplicate column {list(S)}")
        cols[S] = Form(dim, _parse_terms(col["image"], dim, f"column {list(S)}"))
    return SparseOp(dim, cols)


def dump_form(f: Form, path):
    with open(path, "w") as fh:
        json.dump(form_to_obj(f), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_form(path) -> Form:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    return form_from_obj(obj)


def load_forms(path):
    """A classes file: either one form object or a JSON array of them."""
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    if isinstance(obj, dict):
        return [form_from_obj(obj)]
    if isinstance(obj, list):
        return [form_from_obj(o) for o in obj]
    raise SchemaError(f"{path}: expected a form object or array of forms")


def dump_op(op: SparseOp, path):
    with open(path, "w") as fh:
        json.dump(op_to_obj(op), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_op(path) -> SparseOp:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    return op_from_obj(obj)
