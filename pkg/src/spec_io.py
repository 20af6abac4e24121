"""
SKEWRANK - Ring-Spec, Series and Ideal Documents

Ring spec (JSON):
    {"field": {"p": 2}, "dim": 2, "basis": ["1", "t"], "unit": [1, 0],
     "mul": [[0, 0, [1, 0]], [0, 1, [0, 1]], [1, 0, [0, 1]]],
     "automorphism": [[1, 0], [0, 1]]}
Shorthands: {"matrix": {"k": 2, "p": 2}}, {"product": [spec, spec]},
{"truncated_polynomial": {"p": 2, "degree": 2}}. The automorphism may be a
matrix (column k = image of basis k), "identity", "swap" or {"inner": u}.

Series: {"precision": N, "coeffs": [[...], ...]}, plus "valuation" for
Laurent series. Documents are written in canonical form: exactly N
coefficient rows reduced mod p, and for Laurent series a nonzero leading
row, the valuation being the index of that row. A canonical document is
read and written back unchanged; a short "coeffs" list is zero-padded to
N and leading zero rows of a Laurent series move into the valuation.
Ideals: "v1;v2;..." with comma-separated coordinates.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from algebra import Algebra, Element, direct_product, matrix_algebra, truncated_polynomial
from automorphism import (Automorphism, block_automorphism, identity_automorphism,
                          inner_automorphism, swap_automorphism)
from errors import SpecError
from field import PrimeField
from ideals import Ideal, ideal_generated, zero_ideal
from laurent import SkewLaurent
from series import SkewContext, SkewSeries

logger = logging.getLogger("skewrank.spec_io")

SUITE_PREFIX = "suite:"


# ============================================
# Helpers
# ============================================

def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"{what} must be an integer, got {value!r}")
    return value


def _vector(value: Any, n: int, what: str) -> np.ndarray:
    if not isinstance(value, list) or len(value) != n:
        raise SpecError(f"{what} must be a list of {n} integers, got {value!r}")
    return np.array([_int(c, what) for c in value], dtype=np.int64)


def load_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    if not path.exists():
        raise SpecError(f"file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise SpecError(f"{path}: invalid JSON ({e})")


def dump_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True)


# ============================================
# Ring specs
# ============================================

def _parse(spec: Any) -> Tuple[Algebra, Optional[Automorphism]]:
    if not isinstance(spec, dict):
        raise SpecError(f"ring spec must be an object, got {type(spec).__name__}")

    if "matrix" in spec:
        args = spec["matrix"]
        if not isinstance(args, dict):
            raise SpecError("'matrix' needs {\"k\": ..., \"p\": ...}")
        A = matrix_algebra(_int(args.get("k"), "matrix.k"), _int(args.get("p"), "matrix.p"))
        factor_alpha = None
    elif "truncated_polynomial" in spec:
        args = spec["truncated_polynomial"]
        if not isinstance(args, dict):
            raise SpecError("'truncated_polynomial' needs {\"p\": ..., \"degree\": ...}")
        A = truncated_polynomial(_int(args.get("p"), "truncated_polynomial.p"),
                                 _int(args.get("degree"), "truncated_polynomial.degree"))
        factor_alpha = None
    elif "product" in spec:
        factors = spec["product"]
        if not isinstance(factors, list) or len(factors) != 2:
            raise SpecError("'product' needs a list of two ring specs")
        (A1, a1), (A2, a2) = _parse(factors[0]), _parse(factors[1])
        A = direct_product(A1, A2)
        if a1 is None and a2 is None:
            factor_alpha = None
        else:
            factor_alpha = block_automorphism(A, a1 or identity_automorphism(A1),
                                              a2 or identity_automorphism(A2))
    else:
        A = _parse_explicit(spec)
        factor_alpha = None

    if "automorphism" in spec:
        return A, parse_automorphism(A, spec["automorphism"])
    return A, factor_alpha


def _parse_explicit(spec: Dict) -> Algebra:
    field_spec = spec.get("field")
    if not isinstance(field_spec, dict) or "p" not in field_spec:
        raise SpecError("ring spec needs field.p")
    field = PrimeField(_int(field_spec["p"], "field.p"))
    n = _int(spec.get("dim"), "dim")
    if n < 1:
        raise SpecError(f"dim must be positive, got {n}")

    structure = np.zeros((n, n, n), dtype=np.int64)
    for entry in spec.get("mul", []):
        if not isinstance(entry, list) or len(entry) != 3:
            raise SpecError(f"mul entries are [i, j, coeffs], got {entry!r}")
        i, j = _int(entry[0], "mul index"), _int(entry[1], "mul index")
        if not (0 <= i < n and 0 <= j < n):
            raise SpecError(f"mul index out of range: {entry!r}")
        structure[i, j] = _vector(entry[2], n, f"mul[{i},{j}]")

    unit = _vector(spec["unit"], n, "unit") if "unit" in spec else None
    names = spec.get("basis")
    if names is not None and (not isinstance(names, list) or len(names) != n):
        raise SpecError(f"basis must list {n} names")
    return Algebra(field, structure, unit, names, spec.get("name", ""))


def parse_automorphism(A: Algebra, raw: Any) -> Automorphism:
    if raw == "identity":
        return identity_automorphism(A)
    if raw == "swap":
        return swap_automorphism(A)
    if isinstance(raw, dict) and "inner" in raw:
        u = Element(A, _vector(raw["inner"], A.dim, "inner"))
        return inner_automorphism(A, u)
    if isinstance(raw, list):
        rows = [_vector(r, A.dim, "automorphism row") for r in raw]
        if len(rows) != A.dim:
            raise SpecError(f"automorphism must be {A.dim}x{A.dim}")
        return Automorphism(A, np.array(rows))
    raise SpecError(f"cannot read automorphism {raw!r}")


def build_algebra(spec: Any) -> Algebra:
    return _parse(spec)[0]


def build_context(spec: Any) -> SkewContext:
    """(A, alpha) from a ring spec; alpha defaults to the identity"""
    A, alpha = _parse(spec)
    return SkewContext(A, alpha or identity_automorphism(A))


def load_context(source: Union[str, Path]) -> SkewContext:
    """A spec file path, or suite:NAME for a built-in context"""
    text = str(source)
    if text.startswith(SUITE_PREFIX):
        from suite import get_context
        return get_context(text[len(SUITE_PREFIX):])
    ctx = build_context(load_json(source))
    logger.info("[SpecIO] loaded %s from %s", ctx.name, text)
    return ctx


def algebra_to_spec(A: Algebra, alpha: Optional[Automorphism] = None) -> Dict:
    """Explicit ring spec; omitted mul entries are zero products"""
    mul = [[i, j, [int(c) for c in A.structure[i, j]]]
           for i in range(A.dim) for j in range(A.dim) if A.structure[i, j].any()]
    spec = {
        "field": {"p": A.p},
        "dim": A.dim,
        "basis": list(A.basis_names),
        "unit": [int(c) for c in A.unit],
        "mul": mul,
    }
    if alpha is not None:
        spec["automorphism"] = [[int(c) for c in row] for row in alpha.matrix]
    return spec


# ============================================
# Series documents
# ============================================

def parse_series(ctx: SkewContext, doc: Any) -> Union[SkewSeries, SkewLaurent]:
    if not isinstance(doc, dict) or "coeffs" not in doc:
        raise SpecError("series document needs 'coeffs'")
    coeffs = doc["coeffs"]
    if not isinstance(coeffs, list):
        raise SpecError("'coeffs' must be a list of coefficient vectors")
    rows = [_vector(c, ctx.dim, "coefficient") for c in coeffs]
    precision = _int(doc.get("precision", len(rows)), "precision")
    if len(rows) > precision:
        raise SpecError(f"{len(rows)} coefficients exceed precision {precision}")
    matrix = np.zeros((precision, ctx.dim), dtype=np.int64)
    if rows:
        matrix[:len(rows)] = np.array(rows)

    if "valuation" in doc:
        return SkewLaurent(ctx, _int(doc["valuation"], "valuation"), matrix)
    if precision < 1:
        raise SpecError("series precision must be positive")
    return SkewSeries(ctx, matrix)


def series_to_doc(f: Union[SkewSeries, SkewLaurent]) -> Dict:
    if isinstance(f, SkewLaurent):
        return {"valuation": f.start, "precision": f.relprec,
                "coeffs": [[int(c) for c in row] for row in f.coeffs]}
    return {"precision": f.precision, "coeffs": [[int(c) for c in row] for row in f.coeffs]}


def load_series(ctx: SkewContext, path: Union[str, Path]) -> Union[SkewSeries, SkewLaurent]:
    return parse_series(ctx, load_json(path))


# ============================================
# Ideal strings
# ============================================

def parse_ideal(A: Algebra, text: Optional[str]) -> Ideal:
    """Two-sided ideal generated by "v1;v2;..." (empty: zero ideal)"""
    if text is None or not text.strip():
        return zero_ideal(A)
    gens = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            values = [int(c) for c in part.split(",")]
        except ValueError:
            raise SpecError(f"ideal generator {part!r} is not a list of integers")
        if len(values) != A.dim:
            raise SpecError(f"ideal generator {part!r} needs {A.dim} coordinates")
        gens.append(np.array(values, dtype=np.int64) % A.p)
    return ideal_generated(A, gens) if gens else zero_ideal(A)


def ideal_to_string(I: Ideal) -> str:
    return ";".join(",".join(str(int(c)) for c in row) for row in I.basis)
