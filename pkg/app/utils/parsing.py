"""
Text formats: scheme files, matrix literals and integer matrices.

A scheme file holds one scheme:

    p k r
    modulus: c0,c1,...,ck
    gen: [[a,b],[c,d]]

Matrix entries are integers (prime-field elements) or coefficient lists,
constant term first. Blank lines and lines starting with '#' are ignored.
"""
import re
from pathlib import Path
from typing import List, Union

import orjson

from app.exceptions.custom_exceptions import AlgebraException, SchemeFormatException
from app.models.field import FieldCtx, build_field
from app.models.lattice import IntMat
from app.models.matrix import Mat2
from app.models.scheme import SubgroupScheme


def parse_matrix_literal(ctx: FieldCtx, literal: str) -> Mat2:
    try:
        rows = orjson.loads(literal)
    except orjson.JSONDecodeError as exc:
        raise SchemeFormatException(f"bad matrix literal {literal!r}: {exc}")
    if not (isinstance(rows, list) and len(rows) == 2 and all(isinstance(r, list) and len(r) == 2 for r in rows)):
        raise SchemeFormatException(f"matrix literal {literal!r} is not of the form [[a,b],[c,d]]")
    entries = []
    for value in (rows[0][0], rows[0][1], rows[1][0], rows[1][1]):
        if isinstance(value, bool) or not (
            isinstance(value, int) or (isinstance(value, list) and all(isinstance(c, int) for c in value))
        ):
            raise SchemeFormatException(f"matrix entry {value!r} is neither an integer nor a coefficient list")
        try:
            entries.append(ctx.element(value))
        except AlgebraException as exc:
            raise SchemeFormatException(exc.detail)
    return Mat2(*entries)


def parse_scheme(text: str) -> SubgroupScheme:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise SchemeFormatException("empty scheme description")

    header = lines[0].split()
    if len(header) != 3 or not all(re.fullmatch(r"-?\d+", x) for x in header):
        raise SchemeFormatException(f"header must be 'p k r', got {lines[0]!r}")
    p, k, r = (int(x) for x in header)
    ctx = build_field(p, k)

    gens: List[Mat2] = []
    for line in lines[1:]:
        key, _, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if key == "modulus":
            try:
                modulus = tuple(int(c) for c in value.replace(" ", "").split(","))
            except ValueError:
                raise SchemeFormatException(f"bad modulus {value!r}")
            if modulus != ctx.modulus:
                raise SchemeFormatException(
                    f"modulus {list(modulus)} is not the canonical modulus {list(ctx.modulus)} of F_{p}^{k}"
                )
        elif key == "gen":
            gens.append(parse_matrix_literal(ctx, value))
        else:
            raise SchemeFormatException(f"unknown line {line!r}")
    return SubgroupScheme(ctx, r, gens)


def dump_scheme(G: SubgroupScheme) -> str:
    """Canonical text of a scheme; parse_scheme(dump_scheme(G)) rebuilds it."""
    ctx = G.ctx
    lines = [
        f"{ctx.p} {ctx.k} {G.r}",
        "modulus: " + ",".join(str(c) for c in ctx.modulus),
    ]
    lines.extend(f"gen: {g.text()}" for g in G.extra_gens)
    return "\n".join(lines) + "\n"


def read_scheme_file(path: Union[str, Path]) -> SubgroupScheme:
    path = Path(path)
    if not path.is_file():
        raise SchemeFormatException(f"scheme file {str(path)!r} does not exist")
    return parse_scheme(path.read_text())


def parse_int_matrix(text: str) -> IntMat:
    """Rows separated by newlines or ';', entries by whitespace or commas."""
    rows = [row for row in re.split(r"[;\n]", text) if row.strip()]
    try:
        return IntMat([[int(x) for x in re.split(r"[,\s]+", row.strip())] for row in rows])
    except ValueError:
        raise SchemeFormatException(f"cannot read an integer matrix from {text!r}")
