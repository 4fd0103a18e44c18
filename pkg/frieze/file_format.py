"""
file_format.py
==============
JSON files for dissected polygons and weak friezes.

A polygon spec describes the input of ``glue``::

    {
      "n": 8,
      "scalar_mode": "rational",
      "variables": [],
      "dissection": [[1, 4], [5, 8]],
      "pieces": [
        {"vertices": [1, 2, 3, 4], "dissection": [], "default": "1"},
        {"vertices": [1, 4, 5, 8], "dissection": [], "values": {"1,4": "1", ...}},
        ...
      ]
    }

Piece diagonals are keyed "a,b" with a < b in the labels of the whole
polygon; ``default`` fills every diagonal of the piece not listed in
``values``. A frieze file lists every diagonal of the polygon::

    {"n": 4, "scalar_mode": "rational", "variables": [],
     "dissection": [[1, 3]], "values": {"1,2": "1", "1,3": "1", ...}}
"""

import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Tuple

from frieze.gluing import Piece, glue
from frieze.weak_frieze import WeakFrieze
from geometry import Cell, Diagonal, Dissection, all_diagonals, validate_dissection
from scalar import ScalarField, field_for, format_scalar, parse_in_field
from utils.error_handler import InputFormatError

logger = logging.getLogger(__name__)

STDIN = "-"


@dataclass(frozen=True)
class PolygonSpec:
    """A parsed polygon spec: everything ``glue`` needs."""
    n: int
    field: ScalarField
    gluing: Dissection
    pieces: Tuple[Piece, ...]

    def glue(self) -> WeakFrieze:
        return glue(self.n, self.gluing, list(self.pieces))


def read_json(path: str) -> Dict[str, Any]:
    """
    Read a JSON object from a file, or from standard input when path is "-".

    Raises:
        FileNotFoundError: If the file does not exist
        InputFormatError: If the content is not a JSON object
    """
    if path == STDIN:
        text = sys.stdin.read()
    else:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path} is not valid JSON", details=str(e))
    if not isinstance(data, dict):
        raise InputFormatError(f"{path} must contain a JSON object")
    logger.debug(f"read {path}: keys {sorted(data)}")
    return data


def _require(data: Mapping[str, Any], key: str, kind, where: str):
    if key not in data:
        raise InputFormatError(f"{where}: missing required field '{key}'")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InputFormatError(f"{where}: field '{key}' has the wrong type")
    return value


def _field(data: Mapping[str, Any]) -> ScalarField:
    mode = data.get("scalar_mode", "rational")
    variables = data.get("variables") or []
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise InputFormatError("'variables' must be a list of names")
    return field_for(mode, variables)


def _diagonals(pairs: Any, where: str) -> List[Diagonal]:
    if not isinstance(pairs, list):
        raise InputFormatError(f"{where}: 'dissection' must be a list of [a, b] pairs")
    result = []
    for pair in pairs:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(v, int) for v in pair)):
            raise InputFormatError(f"{where}: {pair!r} is not an [a, b] pair")
        result.append(Diagonal(pair[0], pair[1]))
    return result


def _scalar(value: Any, field: ScalarField, where: str):
    if isinstance(value, int) and not isinstance(value, bool):
        return field.from_int(value)
    if isinstance(value, str):
        return parse_in_field(value, field)
    raise InputFormatError(f"{where}: value {value!r} must be a scalar string or an integer")


def _values(raw: Any, field: ScalarField, where: str) -> Dict[Diagonal, Any]:
    if not isinstance(raw, dict):
        raise InputFormatError(f"{where}: 'values' must be an object keyed by \"a,b\"")
    return {Diagonal.parse(key): _scalar(value, field, f"{where} {key}") for key, value in raw.items()}


def parse_polygon_spec(data: Mapping[str, Any]) -> PolygonSpec:
    """
    Validate a polygon spec and turn its pieces into cell-local weak friezes.

    Raises:
        InputFormatError: On missing fields or values
        InvalidVertex, NotInternal, Crossing, InvalidCell, ParseError: From validation
    """
    n = _require(data, "n", int, "polygon spec")
    field = _field(data)
    gluing = validate_dissection(n, _diagonals(data.get("dissection", []), "polygon spec"))
    pieces: List[Piece] = []
    for index, raw in enumerate(_require(data, "pieces", list, "polygon spec")):
        where = f"piece {index + 1}"
        if not isinstance(raw, dict):
            raise InputFormatError(f"{where} must be an object")
        cell = Cell(tuple(_require(raw, "vertices", list, where))).check_in(n)
        given = _values(raw.get("values", {}), field, where)
        default = raw.get("default")
        default = None if default is None else _scalar(default, field, f"{where} default")
        values = {}
        for local in all_diagonals(cell.size):
            d = Diagonal(cell.global_label(local.a), cell.global_label(local.b))
            if d in given:
                values[local] = given.pop(d)
            elif default is not None:
                values[local] = default
            else:
                raise InputFormatError(f"{where}: no value for diagonal {d.key()}")
        if given:
            stray = ", ".join(d.key() for d in sorted(given))
            raise InputFormatError(f"{where}: values given for diagonals outside the cell: {stray}")
        local_dissection = []
        for d in _diagonals(raw.get("dissection", []), where):
            if not cell.contains(d):
                raise InputFormatError(f"{where}: dissection diagonal {d.key()} is not a diagonal of {cell}")
            local_dissection.append(Diagonal(cell.local_label(d.a), cell.local_label(d.b)))
        piece = WeakFrieze(
            cell.size, validate_dissection(cell.size, local_dissection), values, field
        )
        pieces.append((cell, piece))
    return PolygonSpec(n, field, gluing, tuple(pieces))


def parse_frieze(data: Mapping[str, Any]) -> WeakFrieze:
    """Read a frieze file (every diagonal listed, or filled from ``default``)."""
    n = _require(data, "n", int, "frieze file")
    field = _field(data)
    dissection = validate_dissection(n, _diagonals(data.get("dissection", []), "frieze file"))
    given = _values(data.get("values", {}), field, "frieze file")
    default = data.get("default")
    default = None if default is None else _scalar(default, field, "frieze file default")
    values = {}
    for d in all_diagonals(n):
        if d in given:
            values[d] = given.pop(d)
        elif default is not None:
            values[d] = default
        else:
            raise InputFormatError(f"frieze file: no value for diagonal {d.key()}")
    if given:
        stray = ", ".join(d.key() for d in sorted(given))
        raise InputFormatError(f"frieze file: diagonals outside the {n}-gon: {stray}")
    return WeakFrieze(n, dissection, values, field)


def load_frieze(path: str) -> WeakFrieze:
    """
    Load a weak frieze from a frieze file, or glue one from a polygon spec
    (recognized by its "pieces" field).
    """
    data = read_json(path)
    if "pieces" in data:
        logger.info(f"{path} is a polygon spec; gluing its pieces")
        return parse_polygon_spec(data).glue()
    return parse_frieze(data)


def frieze_to_dict(f: WeakFrieze) -> Dict[str, Any]:
    return {
        "n": f.n,
        "scalar_mode": f.field.mode,
        "variables": list(f.field.universe),
        "dissection": [[d.a, d.b] for d in f.dissection.sorted()],
        "values": {d.key(): format_scalar(v) for d, v in f.items()},
    }


def dump_frieze(f: WeakFrieze) -> str:
    """Deterministic frieze file text (diagonals in lexicographic order)."""
    return json.dumps(frieze_to_dict(f), indent=2) + "\n"
