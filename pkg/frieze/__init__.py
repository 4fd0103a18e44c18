"""
Weak friezes: Ptolemy checks, gluing, restriction, patterns and file formats.
"""

from .weak_frieze import WeakFrieze
from .report import CheckReport, Violation
from .report_generator import ReportGenerator
from .ptolemy import check_frieze, check_weak_frieze, ptolemy_sides
from .gluing import Piece, glue, pieces_of, restrict
from .pattern import PatternWindow, check_local_rule, format_pattern, pattern_entry, render_pattern
from .file_format import (
    PolygonSpec,
    dump_frieze,
    frieze_to_dict,
    load_frieze,
    parse_frieze,
    parse_polygon_spec,
    read_json,
)

__all__ = [
    'WeakFrieze',
    'CheckReport',
    'Violation',
    'ReportGenerator',
    'check_frieze',
    'check_weak_frieze',
    'ptolemy_sides',
    'Piece',
    'glue',
    'pieces_of',
    'restrict',
    'PatternWindow',
    'check_local_rule',
    'format_pattern',
    'pattern_entry',
    'render_pattern',
    'PolygonSpec',
    'dump_frieze',
    'frieze_to_dict',
    'load_frieze',
    'parse_frieze',
    'parse_polygon_spec',
    'read_json',
]
