"""Polychromatic edge-colorings of complete graphs."""

from ._polychrome import (
    EdgeColoring,
    ParseError,
    brute_force_poly,
    build,
    build_ordered,
    class_sizes,
    count_members,
    find_member,
    formula_k,
    improve_toward_combed,
    is_polychromatic,
    palette_size,
    recolor_unitary_triple,
    structured_poly,
    theorem_table,
)

__all__ = [
    "EdgeColoring",
    "ParseError",
    "brute_force_poly",
    "build",
    "build_ordered",
    "class_sizes",
    "count_members",
    "find_member",
    "formula_k",
    "improve_toward_combed",
    "is_polychromatic",
    "palette_size",
    "recolor_unitary_triple",
    "structured_poly",
    "theorem_table",
]
