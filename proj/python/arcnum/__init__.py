"""Arc numbers of chord diagrams.

Computes the arc number of an undecorated chord diagram (Gauss word), a
minimal embedded partition realizing it, and a star subdiagram witness
certifying it, plus brute-force reference implementations for small
instances.
"""

from ._arcnum import (
    arc_number,
    brute_force_arc_number,
    brute_force_find_star,
    canonical_form,
    enumerate_diagrams,
    extract_star,
    greedy_partition,
    is_embedded_partition,
    is_equivalent,
    is_star,
    make_star,
    make_truncated_star,
    minimal_partition,
    random_diagram,
    reach_table,
    relabel,
    render_svg,
    star_truncation,
    subdiagram,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "arc_number",
    "brute_force_arc_number",
    "brute_force_find_star",
    "canonical_form",
    "enumerate_diagrams",
    "extract_star",
    "greedy_partition",
    "is_embedded_partition",
    "is_equivalent",
    "is_star",
    "make_star",
    "make_truncated_star",
    "minimal_partition",
    "random_diagram",
    "reach_table",
    "relabel",
    "render_svg",
    "star_truncation",
    "subdiagram",
    "verify_witness",
]
