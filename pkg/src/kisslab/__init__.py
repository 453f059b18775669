"""Exact tools for Hadwiger numbers of polygonal disks and segment stars."""

from .audit import AuditReport, audit_theorem1
from .convex import (
    ConvexPolygon,
    central_symmetral,
    convex_hull,
    difference_body,
    gauge,
    longest_chord,
    minkowski_perimeter,
    minkowski_sum,
    parallelogram_translate_witness,
    relative_distance,
)
from .family import SearchParams, SearchResult, TranslateFamily, search_max_family, validate
from .geom import Point, Relation, Segment, SimplePolygon, disk_relation, point_location, segments_relation
from .placement import PlacementOracle, placement_relation, touching_placements
from .shape import BoundsReport, Tag, hadwiger_bounds, pockets, star_kernel
from .star import SegmentStar

__version__ = "0.1.0"
