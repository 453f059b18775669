"""Named shapes used by the tests, scripts and CLI demos."""

from fractions import Fraction as F

from .geom import SimplePolygon
from .star import SegmentStar

UNIT_SQUARE = SimplePolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
CENTERED_SQUARE = SimplePolygon([(F(-1, 2), F(-1, 2)), (F(1, 2), F(-1, 2)), (F(1, 2), F(1, 2)), (F(-1, 2), F(1, 2))])
TRIANGLE = SimplePolygon([(0, 0), (1, 0), (0, 1)])
AFFINE_REGULAR_HEXAGON = SimplePolygon([(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
SHEARED_PARALLELOGRAM = SimplePolygon([(0, 0), (2, 0), (3, 1), (1, 1)])

L_SHAPE = SimplePolygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
# [0,2]^2 with a triangular notch cut into the right edge
NOTCHED_SQUARE = SimplePolygon([(0, 0), (2, 0), (2, F(4, 5)), (F(3, 2), 1), (2, F(6, 5)), (2, 2), (0, 2)])
# union of [0,3]x[1,2] and [1,2]x[0,3]
PLUS_SIGN = SimplePolygon([(1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (2, 3), (1, 3), (1, 2), (0, 2), (0, 1), (1, 1)])
# S-shaped staircase; the notches from the right and from the left leave no common center
ZIGZAG = SimplePolygon([(0, 0), (4, 0), (4, 1), (1, 1), (1, 2), (4, 2), (4, 5), (0, 5), (0, 4), (3, 4), (3, 3), (0, 3)])

PLUS_STAR = SegmentStar((0, 0), [(1, 0), (-1, 0), (0, 1), (0, -1)])
TRIPOD_STAR = SegmentStar((0, 0), [(1, 0), (0, 1), (-1, -1)])

POLYGONS = {
    "unit_square": UNIT_SQUARE,
    "centered_square": CENTERED_SQUARE,
    "triangle": TRIANGLE,
    "hexagon": AFFINE_REGULAR_HEXAGON,
    "parallelogram": SHEARED_PARALLELOGRAM,
    "l_shape": L_SHAPE,
    "notched_square": NOTCHED_SQUARE,
    "plus_sign": PLUS_SIGN,
    "zigzag": ZIGZAG,
}

STARS = {
    "plus_star": PLUS_STAR,
    "tripod_star": TRIPOD_STAR,
}
