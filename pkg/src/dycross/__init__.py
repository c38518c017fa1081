"""Delta-Y moves, drawings and crossing numbers of small graphs."""

from .drawing import Drawing, build_drawing, is_good
from .graph import Graph, Triangle, delta_y, named_graph, y_delta
from .solver import Budget, CrBounds, crossing_number

__all__ = ["Budget", "CrBounds", "Drawing", "Graph", "Triangle", "build_drawing", "crossing_number", "delta_y",
           "is_good", "named_graph", "y_delta"]
