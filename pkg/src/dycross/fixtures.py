"""Shipped minimal-crossing drawings, re-validated every time they are loaded."""

from __future__ import annotations

from importlib import resources

from .drawing import Drawing, is_good, loads
from .graph import named_graph
from .iso import is_isomorphic

# name -> (comparison, crossing count the drawing must achieve)
EXPECTED = {
    "K7": ("==", 9),
    "G7_1": ("==", 8),
    "G7_2": ("<=", 7),
    "Gstar": ("==", 8),
    "Heawood": ("==", 3),
    "K6": ("==", 3),
    "Q7": ("==", 3),
    "P7": ("==", 3),
    "Q8": ("==", 3),
    "P8": ("==", 2),
    "P9": ("==", 2),
    "P10": ("==", 2),
}


class FixtureError(RuntimeError):
    pass


def fixture_path(name: str):
    return resources.files("dycross") / "data" / f"{name}.drawing"


def check_fixture(name: str, d: Drawing) -> None:
    op, count = EXPECTED[name]
    if not is_good(d):
        raise FixtureError(f"fixture {name} is not a good drawing")
    ok = d.crossing_count == count if op == "==" else d.crossing_count <= count
    if not ok:
        raise FixtureError(f"fixture {name} has {d.crossing_count} crossings, expected {op} {count}")
    if not is_isomorphic(d.base, named_graph(name)):
        raise FixtureError(f"fixture {name} is drawn on the wrong graph")


def load_fixture(name: str) -> Drawing:
    if name not in EXPECTED:
        raise KeyError(f"no fixture named {name!r}")
    d = loads(fixture_path(name).read_text())  # parsing validates the map
    check_fixture(name, d)
    return d


def fixtures() -> dict[str, Drawing]:
    return {name: load_fixture(name) for name in EXPECTED}
