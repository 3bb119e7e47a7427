"""Bundled arrangements and their expected check results.

Each fixture carries the exact arrangement plus (check name, expected value)
pairs; the verify-paper driver in the CLI evaluates every check and compares
strings. Expected values are frozen here, not computed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .arrangement import Arrangement, parse_dict

FIXTURE_NAMES = ("example-5-1", "example-5-2", "prop-6-1", "triangle-altitudes")

# The twenty discriminantal normals of the example-5-1 coefficient rows, in
# dictionary order of their index triples.
EXAMPLE_5_1_NORMALS = (
    ((1, 2, 3), (-5, -2, 3, 0, 0, 0)),
    ((1, 2, 4), (2, -1, 0, 3, 0, 0)),
    ((1, 2, 5), (-13, 2, 0, 0, 3, 0)),
    ((1, 2, 6), (-12, 3, 0, 0, 0, 3)),
    ((1, 3, 4), (3, 0, -1, 2, 0, 0)),
    ((1, 3, 5), (-12, 0, 2, 0, 2, 0)),
    ((1, 3, 6), (-13, 0, 3, 0, 0, 2)),
    ((1, 4, 5), (-3, 0, 0, 2, 1, 0)),
    ((1, 4, 6), (-2, 0, 0, 3, 0, 1)),
    ((1, 5, 6), (-5, 0, 0, 0, 3, -2)),
    ((2, 3, 4), (0, 3, -2, -5, 0, 0)),
    ((2, 3, 5), (0, -12, 13, 0, -5, 0)),
    ((2, 3, 6), (0, -13, 12, 0, 0, -5)),
    ((2, 4, 5), (0, -3, 0, 13, 2, 0)),
    ((2, 4, 6), (0, -2, 0, 12, 0, 2)),
    ((2, 5, 6), (0, -5, 0, 0, 12, -13)),
    ((3, 4, 5), (0, 0, -3, 12, 3, 0)),
    ((3, 4, 6), (0, 0, -2, 13, 0, 3)),
    ((3, 5, 6), (0, 0, -5, 0, 13, -12)),
    ((4, 5, 6), (0, 0, 0, -5, 2, -3)),
)

REFERENCE_CHI_6_2 = "x^6-20x^5+145x^4-426x^3+300x^2"

_EXPECTATIONS = {
    "example-5-1": (
        ("disc-normals-printed", "exact"),
        ("disc-cone-count", "884"),
        ("disc-cone-count-flats", "884"),
        ("very-generic", "false"),
        ("reference-chi", REFERENCE_CHI_6_2),
        ("reference-cone-count", "892"),
    ),
    "example-5-2": (
        ("disc-cone-count", "888"),
        ("disc-cone-count-flats", "888"),
    ),
    "prop-6-1": (
        ("cell-1-2-5", "true"),
        ("facet-1-2-5", "false"),
        ("cell-without-facet", "true"),
        ("facets-at-least-4", "true"),
    ),
    "triangle-altitudes": (
        ("concurrency-sets", "{1,2,6},{1,3,5},{2,3,4},{4,5,6}"),
        ("concurrency-family-in-p", "false"),
    ),
}


@dataclass(frozen=True)
class Fixture:
    name: str
    arrangement: Arrangement
    expectations: tuple


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}")
    return resources.files("discarr").joinpath(f"data/{name}.json").read_text()


def load_fixture(name: str) -> Fixture:
    doc = json.loads(fixture_text(name))
    return Fixture(
        name=name,
        arrangement=parse_dict(doc),
        expectations=_EXPECTATIONS[name],
    )
