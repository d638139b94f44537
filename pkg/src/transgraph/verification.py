"""Round-trip verification: reduction graph vs. realized geometry.

The forward direction of both reductions is executed literally: extract
the description of a simple line arrangement, build the candidate graph,
realize the objects, compute their transmission graph, and compare.  An
empty diff (plus the side-condition checkers for sectors) certifies the
construction on that input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .arrangement import (
    Description,
    LineArrangement,
    extract_description,
    is_simple,
    slope_sorted,
)
from .geometry import Line, line_from_slope_intercept
from .graphs import DiffReport, LabelledDigraph, graph_diff
from .realization import (
    SectorRealization,
    SegmentRealization,
    realize_sectors,
    realize_segments,
    _sector_side_conditions,
)
from .reductions import reduce_sectors, reduce_segments
from .transmission import Instance


class SamplingExhausted(Exception):
    pass


@dataclass(frozen=True)
class RandomSpec:
    n: int
    seed: int
    coord_bound: int = 12

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("need n >= 2")
        if self.coord_bound < 1:
            raise ValueError("need a positive coordinate bound")


MAX_SAMPLING_ATTEMPTS = 1000


def random_simple_arrangement(spec: RandomSpec) -> LineArrangement:
    """Rejection-sample a simple arrangement with small integer data.

    Deterministic for a fixed spec: slopes p/q and integer intercepts are
    drawn from a seeded generator until the arrangement is simple.
    """
    rng = random.Random((spec.seed, spec.n, spec.coord_bound).__repr__())
    bound = spec.coord_bound
    for _ in range(MAX_SAMPLING_ATTEMPTS):
        slopes: set[Fraction] = set()
        while len(slopes) < spec.n:
            p = rng.randint(-bound, bound)
            q = rng.randint(1, bound)
            slopes.add(Fraction(p, q))
        lines = [
            line_from_slope_intercept(s, rng.randint(-bound, bound))
            for s in sorted(slopes)
        ]
        arr = slope_sorted(lines)
        if is_simple(arr):
            return arr
    raise SamplingExhausted(f"no simple arrangement found for {spec}")


@dataclass
class RoundTripReport:
    description: Description
    graph_from_reduction: LabelledDigraph
    graph_from_geometry: LabelledDigraph
    diff: DiffReport
    checker_results: list[tuple[str, bool, str]] = field(default_factory=list)
    parameters: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.diff.empty and all(ok for _, ok, _ in self.checker_results)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status}: {self.diff.summary()}"]
        for name, ok, detail in self.checker_results:
            lines.append(f"  {name}: {'pass' if ok else 'fail'}{' ' + detail if detail else ''}")
        return "\n".join(lines)


def round_trip_segments(arr: LineArrangement) -> RoundTripReport:
    desc = extract_description(arr)
    reduced = reduce_segments(desc)
    realized = realize_segments(arr)
    diff = graph_diff(reduced, realized.graph)
    return RoundTripReport(
        description=desc,
        graph_from_reduction=reduced,
        graph_from_geometry=realized.graph,
        diff=diff,
        parameters={"tilt": (realized.tilt.c, realized.tilt.s)},
    )


def round_trip_sectors(arr: LineArrangement) -> RoundTripReport:
    desc = extract_description(arr)
    reduced = reduce_sectors(desc)
    realized = realize_sectors(arr)
    diff = graph_diff(reduced, realized.graph)
    problems = _sector_side_conditions(realized.instance, realized.graph, desc)
    checkers = [
        ("equiangular", True, ""),
        ("alpha at most pi/4", "opening angle exceeds pi/4" not in problems, ""),
        ("wide spread", "not wide spread" not in problems, ""),
        (
            "observation-1 sweep",
            not any(p.startswith("observation-1") for p in problems),
            "",
        ),
        (
            "ordering gadget sweep",
            not any(p.startswith("ordering gadget") for p in problems),
            "",
        ),
    ]
    return RoundTripReport(
        description=desc,
        graph_from_reduction=reduced,
        graph_from_geometry=realized.graph,
        diff=diff,
        checker_results=checkers,
        parameters={
            "tau": realized.tau,
            "delta": realized.delta,
            "epsilon": realized.epsilon,
            "alpha_half": (realized.alpha_half.c, realized.alpha_half.s),
        },
    )
