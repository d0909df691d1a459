"""Cheap global work counters for the hot paths.

Used by tests to assert the fast paths really skip work and that the
per-call work (outside the two sorts) stays linear in the input size.
"""

from __future__ import annotations


class OpCounters:
    __slots__ = (
        "extreme_sorts",
        "extreme_steps",
        "translate_points",
        "sort_keys",
        "scan_steps",
        "edge_steps",
        "inner_steps",
    )

    def __init__(self):
        self.reset()

    def reset(self) -> None:
        self.extreme_sorts = 0
        self.extreme_steps = 0
        self.translate_points = 0
        self.sort_keys = 0
        self.scan_steps = 0
        self.edge_steps = 0
        self.inner_steps = 0

    def linear_work(self) -> int:
        """Total counted work excluding the two n*log(n) sorts."""
        return (
            self.extreme_steps
            + self.translate_points
            + self.sort_keys
            + self.scan_steps
            + self.edge_steps
            + self.inner_steps
        )

    def snapshot(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in self.__slots__}


counters = OpCounters()
