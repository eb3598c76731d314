from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence


class AlgorithmId(enum.Enum):
    DBLAC = "DBLAC"
    LDF = "LDF"
    DSATUR = "DSATUR"
    RLF = "RLF"

    @classmethod
    def parse(cls, name: str) -> AlgorithmId:
        """Look up an algorithm by name, ignoring case."""
        try:
            return cls[name.strip().upper()]
        except KeyError:
            valid = ", ".join(a.name.lower() for a in cls)
            raise ValueError(f"unknown algorithm {name!r}; valid names: {valid}") from None

    @property
    def rank(self) -> int:
        return list(AlgorithmId).index(self)

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Coloring:
    """A vertex coloring with dense 0-indexed colors.

    ``assignment[v]`` is the color of vertex ``v``; every color in ``0..k-1``
    is used by at least one vertex. ``algorithm`` is ``None`` for colorings
    that were read from a file rather than computed.
    """

    assignment: tuple[int, ...]
    algorithm: AlgorithmId | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))
        used = set(self.assignment)
        if used != set(range(len(used))):
            raise ValueError(f"colors must be exactly 0..k-1, got {sorted(used)}")

    @property
    def k(self) -> int:
        return max(self.assignment, default=-1) + 1

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    @classmethod
    def from_classes(
        cls, n: int, classes: Sequence[Sequence[int]], algorithm: AlgorithmId | None = None
    ) -> Coloring:
        """Build a coloring from color classes; class ``i`` gets color ``i``."""
        assignment = [-1] * n
        for color, members in enumerate(classes):
            for v in members:
                if assignment[v] != -1:
                    raise ValueError(f"vertex {v} appears in more than one class")
                assignment[v] = color
        if -1 in assignment:
            raise ValueError(f"vertex {assignment.index(-1)} is in no class")
        return cls(tuple(assignment), algorithm)
