"""Seeded ladder systems: per anchor, a fixed-length increasing run below it.

Every ladder ends exactly at anchor-1 (the finite stand-in for "converges to
the anchor") and the rest of it is a uniform sample, drawn from a per-anchor
stream so systems are pure functions of (seed, anchors, length).
"""

from dataclasses import dataclass
from random import Random

from .disjoint_types import DisjointType, all_types, tp


class LadderError(ValueError):
    pass


class AnchorTooSmallError(LadderError):
    pass


class TypeTooLongError(LadderError):
    pass


@dataclass
class LadderSystem:
    anchors: tuple[int, ...]
    ladder_len: int
    ladders: dict[int, tuple[int, ...]]

    def __post_init__(self):
        self.anchors = tuple(self.anchors)
        if not self.anchors:
            raise LadderError("at least one anchor required")
        if list(self.anchors) != sorted(set(self.anchors)):
            raise LadderError("anchors must be strictly increasing")
        if self.ladder_len < 1:
            raise LadderError("ladder length must be at least 1")
        for alpha in self.anchors:
            if alpha not in self.ladders:
                raise LadderError(f"missing ladder for anchor {alpha}")
            lad = tuple(self.ladders[alpha])
            self.ladders[alpha] = lad
            if len(lad) != self.ladder_len:
                raise LadderError(f"ladder at {alpha} has length {len(lad)}")
            if lad[0] < 0 or any(x >= y for x, y in zip(lad, lad[1:])):
                raise LadderError(f"ladder at {alpha} not strictly increasing")
            if lad[-1] != alpha - 1:
                raise LadderError(f"ladder at {alpha} must end at {alpha - 1}")

    def prefix(self, alpha: int, length: int) -> tuple[int, ...]:
        return self.ladders[alpha][:length]


def _sample_subset(rng: Random, universe: int, count: int) -> set[int]:
    # Floyd's algorithm: uniform count-subset of range(universe)
    chosen: set[int] = set()
    for j in range(universe - count, universe):
        pick = rng.randrange(j + 1)
        chosen.add(pick if pick not in chosen else j)
    return chosen


def generate_ladders(seed: int, anchors, ladder_len: int) -> LadderSystem:
    """Deterministic system: each ladder is a uniform (len-1)-subset of
    [0, anchor-1) plus the forced final element anchor-1."""
    anchors = tuple(anchors)
    if not anchors:
        raise LadderError("at least one anchor required")
    if ladder_len < 1:
        raise LadderError("ladder length must be at least 1")
    ladders = {}
    for alpha in anchors:
        if alpha < ladder_len:
            raise AnchorTooSmallError(f"anchor {alpha} smaller than ladder length {ladder_len}")
        rng = Random(f"{seed}:ladder:{alpha}")
        body = _sample_subset(rng, alpha - 1, ladder_len - 1)
        ladders[alpha] = tuple(sorted(body)) + (alpha - 1,)
    return LadderSystem(anchors, ladder_len, ladders)


def realize_type(
    system: LadderSystem, t: DisjointType, anchor_filter=None
) -> tuple[int, int] | None:
    """Least pair (gamma, delta), ordered by delta then gamma, whose ladder
    prefixes of length n are disjoint and interleave as t; None if no pair
    qualifies (possible at finite scale)."""
    n = t.n
    if n > system.ladder_len:
        raise TypeTooLongError(f"type length {n} exceeds ladder length {system.ladder_len}")
    if anchor_filter is None:
        pool = system.anchors
    else:
        pool = tuple(sorted(set(anchor_filter)))
        known = set(system.anchors)
        for a in pool:
            if a not in known:
                raise LadderError(f"filter anchor {a} not in system")
    for j, delta in enumerate(pool):
        dpre = system.ladders[delta][:n]
        dset = set(dpre)
        for gamma in pool[:j]:
            gpre = system.ladders[gamma][:n]
            if dset.intersection(gpre):
                continue
            if tp(gpre, dpre).bits == t.bits:
                return gamma, delta
    return None


@dataclass
class CensusRow:
    bits: str
    class_id: int
    pair: tuple[int, int] | None

    @property
    def realized(self) -> bool:
        return self.pair is not None


@dataclass
class Census:
    n: int
    rows: list[CensusRow]
    class_ids: tuple[int, ...]

    def complete_classes(self) -> tuple[int, ...]:
        """Classes in which every type of this length is realized."""
        bad = {row.class_id for row in self.rows if not row.realized}
        return tuple(c for c in self.class_ids if c not in bad)

    def to_csv(self) -> str:
        lines = ["type,class,realized,gamma,delta"]
        for row in self.rows:
            gamma = "" if row.pair is None else str(row.pair[0])
            delta = "" if row.pair is None else str(row.pair[1])
            lines.append(f"{row.bits},{row.class_id},{int(row.realized)},{gamma},{delta}")
        return "\n".join(lines) + "\n"


def realization_census(system: LadderSystem, n: int, partition=None) -> Census:
    """Per class of the anchor partition, try to realize every length-n type."""
    if n > system.ladder_len:
        raise TypeTooLongError(f"type length {n} exceeds ladder length {system.ladder_len}")
    if partition is None:
        partition = {a: 0 for a in system.anchors}
    for a in system.anchors:
        if a not in partition:
            raise LadderError(f"partition missing anchor {a}")
    class_ids = tuple(sorted(set(partition.values())))
    members = {
        c: tuple(a for a in system.anchors if partition[a] == c) for c in class_ids
    }
    rows = []
    for t in all_types(n):
        for c in class_ids:
            rows.append(CensusRow(t.bits, c, realize_type(system, t, members[c])))
    return Census(n, rows, class_ids)


def ladders_to_json_dict(system: LadderSystem) -> dict:
    return {
        "anchors": list(system.anchors),
        "ladder_len": system.ladder_len,
        "ladders": {str(a): list(system.ladders[a]) for a in system.anchors},
    }


def ladders_from_json_dict(data: dict) -> LadderSystem:
    return LadderSystem(
        tuple(data["anchors"]),
        data["ladder_len"],
        {int(a): tuple(lad) for a, lad in data["ladders"].items()},
    )
