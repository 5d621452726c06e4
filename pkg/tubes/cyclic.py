import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from core.constants import QuiverKind
from core.exceptions import BadLength, PeriodMismatch, QuiverLabError
from core.linalg import RATIONALS, Field, Matrix
from quivers.quiver import DimVector, add_dims, build_cyclic, dims_leq, total_dim
from representations.moment import is_nilpotent
from representations.rep import Rep, direct_sum, zero_rep

logger = logging.getLogger(__name__)

Segment = Tuple[int, int]


@dataclass(frozen=True)
class CyclicRep(Rep):
    """A nilpotent representation of the cyclic quiver Z/p with arrows r -> r-1 (arrow id 2r)."""

    def __post_init__(self):
        super().__post_init__()
        if self.quiver.kind != QuiverKind.Cyclic:
            raise PeriodMismatch(f"{self.quiver} is not a cyclic quiver")
        if not is_nilpotent(self):
            raise QuiverLabError("a cyclic representation must be nilpotent")

    @property
    def period(self) -> int:
        return self.quiver.size

    def arrow_map(self, r: int) -> Matrix:
        """The map on the arrow r -> r-1."""
        return self.maps[2 * (r % self.period)]

    @classmethod
    def from_rep(cls, rep: Rep) -> "CyclicRep":
        return cls(rep.quiver, rep.dims, rep.maps, rep.field)


def cyclic_rep(p: int, dims: Sequence[int], maps: Dict[int, Matrix], field: Field = RATIONALS) -> CyclicRep:
    """Build a CyclicRep from the maps on the arrows r -> r-1, keyed by r."""
    q = build_cyclic(p)
    return CyclicRep(q, tuple(dims), {2 * r: matrix for r, matrix in maps.items()}, field)


def cyclic_indec_dims(p: int, r: int, m: int) -> DimVector:
    dims = [0] * p
    for k in range(m):
        dims[(r - k) % p] += 1
    return tuple(dims)


def cyclic_indec(p: int, r: int, m: int, field: Field = RATIONALS) -> CyclicRep:
    """The uniserial V_{r,m}: basis b_0..b_{m-1} with b_k at vertex r-k, each arrow sends b_k to b_{k+1}."""
    if m < 1:
        raise BadLength(f"segment length must be positive, got {m}")
    dims = cyclic_indec_dims(p, r, m)
    position: Dict[int, int] = {}
    seen = [0] * p
    for k in range(m):
        vertex = (r - k) % p
        position[k] = seen[vertex]
        seen[vertex] += 1

    grids = {v: [[0] * dims[v] for _ in range(dims[(v - 1) % p])] for v in range(p)}
    for k in range(m - 1):
        vertex = (r - k) % p
        grids[vertex][position[k + 1]][position[k]] = 1
    maps = {v: Matrix.from_rows(grids[v], field, cols=dims[v]) for v in range(p)}
    return cyclic_rep(p, dims, maps, field)


@dataclass(frozen=True)
class SegmentMultiset:
    """A finite multiset of segments (r, m): r in Z/p is the start, m >= 1 the length."""

    counts: Tuple[Tuple[Segment, int], ...] = ()

    def __post_init__(self):
        for (r, m), count in self.counts:
            if count < 1:
                raise QuiverLabError(f"segment {(r, m)} has multiplicity {count}")
            if m < 1:
                raise BadLength(f"segment {(r, m)} has non-positive length")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Segment]) -> "SegmentMultiset":
        return cls.from_counts(Counter(pairs))

    @classmethod
    def from_counts(cls, counts: Dict[Segment, int]) -> "SegmentMultiset":
        return cls(tuple(sorted((segment, count) for segment, count in counts.items() if count > 0)))

    @property
    def lengths(self) -> List[int]:
        return sorted({m for (_, m), _ in self.counts})

    def dims(self, p: int) -> DimVector:
        total: DimVector = (0,) * p
        for (r, m), count in self.counts:
            for _ in range(count):
                total = add_dims(total, cyclic_indec_dims(p, r, m))
        return total

    def to_rep(self, p: int, field: Field = RATIONALS) -> CyclicRep:
        parts: List[Rep] = [
            cyclic_indec(p, r, m, field) for (r, m), count in self.counts for _ in range(count)
        ]
        if not parts:
            return CyclicRep.from_rep(zero_rep(build_cyclic(p), field=field))
        return CyclicRep.from_rep(direct_sum(parts))

    def __str__(self) -> str:
        return " + ".join(f"V[{r},{m}]^{count}" for (r, m), count in self.counts) or "0"


def is_aperiodic(p: int, s: SegmentMultiset) -> bool:
    """True iff for every length m some V_{r,m} is missing from s."""
    for m in s.lengths:
        starts = {r % p for (r, length), count in s.counts if length == m and count > 0}
        if len(starts) == p:
            return False
    return True


def enumerate_cyclic_phi(p: int, dims: Sequence[int]) -> List[SegmentMultiset]:
    """Every aperiodic multisegment of the given dimension vector on the cyclic quiver Z/p."""
    target = tuple(dims)
    if len(target) != p:
        raise PeriodMismatch(f"dimension vector {target} does not match period {p}")
    segments = [
        (r, m)
        for m in range(1, total_dim(target) + 1)
        for r in range(p)
        if dims_leq(cyclic_indec_dims(p, r, m), target)
    ]

    results: List[SegmentMultiset] = []

    def extend(index: int, remaining: DimVector, chosen: Dict[Segment, int]) -> None:
        if not any(remaining):
            candidate = SegmentMultiset.from_counts(chosen)
            if is_aperiodic(p, candidate):
                results.append(candidate)
            return
        if index == len(segments):
            return
        r, m = segments[index]
        shape = cyclic_indec_dims(p, r, m)
        extend(index + 1, remaining, chosen)
        count = 0
        while True:
            remaining = tuple(a - b for a, b in zip(remaining, shape, strict=True))
            if any(value < 0 for value in remaining):
                break
            count += 1
            extend(index + 1, remaining, {**chosen, (r, m): count})

    extend(0, target, {})
    logger.debug(f"{len(results)} aperiodic multisegments of dims {target} on Z/{p}")
    return sorted(results, key=str)
