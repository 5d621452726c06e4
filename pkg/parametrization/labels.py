import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from core.constants import LabelKind, StandardKind
from core.exceptions import DimensionMismatch, ParseError, QuiverLabError
from core.linalg import RATIONALS, Field
from quivers.quiver import DimVector, Quiver, add_dims, dims_leq, scale_dims, total_dim, validate_dims
from representations.rep import Rep
from roots.reflection import preinjective, preprojective
from roots.root_system import coxeter_transform, search_cap, standard_dims
from tubes.equivalence import tube_indec
from tubes.tube import find_tubes, tube_dims

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndecLabel:
    """A non-homogeneous indecomposable: (Phi^-)^r P(i), (Phi^+)^r I(i) or V_{T,r,m}."""

    kind: LabelKind
    r: int
    dims: DimVector
    vertex: Optional[int] = None
    tube_id: Optional[int] = None
    m: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == LabelKind.Tube:
            return f"T{self.tube_id}[r={self.r},m={self.m}]"
        return f"{self.kind.value}[r={self.r},i={self.vertex}]"


@dataclass(frozen=True)
class SigmaLambda:
    """A pair (sigma, lambda): label multiplicities and a weakly decreasing partition."""

    sigma: Tuple[Tuple[IndecLabel, int], ...] = ()
    lam: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(count < 1 for _, count in self.sigma):
            raise QuiverLabError("multiplicities in sigma must be positive")
        if any(part < 1 for part in self.lam) or list(self.lam) != sorted(self.lam, reverse=True):
            raise QuiverLabError(f"lambda {self.lam} is not a partition")

    @classmethod
    def from_counts(cls, counts: Dict[IndecLabel, int], lam: Sequence[int] = ()) -> "SigmaLambda":
        sigma = tuple(sorted(((label, count) for label, count in counts.items() if count > 0), key=lambda x: str(x[0])))
        return cls(sigma, tuple(lam))

    @property
    def labels(self) -> List[IndecLabel]:
        return [label for label, _ in self.sigma]

    def multiplicity(self, label: IndecLabel) -> int:
        return dict(self.sigma).get(label, 0)

    def dims(self, q: Quiver) -> DimVector:
        total: DimVector = scale_dims(q.delta, sum(self.lam))
        for label, count in self.sigma:
            total = add_dims(total, scale_dims(label.dims, count))
        return total

    def sigma_key(self) -> str:
        return " + ".join(f"{label}^{count}" if count > 1 else str(label) for label, count in self.sigma)

    def __str__(self) -> str:
        lam = ",".join(map(str, self.lam))
        return f"{self.sigma_key() or '0'} | lambda=({lam})"


@dataclass(frozen=True)
class FlagType:
    """A flag type (nu^1, ..., nu^m); the steps are the successive quotients from the top."""

    steps: Tuple[DimVector, ...]

    def __post_init__(self):
        if not self.steps:
            raise QuiverLabError("a flag type needs at least one step")
        width = len(self.steps[0])
        for step in self.steps:
            if len(step) != width or any(value < 0 for value in step):
                raise QuiverLabError(f"invalid flag step {step}")

    @classmethod
    def parse(cls, text: str) -> "FlagType":
        """Parse "1,0,0;0,1,1": steps separated by ';', entries by ','."""
        steps = []
        for index, chunk in enumerate(text.strip().split(";")):
            try:
                steps.append(tuple(int(value) for value in chunk.split(",")))
            except ValueError as err:
                raise ParseError(f"bad flag step {chunk!r}", 1, index + 1) from err
        return cls(tuple(steps))

    @property
    def total(self) -> DimVector:
        total = (0,) * len(self.steps[0])
        for step in self.steps:
            total = add_dims(total, step)
        return total

    def is_discrete(self, q: Quiver) -> bool:
        """No arrow has both ends inside the support of one step."""
        return all(not (step[a.start] and step[a.end]) for step in self.steps for a in q.arrows)

    def __str__(self) -> str:
        return ";".join(",".join(map(str, step)) for step in self.steps)


def _standard_labels(q: Quiver, bound: DimVector, kind: StandardKind) -> List[IndecLabel]:
    label_kind, power = (
        (LabelKind.Preprojective, -1) if kind == StandardKind.Projective else (LabelKind.Preinjective, 1)
    )
    labels = []
    for i in q.vertices:
        vector = standard_dims(q, kind, i)
        for r in range(search_cap(q, bound) + 1):
            if dims_leq(vector, bound):
                labels.append(IndecLabel(label_kind, r, vector, vertex=i))
            vector = coxeter_transform(q, vector, power)
    return labels


def indecomposable_labels(q: Quiver, bound: Sequence[int]) -> List[IndecLabel]:
    """Every preprojective, preinjective and tube label of dimension <= bound, sorted by name.

    Raises:
        CyclicOrientation: q has an oriented cycle.
    """
    q.require_acyclic()
    bound = validate_dims(q, bound)
    labels = _standard_labels(q, bound, StandardKind.Projective)
    labels += _standard_labels(q, bound, StandardKind.Injective)
    for tube in find_tubes(q):
        for r in range(tube.period):
            for m in range(1, total_dim(bound) + 1):
                vector = tube_dims(tube, r, m)
                if not dims_leq(vector, bound):
                    break
                labels.append(IndecLabel(LabelKind.Tube, r, vector, tube_id=tube.tube_id, m=m))
    return sorted(labels, key=str)


@lru_cache(maxsize=None)
def label_rep(q: Quiver, label: IndecLabel, field: Field = RATIONALS) -> Rep:
    """The representation a label stands for.

    Raises:
        DimensionMismatch: the built representation disagrees with the label's dimension vector.
    """
    if label.kind == LabelKind.Preprojective:
        rep = preprojective(q, label.r, label.vertex)
    elif label.kind == LabelKind.Preinjective:
        rep = preinjective(q, label.r, label.vertex)
    else:
        rep = tube_indec(find_tubes(q)[label.tube_id], label.r, label.m)
    if rep.dims != label.dims:
        raise DimensionMismatch(f"{label} was built with dims {rep.dims}, expected {label.dims}")
    return rep.convert(field)
