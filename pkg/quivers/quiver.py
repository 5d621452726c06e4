import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from core.constants import MINUS_SIGNS, PLUS_SIGN, QuiverKind
from core.exceptions import (
    BadLength,
    BadSign,
    CyclicOrientation,
    IndexMismatch,
    QuiverLabError,
    UnknownVertex,
)

logger = logging.getLogger(__name__)

DimVector = Tuple[int, ...]


@dataclass(frozen=True)
class HalfEdge:
    id: int
    start: int
    end: int
    edge: int

    @property
    def bar_id(self) -> int:
        return self.id ^ 1

    @property
    def label(self) -> str:
        return f"{self.start}>{self.end}#{self.edge}"

    @property
    def is_loop(self) -> bool:
        return self.start == self.end


@dataclass(frozen=True)
class Quiver:
    """A graph with fixed-point-free involution on half-edges plus an orientation.

    Half-edge ``2e`` and ``2e + 1`` are the two halves of edge ``e``; the bar
    involution swaps them. ``orientation`` holds the ids of the arrows in Omega.
    """

    kind: QuiverKind
    size: int
    half_edges: Tuple[HalfEdge, ...]
    orientation: FrozenSet[int]

    def __post_init__(self):
        for position, half_edge in enumerate(self.half_edges):
            if half_edge.id != position:
                raise QuiverLabError(f"half-edge ids must be 0..{len(self.half_edges) - 1} in order")
            partner = self.half_edges[half_edge.bar_id]
            if partner.start != half_edge.end or partner.end != half_edge.start:
                raise QuiverLabError(f"bar({half_edge.label}) does not reverse it")
            if half_edge.is_loop and not (self.kind == QuiverKind.Cyclic and self.size == 1):
                raise QuiverLabError(f"loop {half_edge.label} is only allowed on the cyclic quiver Z/1")
        for arrow in self.orientation:
            if arrow ^ 1 in self.orientation:
                raise QuiverLabError(f"both halves of edge {arrow // 2} are oriented")
        if len(self.orientation) * 2 != len(self.half_edges):
            raise QuiverLabError("the orientation must pick one half of every edge")

    @property
    def vertices(self) -> range:
        return range(self.size)

    @property
    def n(self) -> int:
        return self.size - 1

    @property
    def edge_count(self) -> int:
        return len(self.half_edges) // 2

    @property
    def arrows(self) -> List[HalfEdge]:
        """The arrows of Omega, sorted by id."""
        return [self.half_edges[h] for h in sorted(self.orientation)]

    @property
    def opposite_arrows(self) -> List[HalfEdge]:
        """The arrows of bar(Omega), sorted by id."""
        return [self.half_edges[h ^ 1] for h in sorted(self.orientation)]

    @property
    def delta(self) -> DimVector:
        return (1,) * self.size

    @property
    def orientation_word(self) -> str:
        if self.kind != QuiverKind.AffineA:
            raise QuiverLabError("only affine-a quivers carry an orientation word")
        return "".join(PLUS_SIGN if 2 * e in self.orientation else "-" for e in range(self.edge_count))

    def half_edge(self, h: int) -> HalfEdge:
        return self.half_edges[h]

    def bar(self, h: int) -> HalfEdge:
        return self.half_edges[h ^ 1]

    def is_arrow(self, h: int) -> bool:
        return h in self.orientation

    def check_vertex(self, i: int) -> None:
        if not 0 <= i < self.size:
            raise UnknownVertex(f"vertex {i} is not in 0..{self.size - 1}")

    def arrows_into(self, i: int) -> List[HalfEdge]:
        return [arrow for arrow in self.arrows if arrow.end == i]

    def arrows_out_of(self, i: int) -> List[HalfEdge]:
        return [arrow for arrow in self.arrows if arrow.start == i]

    def half_edges_into(self, i: int) -> List[HalfEdge]:
        return [half_edge for half_edge in self.half_edges if half_edge.end == i]

    def neighbours(self, i: int) -> List[int]:
        """Adjacent vertices, listed once per joining edge."""
        return [half_edge.end for half_edge in self.half_edges if half_edge.start == i]

    def is_sink(self, i: int) -> bool:
        self.check_vertex(i)
        return not self.arrows_out_of(i)

    def is_source(self, i: int) -> bool:
        self.check_vertex(i)
        return not self.arrows_into(i)

    def sinks(self) -> List[int]:
        return [i for i in self.vertices if self.is_sink(i)]

    def sources(self) -> List[int]:
        return [i for i in self.vertices if self.is_source(i)]

    def with_orientation(self, orientation: Iterable[int]) -> "Quiver":
        return Quiver(self.kind, self.size, self.half_edges, frozenset(orientation))

    def opposite(self) -> "Quiver":
        return self.with_orientation(h ^ 1 for h in self.orientation)

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            graph.add_edge(arrow.start, arrow.end, key=arrow.id, label=arrow.label)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def require_acyclic(self) -> None:
        if not self.is_acyclic():
            raise CyclicOrientation(f"{self} contains an oriented cycle")

    def describe_arrows(self) -> str:
        return ", ".join(f"{arrow.start}->{arrow.end}" for arrow in self.arrows)

    def __str__(self) -> str:
        if self.kind == QuiverKind.AffineA:
            return f"affine-a {self.n} {self.orientation_word}"
        return f"cyclic {self.size}"


def _parse_signs(orientation_word: str) -> List[bool]:
    forward = []
    for position, sign in enumerate(orientation_word):
        if sign == PLUS_SIGN:
            forward.append(True)
        elif sign in MINUS_SIGNS:
            forward.append(False)
        else:
            raise BadSign(f"unknown orientation sign {sign!r} at position {position}", position)
    return forward


def build_affine_a(n: int, orientation_word: str) -> Quiver:
    """The affine quiver of type A~_n; sign ``i`` orients the edge between i and i+1 mod n+1.

    Args:
        n (int): Rank; the quiver has n + 1 vertices.
        orientation_word (str): n + 1 signs, '+' for i -> i+1 and '-' for i+1 -> i.

    Returns:
        Quiver: The oriented quiver.

    Raises:
        BadLength: n < 1 or the word does not have n + 1 signs.
        CyclicOrientation: All signs agree, so the arrows form an oriented cycle.
    """
    if n < 1:
        raise BadLength(f"A~_n needs n >= 1, got {n}")
    forward = _parse_signs(orientation_word)
    size = n + 1
    if len(forward) != size:
        raise BadLength(f"orientation word {orientation_word!r} must have {size} signs, got {len(forward)}")
    if all(forward) or not any(forward):
        raise CyclicOrientation(f"orientation word {orientation_word!r} orients the cycle")

    half_edges = []
    for edge in range(size):
        head = (edge + 1) % size
        half_edges.append(HalfEdge(2 * edge, edge, head, edge))
        half_edges.append(HalfEdge(2 * edge + 1, head, edge, edge))
    orientation = frozenset(2 * edge if forward[edge] else 2 * edge + 1 for edge in range(size))
    return Quiver(QuiverKind.AffineA, size, tuple(half_edges), orientation)


def build_cyclic(p: int) -> Quiver:
    """The cyclic quiver on Z/p with arrows r -> r-1; p = 1 gives a single loop."""
    if p < 1:
        raise BadLength(f"the cyclic quiver needs p >= 1, got {p}")
    half_edges = []
    for r in range(p):
        half_edges.append(HalfEdge(2 * r, r, (r - 1) % p, r))
        half_edges.append(HalfEdge(2 * r + 1, (r - 1) % p, r, r))
    return Quiver(QuiverKind.Cyclic, p, tuple(half_edges), frozenset(2 * r for r in range(p)))


def sigma_reverse(q: Quiver, i: int) -> Quiver:
    """Reverse every arrow of Omega that starts or ends at ``i``."""
    q.check_vertex(i)
    orientation = []
    for h in q.orientation:
        arrow = q.half_edge(h)
        orientation.append(h ^ 1 if i in (arrow.start, arrow.end) else h)
    return q.with_orientation(orientation)


def admissible_sink_sequence(q: Quiver) -> Tuple[int, ...]:
    """Order the vertices so that i_r is a sink of sigma_{i_{r-1}}...sigma_{i_1} q.

    Among the available sinks the smallest vertex id is taken.

    Raises:
        CyclicOrientation: Some stage has no sink.
    """
    current = q
    sequence: List[int] = []
    for _ in q.vertices:
        candidates = [i for i in current.vertices if i not in sequence and current.is_sink(i)]
        if not candidates:
            raise CyclicOrientation(f"{q} has no admissible sink sequence")
        sequence.append(min(candidates))
        current = sigma_reverse(current, sequence[-1])
    return tuple(sequence)


def admissible_source_sequence(q: Quiver) -> Tuple[int, ...]:
    return tuple(reversed(admissible_sink_sequence(q)))


def validate_dims(q: Quiver, dims: Sequence[int]) -> DimVector:
    if len(dims) != q.size:
        raise IndexMismatch(f"dimension vector {tuple(dims)} does not match {q.size} vertices")
    if any(value < 0 for value in dims):
        raise IndexMismatch(f"dimension vector {tuple(dims)} has a negative entry")
    return tuple(int(value) for value in dims)


def unit_vector(q: Quiver, i: int) -> DimVector:
    q.check_vertex(i)
    return tuple(1 if j == i else 0 for j in q.vertices)


def add_dims(a: Sequence[int], b: Sequence[int]) -> DimVector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def sub_dims(a: Sequence[int], b: Sequence[int]) -> DimVector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def scale_dims(a: Sequence[int], factor: int) -> DimVector:
    return tuple(factor * x for x in a)


def dims_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


def total_dim(a: Sequence[int]) -> int:
    return sum(a)
