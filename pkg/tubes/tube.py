import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from core.exceptions import UnknownVertex
from core.linalg import RATIONALS, Field, Matrix
from quivers.quiver import DimVector, Quiver, add_dims
from representations.rep import Rep, rep_from_maps
from roots.root_system import coxeter_transform, defect

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tube:
    """A non-homogeneous tube, indexed so that R_{r+1} = Phi^- R_r and R_0 contains the smallest vertex.

    supports[r] lists the vertices of supp R_r along the directed path from
    s(r) to t(r); paths[r] holds the arrow ids of that path and connecting[r]
    the arrow h(r) with h(r)' = s(r), h(r)'' = t(r-1).
    """

    tube_id: int
    quiver: Quiver
    supports: Tuple[Tuple[int, ...], ...]
    paths: Tuple[Tuple[int, ...], ...]
    connecting: Tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.supports)

    def source(self, r: int) -> int:
        return self.supports[r % self.period][0]

    def sink(self, r: int) -> int:
        return self.supports[r % self.period][-1]

    def index_of(self, vertex: int) -> int:
        for r, members in enumerate(self.supports):
            if vertex in members:
                return r
        raise UnknownVertex(f"vertex {vertex} is in no support of tube {self.tube_id}")

    @property
    def internal_arrows(self) -> List[int]:
        return sorted(h for path in self.paths for h in path)

    def path_to(self, vertex: int) -> Tuple[int, ...]:
        """Arrow ids from s(r) to ``vertex`` inside supp R_r."""
        r = self.index_of(vertex)
        return self.paths[r][: self.supports[r].index(vertex)]

    def indicator(self, r: int) -> DimVector:
        members = self.supports[r % self.period]
        return tuple(1 if i in members else 0 for i in self.quiver.vertices)

    def describe(self) -> str:
        parts = []
        for r in range(self.period):
            h = self.quiver.half_edge(self.connecting[r])
            parts.append(
                f"R{r}={{{','.join(map(str, sorted(self.supports[r])))}}} "
                f"s={self.source(r)} t={self.sink(r)} h={h.start}->{h.end}"
            )
        return f"tube {self.tube_id} (period {self.period}): " + "; ".join(parts)


def _directed_arcs(q: Quiver) -> Dict[DimVector, Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Defect-zero arcs whose induced subquiver is a directed path, keyed by indicator."""
    size = q.size
    arcs = {}
    for start in range(size):
        for length in range(1, size):
            vertices = [(start + k) % size for k in range(length)]
            edges = vertices[:-1]
            forward = [2 * e in q.orientation for e in edges]
            if any(forward) and not all(forward):
                continue
            indicator = tuple(1 if i in vertices else 0 for i in q.vertices)
            if defect(q, indicator) != 0:
                continue
            if all(forward):
                arcs[indicator] = (tuple(vertices), tuple(2 * e for e in edges))
            else:
                arcs[indicator] = (tuple(reversed(vertices)), tuple(2 * e + 1 for e in reversed(edges)))
    return arcs


@lru_cache(maxsize=None)
def find_tubes(q: Quiver) -> Tuple[Tube, ...]:
    """Discover the tubes of period >= 2 by grouping directed-path indicators into Coxeter orbits.

    Raises:
        CyclicOrientation: q has an oriented cycle.
    """
    q.require_acyclic()
    arcs = _directed_arcs(q)
    seen = set()
    orbits = []
    for indicator in sorted(arcs):
        if indicator in seen:
            continue
        orbit = [indicator]
        current = coxeter_transform(q, indicator, 1)
        while current != indicator and len(orbit) <= q.size:
            orbit.append(current)
            current = coxeter_transform(q, current, 1)
        seen.update(orbit)
        if current != indicator or len(orbit) < 2 or any(member not in arcs for member in orbit):
            continue
        total: DimVector = (0,) * q.size
        for member in orbit:
            total = add_dims(total, member)
        if total != q.delta:
            continue
        orbits.append(orbit)

    tubes = []
    for orbit in orbits:
        first = next(member for member in orbit if member[0] == 1)
        ordered = [first]
        for _ in range(len(orbit) - 1):
            ordered.append(coxeter_transform(q, ordered[-1], -1))
        supports = tuple(arcs[member][0] for member in ordered)
        paths = tuple(arcs[member][1] for member in ordered)
        connecting = []
        for r in range(len(ordered)):
            start, end = supports[r][0], supports[r - 1][-1]
            candidates = [arrow.id for arrow in q.arrows if arrow.start == start and arrow.end == end]
            if len(candidates) != 1:
                raise RuntimeError(f"no connecting arrow {start}->{end} for support {supports[r]} of {q}")
            connecting.append(candidates[0])
        tubes.append((supports, paths, tuple(connecting)))

    tubes.sort(key=lambda data: (len(data[0]), [sorted(s) for s in data[0]]))
    result = tuple(Tube(index, q, *data) for index, data in enumerate(tubes))
    if sum(tube.period - 1 for tube in result) != q.size - 2:
        raise RuntimeError(f"tube periods {[t.period for t in result]} of {q} do not add up to N - 2")
    logger.debug(f"{q}: tubes of periods {[tube.period for tube in result]}")
    return result


def regular_simple(T: Tube, r: int, field: Field = RATIONALS) -> Rep:
    """R_r: one-dimensional on supp R_r, identity on its internal arrows, zero elsewhere."""
    r %= T.period
    maps = {h: Matrix.identity(1, field) for h in T.paths[r]}
    return rep_from_maps(T.quiver, T.indicator(r), maps, field)


def tube_dims(T: Tube, r: int, m: int) -> DimVector:
    """dim V_{T,r,m} = sum_{k<m} dim (Phi^+)^k R_r = sum_{k<m} dim R_{r-k}."""
    total: DimVector = (0,) * T.quiver.size
    for k in range(m):
        total = add_dims(total, T.indicator(r - k))
    return total
