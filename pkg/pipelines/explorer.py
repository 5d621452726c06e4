import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import pandas as pd

from core.constants import Direction
from core.exceptions import DimensionMismatch, QuiverMismatch
from parametrization.flags import count_stable_flags
from parametrization.labels import FlagType, SigmaLambda
from parametrization.phi import enumerate_phi
from parametrization.strata import default_params, stratum_representative
from pipelines.base import BaseRunner, RunOutcome
from pipelines.utils.report_utils import format_table, frame_records
from quivers.quiver import Quiver
from representations.homological import endomorphism_dim, euler_form, ext_dim, hom_dim
from representations.moment import lambda_membership, moment_map
from representations.rep import FullRep, Rep, extend_by_zero
from roots.classification import positive_roots_up_to
from roots.reflection import coxeter_functor
from tubes.tube import find_tubes

logger = logging.getLogger(__name__)

AnyRep = Union[Rep, FullRep]


def _require_rep(rep: AnyRep, subcommand: str) -> Rep:
    if isinstance(rep, FullRep):
        raise QuiverMismatch(f"{subcommand} needs a representation of Omega, the file carries bar maps")
    return rep


class RootsRunner(BaseRunner):
    subcommand = "roots"

    def __init__(self, quiver: Quiver, bound: Sequence[int]):
        self.quiver = quiver
        self.bound = tuple(bound)

    def run(self) -> RunOutcome:
        rows = [
            {
                "vector": ",".join(map(str, record.vector)),
                "kind": record.kind.value,
                "defect": record.defect,
                "class": record.describe(),
            }
            for record in positive_roots_up_to(self.quiver, self.bound)
        ]
        frame = pd.DataFrame(rows, columns=["vector", "kind", "defect", "class"])
        return {"results": frame_records(frame), "passed": None, "text": format_table(frame)}


class TubesRunner(BaseRunner):
    subcommand = "tubes"

    def __init__(self, quiver: Quiver):
        self.quiver = quiver

    def run(self) -> RunOutcome:
        results = []
        lines = []
        for tube in find_tubes(self.quiver):
            supports = [sorted(members) for members in tube.supports]
            results.append(
                {
                    "tube": tube.tube_id,
                    "period": tube.period,
                    "supports": supports,
                    "sources": [tube.source(r) for r in range(tube.period)],
                    "sinks": [tube.sink(r) for r in range(tube.period)],
                    "connecting": [self.quiver.half_edge(h).label for h in tube.connecting],
                }
            )
            lines.append(tube.describe())
        return {"results": results, "passed": None, "text": "\n".join(lines) or "no tubes of period >= 2"}


class ParamRunner(BaseRunner):
    subcommand = "param"

    def __init__(self, quiver: Quiver, dims: Sequence[int], params: Optional[Sequence[Fraction]] = None):
        self.quiver = quiver
        self.dims = tuple(dims)
        self.params = list(params) if params is not None else None

    def __stratum_dim(self, sl: SigmaLambda) -> int:
        count = len(sl.lam)
        if self.params is None:
            values = default_params(count)
        elif len(self.params) < count:
            raise DimensionMismatch(f"{sl} needs {count} homogeneous parameters, {len(self.params)} given")
        else:
            values = self.params[:count]
        x = stratum_representative(self.quiver, sl, values, nu=self.dims)
        return count + sum(d * d for d in x.dims) - endomorphism_dim(x)

    def run(self) -> RunOutcome:
        rows = [{"stratum": str(sl), "dim": self.__stratum_dim(sl)} for sl in enumerate_phi(self.quiver, self.dims)]
        frame = pd.DataFrame(rows, columns=["stratum", "dim"])
        text = f"|phi| = {len(frame)}\n{format_table(frame)}"
        return {"results": frame_records(frame), "passed": None, "text": text}


class HomExtRunner(BaseRunner):
    subcommand = "homext"

    def __init__(self, first: AnyRep, second: AnyRep):
        self.first = _require_rep(first, self.subcommand)
        self.second = _require_rep(second, self.subcommand)

    def run(self) -> RunOutcome:
        hom, ext = hom_dim(self.first, self.second), ext_dim(self.first, self.second)
        euler = euler_form(self.first.quiver, self.first.dims, self.second.dims)
        passed = hom - ext == euler
        return {
            "results": {"hom": hom, "ext": ext, "euler": euler},
            "passed": passed,
            "text": f"hom={hom}, ext={ext}, euler={euler}",
        }


class CoxeterRunner(BaseRunner):
    subcommand = "coxeter"

    def __init__(self, rep: AnyRep, power: int = 1, direction: Union[Direction, str] = Direction.Plus):
        self.rep = _require_rep(rep, self.subcommand)
        if power < 0:
            raise ValueError(f"power must be non-negative, got {power}")
        self.power = power
        self.direction = Direction(direction)

    def run(self) -> RunOutcome:
        result = self.rep
        for _ in range(self.power):
            result = coxeter_functor(result, self.direction)
        maps = {arrow.label: result.maps[arrow.id].format_rows() for arrow in result.quiver.arrows}
        lines = [f"dims: {','.join(map(str, result.dims))}"]
        lines += [f"{label}: {rows}" for label, rows in maps.items() if rows]
        return {"results": {"dims": list(result.dims), "maps": maps}, "passed": None, "text": "\n".join(lines)}


class FlagsRunner(BaseRunner):
    subcommand = "flags"

    def __init__(self, rep: AnyRep, flag_type: FlagType, prime: int):
        self.rep = _require_rep(rep, self.subcommand)
        self.flag_type = flag_type
        self.prime = prime

    def run(self) -> RunOutcome:
        count = count_stable_flags(self.rep, self.flag_type, self.prime)
        return {"results": {"count": count}, "passed": None, "text": f"stable flags: {count}"}


class MomentRunner(BaseRunner):
    subcommand = "moment"

    def __init__(self, rep: AnyRep):
        self.rep = rep if isinstance(rep, FullRep) else extend_by_zero(rep)

    def run(self) -> RunOutcome:
        value = moment_map(self.rep)
        membership = lambda_membership(self.rep)
        blocks: List[str] = [block.format_rows() for block in value.blocks]
        lines = [f"psi_{i}: {rows or '-'}" for i, rows in enumerate(blocks)]
        lines.append(
            f"nilpotent={membership['nilpotent']}, moment_zero={membership['moment_zero']}, "
            f"in_lambda={membership['in_lambda']}"
        )
        return {"results": {"moment": blocks, **membership}, "passed": None, "text": "\n".join(lines)}
