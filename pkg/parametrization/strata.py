import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import prime

from core.constants import LabelKind
from core.exceptions import DimensionMismatch, DuplicateParameter, UnsupportedStratum
from core.linalg import RATIONALS, Field
from parametrization.labels import IndecLabel, SigmaLambda, label_rep
from quivers.quiver import Quiver, admissible_sink_sequence, validate_dims
from representations.homological import endomorphism_dim, ext_dim, orbit_tangent_map
from representations.rep import Rep, direct_sum
from tubes.homogeneous import homogeneous_indec

logger = logging.getLogger(__name__)


def default_params(count: int, offset: int = 0) -> List[Fraction]:
    """The distinct primes 2, 3, 5, 7, ... (skipping the first ``offset``)."""
    return [Fraction(int(prime(k + 1 + offset))) for k in range(count)]


def _check_params(sl: SigmaLambda, params: Sequence[Fraction]) -> None:
    if len(params) != len(sl.lam):
        raise DimensionMismatch(f"lambda {sl.lam} needs {len(sl.lam)} parameters, got {len(params)}")
    if len(set(params)) != len(params):
        raise DuplicateParameter(f"homogeneous parameters {list(map(str, params))} are not distinct")


def _homogeneous_parts(q: Quiver, sl: SigmaLambda, params: Sequence[Fraction], field: Field) -> List[Rep]:
    return [homogeneous_indec(q, t, part, field) for t, part in zip(params, sl.lam, strict=True)]


def stratum_representative(
    q: Quiver,
    sl: SigmaLambda,
    params: Optional[Sequence] = None,
    nu: Optional[Sequence[int]] = None,
    field: Field = RATIONALS,
) -> Rep:
    """A point of the stratum X(sigma, lambda): sigma(P) copies of each P plus one homogeneous summand per part.

    Args:
        q (Quiver): The acyclic orientation.
        sl (SigmaLambda): The stratum.
        params (Optional[Sequence]): Distinct nonzero homogeneous parameters, one per part of
            lambda; defaults to 2, 3, 5, ...
        nu (Optional[Sequence[int]]): When given, the expected dimension vector.
        field (Field): Base field of the representative.

    Raises:
        DuplicateParameter: Two parameters coincide.
        DimensionMismatch: Wrong parameter count, or dims differ from nu.
        ZeroParameter: A parameter is zero.
    """
    values = [Fraction(value) for value in params] if params is not None else default_params(len(sl.lam))
    _check_params(sl, values)
    if nu is not None and sl.dims(q) != validate_dims(q, nu):
        raise DimensionMismatch(f"{sl} has dimension {sl.dims(q)}, not {tuple(nu)}")

    parts = [label_rep(q, label, field) for label, count in sl.sigma for _ in range(count)]
    parts += _homogeneous_parts(q, sl, values, field)
    if not parts:
        return direct_sum([], quiver=q).convert(field)
    return direct_sum(parts, quiver=q)


def orbit_dim(x: Rep) -> int:
    """dim O_x = dim G_V - dim End(x), read as the rank of the orbit tangent map."""
    return orbit_tangent_map(x).rank()


def stratum_dim(q: Quiver, sl: SigmaLambda) -> int:
    """|lambda| parts plus dim O_x; checked against a second parameter set when lambda is nonempty."""
    x = stratum_representative(q, sl)
    value = len(sl.lam) + sum(d * d for d in x.dims) - endomorphism_dim(x)
    if sl.lam:
        other = stratum_representative(q, sl, default_params(len(sl.lam), offset=len(sl.lam)))
        if len(sl.lam) + sum(d * d for d in other.dims) - endomorphism_dim(other) != value:
            raise RuntimeError(f"stratum dimension of {sl} depends on the homogeneous parameters")
    return value


def check_open_stratum(q: Quiver, sl: SigmaLambda) -> bool:
    """True iff X(sigma) is open in E_{V, Omega}, i.e. the representative has no self-extensions.

    Raises:
        UnsupportedStratum: sl has tube labels or a nonempty lambda.
    """
    if sl.lam or any(label.kind == LabelKind.Tube for label in sl.labels):
        raise UnsupportedStratum(f"{sl} is not a preprojective plus preinjective stratum")
    x = stratum_representative(q, sl)
    return ext_dim(x, x) == 0


def _block_order(q: Quiver, label: IndecLabel) -> Tuple[int, int, int]:
    position = admissible_sink_sequence(q).index(label.vertex) if label.vertex is not None else 0
    if label.kind == LabelKind.Preprojective:
        return (0, label.r, position)
    if label.kind == LabelKind.Tube:
        return (1, label.tube_id, 0)
    return (3, -label.r, position)


def ordered_blocks(q: Quiver, sl: SigmaLambda, params: Optional[Sequence] = None) -> List[Rep]:
    """The summands V(1), ..., V(s) in canonical order.

    Preprojectives by increasing (r, sink position), then one block per tube,
    then the homogeneous block, then preinjectives by decreasing r. Later
    blocks admit no maps into earlier ones and earlier blocks have no
    extensions by later ones.
    """
    values = [Fraction(value) for value in params] if params is not None else default_params(len(sl.lam))
    _check_params(sl, values)

    groups: Dict[Tuple[int, int, int], List[Rep]] = {}
    for label, count in sl.sigma:
        groups.setdefault(_block_order(q, label), []).extend([label_rep(q, label)] * count)
    homogeneous = _homogeneous_parts(q, sl, values, RATIONALS)
    if homogeneous:
        groups[(2, 0, 0)] = homogeneous
    return [direct_sum(groups[key], quiver=q) for key in sorted(groups)]
