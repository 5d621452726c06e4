import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence

import numpy as np
import pandas as pd

from core.config import ensure_within_cap
from core.constants import DEFAULT_SEED
from parametrization.phi import enumerate_phi
from quivers.quiver import DimVector, Quiver, build_affine_a
from representations.homological import euler_form, ext_dim, hom_dim
from roots.catalog import build_catalog
from series.graded_series import GradedSeries
from series.pbw import pbw_table
from series.product import product_series
from tubes.tube import find_tubes

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Report:
    """A verification table and its verdict."""

    table: pd.DataFrame
    passed: bool

    def mismatches(self) -> pd.DataFrame:
        return self.table[~self.table["match"]]


def vectors_up_to(q: Quiver, max_total: int) -> List[DimVector]:
    vectors = [v for v in itertools.product(range(max_total + 1), repeat=q.size) if sum(v) <= max_total]
    return sorted(vectors, key=lambda v: (sum(v), v))


def phi_series(q: Quiver, degree: int) -> GradedSeries:
    """sum over nu of |phi(V_nu, Omega)| X^{|nu|}, refined by nu.

    Raises:
        TooLarge: degree exceeds the series cap.
    """
    ensure_within_cap(degree, "series_max_total")
    refinement = {nu: len(enumerate_phi(q, nu)) for nu in vectors_up_to(q, degree)}
    return GradedSeries.from_refinement(refinement, degree)


def check_count_equality(q: Quiver, max_total: int) -> Report:
    """|phi(nu)| = pbw_dim(nu) for every nu of total dimension <= max_total."""
    ensure_within_cap(max_total, "series_max_total")
    table = pbw_table(q, (max_total,) * q.size)
    rows = []
    for nu in vectors_up_to(q, max_total):
        phi_count = len(enumerate_phi(q, nu))
        rows.append({"nu": ",".join(map(str, nu)), "degree": sum(nu), "phi": phi_count, "pbw": table[nu]})
    frame = pd.DataFrame(rows, columns=["nu", "degree", "phi", "pbw"])
    frame["match"] = frame["phi"] == frame["pbw"]
    passed = bool(frame["match"].all())
    if not passed:
        logger.warning(f"{int((~frame['match']).sum())} count mismatches on {q}")
    return Report(frame, passed)


def compare_series(q: Quiver, degree: int) -> Report:
    """Degree by degree: sum of |phi|, the product formula and the collapsed PBW counts."""
    phi = phi_series(q, degree)
    product = product_series(q, degree)
    pbw = GradedSeries.from_refinement(
        {nu: value for nu, value in pbw_table(q, (degree,) * q.size).items() if sum(nu) <= degree}, degree
    )
    frame = pd.DataFrame(
        {
            "degree": list(range(degree + 1)),
            "phi": list(phi.coefficients),
            "product": list(product.coefficients),
            "pbw": list(pbw.coefficients),
        }
    )
    frame["match"] = (frame["phi"] == frame["product"]) & (frame["pbw"] == frame["product"])
    return Report(frame, bool(frame["match"].all()))


def per_dim_table(q: Quiver, degree: int) -> pd.DataFrame:
    phi = phi_series(q, degree)
    assert phi.refinement is not None
    pbw = pbw_table(q, (degree,) * q.size)
    rows = [
        {"nu": ",".join(map(str, nu)), "degree": sum(nu), "phi": count, "pbw": pbw[nu], "match": count == pbw[nu]}
        for nu, count in sorted(phi.refinement.items(), key=lambda item: (sum(item[0]), item[0]))
    ]
    return pd.DataFrame(rows, columns=["nu", "degree", "phi", "pbw", "match"])


def check_euler_identity(q: Quiver, bound: Sequence[int], samples: int, seed: int = DEFAULT_SEED) -> Report:
    """dim Hom - dim Ext = <dim M, dim N> on random pairs of catalog indecomposables."""
    catalog = build_catalog(q, bound)
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(samples):
        a, b = rng.integers(0, len(catalog), size=2)
        m, n = catalog[int(a)], catalog[int(b)]
        hom, ext = hom_dim(m.rep, n.rep), ext_dim(m.rep, n.rep)
        rows.append(
            {
                "a": m.label,
                "b": n.label,
                "hom": hom,
                "ext": ext,
                "euler": euler_form(q, m.rep.dims, n.rep.dims),
            }
        )
    frame = pd.DataFrame(rows, columns=["a", "b", "hom", "ext", "euler"])
    frame["match"] = frame["hom"] - frame["ext"] == frame["euler"]
    return Report(frame, bool(frame["match"].all()))


def tube_census(orientations: Iterable[str]) -> Report:
    """sum_T (p(T) - 1) = N - 2 for every orientation word."""
    rows: List[Dict] = []
    for word in orientations:
        q = build_affine_a(len(word) - 1, word)
        periods = [tube.period for tube in find_tubes(q)]
        rows.append(
            {
                "quiver": str(q),
                "periods": ",".join(map(str, periods)),
                "excess": sum(p - 1 for p in periods),
                "expected": q.size - 2,
            }
        )
    frame = pd.DataFrame(rows, columns=["quiver", "periods", "excess", "expected"])
    frame["match"] = frame["excess"] == frame["expected"]
    return Report(frame, bool(frame["match"].all()))
