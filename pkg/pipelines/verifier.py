import logging
import sys
from typing import Any, Dict, TypedDict

if sys.version_info >= (3, 11):
    from typing import NotRequired
else:
    from typing_extensions import NotRequired

from core.constants import DEFAULT_SEED
from pipelines.base import BaseRunner, RunOutcome
from pipelines.utils.report_utils import format_table, frame_records, save_table
from quivers.quiver import Quiver, scale_dims
from series.verification import check_count_equality, check_euler_identity, compare_series, per_dim_table

logger = logging.getLogger(__name__)


class VerifyParams(TypedDict):
    degree: int
    per_dim: bool
    euler_samples: int
    seed: NotRequired[int]
    artifact_dir: NotRequired[str]
    verbose: NotRequired[bool]


class Verifier(BaseRunner):
    """Checks the series identity, the per-dimension counts and optionally the Euler form."""

    subcommand = "verify"

    def __init__(self, quiver: Quiver, params: VerifyParams):
        if params["degree"] < 0:
            raise ValueError(f"degree must be non-negative, got {params['degree']}")
        self.quiver = quiver
        self.params = params

    def run(self) -> RunOutcome:
        verbose = self.params.get("verbose", False)
        artifact_dir = self.params.get("artifact_dir")
        degree = self.params["degree"]

        if verbose:
            print(f"Comparing series of {self.quiver} up to degree {degree} ...")
        series = compare_series(self.quiver, degree)
        series.table["verdict"] = series.table["match"].map({True: "PASS", False: "FAIL"})
        results: Dict[str, Any] = {"series": frame_records(series.table)}
        sections = [format_table(series.table)]
        passed = series.passed

        if self.params["per_dim"]:
            if verbose:
                print(" - per dimension vector")
            counts = check_count_equality(self.quiver, degree)
            results["per_dim"] = frame_records(counts.table)
            sections.append(format_table(counts.table))
            passed = passed and counts.passed
            if artifact_dir:
                save_table(counts.table, artifact_dir, "per_dim.csv")

        if self.params["euler_samples"] > 0:
            if verbose:
                print(f" - Euler form on {self.params['euler_samples']} random pairs")
            euler = check_euler_identity(
                self.quiver,
                scale_dims(self.quiver.delta, 2),
                self.params["euler_samples"],
                self.params.get("seed", DEFAULT_SEED),
            )
            results["euler"] = frame_records(euler.table)
            sections.append(f"euler identity: {'PASS' if euler.passed else 'FAIL'} on {len(euler.table)} pairs")
            passed = passed and euler.passed
            if artifact_dir:
                save_table(euler.table, artifact_dir, "euler.csv")

        if artifact_dir:
            save_table(series.table, artifact_dir, "series.csv")
        sections.append("PASS" if passed else "FAIL")
        if not passed:
            logger.warning(f"verification failed for {self.quiver}")
        return {"results": results, "passed": passed, "text": "\n\n".join(sections)}
