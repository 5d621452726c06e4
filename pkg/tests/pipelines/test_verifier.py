import os
import tempfile

import pytest

from pipelines.verifier import Verifier, VerifyParams
from tests.utils import a2, kronecker


def test_run():
    with tempfile.TemporaryDirectory() as tempdirpath:
        params: VerifyParams = {
            "degree": 2,
            "per_dim": True,
            "euler_samples": 3,
            "seed": 1,
            "artifact_dir": tempdirpath,
        }
        outcome = Verifier(kronecker(), params).run()

        assert outcome["passed"] is True
        assert [row["degree"] for row in outcome["results"]["series"]] == [0, 1, 2]
        assert [row["phi"] for row in outcome["results"]["series"]] == [1, 2, 4]
        assert len(outcome["results"]["per_dim"]) == 6
        assert len(outcome["results"]["euler"]) == 3
        assert outcome["text"].endswith("PASS")
        for filename in ("series.csv", "per_dim.csv", "euler.csv"):
            assert os.path.exists(os.path.join(tempdirpath, filename))


def test_run_series_only(capsys):
    params: VerifyParams = {"degree": 3, "per_dim": False, "euler_samples": 0, "verbose": True}
    outcome = Verifier(a2(), params).run()
    assert outcome["passed"] is True
    assert set(outcome["results"]) == {"series"}
    assert all(row["verdict"] == "PASS" for row in outcome["results"]["series"])
    assert "Comparing series" in capsys.readouterr().out


def test_negative_degree():
    with pytest.raises(ValueError):
        Verifier(a2(), {"degree": -1, "per_dim": False, "euler_samples": 0})
