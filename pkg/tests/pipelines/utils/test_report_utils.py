import json
import os
import tempfile

import pandas as pd
import pytest

from pipelines.utils.report_utils import format_table, frame_records, json_payload, save_table


def test_format_table():
    assert format_table(pd.DataFrame()) == "(empty)"
    text = format_table(pd.DataFrame({"degree": [0, 1], "phi": [1, 3]}))
    assert text.splitlines()[0].split() == ["degree", "phi"]


def test_frame_records():
    frame = pd.DataFrame({"nu": ["1,0"], "phi": [2], "match": [True]})
    records = frame_records(frame)
    assert records == [{"nu": "1,0", "phi": 2, "match": True}]
    assert type(records[0]["phi"]) is int
    assert json.dumps(records)


def test_json_payload():
    payload = json_payload("roots", {"quiver": "a2.quiver"}, [1, 2], None)
    assert payload.startswith('{"inputs"')
    assert json.loads(payload) == {
        "subcommand": "roots",
        "inputs": {"quiver": "a2.quiver"},
        "results": [1, 2],
        "pass": None,
    }


def test_save_table():
    with tempfile.TemporaryDirectory() as tempdirpath:
        frame = pd.DataFrame({"degree": [0], "phi": [1]})
        path = save_table(frame, os.path.join(tempdirpath, "nested"), "series.csv")
        assert os.path.exists(path)
        assert pd.read_csv(path).equals(frame)
        with pytest.raises(ValueError):
            save_table(frame, tempdirpath, "series.txt")
