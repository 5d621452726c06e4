import json
import os
from typing import Any, Dict, Optional

import pandas as pd


def format_table(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(empty)"
    return frame.to_string(index=False)


def frame_records(frame: pd.DataFrame) -> list:
    """Rows as plain JSON-serialisable dicts (numpy scalars unwrapped)."""
    records = []
    for row in frame.to_dict(orient="records"):
        records.append({key: value.item() if hasattr(value, "item") else value for key, value in row.items()})
    return records


def json_payload(subcommand: str, inputs: Dict[str, Any], results: Any, passed: Optional[bool]) -> str:
    payload = {"subcommand": subcommand, "inputs": inputs, "results": results, "pass": passed}
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)


def save_table(frame: pd.DataFrame, artifact_dir: str, filename: str) -> str:
    if not filename.endswith(".csv"):
        raise ValueError("`filename` should end with `.csv`")
    os.makedirs(artifact_dir, exist_ok=True)
    path = os.path.join(artifact_dir, filename)
    frame.to_csv(path, index=False)
    return path
