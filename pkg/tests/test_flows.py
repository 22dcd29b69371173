import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

pytest.importorskip("prefect")

from prefect.testing.utilities import prefect_test_harness

from src.orchestrator.flows import graded_involution_census_flow


@pytest.fixture(scope="module", autouse=True)
def prefect_backend():
    with prefect_test_harness():
        yield


def test_small_census_flow(tmp_path):
    summary = graded_involution_census_flow(
        invariant_factors=(2, 2), size=1, fine=1, out_dir=str(tmp_path)
    )
    assert summary["status"] == "ok"
    assert summary["valid_specs"] == 4
    assert summary["verified"] == 4
    lines = Path(summary["path"]).read_text(encoding="utf-8").splitlines()
    records = [json.loads(x) for x in lines]
    assert [r["spec"]["omega"] for r in records] == [-1, 1, 1, 1]
    assert all(r["ok"] for r in records)
