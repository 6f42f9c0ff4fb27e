import pandas as pd
import pytest

import main
from scripts import config


@pytest.fixture
def sandbox(tmp_path, monkeypatch):
    dirs = {
        "RAW_DIR": tmp_path / "raw",
        "REF_DIR": tmp_path / "ref",
        "PROCESSED_DIR": tmp_path / "processed",
        "OUT_DIR": tmp_path / "out",
    }
    for name, path in dirs.items():
        monkeypatch.setattr(config, name, path)
    files = {
        "FILE_POINTS": dirs["RAW_DIR"] / "points.txt",
        "FILE_DOCUMENT": dirs["PROCESSED_DIR"] / "tri.json",
        "FILE_SVG": dirs["OUT_DIR"] / "tri.svg",
        "FILE_REPORT": dirs["OUT_DIR"] / "report.csv",
        "FILE_CLASSIFY_SVG": dirs["OUT_DIR"] / "classify.svg",
        "FILE_FUZZ": dirs["OUT_DIR"] / "fuzz.csv",
        "FILE_FIGURE_TRIANGULATION": dirs["OUT_DIR"] / "fig_tri.png",
        "FILE_FIGURE_STEPS": dirs["OUT_DIR"] / "fig_steps.png",
    }
    for name, path in files.items():
        monkeypatch.setattr(config, name, path)
    monkeypatch.setattr(config, "PIPELINE_N", 15)
    monkeypatch.setattr(config, "PIPELINE_TRIALS", 200)
    monkeypatch.setattr(config, "DEFAULT_SAMPLES", 100)
    return files


@pytest.mark.slow
def test_pipeline_end_to_end(sandbox):
    assert main.run_pipeline() == 0
    for path in sandbox.values():
        assert path.exists(), path
    report = pd.read_csv(sandbox["FILE_REPORT"], keep_default_na=False)
    assert "FAIL" not in set(report["status"])


def test_step_requires_points(sandbox):
    with pytest.raises(FileNotFoundError):
        main.run_step("01_triangulate")
