import contextlib
import io
import json
import os

import jsonschema
import pytest

from sconf import cli

SCHEMA_DIR = os.path.join(os.path.dirname(__file__), "..", "schemas")


def _schema(name):
    with open(os.path.join(SCHEMA_DIR, name)) as fh:
        return json.load(fh)


def run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.run(argv)
    return code, buf.getvalue()


def test_algebra_report_validates():
    code, out = run_cli(["algebra", "--family", "osp", "--k", "2"])
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, _schema("algebra.schema.json"))
    assert report["verified"]


def test_twist_classify_schur_rank():
    code, out = run_cli([
        "twist", "classify", "--family", "sl4k", "--k", "2",
        "--qplus", "1,0,0,0;0,0,1,0", "--qminus", "zero",
    ])
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, _schema("twist.schema.json"))
    assert report["rank_data"] == [2, 0]


def test_twist_classify_rejects_non_square_zero():
    code, out = run_cli([
        "twist", "classify", "--family", "sl4k", "--k", "2",
        "--qplus", "1,0,0,0;0,1,0,0", "--qminus", "1,0;0,1;0,0;0,0",
    ])
    assert code == 1
    report = json.loads(out)
    assert not report["square_zero"]
    assert "nonzero" in report["diagnostic"]


def test_twist_classify_3d():
    code, out = run_cli([
        "twist", "classify", "--family", "osp", "--k", "2",
        "--matrix", "1,i;0,0;0,0;0,0",
    ])
    assert code == 0
    assert json.loads(out)["rank_data"] == [1]


def test_tables_json_validates():
    code, out = run_cli(["verify", "tables", "--k", "2..3"])
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, _schema("tables.schema.json"))
    assert len(report["rows"]) == 5


def test_tables_markdown():
    code, out = run_cli(["verify", "tables", "--k", "2", "--format", "markdown"])
    assert code == 0
    assert out.startswith("| k | r |")
    assert "(*)" in out  # the flagged published-value cells


def test_involution_preset_validates():
    code, out = run_cli(["realform", "--preset", "lorentzian"])
    assert code == 0
    jsonschema.validate(json.loads(out), _schema("involution.schema.json"))


def test_realform_signature():
    code, out = run_cli(["realform", "--signature", "3,1"])
    assert code == 0
    report = json.loads(out)
    assert (report["dim_z_real"], report["dim_b_real"]) == (7, 3)


def test_usage_errors_exit_2():
    assert run_cli(["bogus"])[0] == 2
    assert run_cli(["centralizer", "--family", "sl4k"])[0] == 2
    assert run_cli(["realform"])[0] == 2


def test_centralizer_command():
    code, out = run_cli(["centralizer", "--family", "sl4k", "--k", "2", "--r", "2"])
    assert code == 0
    report = json.loads(out)
    assert (report["dim_z"], report["dim_b"]) == (11, 8)


def test_verify_all_passes_and_validates():
    code, out = run_cli(["verify", "all", "--seed", "7"])
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, _schema("verify_all.schema.json"))
    assert report["ok"]
    assert len(report["claims"]) >= 40
    keys = [c["key"] for c in report["claims"]]
    assert len(keys) == len(set(keys))


def test_verify_all_corrupt_claim_fails():
    code, out = run_cli([
        "verify", "all", "--seed", "7", "--corrupt-claim", "tables:k=2,r=2",
    ])
    assert code == 1
    report = json.loads(out)
    bad = [c for c in report["claims"] if not c["ok"]]
    assert len(bad) == 1
    assert bad[0]["key"] == "tables:k=2,r=2"
    assert bad[0]["corrupted"]
