import json
import os
import pathlib
import subprocess

import pytest

BIN = os.environ.get("SDSEARCH_BIN")
DATA = pathlib.Path(__file__).resolve().parents[2] / "data" / "desk"

pytestmark = pytest.mark.skipif(not BIN, reason="SDSEARCH_BIN not set")


def run(*args):
    out = subprocess.run([BIN, *args], capture_output=True, text=True)
    return out.returncode, [json.loads(l) for l in out.stdout.splitlines() if l and not l.startswith("#")]


def found_codes(records):
    return sorted(r["code"] for r in records if "code" in r)


def test_extend_shards_merge(tmp_path):
    rc, _ = run("orbits", "--codes", str(DATA / "length12"), "--group", "a4", "--scale", "2",
                "--distance", "8", "--out", str(tmp_path))
    assert rc == 0
    common = ["extend", "--reps", str(tmp_path), "--group", "a4", "--scale", "2", "--distance", "8"]
    rc, whole = run(*common)
    assert rc == 0
    merged = []
    for i in range(3):
        rc, part = run(*common, "--shard", f"{i}/3")
        assert rc == 0
        merged += found_codes(part)
    assert found_codes(whole)
    assert sorted(set(merged)) == sorted(set(found_codes(whole)))


def test_exit_codes(tmp_path):
    assert run("verify", "nonsense")[0] == 2
    assert run("extend", "--reps", str(tmp_path / "missing"), "--group", "a4")[0] == 2
    bad = tmp_path / "bad.code"
    bad.write_text("4 1\n1111")
    assert run("ingest", str(bad))[0] == 2
