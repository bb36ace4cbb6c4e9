from __future__ import annotations

import json
import os
import subprocess
import sys
from importlib.resources import files
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from partblocks.blocktheory import BlockPartition, charp_blocks
from partblocks.cli import main, parse_partition
from partblocks.partcomb import new_partition

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("PARTBLOCKS_REGEN_GOLDEN") == "1"


def load_schema(name):
    return json.loads((files("partblocks") / "schemas" / name).read_text(encoding="utf-8"))


SCHEMAS = {name: load_schema(name) for name in ("blocks.schema.json", "abacus.schema.json", "verify_report.schema.json")}
REGISTRY = Registry().with_resources((s["$id"], Resource.from_contents(s)) for s in SCHEMAS.values())


def validate(name, data):
    Draft202012Validator(SCHEMAS[name], registry=REGISTRY).validate(data)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def check_golden(name, text):
    path = GOLDEN / name
    if REGEN:
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8")


def test_schemas_are_valid():
    for schema in SCHEMAS.values():
        Draft202012Validator.check_schema(schema)


@pytest.mark.parametrize("text,parts", [("5,4", (5, 4)), ("5 4", (5, 4)), ("[3,1,1]", (3, 1, 1)), ("", ()), ("0", ()), ("∅", ())])
def test_parse_partition(text, parts):
    assert parse_partition(text) == new_partition(parts)


def test_core_text(capsys):
    code, out, _ = run(capsys, "core", "5,4", "--p", "5")
    assert code == 0
    assert out.splitlines()[0] == "5-core of (5,4): (3,1)"


def test_core_of_empty(capsys):
    code, out, _ = run(capsys, "core", "", "--p", "3")
    assert code == 0 and out.startswith("3-core of ∅: ∅")


def test_core_json_golden(capsys):
    code, out, _ = run(capsys, "core", "5,4", "--p", "5", "--b", "10", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["core"] == [3, 1]
    validate("abacus.schema.json", data["abacus"])
    validate("abacus.schema.json", data["core_abacus"])
    assert data["abacus"]["beads"] == [0, 1, 2, 3, 4, 5, 6, 7, 12, 14]
    check_golden("core_5_4_p5.json", out)


def test_abacus_marked(capsys):
    code, out, _ = run(capsys, "abacus", "2,1", "--p", "5", "--delta", "1", "--b", "7")
    assert code == 0 and out == "v . . . .\no o o o o\n. o . o .\n"
    code, out, _ = run(capsys, "abacus", "2,1", "--p", "5", "--delta", "1", "--b", "7", "--json")
    data = json.loads(out)
    validate("abacus.schema.json", data)
    assert data["v"] == 0 and data["gamma"] == [2, 2, 1, 2, 1]


def test_orbit_worked_example(capsys):
    code, out, _ = run(capsys, "orbit", "7,3,3,1,1", "--n", "15", "--p", "5", "--delta", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["orbit"]) == 6 and data["minimum"] == [7, 3]
    blocks = charp_blocks(15, 5, 1)
    assert len(data["orbit"]) == len(blocks.class_of(new_partition((7, 3, 3, 1, 1))))


def test_orbit_of_empty(capsys):
    code, out, _ = run(capsys, "orbit", "", "--n", "0", "--p", "3", "--delta", "1", "--json")
    assert code == 0 and json.loads(out)["orbit"] == [[]]


def test_blocks_golden(capsys):
    code, out, _ = run(capsys, "blocks", "--n", "2", "--p", "2", "--delta", "1")
    assert code == 0
    data = json.loads(out)
    validate("blocks.schema.json", data)
    assert data == {"classes": [[[], [2], [1, 1]], [[1]]]}
    check_golden("blocks_n2_p2_d1.json", out)


def test_blocks_char0_semisimple(capsys):
    for n in (2, 3):
        code, out, _ = run(capsys, "blocks", "--n", str(n), "--char0", "--delta", str(2 * n - 1))
        assert code == 0
        assert all(len(c) == 1 for c in json.loads(out)["classes"])


def test_limiting_blocks_are_coarser(capsys):
    _, level, _ = run(capsys, "blocks", "--n", "4", "--p", "3", "--delta", "2")
    _, limit, _ = run(capsys, "blocks", "--n", "4", "--p", "3", "--delta", "2", "--limiting", "--with-query")
    data = json.loads(limit)
    validate("blocks.schema.json", data)
    assert data["query"] == {"mode": "limiting", "n": 4, "p": 3, "delta": 2}
    assert BlockPartition.from_json(json.loads(level)).refines(BlockPartition.from_json(data))


def test_blocks_extension_field(capsys):
    code, out, _ = run(capsys, "blocks", "--n", "2", "--p", "2", "--delta-ext", "0,1")
    assert code == 0
    assert json.loads(out) == {"classes": [[[]], [[1]], [[2], [1, 1]]]}
    code, out, _ = run(capsys, "blocks", "--n", "2", "--p", "2", "--delta-ext", "1,0")
    assert json.loads(out) == {"classes": [[[], [2], [1, 1]], [[1]]]}


def test_blocks_table(capsys):
    code, out, _ = run(capsys, "blocks", "--n", "2", "--p", "2", "--delta", "1", "--table")
    assert code == 0 and out.splitlines() == ["  0  ∅  (2)  (1^2)", "  1  (1)"]


@pytest.mark.parametrize(
    "argv",
    [
        ["blocks", "--n", "2", "--p", "3", "--delta", "0"],
        ["blocks", "--n", "2", "--p", "4", "--delta", "1"],
        ["blocks", "--n", "2", "--char0", "--delta", "0"],
        ["blocks", "--n", "2", "--p", "2", "--delta-ext", "0,0"],
        ["verify", "--n", "2", "--p", "3", "--delta", "0"],
        ["verify", "--n", "2", "--delta", "0"],
        ["core", "5,x", "--p", "5"],
        ["core", "3,4", "--p", "5"],
        ["orbit", "3", "--n", "2", "--p", "3", "--delta", "1"],
        ["abacus", "5,4", "--p", "5", "--b", "3"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_small_report(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--n-max", "1", "--no-timings", "--output", str(target))
    assert code == 0
    text = target.read_text(encoding="utf-8")
    data = json.loads(text)
    validate("verify_report.schema.json", data)
    assert data["match"] and data["mismatches"] == [] and data["timings"] is None
    check_golden("verify_n1.json", text)


def test_verify_with_timings_single_case(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--p", "2", "--delta-ext", "0,1")
    assert code == 0
    data = json.loads(out)
    validate("verify_report.schema.json", data)
    assert list(data["criterion_blocks"]) == ["ext:n=2:p=2:delta=0+1x"]
    assert "total" in data["timings"]


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    import partblocks.verify as verify

    monkeypatch.setattr(verify, "oracle_cell_blocks", lambda n, delta, F, max_n: BlockPartition.from_classes([[x] for x in charp_blocks(n, 2, 1).labels]))
    code, out, _ = run(capsys, "verify", "--n", "2", "--p", "2", "--delta", "1", "--no-timings")
    assert code == 1
    assert json.loads(out)["mismatches"] == ["charp:n=2:p=2:delta=1"]


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "dims", "--n", "3", "--json")
    assert code == 0
    dims = {tuple(r["label"]): r["cell_dim"] for r in json.loads(out)["cell_modules"]}
    assert dims[()] == 5 and dims[(1,)] == 10 and dims[(2, 1)] == 2
    code, out, _ = run(capsys, "tables", "structure", "--n", "1")
    assert json.loads(out)["dimension"] == 2
    code, out, _ = run(capsys, "tables", "blocks", "--n", "1", "--p", "2")
    assert out.splitlines() == ["n=0 p=2 delta=1: {{∅}}", "n=1 p=2 delta=1: {{∅}, {(1)}}"]


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "partblocks", "verify", "--n-max", "1", "--no-timings"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert first.decode("utf-8") == (GOLDEN / "verify_n1.json").read_text(encoding="utf-8")
