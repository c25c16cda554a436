"""Command line behavior: exit codes, schemas, byte-stable output."""

import json

import pytest

from sixteenrank import Refusal
from sixteenrank.cli import (
    RunConfig,
    cmd_unit,
    cmd_verify_sixteen,
    main,
    render_unit,
    render_verify,
)

VERIFY_CSV_200 = (
    "p,a,c,case,v2,two_adic_16,agree\n"
    "17,1,2,NOT8,2,,true\n"
    "41,5,2,EXACTLY8,3,false,true\n"
    "97,9,2,NOT8,2,,true\n"
    "137,11,2,EXACTLY8,3,false,true\n"
)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_csv_golden(capsys):
    code, out, err = run(capsys, ["verify", "--limit", "200", "--format", "csv"])
    assert code == 0 and err == ""
    assert out == VERIFY_CSV_200


def test_verify_output_is_reproducible(capsys):
    first = run(capsys, ["verify", "--limit", "3000", "--format", "json"])
    second = run(capsys, ["verify", "--limit", "3000", "--format", "json"])
    assert first == second
    doc = json.loads(first[1])
    assert set(doc) == {"limit", "tallies", "all_agree", "rows"}
    assert doc["all_agree"] is True
    assert set(doc["tallies"]) == {"DIV16", "EXACTLY8", "NOT8"}
    assert sum(doc["tallies"].values()) == len(doc["rows"])
    for row in doc["rows"]:
        assert set(row) == {"p", "a", "c", "case", "v2", "two_adic_16", "agree"}
        assert row["p"] == row["a"] ** 2 + row["c"] ** 4
        if row["case"] == "NOT8":
            assert row["two_adic_16"] is None


def test_verify_text_summary(capsys):
    code, out, _ = run(capsys, ["verify", "--limit", "200"])
    assert code == 0
    assert "4" in out and "all three routes agree: True" in out


def test_out_flag_writes_identical_bytes(tmp_path, capsys):
    target = tmp_path / "report.csv"
    code, out, _ = run(
        capsys, ["verify", "--limit", "200", "--format", "csv", "--out", str(target)]
    )
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8") == VERIFY_CSV_200


def test_verify_budget_refusal(capsys):
    code, out, err = run(capsys, ["verify", "--limit", "3000000"])
    assert code == 3
    assert out == ""
    assert "refused:" in err


def test_density_matches_library(capsys):
    from sixteenrank import CongruencePair, count_report

    code, out, err = run(
        capsys,
        ["density", "--limit", "20000", "--a0", "1", "--q1", "16",
         "--c0", "0", "--q2", "4", "--format", "csv"],
    )
    assert code == 0
    want = count_report(20000, pairs=[CongruencePair(1, 16, 0, 4)]).to_csv()
    assert out == want


def test_density_mode_flag(capsys):
    args = ["density", "--limit", "20000", "--a0", "1", "--q1", "16",
            "--c0", "0", "--q2", "4", "--format", "json"]
    _, lattice_out, _ = run(capsys, args)
    _, distinct_out, _ = run(capsys, args + ["--mode", "distinct"])
    lat = json.loads(lattice_out)["rows"][0]
    dis = json.loads(distinct_out)["rows"][0]
    assert lat["ratio"] == lat["lattice_count"] / lat["expected"]
    assert dis["ratio"] == dis["distinct_count"] / dis["expected"]


def test_density_refuses_partial_pair(capsys):
    code, _, err = run(capsys, ["density", "--limit", "1000", "--a0", "1"])
    assert code == 3
    assert "provide all" in err


def test_density_refuses_inadmissible_pair(capsys):
    code, _, err = run(
        capsys,
        ["density", "--limit", "1000", "--a0", "0", "--q1", "2",
         "--c0", "0", "--q2", "2"],
    )
    assert code == 3
    assert "not invertible" in err


def test_density_refuses_tiny_limit(capsys):
    code, _, err = run(capsys, ["density", "--limit", "2"])
    assert code == 3
    assert "--limit >= 3" in err


def test_density_library_layer_allows_tiny_x():
    # the >= 3 floor guards the command surface; the library itself
    # answers X = 2 with empty counts
    from sixteenrank import CongruencePair
    from sixteenrank.cli import cmd_density

    rows = cmd_density(2).rows
    assert all(r.lattice_count == 0 and r.distinct_count == 0 for r in rows)
    row = cmd_density(41, pair=CongruencePair(5, 16, 2, 4)).rows[0]
    assert row.lattice_count == 2  # (5, 2) and (5, -2) give 41 itself


def test_unit_text_output(capsys):
    code, out, _ = run(capsys, ["unit", "--p", "41"])
    assert code == 0
    assert "T = 32, U = 5" in out
    assert "h(-4p) = 8" in out
    assert "match = True" in out


def test_unit_json_schema(capsys):
    code, out, _ = run(capsys, ["unit", "--p", "257", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["p"] == 257
    assert (doc["t"], doc["u"], doc["norm"]) == (16, 1, -1)
    assert doc["h"] == 16
    assert doc["williams_ok"] is True
    assert doc["case"] == "DIV16"
    assert doc["prediction_match"] is True


def test_unit_without_form_representation(capsys):
    # 113 = (-7)^2 + 8^2 but 8 is not a square, so no a^2 + c^4 shape
    code, out, _ = run(capsys, ["unit", "--p", "113", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["case"] is None
    assert doc["prediction_match"] is None
    assert doc["williams_ok"] is True  # h = 8


def test_unit_refusal(capsys):
    code, _, err = run(capsys, ["unit", "--p", "13"])
    assert code == 3
    assert "1 mod 8" in err


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify"])  # --limit is required
    assert exc.value.code == 2


def test_threaded_sweep_matches_serial():
    serial = cmd_verify_sixteen(5000, threads=1)
    threaded = cmd_verify_sixteen(5000, threads=2)
    assert serial == threaded


def test_runconfig_validation():
    with pytest.raises(Refusal):
        RunConfig(command="verify")
    with pytest.raises(Refusal):
        RunConfig(command="density", limit_x=2)
    with pytest.raises(Refusal):
        RunConfig(command="unit")
    with pytest.raises(Refusal):
        RunConfig(command="verify", limit_x=10, threads=0)


def test_renderers_cover_all_formats():
    rep = cmd_verify_sixteen(200)
    for fmt in ("csv", "json", "text"):
        assert render_verify(rep, fmt).endswith("\n")
    unit = cmd_unit(41)
    for fmt in ("csv", "json", "text"):
        assert render_unit(unit, fmt).endswith("\n")
