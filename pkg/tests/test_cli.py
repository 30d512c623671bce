"""Command-line surface: exit codes, formats, and serialization contracts."""

import json

import pytest

from toepsharp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBound:
    def test_catalog_generator(self, capsys):
        code, out, _ = run(capsys, "bound", "--class", "starlike",
                           "--phi", "exp", "--functional", "t21-log-inv")
        assert code == 0
        assert "25/64" in out and "0.390625" in out
        assert "applicable: True" in out

    def test_json_keeps_rationals_exact(self, capsys):
        code, out, _ = run(capsys, "bound", "--class", "starlike",
                           "--phi", "exp", "--functional", "t21-log-inv",
                           "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert d["bound"] == {"numerator": 25, "denominator": 64}
        assert d["applicable"] is True
        assert d["functional"] == "t21-log-inv"

    def test_inapplicable_exits_3(self, capsys):
        code, out, _ = run(capsys, "bound", "--class", "starlike",
                           "--phi", "lemniscate", "--functional", "t22-inv")
        assert code == 3
        assert "applicable: False" in out

    def test_raw_coefficients(self, capsys):
        code, out, _ = run(capsys, "bound", "--class", "convex",
                           "--b1", "2", "--b2", "2", "--b3", "2",
                           "--functional", "t21-inv")
        assert code == 0
        assert out.startswith("bound: 2")

    def test_missing_phi_exits_2(self, capsys):
        code, _, err = run(capsys, "bound", "--class", "starlike",
                           "--functional", "t21-inv")
        assert code == 2
        assert "error" in err

    def test_conflicting_phi_exits_2(self, capsys):
        code, _, _ = run(capsys, "bound", "--class", "starlike",
                         "--phi", "exp", "--b1", "1",
                         "--functional", "t21-inv")
        assert code == 2

    def test_out_of_range_parameter_exits_2(self, capsys):
        code, _, _ = run(capsys, "bound", "--class", "starlike",
                         "--phi", "starlike-order", "--alpha", "2",
                         "--functional", "t21-inv")
        assert code == 2

    def test_run_record(self, capsys, tmp_path):
        path = tmp_path / "record.json"
        code, out, _ = run(capsys, "bound", "--class", "starlike",
                           "--phi", "halfplane", "--functional", "t22-inv",
                           "--format", "json", "--out", str(path))
        assert code == 0
        record = json.loads(path.read_text())
        assert record["report"] == json.loads(out)
        assert set(record) == {"timestamp", "command", "version", "report"}


class TestTable:
    def test_all_rows_match(self, capsys):
        code, out, _ = run(capsys, "table")
        assert code == 0
        assert "NO" not in out

    def test_csv_header_contract(self, capsys):
        code, out, _ = run(capsys, "table", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "class,functional,expected,computed,attained,match"
        assert all(line.endswith(",true") for line in lines[1:])

    def test_only_halfplane_has_eight_rows(self, capsys):
        code, out, _ = run(capsys, "table", "--only", "halfplane",
                           "--format", "csv")
        assert code == 0
        assert len(out.strip().splitlines()) == 1 + 8

    def test_unknown_entry_exits_2(self, capsys):
        code, _, _ = run(capsys, "table", "--only", "nephroid")
        assert code == 2

    def test_json_round_trips(self, capsys):
        code, out, _ = run(capsys, "table", "--format", "json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert len(rows) == sum(1 for _ in rows)
        assert all(r["match"] for r in rows)
        exact = [r for r in rows if r["name"] == "halfplane"
                 and r["functional"] == "t22-inv" and r["class"] == "starlike"]
        assert exact[0]["expected"] == {"numerator": 221, "denominator": 1}


class TestVerify:
    def test_sharp_confirmed_exits_0(self, capsys):
        code, out, _ = run(capsys, "verify", "--class", "starlike",
                           "--phi", "halfplane", "--functional", "t22-inv",
                           "--seed", "1", "--budget", "5000")
        assert code == 0
        assert "SharpConfirmed" in out

    def test_byte_identical_json(self, capsys):
        argv = ("verify", "--class", "convex", "--phi", "halfplane",
                "--functional", "t21-log-inv", "--seed", "3",
                "--budget", "3000", "--format", "json")
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second
        d = json.loads(first)
        assert d["verdict"] == "SharpConfirmed"
        assert d["seed"] == 3

    def test_unproven_violation_exits_5(self, capsys):
        code, out, _ = run(capsys, "verify", "--class", "starlike",
                           "--phi", "cardioid", "--functional", "t22-log-inv",
                           "--seed", "1", "--budget", "5000")
        assert code == 5
        assert "unproven" in out

    def test_budget_one_is_enough_at_the_extremal(self, capsys):
        code, _, _ = run(capsys, "verify", "--class", "starlike",
                         "--phi", "exp", "--functional", "t21-inv",
                         "--budget", "1")
        assert code == 0


class TestSweep:
    def test_alpha_sweep_values(self, capsys):
        code, out, _ = run(capsys, "sweep", "--param", "alpha",
                           "--range", "0:2/3:1/3", "--class", "starlike",
                           "--functional", "t21-inv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "param,bound,applicable,attained"
        rows = [line.split(",") for line in lines[1:]]
        assert len(rows) == 3
        got = [float(r[1]) for r in rows]
        want = [(1 - a) ** 2 * (36 * a * a - 60 * a + 29)
                for a in (0, 1 / 3, 2 / 3)]
        assert all(abs(g - w) < 1e-12 * max(1, w) for g, w in zip(got, want))
        assert all(r[2] == "true" for r in rows)
        # the curve is sharp everywhere on the printed interval
        assert all(abs(float(r[3]) - float(r[1])) < 1e-12 * max(1, float(r[1]))
                   for r in rows)

    def test_step_larger_than_range(self, capsys):
        code, out, _ = run(capsys, "sweep", "--param", "beta",
                           "--range", "1/2:3/5:1", "--class", "starlike",
                           "--functional", "t21-log-inv")
        assert code == 0
        assert len(out.strip().splitlines()) == 2

    def test_beta_one_recovers_halfplane(self, capsys):
        code, out, _ = run(capsys, "sweep", "--param", "beta",
                           "--range", "1:1:1", "--class", "starlike",
                           "--functional", "t22-inv")
        assert code == 0
        assert float(out.strip().splitlines()[1].split(",")[1]) == 221.0

    def test_malformed_range_exits_2(self, capsys):
        code, _, _ = run(capsys, "sweep", "--param", "alpha",
                         "--range", "0..1", "--class", "starlike",
                         "--functional", "t21-inv")
        assert code == 2

    def test_janowski_sweep_needs_fixed_partner(self, capsys):
        code, _, _ = run(capsys, "sweep", "--param", "janowski-a",
                         "--range", "1/2:1:1/4", "--class", "starlike",
                         "--functional", "t21-inv")
        assert code == 2


class TestExtremal:
    def test_halfplane_coefficients(self, capsys):
        code, out, _ = run(capsys, "extremal", "--class", "starlike",
                           "--phi", "halfplane", "--order", "4")
        assert code == 0
        assert "a2 = 2i" in out.replace("0+", "").replace("j", "i")
        assert "t21-log-inv = 3.25" in out

    def test_exp_functional_value(self, capsys):
        code, out, _ = run(capsys, "extremal", "--class", "starlike",
                           "--phi", "exp", "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert abs(d["functionals"]["t21-log-inv"] - 25 / 64) < 1e-12
        assert len(d["a"]) == 4

    def test_trivial_generator(self, capsys):
        code, out, _ = run(capsys, "extremal", "--class", "convex",
                           "--b1", "0", "--b2", "0", "--b3", "0",
                           "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert all(v == 0 for v in d["functionals"].values())

    def test_bad_order_exits_2(self, capsys):
        code, _, _ = run(capsys, "extremal", "--class", "starlike",
                         "--phi", "exp", "--order", "1")
        assert code == 2


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
