import json
import subprocess
import sys

import pytest

from kronecker_coslice.cli import object_from_json, object_to_json, run
from kronecker_coslice.window import WINDOW_ENV

P0 = '{"family":"P","t":0,"shift":0}'
P1 = '{"family":"P","t":1,"shift":0}'
SMALL = {
    "max_shift": 2,
    "max_pp_index": 4,
    "max_pi_index": 4,
    "max_reg_length": 2,
    "max_p": 3,
    "n_random_sums": 30,
    "pair_index_range": [-1, 2],
}


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv)
    return code, (json.loads(out) if out else None), err


@pytest.fixture
def small_window_file(tmp_path):
    path = tmp_path / "window.json"
    path.write_text(json.dumps(SMALL))
    return str(path)


class TestHom:
    def test_frozen(self, capsys):
        code, out, _ = call(capsys, "hom", P0, P1)
        assert code == 0 and json.loads(out) == {"dim": 2}

    def test_oracle(self, capsys):
        code, data, _ = call_json(capsys, "hom", P0, P1, "--oracle")
        assert code == 0 and data == {"agree": True, "dim": 2, "oracle": 2}

    def test_sums(self, capsys):
        code, data, _ = call_json(capsys, "hom", f"[{P0},{P0}]", P1, "--oracle")
        assert code == 0 and data["dim"] == 4 and data["agree"]

    def test_regular_self_ext(self, capsys):
        r = '{"family":"R","tube":"x","len":1}'
        rs = '{"family":"R","tube":"x","len":1,"shift":1}'
        assert call_json(capsys, "hom", r, rs)[1] == {"dim": 1}


class TestErrors:
    @pytest.mark.parametrize(
        "arg, field",
        [
            ('{"family":"Q","t":0}', "x[0].family"),
            ('{"family":"P"}', "x[0].t"),
            ('{"family":"P","t":"a"}', "x[0].t"),
            ('{"family":"R","tube":"0"}', "x[0].len"),
            ('{"family":"P","t":-1}', "x[0]"),
            ("{oops", "x"),
            ("3", "x"),
        ],
    )
    def test_malformed(self, capsys, arg, field):
        code, out, err = call(capsys, "hom", arg, P1)
        assert code == 2 and not out
        assert json.loads(err)["error"].startswith(field)

    def test_unknown_command(self, capsys):
        assert call(capsys, "nope")[0] == 2

    def test_missing_arg(self, capsys):
        assert call(capsys, "hom", P0)[0] == 2

    def test_bad_quintuple(self, capsys):
        code, _, err = call(capsys, "costab", "build", '{"n":0,"phi1":0.1}')
        assert code == 2 and "q.phi0" in err

    def test_bad_window(self, capsys, tmp_path):
        path = tmp_path / "w.json"
        path.write_text('{"max_shift": 0}')
        assert call(capsys, "--window", str(path), "export", "ar-quiver")[0] == 2


class TestCommands:
    def test_triangle(self, capsys):
        code, data, _ = call_json(capsys, "triangle", '{"family":"I","t":0}')
        assert code == 0
        assert data["left"] == [{"family": "P", "t": 1, "shift": 0}]
        assert len(data["right"]) == 2

    def test_hn(self, capsys):
        code, data, _ = call_json(
            capsys, "hn", '{"family":"I","t":0}', "--coslicing", '{"type":"exceptional","n":1,"p":2}'
        )
        assert code == 0 and data["verified"]
        assert [q["phase"] for q in data["tower"]["quotients"]] == [[0, 1], [1, 0]]

    def test_coslice_hn_alias(self, capsys):
        a = call(capsys, "hn", P1, "--coslicing", '{"n":0,"p":"inf"}')
        b = call(capsys, "coslice", "hn", P1, "--coslicing", '{"n":0,"p":"inf"}')
        assert a == b and a[0] == 0

    def test_coslice_validate(self, capsys, small_window_file):
        code, data, _ = call_json(capsys, "--window", small_window_file, "coslice", "validate", "--n", "1", "--p", "3")
        assert code == 0 and data["valid"] and not data["trivial"]

    def test_coslice_validate_insert(self, capsys, small_window_file):
        code, data, _ = call_json(
            capsys,
            "--window",
            small_window_file,
            "coslice",
            "validate",
            "--n",
            "1",
            "--p",
            "3",
            "--insert-object",
            '{"family":"R","tube":"x","len":1}',
            "--insert-phase",
            "[0,0]",
        )
        assert code == 1 and not data["valid"]
        assert any(v["check"] == "orthogonality" and v["hom"] > 0 for v in data["violations"])

    def test_coslice_build(self, capsys):
        code, data, _ = call_json(capsys, "coslice", "build", "--type", "two_object", "--t", "0", "--p", "2", "--bound", "0")
        assert code == 0
        assert data["phases"][0]["generators"] == [
            {"family": "I", "t": 0, "shift": -1},
            {"family": "P", "t": 0, "shift": 1},
        ]

    def test_coslice_compare(self, capsys, small_window_file):
        code, data, _ = call_json(
            capsys,
            "--window",
            small_window_file,
            "coslice",
            "compare",
            "--fine",
            '{"type":"exceptional","n":0,"p":"inf"}',
            "--coarse",
            '{"type":"stable_two_phase","t":0}',
        )
        assert code == 0 and data["coarser"]

    def test_coslice_distance(self, capsys):
        q = '{"n":0,"phi1":0.25,"phi0":0.75}'
        r = '{"n":0,"phi1":0.25,"phi0":0.85}'
        assert call_json(capsys, "coslice", "distance", q, r)[1]["distance"] == pytest.approx(0.1)
        s = '{"n":1,"phi1":0.25,"phi0":0.85}'
        assert call_json(capsys, "coslice", "distance", q, s)[1] == {"distance": "inf"}

    def test_coheart(self, capsys):
        code, data, _ = call_json(capsys, "cotstr", "coheart", "--family", "bounded", "--n", "1", "--p", "3", "--m", "0")
        assert code == 0
        assert data["co_heart"] == [{"family": "P", "t": 0, "shift": 0}, {"family": "P", "t": 1, "shift": 3}]

    def test_coheart_spec(self, capsys):
        code, data, _ = call_json(capsys, "cotstr", "coheart", "--spec", '{"family":"stable","n":2}')
        assert code == 0 and data["co_heart"] == []

    def test_member(self, capsys):
        code, data, _ = call_json(
            capsys, "cotstr", "member", '{"family":"R","tube":"x","len":1,"shift":-1}', "--spec",
            '{"family":"bounded","n":1,"p":3,"cut":[0,0]}',
        )
        assert code == 0 and data["aisle"] and not data["coaisle"]

    def test_verify(self, capsys, small_window_file):
        code, data, _ = call_json(
            capsys, "--window", small_window_file, "cotstr", "verify", "--family", "bounded_above", "--n", "0", "--k", "1"
        )
        assert code == 0 and data["pass"]
        assert {c["name"] for c in data["checks"]} >= {"orthogonality", "approximation"}

    def test_classify(self, capsys, small_window_file):
        code, data, _ = call_json(capsys, "--window", small_window_file, "cotstr", "classify")
        assert code == 0 and data["count"] == len(data["specs"]) == 4 * (5 * (3 + 2) + 1)

    def test_silting(self, capsys):
        code, data, _ = call_json(capsys, "cotstr", "silting", f"[{P0},{P1}]")
        assert code == 0 and data == {"partial_silting": True, "silting": True}
        code, data, _ = call_json(capsys, "cotstr", "silting", f"[{P0}]")
        assert not data["silting"] and data["completions"]

    def test_costab(self, capsys):
        q1 = '{"n":0,"phi1":0.25,"phi0":0.75,"m1":1,"m0":1}'
        q2 = '{"n":0,"phi1":0.25,"phi0":0.85,"m1":1,"m0":1}'
        q3 = '{"n":1,"phi1":0.25,"phi0":0.85,"m1":1,"m0":1}'
        assert call_json(capsys, "costab", "build", q1)[0] == 0
        assert call_json(capsys, "costab", "validate", q1)[1]["pass"]
        bad = '{"n":0,"phi1":0.9,"phi0":0.7,"m1":1,"m0":1}'
        assert call_json(capsys, "costab", "validate", bad)[0] == 1
        assert call_json(capsys, "costab", "component", q1, q2)[1]["same_component"]
        assert not call_json(capsys, "costab", "component", q1, q3)[1]["same_component"]
        assert call_json(capsys, "costab", "distance", q1, q2)[1]["distance"] == pytest.approx(0.31287, abs=1e-5)
        code, data, _ = call_json(capsys, "costab", "walk", q1, q2, "--steps", "5")
        assert code == 0 and len(data["path"]) == 6 and data["max_step"] <= data["bound"] + 1e-12
        assert call_json(capsys, "costab", "walk", q1, q3)[0] == 1

    def test_export(self, capsys, small_window_file):
        code, out, _ = call(capsys, "--window", small_window_file, "export", "ar-quiver", "--dot")
        assert code == 0 and out.startswith("digraph")
        assert '"P0" -> "P1"' in out and '"S^-1I0" -> "P0"' in out
        code, data, _ = call_json(capsys, "--window", small_window_file, "export", "ar-quiver")
        assert code == 0 and data["vertices"]

    def test_flags_after_subcommand(self, capsys):
        a = call(capsys, "--pretty", "hom", P0, P1)
        b = call(capsys, "hom", P0, P1, "--pretty")
        assert a == b and "\n  " in a[1]


class TestDeterminism:
    def test_byte_identical(self, capsys, small_window_file):
        argv = ["--window", small_window_file, "--seed", "7", "cotstr", "verify", "--family", "stable", "--n", "0"]
        assert call(capsys, *argv) == call(capsys, *argv)

    def test_env_window(self, capsys, small_window_file, monkeypatch):
        monkeypatch.setenv(WINDOW_ENV, small_window_file)
        code, data, _ = call_json(capsys, "export", "ar-quiver")
        assert code == 0 and all(abs(v["shift"]) <= 2 for v in data["vertices"])


class TestCodec:
    def test_roundtrip(self):
        text = '[{"family":"R","tube":"inf","len":2,"shift":-1},{"family":"I","t":3}]'
        x = object_from_json(text)
        assert object_from_json(object_to_json(x)) == x


def test_selftest_small_window(small_window_file):
    proc = subprocess.run(
        [sys.executable, "-m", "kronecker_coslice", "selftest", "--window", small_window_file],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["pass"] and len(report["criteria"]) == 12


def test_selftest_default_window(monkeypatch):
    monkeypatch.delenv(WINDOW_ENV, raising=False)
    proc = subprocess.run(
        [sys.executable, "-m", "kronecker_coslice", "--pretty", "selftest"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert proc.stdout.count("[PASS]") == 12
