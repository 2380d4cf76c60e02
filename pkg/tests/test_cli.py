from adb.cli import main
from conftest import EXAMPLES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_summary(capsys):
    code, out, _ = run(capsys, "validate", EXAMPLES / "a1.adb")
    assert code == 0
    assert out.strip() == "3 locations, 3 transitions, max delay 2"


def test_validate_nfa_file(capsys):
    code, out, _ = run(capsys, "validate", EXAMPLES / "astar-b.nfa")
    assert code == 0
    assert out.strip() == "2 states, 2 transitions"


def test_validate_a3_max_delay(capsys):
    code, out, _ = run(capsys, "validate", EXAMPLES / "a3.adb")
    assert code == 0
    assert out.strip().endswith("max delay 2")


def test_validate_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.adb"
    bad.write_text("alphabet a\nlocations l0\nstart l0\naccept\ntrans l0 l0 out\n")
    code, _, err = run(capsys, "validate", bad)
    assert code == 2
    assert "error" in err


def test_validate_missing_file(capsys):
    code, _, err = run(capsys, "validate", "no-such-file.adb")
    assert code == 2
    assert "error" in err


def test_empty_verdicts(capsys):
    code, out, _ = run(capsys, "empty", EXAMPLES / "a1.adb")
    assert code == 0
    assert out.splitlines()[0] == "NONEMPTY"
    assert out.splitlines()[1].startswith("witness run: ")

    code, out, _ = run(capsys, "empty", EXAMPLES / "empty.adb")
    assert code == 1
    assert out.strip() == "EMPTY"

    code, out, _ = run(capsys, "empty", EXAMPLES / "a2.adb")
    assert code == 0
    assert out.splitlines()[0] == "NONEMPTY"


def test_member_timed(capsys):
    code, out, _ = run(capsys, "member", EXAMPLES / "a1.adb", "--timed", "a@0 b@1 c@2")
    assert (code, out.strip()) == (0, "MEMBER")

    code, out, _ = run(capsys, "member", EXAMPLES / "a1.adb", "--timed", "")
    assert (code, out.strip()) == (0, "MEMBER")

    code, out, _ = run(capsys, "member", EXAMPLES / "a1.adb", "--timed", "a@0 b@1")
    assert (code, out.strip()) == (1, "NOT MEMBER")


def test_member_untimed(capsys):
    code, out, _ = run(capsys, "member", EXAMPLES / "a1.adb", "--untimed", "a b")
    assert (code, out.strip()) == (1, "NOT MEMBER")

    code, out, _ = run(capsys, "member", EXAMPLES / "a1.adb", "--untimed", "a b c")
    assert (code, out.strip()) == (0, "MEMBER")


def test_member_bad_word(capsys):
    code, _, err = run(capsys, "member", EXAMPLES / "a1.adb", "--timed", "a@")
    assert code == 2
    code, _, err = run(capsys, "member", EXAMPLES / "a1.adb", "--timed", "z@0")
    assert code == 2


def test_modelcheck(capsys):
    code, out, _ = run(
        capsys, "modelcheck", EXAMPLES / "a1.adb",
        "--spec", EXAMPLES / "astar-bstar-cstar.nfa",
    )
    assert (code, out.strip()) == (0, "HOLDS")

    code, out, _ = run(
        capsys, "modelcheck", EXAMPLES / "a1.adb",
        "--spec", EXAMPLES / "bstar-astar-cstar.nfa",
    )
    assert code == 1
    assert out.splitlines() == ["FAILS", "a b c"]


def test_modelcheck_alphabet_mismatch(capsys):
    code, _, err = run(
        capsys, "modelcheck", EXAMPLES / "a3.adb",
        "--spec", EXAMPLES / "astar-bstar-cstar.nfa",
    )
    assert code == 2


def test_construct_star_then_member(tmp_path, capsys):
    out_path = tmp_path / "a1star.adb"
    code, _, err = run(
        capsys, "construct", "star", EXAMPLES / "a1.adb", "--out", out_path
    )
    assert code == 0
    assert out_path.exists()
    code, out, _ = run(capsys, "member", out_path, "--untimed", "a b c a b c")
    assert (code, out.strip()) == (0, "MEMBER")


def test_construct_concat_has_tick_chains(capsys):
    code, out, _ = run(
        capsys, "construct", "concat", EXAMPLES / "a1.adb", EXAMPLES / "a1.adb"
    )
    assert code == 0
    assert out.count(" tick") == 2  # max delay 2 gives a two-tick flush chain


def test_construct_intersect_nonempty(tmp_path, capsys):
    out_path = tmp_path / "prod.adb"
    code, _, _ = run(
        capsys, "construct", "intersect", EXAMPLES / "a1.adb",
        "--spec", EXAMPLES / "sigma-star.nfa", "--out", out_path,
    )
    assert code == 0
    code, out, _ = run(capsys, "empty", out_path)
    assert code == 0
    assert out.splitlines()[0] == "NONEMPTY"


def test_construct_union_and_lift(tmp_path, capsys):
    code, _, _ = run(
        capsys, "construct", "union", EXAMPLES / "a1.adb", EXAMPLES / "a3.adb",
        "--out", tmp_path / "u.adb",
    )
    assert code == 0
    code, _, _ = run(
        capsys, "construct", "lift", EXAMPLES / "astar-b.nfa",
        "--out", tmp_path / "lifted.adb",
    )
    assert code == 0
    code, out, _ = run(capsys, "member", tmp_path / "lifted.adb", "--untimed", "a a b")
    assert (code, out.strip()) == (0, "MEMBER")


def test_construct_wrong_arity(capsys):
    code, _, err = run(capsys, "construct", "union", EXAMPLES / "a1.adb")
    assert code == 2


def test_enumerate_golden(capsys):
    code, out, _ = run(
        capsys, "enumerate", EXAMPLES / "a1.adb", "--max-transitions", "9"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[0] == ""
    assert lines[-1] == "a@0 a@0 a@0 b@1 b@1 b@1 c@2 c@2 c@2"


def test_enumerate_zero_bound(capsys):
    code, out, _ = run(
        capsys, "enumerate", EXAMPLES / "a1.adb", "--max-transitions", "0"
    )
    assert code == 0
    assert out == "\n"


def test_enumerate_untimed(capsys):
    code, out, _ = run(
        capsys, "enumerate", EXAMPLES / "a3.adb", "--max-transitions", "4",
        "--untimed",
    )
    assert code == 0
    lines = out.splitlines()
    assert "a c" in lines
    assert "b d" in lines


def test_enumerate_deterministic(capsys):
    args = ("enumerate", EXAMPLES / "a2.adb", "--max-transitions", "8")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_enumerate_bound_exceeded(capsys, monkeypatch):
    monkeypatch.setenv("ADB_MAX_STATES", "10")
    code, _, err = run(
        capsys, "enumerate", EXAMPLES / "a2.adb", "--max-transitions", "20"
    )
    assert code == 3


def test_oword_goldens(capsys):
    code, out, _ = run(
        capsys, "oword", "--labels",
        "point/0 yes/0 yes/1 #/0 tick point/0 yes/0 no/1 point/0 may/0 no/1 #/0 tick",
    )
    assert code == 0
    assert out.strip() == (
        "point@0 yes@0 #@0 yes@1 point@1 yes@1 point@1 may@1 #@1 no@2 no@2"
    )

    code, out, _ = run(capsys, "oword", "--labels", "bad/")
    assert code == 2


def test_oracle_member(capsys):
    code, out, _ = run(
        capsys, "oracle-member", EXAMPLES / "a1.adb", "--timed", "a@0 b@1 c@2"
    )
    assert (code, out.strip()) == (0, "MEMBER")
    code, out, _ = run(
        capsys, "oracle-member", EXAMPLES / "a1.adb", "--timed", "a@0"
    )
    assert (code, out.strip()) == (1, "NOT MEMBER")


def test_usage_error(capsys):
    assert run(capsys, "member", EXAMPLES / "a1.adb")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
