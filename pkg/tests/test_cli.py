import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from oracles import bias_by_listing
from qbias.cli import main, parse_range
from qbias.partitions import partition_numbers

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_expand_inner():
    code, out, _ = run("expand", "inner", "--s", "1", "--m", "1", "-N", "3")
    assert code == 0
    assert out == "0\t0\n1\t1\n2\t1\n3\t2\n"


def test_expand_double_order_zero():
    assert run("expand", "double", "--m", "2", "-N", "0")[:2] == (0, "0\t0\n")


def test_expand_full():
    assert run("expand", "full", "--m", "2", "--order", "1")[:2] == (0, "0\t0\n1\t1\n")


def test_expand_json():
    code, out, _ = run("expand", "inner", "--s", "2", "--m", "3", "-N", "5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["series"] == "inner" and len(payload["coefficients"]) == 6


@pytest.mark.parametrize(
    "argv",
    [
        ("expand", "inner", "--m", "1", "-N", "3"),
        ("expand", "double", "--m", "1", "-N", "3"),
        ("expand", "double", "--m", "2"),
        ("expand", "double", "--m", "2", "-N", "-1"),
        ("expand", "double", "--m", "2", "-N", "2001"),
        ("expand", "bogus", "--m", "2", "-N", "3"),
        ("bias-table", "--m", "2", "--a", "1", "--b", "1", "-N", "4"),
        ("bias-table", "--m", "3", "--a", "0", "--b", "1", "-N", "4"),
        ("verify", "--target", "conj5", "--s", "1..x"),
        ("verify", "--target", "conj5", "--s", "5..1"),
        ("verify", "--target", "conj5", "--s", "1..30"),
        ("verify", "--target", "conj4", "--m", "1..3"),
        ("verify", "--target", "nope"),
        (),
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_caps_can_be_raised():
    assert run("expand", "inner", "--s", "1", "--m", "1", "-N", "12", "--max-order", "10")[0] == 2
    assert run("expand", "inner", "--s", "1", "--m", "1", "-N", "2001", "--max-order", "3000")[0] == 0
    code, _, _ = run("verify", "--target", "conj5", "--s", "1..21", "--m", "1", "-N", "10", "--max-grid", "25")
    assert code == 0


def test_parse_range():
    assert parse_range("3") == [3]
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("2-5") == [2, 3, 4, 5]
    assert parse_range("1,3,7") == [1, 3, 7]


def test_bias_table_rows():
    code, out, _ = run("bias-table", "--m", "2", "--a", "1", "--b", "2", "-N", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[4] == "4\t3\t2\t1"
    assert lines[1] == "1\t1\t0\t1"


def test_bias_table_golden_and_inequality():
    code, out, _ = run("bias-table", "--m", "2", "--a", "1", "--b", "2", "-N", "200")
    assert code == 0
    assert out == (GOLDEN / "parity_bias_N200.tsv").read_text()
    rows = [list(map(int, line.split("\t"))) for line in out.splitlines()]
    assert all(d >= 0 for n, _, _, d in rows if n != 2)


def test_golden_parity_table_against_listing():
    rows = [list(map(int, line.split("\t"))) for line in (GOLDEN / "parity_bias_N200.tsv").read_text().splitlines()]
    for n, odd, even, _ in rows[:19]:
        assert odd == bias_by_listing(1, 2, 2, n)
        assert even == bias_by_listing(2, 1, 2, n)
    p = partition_numbers(200)
    assert all(odd + even <= p[n] for n, odd, even, _ in rows)


@pytest.mark.parametrize(
    "argv, golden",
    [
        (("expand", "inner", "--s", "1", "--m", "1", "-N", "60"), "expand_inner_s1_m1_N60.tsv"),
        (("expand", "double", "--m", "3", "-N", "60"), "expand_double_m3_N60.tsv"),
        (("verify", "--target", "thm1", "-N", "200"), "verify_thm1_N200.txt"),
    ],
)
def test_golden_outputs(argv, golden):
    code, out, _ = run(*argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_verify_thm1_excludes_two():
    code, out, _ = run("verify", "--target", "thm1", "-N", "60")
    assert code == 0
    assert "# excluded 2\tp_o=1 p_e=1" in out
    assert not any(line.startswith("2\t") for line in out.splitlines())


def test_verify_thm3_small():
    code, out, err = run("verify", "--target", "thm3", "--m", "2..6", "-N", "40")
    assert code == 0
    assert out.rstrip().endswith("# overall\tPASS")
    assert "PASS" in err


@pytest.mark.parametrize("target", ["conj5", "inner", "conj4", "double", "rearrange", "proof", "full", "parity", "residue"])
def test_verify_targets_small(target):
    code, out, _ = run("verify", "--target", target, "-N", "25", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["overall"] == "PASS"
    assert len(payload["rows"]) >= 25


def test_verify_fail_exit_code(monkeypatch):
    from qbias import sweeps
    from qbias.report import ReportRow, VerificationReport

    def failing(order, oracle_cap=40):
        return VerificationReport("parity-bias", {}, [ReportRow(0, False, {})])

    monkeypatch.setattr(sweeps, "sweep_parity", failing)
    code, out, _ = run("verify", "--target", "thm1", "-N", "5")
    assert code == 1
    assert "# overall\tFAIL" in out


def test_output_is_deterministic():
    argv = ("verify", "--target", "conj5", "--s", "1..4", "--m", "1..4", "-N", "50")
    assert run(*argv)[1] == run(*argv)[1]


def test_parallel_matches_serial(monkeypatch):
    argv = ("verify", "--target", "conj4", "--m", "2..4", "-N", "40")
    serial = run(*argv)[1]
    monkeypatch.setenv("QBIAS_THREADS", "2")
    assert run(*argv)[1] == serial


def test_bad_thread_env(monkeypatch):
    monkeypatch.setenv("QBIAS_THREADS", "many")
    assert run("verify", "--target", "conj4", "--m", "2..3", "-N", "10")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qbias", "expand", "double", "--m", "2", "-N", "0"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0\t0\n"
