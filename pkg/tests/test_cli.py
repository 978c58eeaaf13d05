import subprocess
import sys

from squaretiles import parse, serialize, validate
from squaretiles.cli import (
    EXIT_INVALID,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    EXIT_RESOURCE,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
)


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "squaretiles.cli", *args],
        capture_output=True,
        text=True,
    )


def test_exit_codes_are_distinct():
    codes = {EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVALID, EXIT_UNSUPPORTED,
             EXIT_PRECONDITION, EXIT_RESOURCE}
    assert len(codes) == 7


def test_construct_even(tmp_path):
    out = tmp_path / "t8.tiling"
    r = run_cli("construct", "--n", "8", "--out", str(out))
    assert r.returncode == EXIT_OK
    assert "sigma = 5/2" in r.stdout
    t = parse(out.read_text())
    assert t.n == 8
    assert validate(t).ok


def test_construct_writes_stdout_without_out():
    r = run_cli("construct", "--n", "4")
    assert r.returncode == EXIT_OK
    t = parse(r.stdout)
    assert t.n == 4
    assert "sigma = 2" in r.stderr


def test_construct_odd_variants(tmp_path):
    for variant, n_expected in (("subdivide", 7), ("quadrant", 7)):
        out = tmp_path / f"{variant}.tiling"
        r = run_cli("construct", "--n", "7", "--variant", variant, "--out", str(out))
        assert r.returncode == EXIT_OK
        assert "sigma = 5/2" in r.stdout
        assert parse(out.read_text()).n == n_expected


def test_construct_unsupported_counts():
    for n in ("5", "3", "2", "1"):
        r = run_cli("construct", "--n", n)
        assert r.returncode == EXIT_UNSUPPORTED
        assert "error" in r.stderr


def test_construct_variant_rejected_for_even():
    r = run_cli("construct", "--n", "8", "--variant", "quadrant")
    assert r.returncode == EXIT_USAGE


def test_validate_ok(tmp_path):
    f = tmp_path / "t.tiling"
    run_cli("construct", "--n", "6", "--out", str(f))
    r = run_cli("validate", str(f))
    assert r.returncode == EXIT_OK
    assert "ok" in r.stdout


def test_validate_reports_violations(tmp_path):
    f = tmp_path / "bad.tiling"
    f.write_text("tiling v1 n=1\n0 0 1/2\n")
    r = run_cli("validate", str(f))
    assert r.returncode == EXIT_INVALID
    assert "area sum" in r.stdout


def test_parse_error_exit_code(tmp_path):
    f = tmp_path / "unreduced.tiling"
    f.write_text("tiling v1 n=1\n0 0 2/4\n")
    for cmd in ("validate", "sigma", "profile"):
        r = run_cli(cmd, str(f))
        assert r.returncode == EXIT_PARSE
        assert "lowest terms" in r.stderr


def test_sigma_and_profile(tmp_path):
    f = tmp_path / "t6.tiling"
    run_cli("construct", "--n", "6", "--out", str(f))
    r = run_cli("sigma", str(f))
    assert r.returncode == EXIT_OK
    assert r.stdout.strip() == "7/3"
    r = run_cli("profile", str(f))
    assert r.returncode == EXIT_OK
    assert "integral = 7/3" in r.stdout
    assert "sigma = 7/3" in r.stdout
    assert "[0, 1/3) -> 3" in r.stdout


def test_sigma_rejects_invalid_geometry(tmp_path):
    f = tmp_path / "bad.tiling"
    f.write_text("tiling v1 n=1\n0 0 1/2\n")
    r = run_cli("sigma", str(f))
    assert r.returncode == EXIT_INVALID


def test_enumerate_summary_and_emission(tmp_path):
    emit = tmp_path / "out"
    r = run_cli("enumerate", "--q", "3", "--canonical", "--emit-dir", str(emit))
    assert r.returncode == EXIT_OK
    assert "n raw canonical min_sigma" in r.stdout
    assert "6 4 1 7/3" in r.stdout
    files = sorted(emit.glob("*.tiling"))
    assert len(files) == 6
    for file in files:
        assert validate(parse(file.read_text())).ok


def test_enumerate_min_only_filter(tmp_path):
    emit = tmp_path / "wit"
    r = run_cli(
        "enumerate", "--q", "4", "--n", "7", "--min-only", "--emit-dir", str(emit)
    )
    assert r.returncode == EXIT_OK
    files = sorted(emit.glob("*.tiling"))
    assert len(files) >= 1
    for file in files:
        t = parse(file.read_text())
        assert t.n == 7


def test_enumerate_node_budget():
    r = run_cli("enumerate", "--q", "5", "--node-budget", "10")
    assert r.returncode == EXIT_RESOURCE
    assert "node budget" in r.stderr


def test_verify_command():
    r = run_cli("verify", "--q-max", "4", "--k-max", "6")
    assert r.returncode == EXIT_OK
    assert "complementary-pair" in r.stdout
    assert "VIOLATIONS" not in r.stdout


def test_render_command(tmp_path):
    f = tmp_path / "t8.tiling"
    run_cli("construct", "--n", "8", "--out", str(f))
    svg = tmp_path / "t8.svg"
    r = run_cli("render", str(f), "--out", str(svg), "--canvas", "400")
    assert r.returncode == EXIT_OK
    content = svg.read_text()
    assert content.count("<rect") == 9
    assert 'width="400"' in content


def test_table_command():
    r = run_cli("table", "--k-max", "5")
    assert r.returncode == EXIT_OK
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "n parity minimum decimal"
    assert "4 even 2 2.000000" in lines
    assert "11 odd 11/4 2.750000" in lines
    assert not any(line.startswith("5 ") for line in lines)


def test_round_trip_through_files(tmp_path, corpus_q4):
    for i, t in enumerate(corpus_q4[:10]):
        f = tmp_path / f"t{i}.tiling"
        f.write_text(serialize(t))
        r = run_cli("validate", str(f))
        assert r.returncode == EXIT_OK
