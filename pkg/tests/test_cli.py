import json

import numpy as np

from jbdet import io as docio
from jbdet.cli import EXIT_OK, EXIT_UNSUPPORTED, EXIT_USAGE, main
from jbdet.generators import random_herm
from jbdet.jordan import HermMatrix


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dt_diagonal_value(tmp_path, capsys):
    path = tmp_path / "x.json"
    docio.save(HermMatrix.diag([1.0, 1j, -1.0], level=2), path)
    code, out, _ = run_cli(capsys, "dt", str(path), "--no-timestamp")
    assert code == EXIT_OK
    assert "dt = 0.000000+(-1.000000)i" in out
    assert "route = recursive" in out


def test_dt_check_hat(tmp_path, capsys, rng):
    path = tmp_path / "x.json"
    docio.save(random_herm(rng, level=2), path)
    code, out, _ = run_cli(capsys, "dt", str(path), "--check-hat", "--no-timestamp")
    assert code == EXIT_OK
    assert "hat-check PASS" in out


def test_dt_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{broken", encoding="utf-8")
    code, _, err = run_cli(capsys, "dt", str(path))
    assert code == EXIT_USAGE
    assert "input error" in err


def test_dt_unsupported_octonionic(tmp_path, capsys, rng):
    path = tmp_path / "oct.json"
    docio.save(random_herm(rng, level=3), path)
    code, _, err = run_cli(capsys, "dt", str(path))
    assert code == EXIT_UNSUPPORTED
    assert "unsupported" in err


def test_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "nosuch")
    assert code == EXIT_USAGE


def test_verify_suite_runs(capsys):
    code, out, _ = run_cli(capsys, "verify", "t-spectral", "--seed", "5",
                           "--trials", "6", "--no-timestamp")
    assert code == EXIT_OK
    assert "suite t-spectral: PASS" in out


def test_verify_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "verify", "aut-c6", "--seed", "3",
                         "--trials", "8", "--no-timestamp")
    _, out2, _ = run_cli(capsys, "verify", "aut-c6", "--seed", "3",
                         "--trials", "8", "--no-timestamp")
    assert out1 == out2


def test_gen_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    for out in (out1, out2):
        code, _, _ = run_cli(capsys, "gen", "unitary-c6", "--seed", "1",
                             "--count", "3", "--out", str(out))
        assert code == EXIT_OK
    for k in range(3):
        a = (out1 / f"unitary-c6-1-{k:03d}.json").read_bytes()
        b = (out2 / f"unitary-c6-1-{k:03d}.json").read_bytes()
        assert a == b
    # documents re-encode to identical bytes after parsing
    text = (out1 / "unitary-c6-1-000.json").read_text()
    assert docio.dumps(docio.loads(text)) + "\n" == text


def test_gen_unknown_kind(capsys):
    code, _, err = run_cli(capsys, "gen", "octopus")
    assert code == EXIT_USAGE


def test_spectral_command(tmp_path, capsys):
    path = tmp_path / "d.json"
    docio.save(HermMatrix.diag([5.0, 5.0, 2.0]), path)
    code, out, _ = run_cli(capsys, "spectral", str(path), "--no-timestamp")
    assert code == EXIT_OK
    assert "multiplicity 2" in out and "multiplicity 1" in out
    assert "5.000000" in out and "2.000000" in out


def test_spectral_isotope(tmp_path, capsys):
    xp = tmp_path / "x.json"
    ep = tmp_path / "e.json"
    docio.save(HermMatrix.diag([1j, 1.0, -1.0]), xp)
    docio.save(HermMatrix.diag([1.0, 1j, 1.0]), ep)
    code, out, _ = run_cli(capsys, "spectral", str(xp), "--isotope", str(ep),
                           "--no-timestamp")
    assert code == EXIT_OK
    assert "components:" in out


def test_spectral_rejects_non_normal(tmp_path, capsys, rng):
    path = tmp_path / "x.json"
    docio.save(random_herm(rng, level=3), path)
    code, _, err = run_cli(capsys, "spectral", str(path))
    assert code == EXIT_USAGE  # precondition violation reads as bad input


def test_reduce_command(tmp_path, capsys):
    from jbdet.generators import distinct_unimodular, random_unitary

    rng = np.random.default_rng(4)
    up = tmp_path / "u.json"
    ep = tmp_path / "e.json"
    docio.save(random_unitary(rng, scramble=1), up)
    docio.save(HermMatrix.diag(distinct_unimodular(rng)), ep)
    outp = tmp_path / "red.json"
    code, out, _ = run_cli(capsys, "reduce", str(up), str(ep), "--seed", "2",
                           "--out", str(outp), "--no-timestamp")
    assert code == EXIT_OK
    assert "case path:" in out
    doc = json.loads(outp.read_text())
    assert doc["kind"] == "reduction"
    assert doc["automorphism"]["map_kind"] == "jordan_star_auto"
    assert len(doc["images"]) == 2
    assert doc["certificate"]["case_path"]


def test_reduce_requires_diagonal(tmp_path, capsys):
    from jbdet.generators import random_unitary

    rng = np.random.default_rng(9)
    up = tmp_path / "u.json"
    ep = tmp_path / "e.json"
    docio.save(random_unitary(rng), up)
    docio.save(random_unitary(rng), ep)
    code, _, err = run_cli(capsys, "reduce", str(up), str(ep))
    assert code == EXIT_USAGE
    assert "diagonal" in err
