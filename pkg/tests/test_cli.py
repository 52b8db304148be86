import pytest

from jacobiws import cli

THETA_TEXT = "ccd v1\nwilson a b\nedge a b\n"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def theta_file(tmp_path):
    path = tmp_path / "theta.ccd"
    path.write_text(THETA_TEXT)
    return str(path)


def test_enumerate_chord(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "chord", "2")
    assert code == 0
    assert out.strip().endswith("count 2")


def test_enumerate_cc_chordless_contains_wheel(capsys):
    from jacobiws.deframe import tau
    from jacobiws.diagrams import canonical_key

    code, out, _ = run_cli(capsys, "enumerate", "cc", "2", "--chordless")
    assert code == 0
    assert canonical_key(tau((2,))).rstrip("\n") in out


def test_enumerate_ccd_degree0(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "ccd", "0")
    assert code == 0
    assert out.strip().endswith("count 1")


def test_dim(capsys):
    code, out, _ = run_cli(capsys, "dim", "2")
    assert code == 0
    assert "dim A_2 = 22" in out
    code, out, _ = run_cli(capsys, "dim", "4", "--inn")
    assert code == 0
    assert "dim I^4_4 = 2" in out


def test_ws_eval_conway_wheel(capsys, tmp_path):
    from jacobiws.deframe import tau
    from jacobiws.hopf import planar_wheel_diagram
    from jacobiws.diagrams import canonical_key

    wheel = tmp_path / "wheel2.ccd"
    wheel.write_text(canonical_key(planar_wheel_diagram(tau((2,)))))
    code, out, _ = run_cli(
        capsys, "ws", "eval", "--name", "conway", "--degree", "2",
        "--diagram", str(wheel),
    )
    assert code == 0
    assert out.strip() == "-2"


def test_ws_eval_conway_theta(capsys, theta_file):
    code, out, _ = run_cli(
        capsys, "ws", "eval", "--name", "conway", "--degree", "1",
        "--diagram", theta_file,
    )
    assert code == 0
    assert out.strip() == "0"


def test_lie_eval_pbw(capsys, theta_file):
    code, out, _ = run_cli(
        capsys, "lie", "eval", "--algebra", "builtin:gl11",
        "--diagram", theta_file,
    )
    assert code == 0
    assert out.strip() == "-2*G*H + H^2 + 2*Q+*Q- - H"


def test_lie_eval_k_lambda(capsys, theta_file):
    code, out, _ = run_cli(
        capsys, "lie", "eval", "--algebra", "builtin:sl2",
        "--diagram", theta_file, "--mode", "k-lambda",
    )
    assert code == 0
    assert out.strip() == "1/2*λ^2 + λ"


def test_lie_eval_lambda_substitution(capsys, theta_file):
    code, out, _ = run_cli(
        capsys, "lie", "eval", "--algebra", "builtin:sl2",
        "--diagram", theta_file, "--mode", "k-lambda", "--lambda", "2",
    )
    assert code == 0
    assert out.strip() == "4"


def test_lie_validate(capsys):
    code, out, _ = run_cli(capsys, "lie", "validate", "--algebra",
                           "builtin:osp12")
    assert code == 0
    assert "FAIL" not in out


def test_lie_check_stu(capsys):
    code, out, _ = run_cli(
        capsys, "lie", "check-stu", "--algebra", "builtin:gl11",
        "--degree", "2",
    )
    assert code == 0
    assert "0 violations" in out


def test_reduce_relation_member(capsys, tmp_path):
    # the tadpole class is zero, so reducing it prints 0
    tad = tmp_path / "tad.ccd"
    tad.write_text("ccd v1\nwilson a\nvertex v0 b c d\nedge a b\nedge c d\n")
    code, out, _ = run_cli(
        capsys, "reduce", "--degree", "1", "--diagram", str(tad)
    )
    assert code == 0
    assert out.strip() == "0"


def test_deframe_theta(capsys, theta_file):
    code, out, _ = run_cli(
        capsys, "deframe", "--degree", "1", "--diagram", theta_file
    )
    assert code == 0
    assert "kernel" in out


def test_ws_check_convolution(capsys):
    code, out, _ = run_cli(capsys, "ws", "check-convolution",
                           "--max-degree", "2")
    assert code == 0
    assert "PASS" in out


def test_verify_suite_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "classical-osp12",
                           "--max-degree", "2")
    assert code == 0
    assert "suite classical-osp12: PASS" in out


def test_verify_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "verify", "mmr-sl2", "--max-degree", "1",
                         "--seed", "7")
    _, out2, _ = run_cli(capsys, "verify", "mmr-sl2", "--max-degree", "1",
                         "--seed", "7")
    assert out1 == out2


def test_usage_error_exit_2(capsys, tmp_path):
    missing = str(tmp_path / "nope.ccd")
    code, _, err = run_cli(
        capsys, "ws", "eval", "--name", "conway", "--degree", "1",
        "--diagram", missing,
    )
    assert code == 2
    assert "error" in err


def test_bad_diagram_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.ccd"
    bad.write_text("ccd v1\nwilson a b\nedge a z\n")
    code, _, err = run_cli(
        capsys, "ws", "eval", "--name", "conway", "--degree", "1",
        "--diagram", str(bad),
    )
    assert code == 2
    assert "z" in err


def test_unknown_subcommand_exit_2(capsys):
    code, _, _ = run_cli(capsys, "frobnicate")
    assert code == 2


def test_cache_roundtrip(tmp_path, capsys):
    from jacobiws import cache
    from jacobiws.hopf import build_A

    space = build_A(2)
    previous = cache._override_dir
    cache.set_cache_dir(tmp_path)
    try:
        cache.store_quotient("test-A2", space)
        loaded = cache.load_quotient("test-A2")
        assert loaded is not None
        assert loaded.basis == space.basis
        assert loaded.ambient == space.ambient
        files = list(tmp_path.iterdir())
        assert files and files[0].read_text().startswith(cache.HEADER)
    finally:
        cache.set_cache_dir(previous)
