import json
from fractions import Fraction

from diracoh import Weight, build_root_system, dirac_cohomology_simple
from diracoh.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hd_example(capsys):
    code, out, _ = run_cli(
        capsys, "hd", "--type", "A1", "--parabolic", "", "--weight", "0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["entries"] == [
        {"mult": 1, "weight": ["-1"]},
        {"mult": 1, "weight": ["1"]},
    ]


def test_hd_json_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys, "hd", "--type", "B2", "--parabolic", "2", "--weight", "1,0"
    )
    assert code == 0
    payload = json.loads(out)
    rs = build_root_system("B2")
    parsed = {
        Weight([Fraction(c) for c in entry["weight"]]): entry["mult"]
        for entry in payload["entries"]
    }
    assert parsed == dirac_cohomology_simple(rs, (1,), Weight([1, 0]))


def test_kl_example(capsys):
    code, out, _ = run_cli(
        capsys, "kl", "--type", "A3", "--format", "table", "s2", "s2*s1*s3*s2"
    )
    assert code == 0
    assert out.strip() == "1 + q"


def test_pkl(capsys):
    code, out, _ = run_cli(
        capsys,
        "pkl", "--type", "A2", "--J", "1", "--y", "q", "--format", "table", "e", "s2*s1",
    )
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run_cli(
        capsys,
        "pkl", "--type", "A2", "--J", "1", "--y", "neg1", "--format", "table", "e", "s2*s1",
    )
    assert out.strip() == "1"


def test_klv_words_in_integral_group(capsys):
    code, out, _ = run_cli(
        capsys,
        "klv", "--type", "A2", "--parabolic", "1", "--weight", "0,0", "e", "s2*s1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == [1]
    assert payload["integral_simples"] == [[1, 0], [0, 1]]


def test_simple_verma(capsys):
    code, out, _ = run_cli(
        capsys,
        "simple", "--module", "verma", "--type", "A1", "--weight", "-1", "--format", "table",
    )
    assert code == 0
    assert out.strip() == "simple: true"


def test_simple_parabolic(capsys):
    code, out, _ = run_cli(
        capsys,
        "simple", "--module", "parabolic", "--type", "A2", "--parabolic", "1",
        "--weight", "0,0",
    )
    assert code == 0
    assert json.loads(out)["simple"] is False


def test_wset_and_params(capsys):
    code, out, _ = run_cli(
        capsys, "wset", "--type", "A1", "--parabolic", "", "--weight", "0"
    )
    assert code == 0
    assert json.loads(out)["weights"] == [["-1"], ["1"]]
    code, out, _ = run_cli(
        capsys, "params", "--type", "A2", "--parabolic", "1", "--weight", "0,0"
    )
    payload = json.loads(out)
    assert payload["flags"]["algebraic_equalities"] is True
    assert payload["w_set"] == payload["mult_set"] == payload["hull_set"]


def test_params_json_roundtrip(capsys):
    from diracoh import param_report

    code, out, _ = run_cli(
        capsys, "params", "--type", "B2", "--parabolic", "1", "--weight", "0,0"
    )
    assert code == 0
    payload = json.loads(out)
    rs = build_root_system("B2")
    rep = param_report(rs, (0,), Weight([0, 0]))
    for field in ("w_set", "hull_set", "linkage_set", "mult_set", "embed_set"):
        parsed = frozenset(
            Weight([Fraction(c) for c in coords]) for coords in payload[field]
        )
        assert parsed == getattr(rep, field)


def test_kostant_cli(capsys):
    code, out, _ = run_cli(
        capsys,
        "kostant", "--type", "A3", "--parabolic", "", "--weight", "-2,2,-2",
        "--format", "table",
    )
    assert code == 0
    assert out.strip() == "kostant: false"


def test_root_basis_entry(capsys):
    # -alpha1 in root coordinates equals (-2, 1) in fundamental coordinates
    code, out1, _ = run_cli(
        capsys, "hd", "--type", "A2", "--weight", "-1,0", "--basis", "root"
    )
    assert code == 0
    code, out2, _ = run_cli(capsys, "hd", "--type", "A2", "--weight", "-2,1")
    assert out1 == out2


def test_domain_error_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "hd", "--type", "A2", "--parabolic", "1", "--weight", "-1,0"
    )
    assert code == 1
    assert "dominant" in err
    code, _, err = run_cli(
        capsys, "kostant", "--type", "A2", "--parabolic", "", "--weight", "-1,0"
    )
    assert code == 1
    assert "regular" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "hd", "--type", "A2", "--weight", "1,x")
    assert code == 1 and "position 2" in err
    code, _, err = run_cli(capsys, "roots", "--type", "Q5")
    assert code == 1
    code, _, err = run_cli(capsys, "kl", "--type", "A2", "s9", "e")
    assert code == 1


def test_byte_identical_runs(capsys):
    args = ("params", "--type", "B2", "--parabolic", "2", "--weight", "1,0")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_verify_cli_pass_and_fail(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--systems", "A1", "--checks", "param_chain,param_injectivity"
    )
    assert code == 0
    assert "RESULT: PASS" in out
    code, out, _ = run_cli(
        capsys, "verify", "--systems", "B2", "--checks", "geometric_params_check", "--format", "json"
    )
    assert code == 2
    payload = json.loads(out)
    assert payload["passed"] is False


def test_verify_plan_file(tmp_path, capsys):
    plan = {"systems": ["A1"], "checks": ["structural_counts", "kl_properties"]}
    path = tmp_path / "plan.json"
    path.write_text(json.dumps(plan))
    code, out, _ = run_cli(capsys, "verify", "--plan", str(path))
    assert code == 0 and "RESULT: PASS" in out


def test_kl_cache_file(tmp_path, capsys):
    cache = tmp_path / "kl.json"
    args = ("kl", "--type", "B2", "--cache", str(cache), "--format", "table",
            "s1", "s1*s2*s1")
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0 and cache.exists()
    blob = json.loads(cache.read_text())
    assert blob["schema"] == 1 and blob["pairs"]
    code, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    # stale fingerprints are ignored silently
    blob["fingerprint"] = "0" * 64
    cache.write_text(json.dumps(blob))
    code, out3, _ = run_cli(capsys, *args)
    assert code == 0 and out1 == out3


def test_emit_dot(tmp_path, capsys):
    dot = tmp_path / "interval.dot"
    code, _, _ = run_cli(
        capsys, "kl", "--type", "A2", "--emit-dot", str(dot), "e", "s1*s2"
    )
    assert code == 0
    text = dot.read_text()
    assert text.startswith("digraph") and '"s1*s2"' in text


def test_roots_table(capsys):
    code, out, _ = run_cli(capsys, "roots", "--type", "A2xA1", "--format", "table")
    assert code == 0
    assert "positive roots: 4" in out
    assert "Weyl group order: 12" in out


def test_size_cap(capsys):
    code, out, _ = run_cli(capsys, "roots", "--type", "E8", "--format", "table")
    assert code == 0 and "positive roots: 120" in out
    code, _, err = run_cli(capsys, "kl", "--type", "E8", "e", "e")
    assert code == 1 and "size-cap" in err
    code, out, _ = run_cli(
        capsys, "kl", "--type", "B2", "--size-cap", "4", "e", "e"
    )
    assert code == 1


def test_klv_rejects_bad_representatives(capsys):
    code, _, err = run_cli(
        capsys,
        "klv", "--type", "A2", "--parabolic", "1", "--weight", "0,0", "s1", "s2*s1",
    )
    assert code == 1 and "representative" in err
