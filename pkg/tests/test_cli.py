import json
import os
import subprocess
import sys

import ferrers.cli as cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--json")
    return code, json.loads(out) if out else None, err


def test_info_diagram(capsys):
    code, data, _ = run_json(capsys, "info", "--diagram", "4,3,3,2,1")
    assert code == 0
    assert data["result"]["sequence"] == [1, 2, 3, 4, 3]
    assert data["result"]["degree"] == 4
    assert data["result"]["canonical"]["columns"] == [4, 3, 3, 2, 1]
    assert data["version"] == 1


def test_info_canonicalizes(capsys):
    code, data, _ = run_json(capsys, "info", "--diagram", "5,3,3,2")
    assert code == 0
    assert data["result"]["canonical"]["columns"] == [4, 3, 3, 2, 1]


def test_info_human_format(capsys):
    code, out, _ = run_cli(capsys, "info", "--diagram", "2,1")
    assert code == 0
    assert "symmetric: yes" in out
    assert "##\n#" in out


def test_info_bad_sequence_exits_2(capsys):
    code, _, err = run_cli(capsys, "info", "--sequence", "2,1")
    assert code == 2
    assert "d_1 must equal 1" in err


def test_qrook_golden(capsys):
    code, data, _ = run_json(capsys, "qrook", "--diagram", "2,2", "--r", "2")
    assert code == 0
    assert data["result"] == {
        "terms": [{"coeff": "1", "exp": 0}, {"coeff": "1", "exp": 1}]
    }


def test_qrook_sequence_both_methods(capsys):
    code, data, _ = run_json(
        capsys, "qrook", "--sequence", "1,2,1", "--r", "2", "--method", "both"
    )
    assert code == 0
    assert data["result"]["terms"] == [
        {"coeff": "1", "exp": 0},
        {"coeff": "1", "exp": 1},
    ]


def test_qrook_zero_polynomial(capsys):
    code, data, _ = run_json(capsys, "qrook", "--diagram", "2,2", "--r", "3")
    assert code == 0
    assert data["result"] == {"terms": []}


def test_qrook_sym_kind(capsys):
    code, data, _ = run_json(
        capsys, "qrook", "--diagram", "2,2", "--kind", "sym", "--t", "1", "--s", "0"
    )
    assert code == 0
    assert data["result"]["terms"] == [{"coeff": "1", "exp": 1}]


def test_qrook_missing_r_exits_2(capsys):
    code, _, err = run_cli(capsys, "qrook", "--diagram", "2,2")
    assert code == 2
    assert "--r" in err


def test_qrook_cross_check_mismatch_exits_3(capsys, monkeypatch):
    from ferrers.laurent import ONE

    monkeypatch.setattr(cli.qrook, "qrook_enumerative", lambda d, r: ONE)
    code, _, err = run_cli(
        capsys, "qrook", "--diagram", "2,2", "--r", "2", "--method", "both"
    )
    assert code == 3
    assert "differs" in err


def test_rankdist_oracle_agreement(capsys):
    code, data, _ = run_json(
        capsys, "rankdist", "--diagram", "2,2", "--kind", "general",
        "--q", "2", "--oracle",
    )
    assert code == 0
    assert data["result"]["counts"] == ["1", "9", "6"]
    assert data["result"]["oracle"]["counts"] == ["1", "9", "6"]


def test_rankdist_symbolic_symmetric(capsys):
    code, data, _ = run_json(capsys, "rankdist", "--diagram", "2,1", "--kind", "sym")
    assert code == 0
    # W_2 = q^2 - q
    assert data["result"]["ranks"][2]["terms"] == [
        {"coeff": "-1", "exp": 1},
        {"coeff": "1", "exp": 2},
    ]


def test_rankdist_non_symmetric_alt_exits_2(capsys):
    code, _, err = run_cli(capsys, "rankdist", "--diagram", "3,1", "--kind", "alt")
    assert code == 2
    assert "symmetric" in err


def test_rankdist_oracle_needs_q(capsys):
    code, _, err = run_cli(capsys, "rankdist", "--diagram", "2,2", "--oracle")
    assert code == 2
    assert "--q" in err


def test_rankdist_budget_exceeded_exits_4(capsys, monkeypatch):
    monkeypatch.setenv("QROOK_BUDGET", "3")
    code, _, err = run_cli(
        capsys, "rankdist", "--diagram", "2,2", "--q", "2", "--oracle"
    )
    assert code == 4
    assert "budget" in err


def test_classes(capsys):
    code, data, _ = run_json(capsys, "classes", "--rows", "2", "--cols", "2")
    assert code == 0
    assert len(data["result"]["classes"]) == 5  # 6 diagrams, [2] ~ [1,1]
    code, data, _ = run_json(capsys, "classes", "--rows", "3", "--cols", "3")
    by_sequence = {tuple(c["sequence"]): c["members"] for c in data["result"]["classes"]}
    members = [tuple(m["columns"]) for m in by_sequence[(1, 2, 1)]]
    assert (2, 2) in members and (3, 1) in members


def test_classes_empty_board(capsys):
    code, data, _ = run_json(capsys, "classes", "--rows", "0", "--cols", "0")
    assert code == 0
    assert data["result"]["classes"] == [
        {
            "sequence": [],
            "members": [{"columns": []}],
            "polynomials": [{"r": 0, "terms": [{"coeff": "1", "exp": 0}]}],
        }
    ]


def test_verify_single_check(capsys):
    code, data, _ = run_json(
        capsys, "verify", "--check", "histograms", "--rows", "3", "--cols", "3"
    )
    assert code == 0
    assert data["result"]["checks"][0]["passed"] is True


def test_verify_all_small(capsys):
    code, data, _ = run_json(
        capsys, "verify", "--check", "all", "--rows", "2", "--cols", "2",
        "--fields", "2",
    )
    assert code == 0
    assert len(data["result"]["checks"]) == 4


def test_verify_unknown_check_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--check", "bogus")
    assert code == 2
    assert "unknown check" in err


def test_verify_failure_exits_1(capsys, monkeypatch):
    from ferrers.verify import VerificationReport

    def broken(rows, cols, fields):
        report = VerificationReport("histograms", "test domain")
        report.record("fabricated", 1, 2)
        return report

    monkeypatch.setitem(cli.verify.ALL_CHECKS, "histograms", broken)
    code, data, _ = run_json(capsys, "verify", "--check", "histograms")
    assert code == 1
    assert data["result"]["checks"][0]["passed"] is False


def test_json_output_is_byte_deterministic_across_hash_seeds():
    env = dict(os.environ)
    outputs = []
    for seed in ("0", "424242"):
        env["PYTHONHASHSEED"] = seed
        proc = subprocess.run(
            [sys.executable, "-m", "ferrers", "--json", "classes", "--rows", "3", "--cols", "3"],
            capture_output=True, env=env, check=True,
        )
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]


def test_bad_arguments_exit_2(capsys):
    assert cli.main(["info"]) == 2  # neither --diagram nor --sequence
