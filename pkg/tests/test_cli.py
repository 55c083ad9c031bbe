import json
import os
import subprocess
import sys
from pathlib import Path

from newstead.cli import (
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    load_cached_basis,
    main,
    save_cached_basis,
)
from newstead.groebner import relation_ideal_basis


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRelationsVerb:
    def test_json_schema_and_values(self, capsys):
        code, out, _ = run_cli(capsys, "relations", "-g", "2", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload == {
            "genus": 2,
            "f1": "a^2 + b",
            "f2": "a*b + c",
            "f3": "a*c",
            "weighted_degrees": [2, 3, 4],
            "initial_terms": ["a^2", "a*b", "a*c"],
            "paths_agree": True,
        }

    def test_json_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "relations", "-g", "3", "--format", "json")
        _, second, _ = run_cli(capsys, "relations", "-g", "3", "--format", "json")
        assert first == second

    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "relations", "-g", "2")
        assert code == EXIT_OK
        assert "f1 = a^2 + b" in out
        assert "paths agree: yes" in out

    def test_latex(self, capsys):
        code, out, _ = run_cli(capsys, "relations", "-g", "2", "--format", "latex")
        assert code == EXIT_OK
        assert "f_{1}^{2} = \\alpha^{2} + \\beta" in out


class TestQueryVerbs:
    def test_nf(self, capsys):
        code, out, _ = run_cli(capsys, "nf", "-g", "2", "--poly", "a^2")
        assert code == EXIT_OK
        assert out.strip() == "-b"

    def test_nf_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "nf", "-g", "2", "--poly", "a^2", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["normal_form"] == "-b"
        assert payload["input"] == "a^2"

    def test_basis(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "-g", "2", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["count"] == 4
        assert payload["monomials"] == ["1", "a", "b", "c"]

    def test_hilbert(self, capsys):
        code, out, _ = run_cli(capsys, "hilbert", "-g", "2")
        assert code == EXIT_OK
        assert out.strip() == "1 1 1 1"

    def test_pairing(self, capsys):
        code, out, _ = run_cli(capsys, "pairing", "-g", "2", "--mono", "a*b")
        assert code == EXIT_OK
        assert out.strip() == "-1"

    def test_pairing_wrong_weight(self, capsys):
        code, _, err = run_cli(capsys, "pairing", "-g", "2", "--mono", "a")
        assert code == EXIT_USAGE
        assert "weighted degree" in err

    def test_groebner(self, capsys):
        code, out, _ = run_cli(capsys, "groebner", "-g", "2", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["elements"] == [
            "c^2",
            "b*c",
            "a*c",
            "b^2",
            "a*b + c",
            "a^2 + b",
        ]
        assert len(payload["initial_ideal"]) == 6

    def test_chern_quotient(self, capsys):
        code, out, _ = run_cli(
            capsys, "chern", "-g", "2", "--target", "q", "--format", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["components"][0] == "1"
        assert payload["components"][1] == "a"
        assert payload["components"][2] == "1/2*a^2 + 1/2*b"

    def test_chern_tangent(self, capsys):
        code, out, _ = run_cli(capsys, "chern", "-g", "2", "--target", "ng")
        assert code == EXIT_OK
        assert "c_1 = 2*a" in out
        assert "c_2 = 2*a^2 - b" in out

    def test_betti(self, capsys):
        code, out, _ = run_cli(capsys, "betti", "-g", "3", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["values"] == [[0, 1], [1, 1], [2, 2], [3, 16], [4, 2]]
        assert payload["cross_check"] is True


class TestExitCodes:
    def test_parse_error_is_three(self, capsys):
        code, _, err = run_cli(capsys, "nf", "-g", "2", "--poly", "a +")
        assert code == EXIT_PARSE
        assert "parse error" in err

    def test_unknown_variable_is_parse_error(self, capsys):
        code, _, _ = run_cli(capsys, "nf", "-g", "2", "--poly", "x^2")
        assert code == EXIT_PARSE

    def test_bad_genus_is_usage(self, capsys):
        code, _, _ = run_cli(capsys, "relations", "-g", "zero")
        assert code == EXIT_USAGE

    def test_genus_below_one_is_usage(self, capsys):
        code, _, _ = run_cli(capsys, "relations", "-g", "0")
        assert code == EXIT_USAGE

    def test_range_outside_verify_is_usage(self, capsys):
        code, _, _ = run_cli(capsys, "relations", "-g", "1..3")
        assert code == EXIT_USAGE

    def test_tangent_needs_genus_two(self, capsys):
        code, _, _ = run_cli(capsys, "chern", "-g", "1", "--target", "ng")
        assert code == EXIT_USAGE

    def test_betti_needs_genus_two(self, capsys):
        code, _, _ = run_cli(capsys, "betti", "-g", "1")
        assert code == EXIT_USAGE

    def test_unknown_command_is_usage(self, capsys):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_missing_genus_is_usage(self, capsys):
        assert main(["relations"]) == EXIT_USAGE


class TestVerify:
    def test_small_range_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "-g", "1..3")
        assert code == EXIT_OK
        assert "g=1 relations-dual-path: ok" in out
        assert "g=2->g=3 gamma-inclusion: ok" in out
        assert "global functional-equation: ok" in out
        assert "FAILED" not in out

    def test_output_ordered_by_genus(self, capsys):
        _, out, _ = run_cli(capsys, "verify", "-g", "1..3", "--jobs", "3")
        lines = [line for line in out.splitlines() if line.startswith("g=")]
        genera = [line.split()[0] for line in lines]
        assert genera == sorted(genera, key=lambda s: (len(s), s))

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "-g", "2", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["all_ok"] is True
        assert any(c["name"] == "initial-ideal" for c in payload["checks"])

    def test_single_genus_accepted(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "-g", "2")
        assert code == EXIT_OK

    def test_bad_range_is_usage(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "-g", "3..1")
        assert code == EXIT_USAGE


class TestCache:
    def test_round_trip_bit_exact(self, tmp_path):
        gb = relation_ideal_basis(3)
        save_cached_basis(tmp_path, gb)
        assert (tmp_path / "ideal_g3.json").exists()
        loaded = load_cached_basis(tmp_path, 3)
        assert loaded is not None
        assert loaded.elements == gb.elements
        assert loaded.genus == 3
        assert loaded.order_tag == gb.order_tag

    def test_missing_file(self, tmp_path):
        assert load_cached_basis(tmp_path, 4) is None

    def test_corrupt_json_rejected(self, tmp_path):
        gb = relation_ideal_basis(2)
        path = save_cached_basis(tmp_path, gb)
        path.write_text("{ not json", encoding="utf-8")
        assert load_cached_basis(tmp_path, 2) is None

    def test_wrong_content_rejected(self, tmp_path):
        gb = relation_ideal_basis(2)
        path = save_cached_basis(tmp_path, gb)
        payload = json.loads(path.read_text(encoding="utf-8"))
        payload["elements"] = ["a", "b"]
        path.write_text(json.dumps(payload), encoding="utf-8")
        # basis of the wrong ideal: fails revalidation, never trusted
        assert load_cached_basis(tmp_path, 2) is None

    def test_tampered_element_fails_spolynomial_check(self, tmp_path):
        gb = relation_ideal_basis(2)
        path = save_cached_basis(tmp_path, gb)
        payload = json.loads(path.read_text(encoding="utf-8"))
        payload["elements"][-1] = "a^2 + c"
        path.write_text(json.dumps(payload), encoding="utf-8")
        assert load_cached_basis(tmp_path, 2) is None

    def test_version_mismatch_rejected(self, tmp_path):
        gb = relation_ideal_basis(2)
        path = save_cached_basis(tmp_path, gb)
        payload = json.loads(path.read_text(encoding="utf-8"))
        payload["version"] = 999
        path.write_text(json.dumps(payload), encoding="utf-8")
        assert load_cached_basis(tmp_path, 2) is None

    def test_cli_populates_and_reuses_cache(self, tmp_path, capsys):
        code, first, _ = run_cli(
            capsys, "groebner", "-g", "2", "--cache-dir", str(tmp_path),
            "--format", "json",
        )
        assert code == EXIT_OK
        assert (tmp_path / "ideal_g2.json").exists()
        code, second, _ = run_cli(
            capsys, "groebner", "-g", "2", "--cache-dir", str(tmp_path),
            "--format", "json",
        )
        assert code == EXIT_OK
        assert first == second

    def test_cli_recovers_from_corrupt_cache(self, tmp_path, capsys):
        run_cli(capsys, "groebner", "-g", "2", "--cache-dir", str(tmp_path))
        (tmp_path / "ideal_g2.json").write_text("garbage", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "nf", "-g", "2", "--poly", "a^2", "--cache-dir", str(tmp_path)
        )
        assert code == EXIT_OK
        assert out.strip() == "-b"


class TestEntryPoint:
    def test_python_dash_m(self):
        src = Path(__file__).resolve().parents[1] / "src"
        env = dict(os.environ)
        env["PYTHONPATH"] = str(src) + os.pathsep + env.get("PYTHONPATH", "")
        proc = subprocess.run(
            [sys.executable, "-m", "newstead", "nf", "-g", "2", "--poly", "a^2"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "-b"
