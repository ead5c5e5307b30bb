import json

from beauville.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestReports:
    def test_atlas_validate(self, capsys):
        code, out = run(capsys, "atlas", "validate")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == "beauville-report-v1"
        assert doc["pass"] is True
        assert set(doc["result"]) == set("ABCDEFGHIJKLMN")

    def test_atlas_export(self, capsys):
        code, out = run(capsys, "atlas", "export", "--map", "A")
        assert code == 0
        assert out.startswith("beauville-map v1")
        from beauville.maps import map_from_text

        assert map_from_text(out).n == 14

    def test_compose(self, capsys):
        code, out = run(capsys, "compose", "L(2)M")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["degree"] == 210
        assert doc["result"]["w_cycles"] == [1, 12, 14, 26, 42, 57, 58]
        assert doc["result"]["prime_set"] == [2, 3, 7, 13, 19, 29]

    def test_compose_deterministic(self, capsys):
        _, out1 = run(capsys, "compose", "B(3)C")
        _, out2 = run(capsys, "compose", "B(3)C")
        assert out1 == out2

    def test_construct(self, capsys):
        code, out = run(capsys, "construct", "--r", "0", "--s", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["degree"] == 294
        assert doc["result"]["prime"] == 17

    def test_certify_single(self, capsys):
        code, out = run(capsys, "certify", "--r", "7", "--s", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["pass"] is True
        assert doc["result"][0]["n"] == 329
        assert doc["result"][0]["verified"] is True

    def test_certify_all_minimal(self, capsys):
        code, out = run(capsys, "certify", "--all-minimal")
        assert code == 0
        doc = json.loads(out)
        assert [entry["n"] for entry in doc["result"]] == [
            294, 589, 394, 367, 396, 439, 510, 329, 540, 457, 430, 459, 432, 447,
        ]
        assert all(entry["verified"] for entry in doc["result"])

    def test_certify_jobs_parallel_matches_serial(self, capsys):
        code1, out1 = run(capsys, "certify", "--all-minimal")
        code2, out2 = run(capsys, "certify", "--all-minimal", "--jobs", "2")
        assert code1 == code2 == 0
        assert out1 == out2  # plan-ordered, byte-deterministic

    def test_min_degree(self, capsys):
        code, out = run(capsys, "min-degree", "--g-max", "2", "--count-max", "12")
        assert code == 0
        assert json.loads(out)["result"]["n"] == 168

    def test_frobenius(self, capsys):
        code, out = run(capsys, "frobenius", "--table", "s3", "--classes", "2A,2A,3A")
        assert code == 0
        assert json.loads(out)["result"]["count"] == 6

    def test_cover(self, capsys):
        code, out = run(capsys, "cover", "--r", "0", "--s", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["tau"][0] % 4 == 0

    def test_lift(self, capsys):
        code, out = run(capsys, "lift", "--r", "0", "--s", "3", "--p", "2", "--t1", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["dims1"] != doc["result"]["dims2"]

    def test_lift_from_certificate_file(self, tmp_path, capsys):
        # a pair built with a larger stock exposes two shared handles
        code = main(["certify", "--r", "0", "--s", "6", "--out", str(tmp_path / "c.json")])
        assert code == 0
        cert = json.loads((tmp_path / "c.json").read_text())["result"][0]["certificate"]
        (tmp_path / "pair.json").write_text(json.dumps(cert))
        code, out = run(
            capsys, "lift", "--p", "3", "--t1", "2", "--pair", str(tmp_path / "pair.json")
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["n"] == 336
        assert doc["result"]["dims1"] != doc["result"]["dims2"]

    def test_atlas_validate_text(self, capsys):
        code, out = run(capsys, "atlas", "validate", "--format", "text")
        assert code == 0
        assert out.splitlines()[0] == "map A: PASS"


class TestErrors:
    def test_parse_error_exit_2(self, capsys):
        assert main(["compose", "A(9)B"]) == 2

    def test_invalid_plan_exit_2(self, capsys):
        assert main(["construct", "--r", "6", "--s", "3", "--variant", "standard"]) == 2

    def test_small_case_rejection_names_reason(self, capsys):
        code = main(["construct", "--r", "4", "--variant", "small_n"])
        err = capsys.readouterr().err
        assert code == 2
        assert "divisible by" in err

    def test_usage_error(self, capsys):
        assert main(["no-such-command"]) == 2

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code = main(["min-degree", "--out", str(target)])
        assert code == 0
        assert json.loads(target.read_text())["result"]["n"] == 168
