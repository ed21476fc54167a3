import json

import pytest

from cableslopes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


class TestGoldenOutputs:
    def test_interval(self, capsys):
        code, out, _ = run(capsys, "interval", "--p", "2", "--q", "3",
                           "--tau", "1/2")
        assert code == 0
        assert out == "[-3/2,-1] (T), (-3/2,-1) (T~)"

    def test_torus(self, capsys):
        code, out, _ = run(capsys, "torus", "--p", "3", "--q", "5")
        assert code == 0
        assert out == "[-inf,7] regular; (-inf,7) strong"

    def test_cable(self, capsys):
        code, out, _ = run(capsys, "cable", "--p", "5", "--q", "2",
                           "--input", "[-inf,1]", "--mode", "regular")
        assert code == 0
        assert out == "[-inf,7] (equals)"

    def test_jn_true_with_witness(self, capsys):
        code, out, _ = run(capsys, "jn", "--J", "", "--b", "0",
                           "--gamma", "2/3", "--tau", "1/2,-3/2")
        assert code == 0
        assert out.startswith("true")
        assert "N=2" in out and "A=1" in out

    def test_jn_false(self, capsys):
        code, out, _ = run(capsys, "jn", "--J", "2", "--b", "0",
                           "--gamma", "2/3", "--tau", "1/2,-3/2")
        assert code == 0
        assert out == "false"

    def test_jn_b_out_of_window(self, capsys):
        code, out, _ = run(capsys, "jn", "--J", "", "--b", "5",
                           "--gamma", "1/2", "--tau", "1/2,1/2")
        assert code == 0
        assert out == "false"

    def test_bezout(self, capsys):
        code, out, _ = run(capsys, "bezout", "--p", "5", "--q", "2")
        assert code == 0
        assert out == "p=5 q=2 r=3 s=-1 gamma=1/2"

    def test_ray_union(self, capsys):
        code, out, _ = run(capsys, "ray-union", "--p", "2", "--q", "3",
                           "--tau", "1/2", "--direction", "geq")
        assert code == 0
        assert out == "(-inf,-1]"


class TestJsonFormat:
    def test_schema_keys(self, capsys):
        code, out, _ = run(capsys, "interval", "--p", "2", "--q", "3",
                           "--tau", "1/2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"command", "inputs", "result", "refs"}
        assert doc["command"] == "interval"
        assert doc["result"]["set"] == ["[-3/2,-1]"]

    def test_cable_json_has_exactness(self, capsys):
        code, out, _ = run(capsys, "cable", "--p", "5", "--q", "2",
                           "--input", "[-inf,1]", "--mode", "regular",
                           "--format", "json")
        doc = json.loads(out)
        assert doc["result"]["exactness"] == "equals"
        assert doc["result"]["set"] == ["[-inf,7]"]

    def test_jn_json_witness(self, capsys):
        code, out, _ = run(capsys, "jn", "--b", "0", "--gamma", "2/3",
                           "--tau", "1/2,-3/2", "--format", "json")
        doc = json.loads(out)
        assert doc["result"]["realizable"] is True
        assert doc["result"]["witness"]["N"] == 2


class TestExitCodes:
    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["interval", "--p", "2", "--q", "3", "--frobnicate"])
        assert exc.value.code == 2

    def test_domain_error(self, capsys):
        code, out, err = run(capsys, "bezout", "--p", "2", "--q", "4")
        assert code == 3
        assert "coprime" in err

    def test_malformed_rational(self, capsys):
        code, _, err = run(capsys, "interval", "--p", "2", "--q", "3",
                           "--tau", "0.5")
        assert code == 3

    def test_oracle_agreement(self, capsys):
        code, out, _ = run(capsys, "oracle", "--p", "2", "--q", "3",
                           "--tau", "1/2", "--max-denominator", "10")
        assert code == 0
        assert "mismatches 0" in out
