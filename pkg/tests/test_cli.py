import json
import subprocess
import sys

import pytest

from bwbdirac import cli
from bwbdirac.config import Config, load_config, parse_config
from bwbdirac.errors import DomainError
from bwbdirac.index import IndexResult
from bwbdirac.rootsys import Weight


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_index_json(capsys):
    code, out, _ = run(["index", "--type", "A1", "--mu", "3"], capsys)
    assert code == 0
    assert json.loads(out) == {"zero": False, "sign": 1, "lambda": [3], "length": 0,
                               "dimension": 4}
    assert out.strip() == json.dumps(json.loads(out), sort_keys=True)


def test_index_oracle_and_table(capsys):
    code, out, _ = run(["index", "--type", "A2", "--mu=-2,1", "--oracle", "--format", "table"],
                       capsys)
    assert code == 0 and out.strip() == "-[V(0,0)] (length 1, dim 1)"


def test_verify_summary(capsys):
    code, out, _ = run(["verify", "--type", "A2", "--box", "3"], capsys)
    assert code == 0
    assert out.strip().splitlines()[-1] == "checked 49 weights: all match"


def test_verify_reports_mismatch(capsys, monkeypatch):
    real = cli.bwb_index

    def broken(rs, mu):
        if mu == Weight.of(-2, 1):
            return IndexResult.nothing()
        return real(rs, mu)

    monkeypatch.setattr(cli, "bwb_index", broken)
    code, out, _ = run(["verify", "--type", "A2", "--box", "2"], capsys)
    assert code == 3
    assert "mismatch at mu=[-2, 1]" in out
    assert out.strip().endswith("checked 25 weights: 1 mismatch")
    code, out, _ = run(["verify", "--type", "A2", "--box", "2", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 3 and [m["mu"] for m in data["mismatches"]] == [[-2, 1]]


def test_exit_codes(capsys):
    code, _, err = run(["index", "--type", "A1", "--mu", "0.5"], capsys)
    assert code == 2 and "weight must be integral" in err
    code, _, err = run(["index", "--type", "A1", "--mu", "3", "--bogus"], capsys)
    assert code == 1 and "usage" in err
    assert run(["index", "--mu", "3"], capsys)[0] == 1
    assert run([], capsys)[0] == 1
    assert run(["frobnicate"], capsys)[0] == 1
    assert run(["index", "--type", "Q7", "--mu", "3"], capsys)[0] == 2
    assert run(["dirac", "--type", "A3", "--mu", "0,0,0"], capsys)[0] == 2


def test_internal_failure_exit_code(capsys, monkeypatch):
    from bwbdirac.errors import InternalConsistencyError

    def boom(*a, **k):
        raise InternalConsistencyError("two shell members contribute")

    monkeypatch.setattr(cli, "oracle_index", boom)
    code, _, err = run(["index", "--type", "A1", "--mu", "3", "--oracle"], capsys)
    assert code == 3 and "internal consistency" in err


def test_other_commands(capsys):
    code, out, _ = run(["rootsys", "--type", "B2", "--root-coords"], capsys)
    data = json.loads(out)
    assert code == 0 and data["rho"] == ["3/2", 2] and data["weyl_order"] == 8
    code, out, _ = run(["pairing", "--type", "A2", "--lambda", "0,0", "--mu=-2,1"], capsys)
    assert json.loads(out)["difference"] == -1
    code, out, _ = run(["supertrace", "--type", "A1", "--mu", "3", "--theta", "0.7"], capsys)
    rows = json.loads(out)
    assert [r["t"] for r in rows] == [0.1, 1.0, 10.0]
    assert all(abs(r["value_re"] - 0.5199921653692627) < 1e-12 for r in rows)
    code, out, _ = run(["dirac", "--type", "A1", "--mu", "3", "--lambda", "5"], capsys)
    (entry,) = json.loads(out)
    assert entry["space_dim"] == 2 and entry["scalar"] == "10"
    code, out, _ = run(["dirac", "--type", "A2", "--mu=-2,1"], capsys)
    (entry,) = json.loads(out)
    assert entry["kernel"] == {"dim": 1, "parity": "odd", "degrees": [1]}
    code, out, _ = run(["gh-index", "--type", "A2", "--sub", "1", "--mu", "0,0"], capsys)
    assert json.loads(out)["sign"] == 1
    code, out, _ = run(["eval", "--type", "A2", "--expr", "dim(V[1,1])"], capsys)
    assert json.loads(out) == {"result_kind": "integer", "value": 8}
    code, out, err = run(["eval", "--type", "A2", "--expr", "V[1,@]"], capsys)
    assert code == 2 and "offset 5" in err


def test_output_is_byte_stable():
    argv = [sys.executable, "-m", "bwbdirac", "dirac", "--type", "B2", "--mu=0,-2"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


def test_config_file(tmp_path, monkeypatch, capsys):
    path = tmp_path / "run.cfg"
    path.write_text("# defaults for a sweep\ntype_label = A1\nformat = table\nmatrix_cap = 50\n")
    monkeypatch.setenv("BWBDIRAC_CONFIG", str(path))
    cfg = load_config()
    assert cfg.type_label == "A1" and cfg.matrix_cap == 50 and cfg.kernel_tol == 1e-6
    code, out, _ = run(["index", "--mu", "3"], capsys)
    assert code == 0 and out.startswith("+[V(3)]")


def test_config_validation():
    assert Config().candidate_cap == 10**7
    with pytest.raises(DomainError):
        parse_config("kernel_tol = 2")
    with pytest.raises(DomainError):
        parse_config("nonsense = 1")
    with pytest.raises(DomainError):
        parse_config("matrix_cap = 0")
    with pytest.raises(DomainError):
        parse_config("just words")
    assert parse_config("candidate_cap = 1e5").candidate_cap == 100000
