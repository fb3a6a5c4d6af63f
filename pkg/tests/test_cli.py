"""CLI surface: subcommand behavior, exit codes, JSON/CSV output."""

import csv
import json

from gpedim import Certificate, from_json
from gpedim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dist_json(capsys):
    code, out, _ = run(capsys, "dist", "--n", "20", "--anchor", "u0", "--edge", "u:5", "--json")
    assert code == 0
    assert json.loads(out) == {"distance": 4}


def test_dist_negative_index_and_human_output(capsys):
    code, out, _ = run(capsys, "dist", "--n", "20", "--anchor", "u0", "--edge", "u:-15")
    assert code == 0 and "= 4" in out  # u:-15 reduces to u:5


def test_dim_exact_json(capsys):
    code, out, _ = run(capsys, "dim", "--n", "9", "--exact", "--max-k", "4", "--json")
    assert code == 0
    assert json.loads(out) == {"edge_dimension": 3}


def test_dim_exact_exceeds_max(capsys):
    code, out, _ = run(capsys, "dim", "--n", "9", "--exact", "--max-k", "2", "--json")
    assert code == 1
    assert json.loads(out)["edge_dimension"] is None


def test_dim_certificate_file(capsys, tmp_path):
    cert_path = tmp_path / "cert.json"
    code, out, _ = run(
        capsys, "dim", "--n", "24", "--sweep", "--cert", str(cert_path), "--json"
    )
    assert code == 0
    assert json.loads(out)["dimension"] == 4
    cert = Certificate.from_json(cert_path.read_text())
    assert cert.n == 24 and cert.sweep_done


def test_dim_below_eleven_exits_two(capsys):
    code, _, err = run(capsys, "dim", "--n", "10")
    assert code == 2 and "edge_dimension_exact" in err


def test_check_resolving_and_not(capsys):
    code, out, _ = run(capsys, "check", "--n", "8", "--set", "u0,u1,u2,v3")
    assert code == 0 and "resolving" in out
    code, out, _ = run(capsys, "check", "--n", "8", "--set", "u0,u1", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["resolving"] is False and "witness" in doc


def test_repr_json(capsys):
    code, out, _ = run(
        capsys, "repr", "--n", "8", "--set", "u0,u1,u2,v3", "--edge", "u:0", "--json"
    )
    assert code == 0
    assert json.loads(out) == {"representation": [0, 0, 1, 2]}


def test_verify_pass_and_ordering(capsys):
    code, out, _ = run(
        capsys, "verify", "--claim", "tetrad", "--from", "19", "--to", "23", "--workers", "1"
    )
    assert code == 0
    ns = [int(line.split(":")[0][2:]) for line in out.strip().splitlines()]
    assert ns == list(range(19, 24))


def test_verify_no_triad_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--claim", "no-triad", "--from", "11", "--to", "13",
        "--workers", "1", "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["all_pass"] and [r["n"] for r in doc["results"]] == [11, 12, 13]


def test_verify_workers_parallel(capsys):
    code, out, _ = run(
        capsys, "verify", "--claim", "tetrad", "--from", "19", "--to", "22", "--workers", "2"
    )
    assert code == 0 and out.count("pass") == 4


def test_verify_range_validation(capsys):
    code, _, err = run(capsys, "verify", "--claim", "equal-sets", "--from", "50", "--to", "60")
    assert code == 2 and "n >= 100" in err
    code, _, err = run(capsys, "verify", "--claim", "no-triad", "--from", "399", "--to", "401")
    assert code == 2 and "budget" in err


def test_verify_equal_sets_runs(capsys):
    code, out, _ = run(
        capsys, "verify", "--claim", "equal-sets", "--from", "100", "--to", "102",
        "--workers", "1",
    )
    assert code == 0 and out.count("pass") == 3


def test_verify_csv(capsys, tmp_path):
    path = tmp_path / "verify.csv"
    code, _, _ = run(
        capsys, "verify", "--claim", "tetrad", "--from", "19", "--to", "21",
        "--workers", "1", "--csv", str(path),
    )
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["claim", "n", "pass", "detail"] and len(rows) == 4


def test_witness_common_index(capsys):
    code, out, _ = run(capsys, "witness", "--n", "102", "--a", "1", "--b", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["sporadic"] is False and isinstance(doc["common_index"], int)


def test_witness_sporadic_all_shapes(capsys):
    code, out, _ = run(capsys, "witness", "--n", "103", "--a", "1", "--b", "49", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["sporadic"] is True and len(doc["witnesses"]) == 8


def test_export_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--n", "11", "--format", "json")
    assert code == 0
    assert from_json(out).n == 11
    path = tmp_path / "graph.dot"
    code, _, _ = run(capsys, "export", "--n", "5", "--k", "2", "--format", "dot",
                     "--output", str(path))
    assert code == 0
    text = path.read_text()
    assert text.count("--") == 15


def test_bench_determinism_and_gate(capsys):
    code1, out1, _ = run(capsys, "bench", "--n", "13", "--queries", "40", "--seed", "7", "--json")
    code2, out2, _ = run(capsys, "bench", "--n", "13", "--queries", "40", "--seed", "7", "--json")
    assert code1 == code2 == 0
    r1, r2 = json.loads(out1)[0], json.loads(out2)[0]
    assert r1["n"] == r2["n"] == 13 and r1["queries"] == 40


def test_bench_below_formula_domain(capsys):
    code, _, err = run(capsys, "bench", "--n", "12", "--queries", "10")
    assert code == 2 and "n >= 13" in err


def test_bench_csv_samples(capsys, tmp_path):
    path = tmp_path / "bench.csv"
    code, _, _ = run(capsys, "bench", "--n", "13", "--queries", "25", "--seed", "3",
                     "--csv", str(path))
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0][:4] == ["n", "query", "anchor", "edge"] and len(rows) == 26


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "dist", "--n", "20", "--anchor", "w0", "--edge", "u:1")[0] == 2
    assert run(capsys, "dist", "--n", "20", "--anchor", "u0", "--edge", "q:1")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "dim", "--n", "6")[0] == 2  # k < n/2 violated
