import json

import pytest

from quasiline import encode_graph6, parse_graph6
from quasiline.cli import run_cli
from quasiline.forbidden import build_pattern, corollary2_graph, sized
from quasiline.oracle import enumerate_graphs, line_graph, random_graph
from quasiline.verdict import Verdict, verdict_from_dict, verify_verdict

VERDICT_KEYS = {"property", "holds", "certificate", "input_echo"}


def g6(g) -> bytes:
    return encode_graph6(g) + b"\n"


def test_two_cliques_on_p4_edges():
    code, out, err = run_cli(["check", "two-cliques", "--format", "edges", "--json"], b"0 1\n1 2\n2 3")
    assert code == 0, err
    verdict = json.loads(out)
    assert set(verdict) == VERDICT_KEYS
    assert verdict["holds"] is True
    assert verdict["certificate"] == {"side1": [0, 1], "side2": [2, 3]}


def test_quasi_line_on_claw_edges():
    code, out, _ = run_cli(["check", "quasi-line", "--format", "edges", "--json"], b"0 1\n0 2\n0 3")
    assert code == 1
    verdict = json.loads(out)
    assert verdict["holds"] is False
    assert verdict["certificate"] == {"apex": 0, "witness": [1, 2, 3]}


def test_gen_antihole3():
    assert run_cli(["gen", "pattern", "--expr", "antihole(3)"]) == (0, "B?\n", "")


def test_human_output():
    code, out, _ = run_cli(["check", "two-cliques"], b"Bw\n")
    assert code == 0
    assert out == "two-cliques: yes\nside1: 0 1 2\nside2: -\n"
    code, out, _ = run_cli(["check", "two-cliques"], b"B?\n")
    assert code == 1
    assert out.startswith("two-cliques: no\n")


def test_color_only_when_requested():
    _, out, _ = run_cli(["check", "two-cliques"], b"Bw\n", color=True)
    assert "\x1b[32m" in out
    _, out, _ = run_cli(["check", "two-cliques"], b"Bw\n")
    assert "\x1b" not in out


def test_verdicts_reverify_over_corpus(tmp_path):
    graphs = list(enumerate_graphs(4)) + [random_graph(9, p, s) for s in range(20) for p in (0.3, 0.7, 0.9)]
    path = tmp_path / "v.json"
    for g in graphs:
        for prop in ("two-cliques", "quasi-line"):
            code, out, err = run_cli(["check", prop, "--json"], g6(g))
            assert code in (0, 1), err
            path.write_text(out)
            vcode, vout, verr = run_cli(["verify", "--certificate", str(path)])
            assert vcode == 0, (vout, verr)
            vcode, _, _ = run_cli(["verify", "--certificate", str(path), "--in", "-"], g6(g))
            assert vcode == 0


def test_verify_rejects_tampered_certificate(tmp_path):
    _, out, _ = run_cli(["check", "two-cliques", "--json"], b"Bw\n")
    data = json.loads(out)
    data["input_echo"] = "B?"  # claim the cover for the empty graph instead
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, vout, _ = run_cli(["verify", "--certificate", str(path)])
    assert code == 1 and vout.startswith("invalid")


def test_verify_detects_input_mismatch(tmp_path):
    _, out, _ = run_cli(["check", "two-cliques", "--json"], b"Bw\n")
    path = tmp_path / "v.json"
    path.write_text(out)
    code, vout, _ = run_cli(["verify", "--certificate", str(path), "--in", "-"], b"B?\n")
    assert code == 1 and "differs" in vout


@pytest.mark.parametrize("payload", ["not json", '{"property": "two-cliques"}', '{"property": "x", "holds": true, "certificate": {}, "input_echo": "@"}'])
def test_verify_malformed(tmp_path, payload):
    path = tmp_path / "v.json"
    path.write_text(payload)
    code, _, err = run_cli(["verify", "--certificate", str(path)])
    assert code == 2 and err.startswith("error:")


def test_parallel_output_identical():
    g = line_graph(random_graph(40, 0.15, 3))
    a = run_cli(["check", "quasi-line", "--json"], g6(g))
    b = run_cli(["check", "quasi-line", "--json", "--parallel"], g6(g))
    assert a == b
    g = random_graph(30, 0.5, 1)
    assert run_cli(["check", "quasi-line"], g6(g)) == run_cli(["check", "quasi-line", "--parallel"], g6(g))


def test_find_pattern(tmp_path):
    host = build_pattern(sized("antihole", 7))
    expr = "join(empty(2),union(complete(2),complete(1)))"
    code, out, _ = run_cli(["find", "pattern", "--expr", expr, "--json"], g6(host))
    assert code == 0
    verdict = json.loads(out)
    assert verdict["property"] == "induced-pattern" and verdict["holds"]
    path = tmp_path / "v.json"
    path.write_text(out)
    assert run_cli(["verify", "--certificate", str(path)])[0] == 0

    code, out, _ = run_cli(["find", "pattern", "--expr", "cycle(5)", "--json"], g6(build_pattern(sized("cycle", 7))))
    assert code == 1
    assert json.loads(out)["certificate"]["embedding"] is None
    path.write_text(out)
    assert run_cli(["verify", "--certificate", str(path)])[0] == 0


def test_find_corollary2():
    code, out, _ = run_cli(["find", "corollary2", "--json"], g6(build_pattern(corollary2_graph())))
    assert code == 1
    report = json.loads(out)
    assert report["implied_quasi_line"] is False
    assert "corollary2_graph" in [f["pattern"] for f in report["found"]]
    code, out, _ = run_cli(["find", "corollary2"], g6(build_pattern(sized("cycle", 6))))
    assert code == 0 and "implied quasi-line: yes" in out


def test_lemma1_success():
    code, out, _ = run_cli(["lemma1", "--v", "0", "--w", "2", "--format", "edges"], b"0 1\n1 2\n2 3\n")
    assert code == 0
    assert json.loads(out) == {"v": 0, "w": 2, "B": [], "C": [3], "A1": [1], "A2": [], "A3": []}


def test_lemma1_structured_failures():
    code, out, _ = run_cli(["lemma1", "--v", "0", "--w", "1"], g6(build_pattern(sized("complete", 4))))
    assert code == 1 and "G is complete" in json.loads(out)["error"]
    code, out, _ = run_cli(["lemma1", "--v", "0", "--w", "2"], g6(build_pattern(sized("cycle", 5))))
    assert code == 1 and sorted(json.loads(out)["witness"]) == [0, 1, 2, 3, 4]
    code, _, err = run_cli(["lemma1", "--v", "0", "--w", "1"], g6(build_pattern(sized("path", 4))))
    assert code == 2 and "adjacent" in err


def test_cross_validate_clean():
    code, out, _ = run_cli(["cross-validate", "--max-n", "4", "--random", "30", "--size", "8", "--p", "0.8", "--seed", "5"])
    assert code == 0
    assert "graphs checked: 106" in out  # 1 + 1 + 2 + 8 + 64 exhaustive, 30 random
    assert "theorem: 0 mismatches" in out


def test_cross_validate_bounds():
    assert run_cli(["cross-validate", "--max-n", "9"])[0] == 2
    assert run_cli(["cross-validate", "--max-n", "2", "--random", "1", "--size", "40"])[0] == 2


def test_gen_random_and_formats():
    code, out, _ = run_cli(["gen", "random", "--n", "10", "--p", "0.5", "--seed", "42"])
    assert code == 0 and parse_graph6(out.strip()) == random_graph(10, 0.5, 42)
    code, out, _ = run_cli(["gen", "pattern", "--expr", "path(3)", "--out-format", "edges"])
    assert out == "0 1\n1 2\n"
    code, out, _ = run_cli(["gen", "pattern", "--expr", "path(2)", "--out-format", "json"])
    assert json.loads(out) == {"n": 2, "edges": [[0, 1]]}
    code, out, _ = run_cli(["gen", "pattern", "--expr", "path(2)", "--out-format", "dot"])
    assert "0 -- 1;" in out


def test_gen_line_graph_from_file(tmp_path):
    src = tmp_path / "claw.txt"
    src.write_text("0 1\n0 2\n0 3\n")
    code, out, _ = run_cli(["gen", "line-graph", "--in", str(src), "--format", "edges"])
    assert code == 0 and out == "Bw\n"


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["check", "two-cliques", "--bogus"], b"Bw"),
        (["check"], b""),
        (["check", "two-cliques"], b"B w"),
        (["check", "two-cliques"], b"D"),
        (["check", "two-cliques"], b"Bw\nBw\n"),
        (["check", "two-cliques", "--format", "edges"], b"0 0"),
        (["check", "two-cliques", "--in", "/nonexistent/file"], b""),
        (["find", "pattern", "--expr", "antihole(4)"], b"Bw"),
        (["gen", "random", "--n", "3", "--p", "2", "--seed", "1"], b""),
    ],
)
def test_usage_errors_exit_2(argv, stdin):
    code, out, err = run_cli(argv, stdin)
    assert code == 2
    assert err.startswith("error:") and err.count("\n") == 1


def test_help_exits_zero():
    code, out, _ = run_cli(["--help"])
    assert code == 0 and "usage:" in out


def test_verdict_schema_helpers():
    v = Verdict("two-cliques", True, {"side1": [0], "side2": []}, "@")
    assert verdict_from_dict(v.to_dict()) == v
    assert verify_verdict(v)
