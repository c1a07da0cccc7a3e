import json

import pytest

from numsem import cli
from numsem.errors import EXIT_BUDGET, EXIT_DOMAIN, EXIT_FAIL, EXIT_INPUT, EXIT_OK


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(argv, capsys):
    code, out, err = run(argv + ["--json"] if "--json" not in argv else argv,
                         capsys)
    return code, json.loads(out)


def test_info(capsys):
    code, report = run_json(["--json", "info", "3,5,7"], capsys)
    assert code == EXIT_OK
    assert report["status"] == "ok"
    assert report["tool_version"].startswith("numsem ")
    p = report["payload"]
    assert p["min_gens"] == [3, 5, 7]
    assert p["frobenius"] == 4 and p["genus"] == 3
    assert p["type"] == 2 and p["pf"] == [2, 4]


def test_info_gcd_error(capsys):
    code, report = run_json(["--json", "info", "2,4"], capsys)
    assert code == EXIT_INPUT
    assert report["status"] == "error"
    assert report["payload"]["error"] == "GcdNotOne"


def test_domain_error_exit(capsys):
    code, report = run_json(["--json", "apery", "3,5,7", "4"], capsys)
    assert code == EXIT_DOMAIN
    assert report["payload"]["error"] == "NotAMember"


def test_budget_error_exit(capsys):
    code, report = run_json(["--json", "tree", "count", "--genus", "41"], capsys)
    assert code == EXIT_BUDGET
    assert report["payload"]["error"] == "BudgetExceeded"


def test_tree_count_csv(capsys):
    code, out, _ = run(["--csv", "tree", "count", "--genus", "3",
                        "--jobs", "1"], capsys)
    assert code == EXIT_OK
    assert out.splitlines() == ["genus,count", "0,1", "1,1", "2,2", "3,4"]


def test_tree_list(capsys):
    code, report = run_json(["--json", "tree", "list", "--genus", "3"], capsys)
    assert sorted(report["payload"]["semigroups"]) == \
        [[2, 7], [3, 4], [3, 5, 7], [4, 5, 6, 7]]


def test_quot_bare_form(capsys):
    code, report = run_json(["--json", "quot", "3,5,7", "2"], capsys)
    assert code == EXIT_OK
    assert report["payload"]["semigroup"]["min_gens"] == [3, 4, 5]


def test_quot_subcommands(capsys):
    code, report = run_json(["--json", "quot", "doubles", "2,3", "--fmax", "9"],
                            capsys)
    assert code == EXIT_OK
    assert report["payload"]["count"] == 8
    code, report = run_json(["--json", "quot", "decompose", "4,6,7,9"], capsys)
    comps = [tuple(c["min_gens"]) for c in report["payload"]["components"]]
    assert sorted(comps) == [(2, 7), (3, 4)]


def test_pm_commands(capsys):
    code, report = run_json(["--json", "pm", "solve", "4", "11", "1"], capsys)
    assert report["payload"]["semigroup"]["min_gens"] == [3, 7, 11]
    code, report = run_json(["--json", "pm", "interval", "11/4", "11/3"], capsys)
    assert report["payload"]["semigroup"]["min_gens"] == [3, 7, 11]
    code, report = run_json(["--json", "pm", "bezout", "11/4", "11/3"], capsys)
    assert report["payload"]["terms"] == ["11/4", "3/1", "7/2", "11/3"]
    code, report = run_json(["--json", "pm", "recognize", "4,6,7"], capsys)
    assert report["payload"]["status"] == "no"


def test_closure_and_d3_and_fact(capsys):
    _, report = run_json(["--json", "closure", "arf", "3,5"], capsys)
    assert report["payload"]["closure"]["frobenius"] == 4
    _, report = run_json(["--json", "closure", "sat", "2,7"], capsys)
    assert report["payload"]["closure"]["frobenius"] == 5
    _, report = run_json(["--json", "d3", "psym", "3", "5", "7"], capsys)
    assert report["payload"]["delta"] == 19
    _, report = run_json(["--json", "d3", "rij", "3", "5", "7"], capsys)
    assert report["payload"]["r31"] == 3
    _, report = run_json(["--json", "d3", "fermat", "2", "3", "5", "3"], capsys)
    assert report["payload"]["not_minimally_generated_by_powers"] is True
    _, report = run_json(["--json", "fact", "lengths", "3,5,7", "12"], capsys)
    assert report["payload"]["lengths"] == [2, 4]
    _, report = run_json(["--json", "fact", "catenary", "3,5,7"], capsys)
    assert report["payload"]["catenary_degree"] == 4
    _, report = run_json(["--json", "fact", "omega", "2,3"], capsys)
    assert report["payload"]["omega"] == 3
    _, report = run_json(["--json", "fact", "delta", "3,5,7", "--bound", "50"],
                         capsys)
    assert report["payload"]["delta_set"] == [2]
    _, report = run_json(["--json", "fact", "probe", "2,3",
                          "--invariant", "catenary", "--window", "30",
                          "--periods", "2,3"], capsys)
    assert len(report["payload"]["entries"]) == 2
    _, report = run_json(["--json", "pres", "minimal", "3,5,7"], capsys)
    assert report["payload"]["betti"] == [10, 12, 14]
    assert len(report["payload"]["relations"]) == 3
    _, report = run_json(["--json", "pres", "glue", "2,3", "2,3", "4", "9"],
                         capsys)
    assert report["payload"]["semigroup"]["min_gens"] == [8, 12, 18, 27]


def test_corpus(tmp_path, capsys):
    corpus = tmp_path / "c.txt"
    corpus.write_text("2,3\n3,5,7\n# comment\n\n19,23,29,31,37\n")
    code, report = run_json(["--json", "corpus", str(corpus),
                             "--suite", "wilf"], capsys)
    assert code == EXIT_OK
    assert report["payload"]["total"] == 3
    assert report["payload"]["failed"] == 0
    code, report = run_json(["--json", "corpus", str(corpus),
                             "--suite", "presentation-card"], capsys)
    assert code == EXIT_OK
    rows = {tuple(r["gens"]): r for r in report["payload"]["results"]}
    assert rows[(19, 23, 29, 31, 37)]["detail"]["exceeds_quadratic_bound"]


def test_corpus_empty_and_missing(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code, report = run_json(["--json", "corpus", str(empty), "--suite", "wilf"],
                            capsys)
    assert code == EXIT_OK and report["payload"]["total"] == 0
    code, report = run_json(["--json", "corpus", str(tmp_path / "nope.txt"),
                             "--suite", "wilf"], capsys)
    assert code == EXIT_INPUT
    assert report["payload"]["error"] == "FileNotFound"
    bad = tmp_path / "bad.txt"
    bad.write_text("2,3\nnot-numbers\n")
    code, report = run_json(["--json", "corpus", str(bad), "--suite", "wilf"],
                            capsys)
    assert code == EXIT_INPUT
    assert report["payload"]["error"] == "ParseError"
    assert "line 2" in report["payload"]["message"]


def test_payload_roundtrip_and_determinism(capsys):
    _, rep1 = run_json(["--json", "pres", "minimal", "4,5,6"], capsys)
    _, rep2 = run_json(["--json", "pres", "minimal", "4,5,6"], capsys)
    assert rep1["payload"] == rep2["payload"]
    blob = json.dumps(rep1["payload"], sort_keys=True)
    assert json.loads(blob) == rep1["payload"]


def test_counts_independent_of_jobs(capsys):
    _, rep1 = run_json(["--json", "tree", "count", "--genus", "14",
                        "--jobs", "1"], capsys)
    _, rep2 = run_json(["--json", "tree", "count", "--genus", "14",
                        "--jobs", "2"], capsys)
    assert rep1["payload"] == rep2["payload"]


def test_execute_api():
    req = cli.CommandRequest(path="info", params={"gens": "2,5"},
                             output_format="table")
    report = cli.execute(req)
    assert report.status == "ok"
    assert report.payload["frobenius"] == 3
    assert report.elapsed_ms >= 0
