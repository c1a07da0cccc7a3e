"""Unified command-line entry point and batch corpus runner.

Every subcommand maps to exactly one library operation.  Output defaults to
a plain table; --json wraps the payload in a run report with status, timing
and tool version, --csv emits rows.  Exit codes: 0 ok, 1 failing corpus
checks, 2 input errors, 3 domain errors, 4 budget errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass
from typing import Callable

from . import __version__, core, dim3, factorizations, modular, presentations, \
    quotients, varieties
from .errors import (
    EXIT_FAIL,
    EXIT_OK,
    FileNotFound,
    NumsemError,
    ParseError,
)

TOOL_VERSION = f"numsem {__version__}"


@dataclass(frozen=True)
class CommandRequest:
    path: str  # subcommand path, e.g. "tree count"
    params: dict
    output_format: str  # json | table | csv


@dataclass(frozen=True)
class RunReport:
    status: str  # ok | error
    payload: object
    elapsed_ms: int
    tool_version: str
    exit_code: int


def _gens(text: str) -> core.NumericalSemigroup:
    return core.from_generators(core.parse_generators(text))


# --- handlers ---------------------------------------------------------------------

def _h_info(p):
    s = _gens(p["gens"])
    rep = core.invariant_report(s)
    return {
        "min_gens": list(s.min_gens),
        "multiplicity": rep.multiplicity,
        "embedding_dimension": rep.embedding_dimension,
        "frobenius": rep.frobenius,
        "genus": rep.genus,
        "type": rep.type_,
        "pf": list(rep.pseudo_frobenius),
        "wilf_left": rep.wilf_left,
        "wilf_right": rep.wilf_right,
    }


def _h_gaps(p):
    s = _gens(p["gens"])
    return {
        "min_gens": list(s.min_gens),
        "gaps": list(s.gaps()),
        "fundamental_gaps": list(core.fundamental_gaps(s)),
    }


def _h_apery(p):
    s = _gens(p["gens"])
    ap = core.apery_set(s, p["n"])
    return {"base": ap.base, "witnesses": list(ap.witnesses)}


def _h_pm_solve(p):
    s = modular.solve_prop_modular(p["a"], p["b"], p["c"])
    return {"a": p["a"], "b": p["b"], "c": p["c"],
            "semigroup": s.to_json_dict()}


def _h_pm_interval(p):
    if p["hi"] is None:
        iv = modular.parse_interval(p["lo"])
    else:
        iv = modular.RationalInterval(modular.parse_fraction(p["lo"]),
                                      modular.parse_fraction(p["hi"]))
    s = modular.semigroup_from_interval(iv)
    return {"interval": str(iv), "semigroup": s.to_json_dict()}


def _h_pm_bezout(p):
    f1 = modular.parse_fraction(p["f1"])
    f2 = modular.parse_fraction(p["f2"])
    seq = modular.proper_bezout_sequence(f1, f2)
    return {"ends": [str(f1), str(f2)],
            "terms": [str(t) for t in seq.terms],
            "numerators": list(seq.numerators()),
            "proper": seq.proper}


def _h_pm_recognize(p):
    s = _gens(p["gens"])
    rec = modular.is_proportionally_modular(s)
    return {"min_gens": list(s.min_gens), "status": rec.status,
            "witness": list(rec.witness) if rec.witness else None}


def _h_quot_div(p):
    s = _gens(p["gens"])
    return {"divisor": p["p"],
            "semigroup": quotients.quotient(s, p["p"]).to_json_dict()}


def _h_quot_doubles(p):
    s = _gens(p["gens"])
    f_cap = p["fmax"] if p["fmax"] is not None else 2 * max(s.frobenius, 1) + 4
    ts = quotients.multiples_up_to(s, 2, f_cap)
    return {"fmax": f_cap, "count": len(ts),
            "doubles": [t.to_json_dict() for t in ts]}


def _h_quot_decompose(p):
    s = _gens(p["gens"])
    dec = quotients.irreducible_decomposition(s)
    return {"minimal": dec.minimal,
            "components": [t.to_json_dict() for t in dec.components]}


def _h_tree_count(p):
    census = varieties.enumerate_tree(p["genus"], p["variety"],
                                      jobs=p["jobs"], budget_ms=p["budget_ms"])
    return {"variety": census.predicate_name,
            "counts": [[g, c] for g, c in enumerate(census.counts)]}


def _h_tree_list(p):
    rows = varieties.semigroups_at_genus(p["genus"], p["variety"])
    return {"variety": p["variety"], "genus": p["genus"],
            "semigroups": [list(s.min_gens) for s in rows]}


def _h_closure_arf(p):
    s = _gens(p["gens"])
    return {"input": list(s.min_gens),
            "closure": varieties.arf_closure(s).to_json_dict()}


def _h_closure_sat(p):
    s = _gens(p["gens"])
    return {"input": list(s.min_gens),
            "closure": varieties.saturated_closure(s).to_json_dict()}


def _h_pres_minimal(p):
    s = _gens(p["gens"])
    pres = presentations.minimal_presentation(s)
    stats = presentations.presentation_stats(s)
    return {
        "betti": list(presentations.betti_elements(s)),
        "relations": [[list(u), list(v)] for u, v in pres.relations],
        "cardinality": stats.cardinality,
        "is_complete_intersection": stats.is_complete_intersection,
        "is_unique_minimal": stats.is_unique_minimal,
    }


def _h_pres_betti(p):
    s = _gens(p["gens"])
    graphs = []
    for n in presentations.betti_elements(s):
        g = presentations.betti_graph(s, n)
        graphs.append({"element": n, "vertices": list(g.vertices),
                       "edges": [list(e) for e in g.edges],
                       "components": [list(c) for c in g.components]})
    return {"betti": [g["element"] for g in graphs], "graphs": graphs}


def _h_pres_glue(p):
    s1, s2 = _gens(p["gens1"]), _gens(p["gens2"])
    glued = presentations.gluing(s1, s2, p["lam"], p["mu"])
    stats = presentations.presentation_stats(glued)
    return {"semigroup": glued.to_json_dict(),
            "cardinality": stats.cardinality,
            "is_complete_intersection": stats.is_complete_intersection}


def _h_d3_sym(p):
    s = _gens(p["gens"])
    w = dim3.symmetric3_witness(s)
    return {"symmetric": w is not None,
            "witness": asdict(w) if w else None}


def _h_d3_psym(p):
    r = dim3.pseudo_symmetric3_test(p["n1"], p["n2"], p["n3"])
    return {"is_pseudo_symmetric": r.is_pseudo_symmetric, "delta": r.delta,
            "predicted_frobenius": r.predicted_frobenius,
            "ordering": list(r.ordering) if r.ordering else None}


def _h_d3_rij(p):
    sol = dim3.rij_solve(p["n1"], p["n2"], p["n3"])
    return asdict(sol)


def _h_d3_fermat(p):
    holds = dim3.fermat_check(p["a"], p["b"], p["c"], p["n"])
    return {"a": p["a"], "b": p["b"], "c": p["c"], "n": p["n"],
            "not_minimally_generated_by_powers": holds}


def _h_fact_lengths(p):
    s = _gens(p["gens"])
    data = factorizations.length_data(s, p["n"])
    return {"element": data.element, "lengths": list(data.lengths),
            "delta": list(data.delta)}


def _h_fact_catenary(p):
    s = _gens(p["gens"])
    if p["n"] is None:
        return {"catenary_degree": factorizations.catenary_degree_of_semigroup(s)}
    return {"element": p["n"],
            "catenary_degree": factorizations.catenary_degree(s, p["n"])}


def _h_fact_tame(p):
    s = _gens(p["gens"])
    if p["n"] is None:
        return {"tame_degree": factorizations.tame_degree_of_semigroup(s)}
    return {"element": p["n"], "tame_degree": factorizations.tame_degree(s, p["n"])}


def _h_fact_omega(p):
    s = _gens(p["gens"])
    if p["n"] is None:
        return {"omega": factorizations.omega_of_semigroup(s)}
    return {"element": p["n"], "omega": factorizations.omega_primality(s, p["n"])}


def _h_fact_delta(p):
    s = _gens(p["gens"])
    return {"bound": p["bound"],
            "delta_set": list(factorizations.delta_set_up_to(s, p["bound"]))}


def _h_fact_probe(p):
    s = _gens(p["gens"])
    periods = [int(x) for x in p["periods"].split(",")] if p["periods"] \
        else [g for g in s.min_gens[:2]]
    rep = factorizations.periodicity_probe(s, p["invariant"], p["window"], periods)
    return {"invariant": rep.invariant, "window": rep.window,
            "entries": [asdict(e) for e in rep.entries]}


# --- corpus suites -----------------------------------------------------------------

def _suite_wilf(s):
    rep = core.invariant_report(s)
    ok = rep.wilf_left <= rep.wilf_right
    return ok, {"wilf_left": rep.wilf_left, "wilf_right": rep.wilf_right}


def _suite_fgh(s):
    rep = core.invariant_report(s)
    checks = [(rep.type_ + 1) * rep.genus <= rep.type_ * (rep.frobenius + 1)
              or s.is_natural]
    if not s.is_natural:
        checks.append(rep.type_ <= rep.multiplicity - 1)
    if rep.embedding_dimension == 2:
        checks.append(rep.type_ == 1)
    if rep.embedding_dimension == 3:
        checks.append(rep.type_ in (1, 2))
    return all(checks), {"type": rep.type_, "multiplicity": rep.multiplicity,
                         "genus": rep.genus, "frobenius": rep.frobenius}


def _suite_herzog_dim3(s):
    if s.embedding_dimension != 3:
        return True, {"skipped": "embedding dimension is not 3"}
    sym = core.classify(s) == core.SYMMETRIC
    ci = presentations.presentation_stats(s).is_complete_intersection
    return sym == ci, {"symmetric": sym, "complete_intersection": ci}


def _suite_presentation_card(s):
    stats = presentations.presentation_stats(s)
    e = s.embedding_dimension
    bound = e * (e - 1) // 2 - 1
    return stats.cardinality >= e - 1, {
        "cardinality": stats.cardinality,
        "embedding_dimension": e,
        "exceeds_quadratic_bound": stats.cardinality > bound,
    }


SUITES: dict[str, Callable] = {
    "wilf": _suite_wilf,
    "fgh": _suite_fgh,
    "herzog-dim3": _suite_herzog_dim3,
    "presentation-card": _suite_presentation_card,
}


def run_corpus(path: str, suite: str) -> dict:
    if suite not in SUITES:
        raise ParseError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    if not os.path.exists(path):
        raise FileNotFound(f"corpus file {path!r} does not exist")
    check = SUITES[suite]
    results = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                s = _gens(line)
            except NumsemError as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
            ok, detail = check(s)
            results.append({"line": lineno, "gens": list(s.min_gens),
                            "passed": ok, "detail": detail})
    failed = sum(1 for r in results if not r["passed"])
    return {"suite": suite, "total": len(results),
            "passed": len(results) - failed, "failed": failed,
            "results": results}


def _h_corpus(p):
    return run_corpus(p["path"], p["suite"])


_HANDLERS: dict[str, Callable[[dict], object]] = {
    "info": _h_info,
    "gaps": _h_gaps,
    "apery": _h_apery,
    "pm solve": _h_pm_solve,
    "pm interval": _h_pm_interval,
    "pm bezout": _h_pm_bezout,
    "pm recognize": _h_pm_recognize,
    "quot div": _h_quot_div,
    "quot doubles": _h_quot_doubles,
    "quot decompose": _h_quot_decompose,
    "tree count": _h_tree_count,
    "tree list": _h_tree_list,
    "closure arf": _h_closure_arf,
    "closure sat": _h_closure_sat,
    "pres minimal": _h_pres_minimal,
    "pres betti": _h_pres_betti,
    "pres glue": _h_pres_glue,
    "d3 sym": _h_d3_sym,
    "d3 psym": _h_d3_psym,
    "d3 rij": _h_d3_rij,
    "d3 fermat": _h_d3_fermat,
    "fact lengths": _h_fact_lengths,
    "fact catenary": _h_fact_catenary,
    "fact tame": _h_fact_tame,
    "fact omega": _h_fact_omega,
    "fact delta": _h_fact_delta,
    "fact probe": _h_fact_probe,
    "corpus": _h_corpus,
}


def execute(request: CommandRequest) -> RunReport:
    """Dispatch a validated request; never raises on user input."""
    t0 = time.perf_counter()
    try:
        payload = _HANDLERS[request.path](request.params)
        status, exit_code = "ok", EXIT_OK
        if request.path == "corpus" and payload["failed"]:
            exit_code = EXIT_FAIL
    except NumsemError as exc:
        payload = {"error": exc.code, "message": str(exc)}
        status, exit_code = "error", exc.exit_code
    elapsed = int((time.perf_counter() - t0) * 1000)
    return RunReport(status=status, payload=payload, elapsed_ms=elapsed,
                     tool_version=TOOL_VERSION, exit_code=exit_code)


# --- argument parsing ----------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="numsem",
                                 description="numerical semigroup toolkit")
    ap.add_argument("--json", action="store_true", help="emit a JSON run report")
    ap.add_argument("--csv", action="store_true", help="emit CSV rows")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def leaf(parent, name, **kwargs):
        p = parent.add_parser(name, **kwargs)
        return p

    leaf(sub, "info").add_argument("gens")
    leaf(sub, "gaps").add_argument("gens")
    p = leaf(sub, "apery")
    p.add_argument("gens")
    p.add_argument("n", type=int)

    pm = sub.add_parser("pm").add_subparsers(dest="pmcmd", required=True)
    p = leaf(pm, "solve")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p = leaf(pm, "interval")
    p.add_argument("lo", help="LO fraction, or LO..HI with ( ) open markers")
    p.add_argument("hi", nargs="?", default=None)
    p = leaf(pm, "bezout")
    p.add_argument("f1")
    p.add_argument("f2")
    leaf(pm, "recognize").add_argument("gens")

    quot = sub.add_parser("quot").add_subparsers(dest="quotcmd", required=True)
    p = leaf(quot, "div")
    p.add_argument("gens")
    p.add_argument("p", type=int)
    p = leaf(quot, "doubles")
    p.add_argument("gens")
    p.add_argument("--fmax", type=int, default=None)
    leaf(quot, "decompose").add_argument("gens")

    tree = sub.add_parser("tree").add_subparsers(dest="treecmd", required=True)
    p = leaf(tree, "count")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--variety", choices=["all", "arf", "saturated"], default="all")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--budget-ms", type=int, default=None, dest="budget_ms")
    p = leaf(tree, "list")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--variety", choices=["all", "arf", "saturated"], default="all")

    clo = sub.add_parser("closure").add_subparsers(dest="clocmd", required=True)
    leaf(clo, "arf").add_argument("gens")
    leaf(clo, "sat").add_argument("gens")

    pres = sub.add_parser("pres").add_subparsers(dest="prescmd", required=True)
    leaf(pres, "minimal").add_argument("gens")
    leaf(pres, "betti").add_argument("gens")
    p = leaf(pres, "glue")
    p.add_argument("gens1")
    p.add_argument("gens2")
    p.add_argument("lam", type=int)
    p.add_argument("mu", type=int)

    d3 = sub.add_parser("d3").add_subparsers(dest="d3cmd", required=True)
    leaf(d3, "sym").add_argument("gens")
    p = leaf(d3, "psym")
    for name in ("n1", "n2", "n3"):
        p.add_argument(name, type=int)
    p = leaf(d3, "rij")
    for name in ("n1", "n2", "n3"):
        p.add_argument(name, type=int)
    p = leaf(d3, "fermat")
    for name in ("a", "b", "c", "n"):
        p.add_argument(name, type=int)

    fact = sub.add_parser("fact").add_subparsers(dest="factcmd", required=True)
    p = leaf(fact, "lengths")
    p.add_argument("gens")
    p.add_argument("n", type=int)
    for name in ("catenary", "tame", "omega"):
        p = leaf(fact, name)
        p.add_argument("gens")
        p.add_argument("n", type=int, nargs="?", default=None)
    p = leaf(fact, "delta")
    p.add_argument("gens")
    p.add_argument("--bound", type=int, required=True)
    p = leaf(fact, "probe")
    p.add_argument("gens")
    p.add_argument("--invariant", choices=["delta", "catenary", "tame"],
                   default="catenary")
    p.add_argument("--window", type=int, default=50)
    p.add_argument("--periods", default=None, help="comma-separated members")

    p = leaf(sub, "corpus")
    p.add_argument("path")
    p.add_argument("--suite", required=True)
    return ap


_SUBCMD_ATTRS = {"pm": "pmcmd", "quot": "quotcmd", "tree": "treecmd",
                 "closure": "clocmd", "pres": "prescmd", "d3": "d3cmd",
                 "fact": "factcmd"}


def parse_request(argv: list[str]) -> CommandRequest:
    argv = list(argv)
    # bare form `quot GENS P` dispatches to the division handler
    positionals = [i for i, a in enumerate(argv) if not a.startswith("-")]
    if positionals and argv[positionals[0]] == "quot":
        nxt = positionals[1] if len(positionals) > 1 else None
        if nxt is None or argv[nxt] not in ("div", "doubles", "decompose"):
            argv.insert(positionals[0] + 1, "div")
    ns = _build_parser().parse_args(argv)
    path = ns.cmd
    if ns.cmd in _SUBCMD_ATTRS:
        path = f"{ns.cmd} {getattr(ns, _SUBCMD_ATTRS[ns.cmd])}"
    params = {k: v for k, v in vars(ns).items()
              if k not in ("cmd", "json", "csv", *_SUBCMD_ATTRS.values())}
    fmt = "json" if ns.json else ("csv" if ns.csv else "table")
    return CommandRequest(path=path, params=params, output_format=fmt)


# --- rendering ------------------------------------------------------------------------

def _render_table(payload, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for k in payload:
            v = payload[k]
            if isinstance(v, (dict, list)) and v and \
                    isinstance(v, (dict, list)) and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_fmt(v)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                lines.append(f"{pad}-")
                lines.extend(_render_table(item, indent + 1))
            else:
                lines.append(f"{pad}- {_fmt(item)}")
    else:
        lines.append(f"{pad}{_fmt(payload)}")
    return lines


def _is_flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _fmt(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return str(v)


def _render_csv(path: str, payload) -> list[str]:
    if path == "tree count":
        return ["genus,count"] + [f"{g},{c}" for g, c in payload["counts"]]
    if path == "corpus":
        head = ["line,gens,passed"]
        return head + [f"{r['line']},\"{','.join(map(str, r['gens']))}\",{r['passed']}"
                       for r in payload["results"]]
    if isinstance(payload, dict):
        return [f"{k},{json.dumps(payload[k], sort_keys=True)}" for k in payload]
    return [json.dumps(payload, sort_keys=True)]


def render(report: RunReport, request: CommandRequest) -> str:
    if request.output_format == "json":
        return json.dumps(
            {"status": report.status, "payload": report.payload,
             "elapsed_ms": report.elapsed_ms, "tool_version": report.tool_version},
            sort_keys=True, default=str)
    if report.status == "error":
        return f"error {report.payload['error']}: {report.payload['message']}"
    if request.output_format == "csv":
        return "\n".join(_render_csv(request.path, report.payload))
    return "\n".join(_render_table(report.payload))


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        request = parse_request(argv)
    except NumsemError as exc:
        print(f"error {exc.code}: {exc}", file=sys.stderr)
        return exc.exit_code
    report = execute(request)
    out = render(report, request)
    if report.status == "error" and request.output_format != "json":
        print(out, file=sys.stderr)
    else:
        print(out)
    return report.exit_code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
