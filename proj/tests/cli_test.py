#!/usr/bin/env python3
"""Black-box contract test for the `isc` command-line tool.

Usage: cli_test.py /path/to/isc
Exits 0 when every contract holds, 1 otherwise (first failure wins).
"""

import json
import re
import subprocess
import sys
import tempfile
from pathlib import Path

BINARY = None
FAILURES = []


def run(*args, **kwargs):
    return subprocess.run(
        [BINARY, *args], capture_output=True, text=True, timeout=120, **kwargs
    )


def check(condition, message):
    if not condition:
        FAILURES.append(message)
        print(f"FAIL: {message}", file=sys.stderr)


def expect_exit(result, code, message):
    check(
        result.returncode == code,
        f"{message}: exit {result.returncode} != {code}"
        f" (stdout={result.stdout!r}, stderr={result.stderr!r})",
    )


def test_compute_json_schema():
    result = run("compute", "--p", "1", "--q", "1", "--m", "1", "--n", "1",
                 "--method", "all", "--format", "json")
    expect_exit(result, 0, "compute unit square")
    ordered = json.loads(result.stdout, object_pairs_hook=list)
    keys = [key for key, _ in ordered]
    check(
        keys == ["p", "q", "m", "n", "case", "N", "E", "W", "mu_exact",
                 "mu_decimal", "methods"],
        f"JSON keys not schema-stable: {keys}",
    )
    report = dict(ordered)
    check(report["p"] == 1 and report["n"] == 1, "parameters echoed wrong")
    check(report["case"] == 1, f"case {report['case']} != 1")
    # Counts and W are decimal strings, never floats.
    check(report["N"] == "4" and report["E"] == "4", "N/E wrong or not strings")
    check(report["W"] == "8", f"W {report['W']!r} != '8'")
    check(report["mu_exact"] == "4/3", f"mu_exact {report['mu_exact']!r}")
    check(report["mu_decimal"] == "1.33333333333",
          f"mu_decimal {report['mu_decimal']!r}")
    methods = dict(report["methods"])
    check(sorted(methods) == ["bfs", "closed", "cuts", "tables"],
          f"methods {sorted(methods)}")
    for name, entry in methods.items():
        entry = dict(entry)
        check(entry["W"] == "8", f"method {name} W {entry['W']!r}")
        check(isinstance(entry["time_ms"], float) and entry["time_ms"] >= 0,
              f"method {name} missing timing")


def test_compute_single_method():
    result = run("compute", "--p", "2", "--q", "2", "--m", "1", "--n", "4",
                 "--method", "closed", "--format", "json")
    expect_exit(result, 0, "compute closed only")
    report = json.loads(result.stdout)
    check(list(report["methods"]) == ["closed"],
          f"unexpected methods {list(report['methods'])}")
    check(report["W"] == "318" and report["mu_exact"] == "53/20"
          and report["mu_decimal"] == "2.65", "H(2) values wrong")


def test_compute_csv_and_text():
    result = run("compute", "--p", "2", "--q", "2", "--m", "1", "--n", "4",
                 "--format", "csv")
    expect_exit(result, 0, "compute csv")
    lines = result.stdout.strip().splitlines()
    check(lines[0] == "p,q,m,n,case,N,E,W,mu_exact,mu_decimal,methods",
          f"csv header {lines[0]!r}")
    row = lines[1].split(",", 10)
    check(row[:10] == ["2", "2", "1", "4", "1", "16", "23", "318", "53/20",
                       "2.65"],
          f"csv row {row}")

    result = run("compute", "--p", "2", "--q", "2", "--m", "1", "--n", "4",
                 "--format", "text")
    expect_exit(result, 0, "compute text")
    check("W = 318" in result.stdout, "text misses W")
    check("53/20" in result.stdout, "text misses mu")


def test_parameter_errors():
    cases = [
        (["compute", "--p", "2", "--q", "3", "--m", "1", "--n", "4"],
         "ParityViolation"),
        (["compute", "--p", "0", "--q", "1", "--m", "1", "--n", "1"],
         "NonPositiveParameter"),
        (["compute", "--p", "1", "--q", "5", "--m", "1", "--n", "3"],
         "OrderViolation"),
        (["family", "--trap", "4", "1"], "ParityViolation"),
    ]
    for args, token in cases:
        result = run(*args)
        expect_exit(result, 1, f"{args} should fail")
        check(token in result.stderr,
              f"{args}: stderr {result.stderr!r} misses {token}")

    # Usage errors also exit 1 with a diagnostic.
    result = run("compute", "--p", "1", "--q", "1", "--m", "1")
    expect_exit(result, 1, "missing --n")
    check(result.stderr != "", "missing-flag error not on stderr")
    result = run("frobnicate")
    expect_exit(result, 1, "unknown subcommand")


def test_family():
    result = run("family", "--hex", "2", "--format", "json")
    expect_exit(result, 0, "family --hex 2")
    report = json.loads(result.stdout)
    check(report["W"] == "318" and report["mu_exact"] == "53/20",
          "family --hex 2 values")
    check(sorted(report["methods"]) == ["closed", "family"],
          f"family methods {sorted(report['methods'])}")

    result = run("family", "--trap", "2", "2", "--format", "json")
    expect_exit(result, 0, "family --trap 2 2")
    report = json.loads(result.stdout)
    check(report["W"] == "25" and report["mu_exact"] == "5/3",
          "family --trap 2 2 values")

    result = run("family", "--bitrap", "4", "2", "2", "--format", "json")
    expect_exit(result, 0, "family --bitrap 4 2 2")
    check(json.loads(result.stdout)["W"] == "318", "family --bitrap 4 2 2")


def test_cuts():
    expected = ("family,k,edge_count,f_small,f_comp\n"
                "H2,1,2,2,2\n"
                "V3,1,2,2,2\n")
    result = run("cuts", "--p", "1", "--q", "1", "--m", "1", "--n", "1")
    expect_exit(result, 0, "cuts default source")
    check(result.stdout == expected, f"cuts csv {result.stdout!r}")
    for source in ("geometric", "tables"):
        result = run("cuts", "--p", "1", "--q", "1", "--m", "1", "--n", "1",
                     "--source", source)
        expect_exit(result, 0, f"cuts --source {source}")
        check(result.stdout == expected, f"cuts {source} differs")

    geometric = run("cuts", "--p", "3", "--q", "5", "--m", "4", "--n", "7",
                    "--source", "geometric").stdout
    tables = run("cuts", "--p", "3", "--q", "5", "--m", "4", "--n", "7",
                 "--source", "tables").stdout
    check(geometric == tables and geometric.count("\n") > 10,
          "cut sources disagree on ISC(3,5,4,7)")


def test_export():
    result = run("export", "--p", "1", "--q", "1", "--m", "1", "--n", "1",
                 "--format", "adjlist")
    expect_exit(result, 0, "export adjlist")
    check(result.stdout == ("0,0: 1,0 0,1\n"
                            "1,0: 0,0 1,1\n"
                            "0,1: 0,0 1,1\n"
                            "1,1: 1,0 0,1\n"),
          f"adjlist {result.stdout!r}")

    result = run("export", "--p", "1", "--q", "1", "--m", "2", "--n", "1",
                 "--format", "dot")
    expect_exit(result, 0, "export dot")
    check('"v_-1_1"' in result.stdout, "dot misses negative-x vertex")
    check(result.stdout.count("--") == 8, "dot edge count != 8")

    result = run("export", "--p", "1", "--q", "1", "--m", "1", "--n", "1")
    expect_exit(result, 1, "export without --format must fail")

    with tempfile.TemporaryDirectory() as tmp:
        out_path = Path(tmp) / "graph.adjlist"
        result = run("export", "--p", "1", "--q", "1", "--m", "1", "--n", "1",
                     "--format", "adjlist", "--out", str(out_path))
        expect_exit(result, 0, "export --out")
        check(out_path.read_text().startswith("0,0: 1,0 0,1\n"),
              "exported file content")


def test_verify():
    result = run("verify", "--max-n", "6", "--max-m", "3")
    expect_exit(result, 0, "verify small sweep")
    match = re.search(r"verified (\d+) tuples", result.stdout)
    check(match and int(match.group(1)) == 60,
          f"verify output {result.stdout!r}")

    result = run("verify")
    expect_exit(result, 0, "verify default sweep")
    match = re.search(r"verified (\d+) tuples", result.stdout)
    check(match and int(match.group(1)) > 300,
          f"default sweep too small: {result.stdout!r}")
    check("all methods agree" in result.stdout, "verify verdict missing")


def test_bench():
    result = run("bench", "--p", "2", "--q", "4", "--m", "2", "--n", "6",
                 "--repeat", "2")
    expect_exit(result, 0, "bench")
    lines = result.stdout.strip().splitlines()
    check(lines[0] == "method,repeat,min_ms,median_ms,mean_ms,W",
          f"bench header {lines[0]!r}")
    rows = [line.split(",") for line in lines[1:]]
    check([row[0] for row in rows] == ["bfs", "cuts", "tables", "closed"],
          "bench must time all four methods")
    check(all(row[1] == "2" and row[5] == "2364" for row in rows),
          f"bench rows {rows}")


def test_distance_distribution():
    with tempfile.TemporaryDirectory() as tmp:
        dist_path = Path(tmp) / "distribution.csv"
        result = run("compute", "--p", "1", "--q", "1", "--m", "1", "--n", "1",
                     "--dist", str(dist_path))
        expect_exit(result, 0, "compute --dist")
        check(dist_path.read_text() == "d,count\n1,4\n2,2\n",
              f"distribution {dist_path.read_text()!r}")


def test_help():
    result = run("--help")
    expect_exit(result, 0, "--help")
    for sub in ("compute", "family", "cuts", "verify", "export", "bench"):
        check(sub in result.stdout, f"--help misses {sub}")


def main():
    global BINARY
    if len(sys.argv) != 2:
        print("usage: cli_test.py /path/to/isc", file=sys.stderr)
        return 2
    BINARY = sys.argv[1]
    tests = [value for name, value in globals().items()
             if name.startswith("test_") and callable(value)]
    for test in tests:
        test()
    if FAILURES:
        print(f"{len(FAILURES)} CLI contract failure(s)", file=sys.stderr)
        return 1
    print(f"all {len(tests)} CLI contract tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
