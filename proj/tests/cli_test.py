#!/usr/bin/env python3
"""End-to-end checks of the qre command line: exit codes, file formats,
round trips, and the QRE_Q_EVAL numeric cross-check."""

import json
import os
import subprocess
import sys
import tempfile

QRE = os.path.abspath(sys.argv[1]) if len(sys.argv) > 1 else "qre"
CHECKS = 0


def run(*args, env_extra=None, expect=0, contains=None):
    global CHECKS
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([QRE, *args], capture_output=True, text=True, env=env)
    out = proc.stdout + proc.stderr
    assert proc.returncode == expect, (
        f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}\n{out}"
    )
    if contains is not None:
        assert contains in out, f"{' '.join(args)}: missing {contains!r} in\n{out}"
    CHECKS += 1
    return proc.stdout


def sc(v):
    return {"n": []} if v == 0 else {"n": [[str(v), 0]]}


def mat(rows, row_legs=None, col_legs=None):
    n = len(rows)
    return {
        "row_legs": row_legs or [n],
        "col_legs": col_legs or [len(rows[0])],
        "entries": [[sc(v) for v in row] for row in rows],
    }


def rem(rep, coeff_dim, rows):
    return {"rep": rep, "coeff_dim": coeff_dim, "matrix": mat(rows)}


def main():
    tmp = tempfile.mkdtemp(prefix="qre_cli_")
    os.chdir(tmp)

    def write(name, obj):
        with open(name, "w") as f:
            json.dump(obj, f)
        return name

    # r-matrix construction and validation
    run("r-matrix", "--rank", "2", "--out", "R.json")
    with open("R.json") as f:
        r = json.load(f)
    assert r["row_legs"] == [2, 2]
    assert r["entries"][0][0] == {"n": [["1", 1]]}
    run("r-matrix", "--rank", "1", expect=2)
    out = run("r-matrix", "--rank", "3", "--out", "-")
    assert len(json.loads(out)["entries"]) == 9

    # identity checks
    run("verify", "ybe", "--R", "R.json", contains="ybe(f,f,f): ok")
    write("Kdiag.json", rem("f", 1, [[0, 0], [0, 1]]))
    write("Kbad.json", rem("f", 1, [[1, 1], [0, 1]]))
    run("verify", "re", "--R", "R.json", "--K", "Kdiag.json", contains="ok")
    run("verify", "re", "--R", "R.json", "--K", "Kbad.json", expect=1, contains="FAIL at (")

    # malformed input never crashes
    with open("broken.json", "w") as f:
        f.write("{nope")
    run("verify", "re", "--R", "R.json", "--K", "broken.json", expect=2)
    run("verify", "re", "--R", "R.json", "--K", "R.json", expect=2)

    # q-solution: deterministic bytes, passes its own check
    run("q-solution", "--R", "R.json", "--out", "KQ.json")
    first = open("KQ.json").read()
    run("q-solution", "--R", "R.json", "--out", "KQ2.json")
    assert first == open("KQ2.json").read()
    assert json.loads(first)["coeff_dim"] == 2
    run("verify", "re", "--R", "R.json", "--K", "KQ.json")

    # fusion: writes the extended family plus the fused triple
    run("fuse", "--family", "R.json", "--ki", "Kdiag.json", "--kj", "Kdiag.json",
        "--out", "fused.json")
    with open("fused.json") as f:
        fused = json.load(f)
    assert "(f*f)" in fused["triples"]
    run("verify", "data", "--data", "fused.json", contains="compat((f*f),f): ok")
    run("verify", "compat", "--data", "fused.json", "--reps", "f", "(f*f)")
    run("fuse", "--family", "R.json", "--ki", "Kdiag.json", "--kj", "KQ.json", expect=2,
        contains="coefficient dimension mismatch")
    run("fuse", "--family", "R.json", "--ki", "Kbad.json", "--kj", "Kbad.json", expect=1)

    # a non-solution embedded in RE data fails the three-leg identities
    family = {
        "reps": [{"id": x, "dim": 2} for x in "abc"],
        "r": [{"i": i, "j": j, "mat": r} for i in "abc" for j in "abc"],
    }
    triples = {x: rem(x, 1, [[0, 0], [0, 1]]) for x in "abc"}
    write("data3.json", {"family": family, "triples": triples})
    run("verify", "appendix", "--data", "data3.json", "--reps", "a", "b", "c",
        contains="fusion-identity-1(a,b,c): ok")
    triples["b"] = rem("b", 1, [[1, 1], [0, 1]])
    write("data3bad.json", {"family": family, "triples": triples})
    run("verify", "data", "--data", "data3bad.json", expect=1)
    run("verify", "appendix", "--data", "data3bad.json", "--reps", "a", "b", "c", expect=1)

    # family JSON works wherever a bare R-matrix does
    write("fam3.json", family)
    run("verify", "ybe", "--family", "fam3.json", "--reps", "a", "b", "c",
        contains="ybe(a,b,c): ok")
    run("verify", "ybe", "--family", "fam3.json", expect=2)  # ambiguous reps
    run("q-solution", "--family", "fam3.json", "--rep", "b", "--out", "KQb.json")
    assert json.load(open("KQb.json"))["rep"] == "b"

    # projection to Hecke sectors
    write("Iff.json", {"rep": "(f*f)", "coeff_dim": 1,
                       "matrix": mat([[1 if i == j else 0 for j in range(4)] for i in range(4)])})
    run("project", "--K", "Iff.json", "--R", "R.json", "--sector", "symmetric",
        "--out", "sym.json")
    with open("sym.json") as f:
        sym = json.load(f)
    k0 = sym["triples"]["sym"]["matrix"]
    assert k0["row_legs"] == [3, 1]
    for i in range(3):
        for j in range(3):
            want = {"n": [["1", 0]]} if i == j else {"n": []}
            assert k0["entries"][i][j] == want
    kff = fused["triples"]["(f*f)"]
    run("project", "--K", write("Kff.json", kff), "--R", "R.json",
        "--sector", "antisymmetric", "--out", "anti.json")
    with open("anti.json") as f:
        assert json.load(f)["triples"]["anti"]["matrix"]["row_legs"] == [1, 1]
    write("I4.json", mat([[1 if i == j else 0 for j in range(4)] for i in range(4)],
                         row_legs=[2, 2], col_legs=[2, 2]))
    run("project", "--K", "Iff.json", "--R", "I4.json", "--sector", "symmetric", expect=2,
        contains="not a Hecke operator")

    # braid relations
    run("braid", "--R", "R.json", "--K", "Kdiag.json", "--strands", "3",
        contains="braid(1,2): ok")
    run("braid", "--R", "R.json", "--K", "Kbad.json", "--strands", "3", expect=1,
        contains="tau(1): FAIL")
    run("verify", "braid", "--R", "R.json", "--K", "KQ.json", "--strands", "2")
    # extra identity boundary operator satisfies all mixed relations
    dim = 2 * 2 * 1  # strands * strands * coeff
    write("tau2.json", mat([[1 if i == j else 0 for j in range(dim)] for i in range(dim)],
                           row_legs=[2, 2, 1], col_legs=[2, 2, 1]))
    run("braid", "--R", "R.json", "--K", "Kdiag.json", "--strands", "2",
        "--tau", "tau2.json", contains="cross(2,1): ok")

    # numeric cross-checks
    run("verify", "ybe", "--R", "R.json", env_extra={"QRE_Q_EVAL": "2"},
        contains="[numeric q=2: agree]")
    run("verify", "re", "--R", "R.json", "--K", "KQ.json",
        env_extra={"QRE_Q_EVAL": "3/2"}, contains="[numeric q=3/2: agree]")
    run("verify", "re", "--R", "R.json", "--K", "Kbad.json",
        env_extra={"QRE_Q_EVAL": "2"}, expect=1)
    run("verify", "ybe", "--R", "R.json", env_extra={"QRE_Q_EVAL": "0"}, expect=2)
    run("verify", "ybe", "--R", "R.json", env_extra={"QRE_Q_EVAL": "zz"}, expect=2)

    # ansatz families
    out = run("solve", "--R", "R.json", "--ansatz", "diagonal", "--out", "sols.json")
    assert "family 1" in out and "family 2" in out and "family 3" not in out
    with open("sols.json") as f:
        assert len(json.load(f)) == 2
    run("solve", "--R", "R.json", "--ansatz", "antidiagonal")
    run("solve", "--R", "R.json", "--ansatz", "upper_triangular")
    run("solve", "--R", "R.json", "--ansatz", "nonsense", expect=2)

    print(f"cli: all {CHECKS} checks passed")


if __name__ == "__main__":
    main()
