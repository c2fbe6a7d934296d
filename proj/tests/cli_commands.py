"""End-to-end checks of the knotconc command line: exit codes, outputs and determinism."""

import json
import os
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([EXE, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def expect(code, *args, contains=None):
    rc, out, err = run(*args)
    ok = rc == code and (contains is None or contains in out + err)
    if not ok:
        failures.append(f"{' '.join(args)}: exit {rc}, expected {code}\n{out}{err}")
    return out


with tempfile.TemporaryDirectory() as d:
    f = lambda name: os.path.join(d, name)

    for kind, name, out in [
        ("triple", "unknot", "unknot.json"),
        ("triple", "trefoil", "trefoil.json"),
        ("triple", "stevedore", "stevedore.json"),
        ("triple", "figure-eight", "fig8.json"),
        ("seifert", "trefoil", "trefoil_seifert.json"),
        ("seifert", "stevedore", "stevedore_seifert.json"),
        ("witness", "trefoil", "witness.json"),
        ("solution", "unknot", "solution.json"),
        ("symmetric", "trefoil", "boundary.json"),
        ("symmetric", "hyperbolic", "hyperbolic.json"),
        ("surgery-data", "hyperbolic", "data.json"),
    ]:
        expect(0, "example", kind, name, "--out", f(out))
    expect(0, "example", "witness", "trefoil", "--glued", "--out", f("glued.json"))

    for doc in ["unknot.json", "trefoil.json", "trefoil_seifert.json", "witness.json", "glued.json",
                "solution.json", "boundary.json", "hyperbolic.json"]:
        expect(0, "validate", f(doc))
    expect(0, "validate", "--triple", f("unknot.json"))

    expect(1, "ac1", "--seifert", f("trefoil_seifert.json"), contains="not metabolic")
    expect(0, "ac1", "--seifert", f("stevedore_seifert.json"))
    expect(0, "ac1", "--triple", f("stevedore.json"))
    expect(1, "ac1", "--triple", f("trefoil.json"))

    expect(0, "sum", "--triples", f("trefoil.json"), f("stevedore.json"), "--out", f("sum.json"))
    expect(0, "validate", f("sum.json"))
    expect(0, "invert", "--triple", f("trefoil.json"), "--out", f("inv.json"))
    expect(0, "sum", "--triples", f("trefoil.json"), f("inv.json"), "--out", f("slice.json"))
    expect(0, "ac1", "--triple", f("slice.json"))
    expect(0, "normalize", "--triple", f("fig8.json"), "--out", f("fig8n.json"))
    expect(0, "validate", f("fig8n.json"))

    expect(0, "--coefficients", "QZ", "zero-surgery", "--triple", f("trefoil.json"), "--out", f("n.json"))
    out = expect(0, "--report", "json", "blanchfield", "--triple", f("trefoil.json"))
    if out:
        value = json.loads(out)["form"]["pairing"][0][0]
        if value != {"num": [[1, "1"]], "den": [[0, "1"], [1, "-1"], [2, "1"]]}:
            failures.append(f"trefoil Blanchfield value {value}")
    expect(0, "surgery", "--symmetric", f("hyperbolic.json"), "--data", f("data.json"), "--out", f("effect.json"))
    expect(0, "validate", f("effect.json"))
    expect(0, "cot-family", "--triple", f("stevedore.json"))
    expect(0, "check-witness", "--witness", f("glued.json"))
    expect(0, "check-solution", "--solution", f("solution.json"))

    # input errors
    text = open(f("trefoil.json")).read()
    with open(f("cut.json"), "w") as h:
        h.write(text[: len(text) // 2])
    expect(2, "validate", f("cut.json"), contains="byte")
    doc = json.loads(text)
    doc["version"] = 7
    with open(f("v7.json"), "w") as h:
        json.dump(doc, h)
    expect(2, "validate", f("v7.json"), contains="version 7")
    expect(2, "validate", f("missing.json"))
    expect(2, "ac1", "--triple", f("trefoil_seifert.json"))

    # determinism
    a = run("--report", "json", "ac1", "--triple", f("stevedore.json"))
    b = run("--report", "json", "ac1", "--triple", f("stevedore.json"))
    if a != b:
        failures.append("repeated ac1 reports differ")
    expect(0, "example", "triple", "trefoil", "--out", f("trefoil2.json"))
    if open(f("trefoil.json")).read() != open(f("trefoil2.json")).read():
        failures.append("repeated example documents differ")

for msg in failures:
    print("FAIL:", msg)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
