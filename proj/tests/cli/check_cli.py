"""Drives nodalfam: exit codes, schema validation, determinism, params files."""
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
ROOT = Path(sys.argv[2])
SCHEMAS = ROOT / "schemas"
PARAMS = ROOT / "data" / "params"

failures = []


def run(*args, env=None):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=env)
    return p.returncode, p.stdout, p.stderr


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def validated(name, *args, code=0):
    rc, out, err = run(*args)
    expect(rc == code, f"{' '.join(args)}: exit {rc} (want {code}) {err.strip()}")
    if rc != code:
        return None
    doc = json.loads(out)
    try:
        jsonschema.validate(doc, schema(name))
        expect(True, f"{' '.join(args)}: {name} schema")
    except jsonschema.ValidationError as e:
        expect(False, f"{' '.join(args)}: {name} schema: {e.message}")
    rc2, out2, _ = run(*args)
    expect(rc2 == rc and out2 == out, f"{' '.join(args)}: byte-identical rerun")
    return doc


reports = validated("verify", "verify", "--suite", "all")
if reports:
    expect(len(reports) >= 12 and all(r["status"] == "pass" and r["witness"] == "0" for r in reports),
           "verify all: 12+ zero witnesses")
sub = validated("verify", "verify", "--suite", "segre-igusa")
if sub:
    expect(len(sub) == 3, "segre-igusa: 3 reports")
expect(run("verify", "--suite", "nosuch")[0] == 2, "unknown suite is a usage error")

for fam, count in [("tetrahedral", 12), ("thirteenth", 13), ("fourteen", 14)]:
    doc = validated("nodes", "nodes", "--family", fam)
    if doc:
        expect(doc["count"] == count and doc["all_A1"] and doc["agreement"]["agree"], f"{fam}: {count} A1 nodes, oracle agrees")
        expect(doc["seed"] == 1, f"{fam}: seed recorded")
    rc, out, _ = run("nodes", "--params", str(PARAMS / f"{fam}.json"))
    expect(rc == 0 and doc is not None and json.loads(out) == doc, f"{fam}: params file matches built-in")
    seeded = validated("nodes", "--seed", "7", "nodes", "--family", fam)
    if seeded:
        expect(seeded["seed"] == 7 and seeded["count"] == count, f"{fam}: seed 7")
threaded = [run("nodes", "--family", "fourteen", env={**os.environ, "NODAL_FAMILIES_THREADS": k})[1] for k in ("1", "4")]
expect(threaded[0] == threaded[1] and threaded[0] != "", "census independent of NODAL_FAMILIES_THREADS")
expect(run("nodes", "--family", "nosuch")[0] == 2, "unknown family is a usage error")
expect(run("nodes", "--params", str(PARAMS / "torus.json"))[0] == 2, "nodes rejects the torus family")

family_schema = schema("family")
for f in sorted(PARAMS.glob("*.json")):
    try:
        jsonschema.validate(json.loads(f.read_text()), family_schema)
        expect(True, f"{f.name}: family schema")
    except jsonschema.ValidationError as e:
        expect(False, f"{f.name}: family schema: {e.message}")

locus = validated("torus", "torus", "locus")
if locus:
    expect(locus["matches_closed_form"], "torus locus matches the closed form")
    expect(locus["s"] == {"numerator": "-2*t^4 - 7/2*t^3 + t", "denominator": "t^3 - 7/2*t - 2"}, "torus s(t)")
cusps = validated("torus", "torus", "cusps")
if cusps:
    ts = [c["t"] for c in cusps["cusps"]]
    expect(len(ts) == 2 and abs(ts[0] - 0.25) < 1e-2 and abs(ts[1] - 3.996) < 1e-2, "two real cusps")
dp = validated("torus", "torus", "doublepoints")
if dp:
    expect(any(abs(d["s"] - 0.25) < 1e-9 and abs(d["alpha_product"] - 16 / 9) < 1e-9 for d in dp["real"]),
           "double point (1/4, 16/9)")
plot = validated("torus", "torus", "plot")
if plot:
    expect([w["name"] for w in plot["windows"]] == ["main", "zoom"], "two plot windows")
    expect(any(r["marked"] for r in plot["windows"][0]["rows"]), "marked row in the main window")
for args in (["torus", "--A", "2,7,7,2", "locus"], ["torus", "--factors", "1,2,1:1,1,2", "locus"],
             ["torus", "--params", str(PARAMS / "torus_factors.json"), "locus"]):
    doc = validated("torus", *args)
    if doc and locus:
        # K doubles, so alpha1 alpha2 halves
        expect(doc["s"] == locus["s"] and doc["alpha_product"]["numerator"] == "1/8*t^4 - 7/16*t^2 - 1/4*t",
               f"{' '.join(args)}: scaled locus of the example")
expect(run("torus", "--A", "0,0,0,0", "locus")[0] == 2, "zero A is an input error")
expect(run("torus", "spin")[0] == 2, "unknown torus action is a usage error")
rc, csv, _ = run("--format", "csv", "torus", "plot")
expect(rc == 0 and csv.startswith("window,t,s,alpha_product,segment_id,marked\n"), "plot csv header")
expect(rc == 0 and csv == run("--format", "csv", "torus", "plot")[1], "plot csv byte-identical rerun")

inv = validated("invariants", "invariants", "--n", "3", "--delta", "6", "--g", "0", "--r", "3")
if inv:
    expect((inv["h1_minus_h0_W"], inv["h1_minus_h0_Z"], inv["dim_triples"], inv["chi_normal_bundle"]) == (2, 6, 7, 9),
           "invariants (3,6,0,3)")
sym = validated("invariants", "invariants", "--n", "4", "--delta", "12", "--g", "0", "--r", "4", "--symmetric")
if sym:
    expect((sym["h1_minus_h0_W"], sym["dim_triples"], sym["h0"]) == (5, 13, 2), "symmetric (4,12,0,4)")
tw = validated("invariants", "invariants", "--twistor")
if tw:
    expect([r["delta"] for r in tw["twistor"]] == [6, 12, 20, 30], "twistor table delta = n(n-1)")
expect(run("invariants", "--n", "3", "--delta", "0", "--g", "0", "--r", "3")[0] == 2, "inadmissible tuple is an error")
expect(run("invariants", "--n", "3")[0] == 2, "missing invariants arguments")
expect(run("--format", "xml", "verify")[0] == 2, "bad format is a usage error")
expect(run()[0] == 2, "no subcommand is a usage error")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
