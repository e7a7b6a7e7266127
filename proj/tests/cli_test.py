"""End-to-end checks of the knights command line tool."""

import json
import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET
from pathlib import Path

KNIGHTS = sys.argv[1]
GOLDEN = Path(sys.argv[2])
failed = []


def run(*args, stdin=None):
    return subprocess.run([KNIGHTS, *args], input=stdin, capture_output=True, text=True)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else "  " + detail))
    if not cond:
        failed.append(name)


r = run("build", "--width", "30", "--height", "30", "--metrics")
check("build 30x30 exits 0", r.returncode == 0, r.stderr)
doc = json.loads(r.stdout)
golden = json.loads((GOLDEN / "build_30x30.json").read_text())
check("build 30x30 matches golden", doc == golden)
check("30x30 metrics", doc["metrics"] == {"turns": 266, "crossings": 374}, str(doc.get("metrics")))
check("schema keys", set(doc) == {"dims", "leaper", "closed", "cells", "missing", "metrics"})

r = run("verify", "-", stdin=r.stdout)
check("verify accepts built tour", r.returncode == 0 and r.stdout.startswith("OK"), r.stdout + r.stderr)

tampered = dict(doc)
tampered["cells"] = list(doc["cells"])
tampered["cells"][5], tampered["cells"][6] = tampered["cells"][6], tampered["cells"][5]
r = run("verify", "--json", "-", stdin=json.dumps(tampered))
check("verify rejects tampered tour", r.returncode != 0, r.stdout)
check("tampered report", json.loads(r.stdout)["ok"] is False and "illegal" in json.loads(r.stdout)["violation"])

with tempfile.TemporaryDirectory() as d:
    out = Path(d) / "odd.json"
    r = run("build", "--width", "17", "--height", "13", "--odd-missing-corner", "--out", str(out))
    check("odd build to file", r.returncode == 0 and out.exists(), r.stderr)
    odd = json.loads(out.read_text())
    check("odd missing corner", odd["missing"] == [[0, 0]] and len(odd["cells"]) == 220)
    r = run("verify", str(out))
    check("odd verifies", r.returncode == 0, r.stdout + r.stderr)

for args, name in [
    (["--width", "38", "--height", "38", "--symmetric"], "symmetric"),
    (["--dims", "12,16,5"], "multidim"),
    (["--width", "52", "--height", "30", "--leaper", "1,4"], "giraffe"),
]:
    r = run("build", *args)
    v = run("verify", "-", stdin=r.stdout)
    check(name + " build verifies", r.returncode == 0 and v.returncode == 0, r.stderr + v.stdout)

r = run("build", "--dims", "12,16,5", "--metrics")
check("crossings null in 3D", json.loads(r.stdout)["metrics"]["crossings"] is None)

r = run("build", "--width", "14", "--height", "12")
check("unsupported dims exit 2", r.returncode == 2, str(r.returncode))
r = run("build", "--width", "50", "--height", "30", "--leaper", "1,4")
check("unsupported giraffe exit 2", r.returncode == 2, str(r.returncode))
r = run("build", "--bogus")
check("bad flag exit 1", r.returncode == 1 and r.stderr, str(r.returncode))

r = run("build", "--width", "16", "--height", "12", "--format", "svg", "--mark-crossings", "--cell-size", "8")
root = ET.fromstring(r.stdout)
ns = "{http://www.w3.org/2000/svg}"
poly = root.findall(ns + "polyline")
check("svg parses", r.returncode == 0 and len(poly) == 1)
check("svg vertex per cell", len(poly[0].get("points").split()) >= 192)
check("svg crossing marks", len(root.findall(ns + "circle")) > 0)

r = run("build", "--width", "16", "--height", "12", "--format", "text")
rows = [l for l in r.stdout.splitlines() if l and not l.startswith("#")]
steps = sorted(int(x) for l in rows for x in l.split())
check("text grid", len(rows) == 12 and steps == list(range(192)))

r = run("bound", "crossings")
check("bound text", r.returncode == 0 and "216" in r.stdout and ">= 4n - O(1)" in r.stdout, r.stdout)
b = json.loads(run("bound", "crossings", "--json").stdout)
check("bound json", b["nodes"] == 216 and b["mean"] == "3" and b["coefficient"] == "4", str(b))

o = json.loads(run("oracle", "--width", "6", "--height", "5", "--metric", "turns", "--json").stdout)
check("oracle 5x6 turns", o["optimal"] and o["value"] == 28, str(o))
r = run("oracle", "--width", "6", "--height", "4")
check("oracle 4x6 has no tour", r.returncode == 0 and "no closed tour" in r.stdout, r.stdout)

cells = golden["cells"]
r = run("index", "--width", "30", "--height", "30", "--at", "123")
check("index at", r.stdout.strip() == "{},{}".format(*cells[123]), r.stdout)
r = run("index", "--width", "30", "--height", "30", "--cell", "{},{}".format(*cells[777]))
check("index of cell", r.stdout.strip() == "777", r.stdout)

print("{} failed".format(len(failed)) if failed else "all passed")
sys.exit(1 if failed else 0)
