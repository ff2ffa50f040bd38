"""
Driving the command line interface
==================================

Everything the library computes is reachable from the command line as
UTF-8 JSON on stdout.  Numbers arrive as decimal strings so that no
precision is lost to float parsing on the consuming side.
"""

import json
import subprocess
import sys


def run(*args):
    out = subprocess.run([sys.executable, "-m", "zetaforms", *args],
                         capture_output=True, text=True)
    print("$ zetaforms " + " ".join(args))
    if out.returncode != 0:
        detail = out.stdout.strip() or out.stderr.strip()
        print("  exit code %d: %s" % (out.returncode, detail))
        return None
    return json.loads(out.stdout)


# Exact decomposition of the symmetric point.
doc = run("decompose", "1", "1", "1", "1", "1", "1", "1", "1", "--prec", "30")
print("  Q=%s Phat=%s P=%s" % (doc["Q"], doc["phat"], doc["p"]))

# The score of the stronger of the two reference vectors.
doc = run("worthiness", "8", "16", "10", "15", "12", "16", "18", "13",
          "--prec", "25")
print("  gamma =", doc["gamma"])

# Inadmissible input exits with a dedicated code and names the first
# violated constraint on stderr.
run("decompose", "1", "0", "5", "0", "0", "0", "0", "0")

# A small box search, deduplicated by symmetry orbit.
doc = run("search", *(["1:2"] * 8), "--prec", "12", "--budget", "300")
print("  %d orbit representatives scored" % len(doc["results"]))
top = doc["results"][0]
print("  best: a=%s gamma=%s" % (top["a"], top["gamma"]))

# The built-in verification suites double as a smoke test.
doc = run("verify", "--suite", "graph")
print("  graph suite ok:", doc["ok"])
