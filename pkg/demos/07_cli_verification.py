# The command line surface drives everything above through JSON, and the
# verification suites rerun the structural identities at scale.  This
# script calls the CLI in-process; each invocation is exactly what
# `slicelab <cmd> --json '...'` does in a shell.

import json

from slicelab import run_suite
from slicelab.cli import main

print("== decompose ==")
doc = {"matrix": [["0", "1"],
                  ["-1", {"num": ["0", "1"], "den": ["1"]}]],
       "mu": [-1, 1]}
code = main(["decompose", "--json", json.dumps(doc)])
print("exit code:", code)

print("\n== quiver ==")
code = main(["quiver", "--json", '{"mu": [2, 1]}'])
print("exit code:", code)

print("\n== sample (deterministic chart point) ==")
code = main(["sample", "--json",
             '{"alpha": {"r1": 1, "r2": 2, "n": 3}, "seed": 9}'])
print("exit code:", code)

# Suites aggregate exact checks into a machine-readable report.  The
# exit code is 0 exactly when no trial failed.
print("\n== verify (inverse suite, small run) ==")
report = run_suite("inverse", n=2, trials=5, seed=1)
print(json.dumps({k: v for k, v in report.to_json().items()
                  if k != "alphas"}, indent=2))
print("exit code:", report.exit_code)
