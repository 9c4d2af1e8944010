"""A tour of the command line front end, driven from Python.

Every command reads a matrix file (CSV or JSON), runs one library
operation, and emits a report with named residuals.  Exit code 0 is
success, 1 a domain error (reported, with its error code), 2 a usage
error.  The same reports are available as JSON for scripted callers.
"""

import json
import tempfile
from pathlib import Path

from fourspaces.cli import main

with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp)
    (root / "x.csv").write_text("1,2\n2,4\n")
    (root / "ones.csv").write_text("1\n1\n")
    (root / "y.csv").write_text("1\n3\n")

    print("=== rank, human readable ===")
    main(["rank", "--input", str(root / "x.csv")])

    print("\n=== pseudo inverse, JSON ===")
    code = main(["pinv", "--input", str(root / "x.csv"), "--json"])
    print("exit code:", code)

    print("\n=== least squares through the pseudo inverse ===")
    main(["solve", "--input", str(root / "ones.csv"), "--y", str(root / "y.csv")])

    print("\n=== the same system refused as an exact solve (exit 1) ===")
    code = main(
        [
            "solve",
            "--method",
            "unique",
            "--input",
            str(root / "ones.csv"),
            "--y",
            str(root / "y.csv"),
        ]
    )
    print("exit code:", code)

    print("\n=== full report, written to a file ===")
    out = root / "report.json"
    main(["report", "--input", str(root / "x.csv"), "--json", "--out", str(out)])
    doc = json.loads(out.read_text())
    print("rank", doc["payload"]["rank"], "- penrose self-check:", doc["payload"]["penrose_ok"])
    print("residuals:", {k: round(v, 12) for k, v in doc["residuals"].items()})
