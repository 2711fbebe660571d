#!/usr/bin/env python3
"""Run every JSON-emitting vacemit subcommand and validate the output against
docs/report_schema.json."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    cli, schema_path = sys.argv[1], Path(sys.argv[2])
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        cfg = tmp / "run.cfg"
        cfg.write_text("geometry.breakdown_field_limit = 1e12\nfit.pin = beta\n")
        data = tmp / "iv.csv"
        subprocess.run([cli, "simulate", "-c", cfg, "--v-min", "20", "--v-max", "120",
                        "--steps", "25", "-o", data], check=True, capture_output=True)
        two = tmp / "two.csv"
        two.write_text("voltage_V,current_A\n25,1e-9\n100,3e-7\n")

        runs = {
            "fit": [cli, "fit", "-c", cfg, "-d", data],
            "fit two points": [cli, "fit", "-d", two],
            "turnon model": [cli, "turnon", "-c", cfg],
            "turnon data": [cli, "turnon", "-d", data],
            "monitor": [cli, "monitor", "-c", cfg, "--voltage", "100", "--current", "1e-3"],
            "check pass": [cli, "check", "--voltage", "10"],
            "check violation": [cli, "check", "--voltage", "1000"],
        }
        failures = 0
        for name, argv in runs.items():
            proc = subprocess.run(argv, capture_output=True, text=True)
            try:
                report = json.loads(proc.stdout)
                validator.validate(report)
                print(f"ok   {name}")
            except (json.JSONDecodeError, jsonschema.ValidationError) as err:
                failures += 1
                print(f"FAIL {name}: exit {proc.returncode}: {err}\n{proc.stderr}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
