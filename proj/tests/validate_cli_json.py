#!/usr/bin/env python3
# Copyright 2026 The tsreconf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs every JSON-emitting tsreconf command and validates it against docs/schema.json."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    binary, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schema = json.loads((root / "docs" / "schema.json").read_text())
    data = root / "data"
    with tempfile.TemporaryDirectory() as tmp:
        roles = pathlib.Path(tmp) / "roles.json"
        commands = [
            ["check-target", data / "p3.tss", data / "p3_seed.set"],
            ["trace", data / "p3.tss", data / "p3_seed.set"],
            ["solve-tss", data / "triangle.tss"],
            ["solve-tss", data / "triangle.tss", "--greedy"],
            ["reconfig", data / "star.tss", data / "star_x.set", data / "star_y.set"],
            ["reconfig", data / "star.tss", data / "star_x.set", data / "star_y.set", "--approx"],
            ["reconfig", data / "star.tss", data / "star_x.set", data / "star_y.set", "--cap", "1"],
            ["reduce", data / "p2.tss", "--ell", "2", "--roles", roles],
            ["verify-reduction", data / "2k2.tss", "--ell", "2", "--kc", "1", "--ks", "1"],
            ["gap-ratio", "--n", "1024"],
        ]
        reports = []
        for cmd in commands:
            proc = subprocess.run([binary, "--json", *map(str, cmd)], capture_output=True,
                                  text=True, check=True)
            reports.append((cmd[0], json.loads(proc.stdout)))
        reports.append(("roles", json.loads(roles.read_text())))
    for name, report in reports:
        jsonschema.validate(report, schema)
        print(f"ok {name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
