#!/usr/bin/env python3
#
# spectral-wl - Copyright 2026 The spectral-wl Authors.
# SPDX-License-Identifier: Apache-2.0
#
"""Runs `swl scan` twice and validates the JSON report against the schema."""

import json
import subprocess
import sys

import jsonschema


def main():
    swl, schema_path = sys.argv[1], sys.argv[2]
    args = [swl, "scan", "--algs", "wl1,epwl:A,epwl:Lhat,gdwl:spd", "--corpus", "connected:2-6"]
    first = subprocess.run(args, check=True, capture_output=True).stdout
    second = subprocess.run(args, check=True, capture_output=True).stdout
    if first != second:
        print("scan output differs between identical runs")
        return 1
    with open(schema_path) as f:
        schema = json.load(f)
    report = json.loads(first)
    jsonschema.validate(report, schema)
    relations = {(r["a"], r["b"]): r["relation"] for r in report["relations"]}
    if relations[("wl1", "epwl:A")] != "coarser":
        print("expected wl1 coarser than epwl:A, got", relations[("wl1", "epwl:A")])
        return 1
    print("report valid:", len(report["graphs"]), "graphs,", len(relations), "relations")
    return 0


if __name__ == "__main__":
    sys.exit(main())
