#!/usr/bin/env python3
# Copyright 2026 The mrpred Authors.
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
"""Writes the bundled synthetic labeled Java corpus.

Twenty numeric method families, five variants each. Labels are assigned per
family and are illustrative rather than verified by execution; per-MR totals
are kept near those of the reference label file (56/32/34/66/33/63 of 100).

Run from the repository root:
    python3 tools/make_synthetic_corpus.py [--out data/synthetic] [--seed 7]
Method ids in labels.csv use the path relative to the repository root, so
mine with `mrpred mine data/synthetic/java --out ...` from the same place.
"""

import argparse
import csv
import pathlib
import random

MRS = ("ADD", "EXC", "INC", "MUL", "PER", "INV")

# name, labels, parameter list, body lines. {T} is the element type, {a} the
# accumulator, {i} the loop index.
FAMILIES = [
    ("Sum", (1, 1, 1, 1, 1, 0), "{T}[] xs", [
        "{T} {a} = 0;",
        "for (int {i} = 0; {i} < xs.length; {i}++) {{",
        "  {a} += xs[{i}];",
        "}}",
        "return {a};",
    ]),
    ("Max", (1, 0, 1, 1, 1, 1), "{T}[] xs", [
        "{T} {a} = xs[0];",
        "for (int {i} = 1; {i} < xs.length; {i}++) {{",
        "  if (xs[{i}] > {a}) {{",
        "    {a} = xs[{i}];",
        "  }}",
        "}}",
        "return {a};",
    ]),
    ("Min", (1, 1, 0, 1, 1, 1), "{T}[] xs", [
        "{T} {a} = xs[0];",
        "for ({T} v : xs) {{",
        "  {a} = v < {a} ? v : {a};",
        "}}",
        "return {a};",
    ]),
    ("Mean", (1, 0, 0, 1, 1, 1), "{T}[] xs", [
        "double {a} = 0;",
        "for (int {i} = 0; {i} < xs.length; {i}++) {{",
        "  {a} = {a} + xs[{i}];",
        "}}",
        "return {a} / xs.length;",
    ]),
    ("Product", (0, 0, 1, 1, 0, 1), "{T}[] xs", [
        "{T} {a} = 1;",
        "int {i} = 0;",
        "while ({i} < xs.length) {{",
        "  {a} *= xs[{i}];",
        "  {i}++;",
        "}}",
        "return {a};",
    ]),
    ("CountAbove", (1, 0, 1, 0, 0, 1), "{T}[] xs, {T} limit", [
        "int {a} = 0;",
        "for ({T} v : xs) {{",
        "  if (v > limit) {{",
        "    {a}++;",
        "  }}",
        "}}",
        "return {a};",
    ]),
    ("Range", (0, 1, 0, 1, 1, 0), "{T}[] xs", [
        "{T} lo = xs[0];",
        "{T} hi = xs[0];",
        "for (int {i} = 1; {i} < xs.length; {i}++) {{",
        "  lo = Math.min(lo, xs[{i}]);",
        "  hi = Math.max(hi, xs[{i}]);",
        "}}",
        "return hi - lo;",
    ]),
    ("SumSquares", (1, 1, 1, 1, 1, 1), "{T}[] xs", [
        "{T} {a} = 0;",
        "for (int {i} = 0; {i} < xs.length; {i}++) {{",
        "  {a} += xs[{i}] * xs[{i}];",
        "}}",
        "return {a};",
    ]),
    ("First", (1, 0, 0, 1, 0, 1), "{T}[] xs", [
        "return xs[0];",
    ]),
    ("ArgMax", (0, 0, 0, 0, 0, 1), "{T}[] xs", [
        "int {a} = 0;",
        "for (int {i} = 1; {i} < xs.length; {i}++) {{",
        "  if (xs[{i}] >= xs[{a}]) {{",
        "    {a} = {i};",
        "  }}",
        "}}",
        "return {a};",
    ]),
    ("Variance", (0, 0, 0, 1, 0, 1), "{T}[] xs", [
        "double m = 0;",
        "for ({T} v : xs) {{",
        "  m += v;",
        "}}",
        "m /= xs.length;",
        "double {a} = 0;",
        "for ({T} v : xs) {{",
        "  {a} += (v - m) * (v - m);",
        "}}",
        "return {a} / xs.length;",
    ]),
    ("Dot", (1, 0, 0, 1, 0, 0), "{T}[] xs, {T}[] ys", [
        "{T} {a} = 0;",
        "int n = Math.min(xs.length, ys.length);",
        "for (int {i} = 0; {i} < n; {i}++) {{",
        "  {a} += xs[{i}] * ys[{i}];",
        "}}",
        "return {a};",
    ]),
    ("Median", (1, 0, 0, 1, 0, 1), "{T}[] xs", [
        "{T}[] copy = xs.clone();",
        "java.util.Arrays.sort(copy);",
        "int mid = copy.length / 2;",
        "if (copy.length % 2 == 0) {{",
        "  return (copy[mid - 1] + copy[mid]) / 2;",
        "}}",
        "return copy[mid];",
    ]),
    ("Find", (0, 0, 0, 0, 0, 0), "{T}[] xs, {T} key", [
        "for (int {i} = 0; {i} < xs.length; {i}++) {{",
        "  if (xs[{i}] == key) {{",
        "    return {i};",
        "  }}",
        "}}",
        "return -1;",
    ]),
    ("CountEven", (0, 0, 1, 0, 0, 1), "int[] xs", [
        "int {a} = 0;",
        "for (int {i} = 0; {i} < xs.length; {i}++) {{",
        "  if (xs[{i}] % 2 == 0 && xs[{i}] != 0) {{",
        "    {a}++;",
        "  }}",
        "}}",
        "return {a};",
    ]),
    ("Harmonic", (0, 1, 0, 0, 0, 1), "{T}[] xs", [
        "double {a} = 0;",
        "for ({T} v : xs) {{",
        "  if (v != 0) {{",
        "    {a} += 1.0 / v;",
        "  }}",
        "}}",
        "return {a};",
    ]),
    ("PrefixLast", (1, 0, 0, 0, 0, 0), "{T}[] xs", [
        "{T}[] pre = new {T}[xs.length + 1];",
        "for (int {i} = 0; {i} < xs.length; {i}++) {{",
        "  pre[{i} + 1] = pre[{i}] + xs[{i}];",
        "}}",
        "return pre[xs.length];",
    ]),
    ("LastElement", (0, 0, 0, 1, 0, 1), "{T}[] xs", [
        "int n = xs.length;",
        "return xs[n - 1];",
    ]),
    ("NormL1", (1, 1, 1, 1, 1, 0), "{T}[] xs", [
        "{T} {a} = 0;",
        "for ({T} v : xs) {{",
        "  {a} += Math.abs(v);",
        "}}",
        "return {a};",
    ]),
    ("ClampSum", (0, 1, 0, 0, 0, 0), "{T}[] xs, {T} cap", [
        "{T} {a} = 0;",
        "for (int {i} = 0; {i} < xs.length; {i}++) {{",
        "  {T} v = xs[{i}] > cap ? cap : xs[{i}];",
        "  {a} += v;",
        "}}",
        "return {a};",
    ]),
]

VARIANTS = 5
TYPES = ("int", "long", "double")
ACCUMULATORS = ("acc", "total", "result", "r", "out")
INDICES = ("i", "j", "k", "idx", "p")


def lower_first(s):
    return s[0].lower() + s[1:]


def render_method(family, variant, rng):
    name, _, params, body = family
    elem = rng.choice(TYPES) if "{T}" in params else "int"
    ret = elem
    if name in ("Mean", "Variance", "Harmonic"):
        ret = "double"
    if name in ("CountAbove", "ArgMax", "Find", "CountEven"):
        ret = "int"
    subs = {"T": elem, "a": rng.choice(ACCUMULATORS), "i": rng.choice(INDICES)}
    method_name = f"{lower_first(name)}{variant}"
    lines = [f"  public static {ret} {method_name}({params.format(**subs)}) {{"]
    if rng.random() < 0.4:
        lines.append("    // variant %d" % variant)
    if rng.random() < 0.4:
        lines.append("    if (xs == null) {")
        lines.append("      throw new IllegalArgumentException(\"xs\");")
        lines.append("    }")
    if rng.random() < 0.3:
        lines.append("")
    lines.extend("    " + line.format(**subs) for line in body)
    lines.append("  }")
    return method_name, lines


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="data/synthetic")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)
    java_dir = out / "java"
    java_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    for family in FAMILIES:
        cls = family[0] + "Ops"
        path = java_dir / f"{cls}.java"
        lines = ["package synthetic;", "", f"public final class {cls} {{"]
        for v in range(VARIANTS):
            lines.append("")
            start = len(lines) + 1
            method_name, body = render_method(family, v, rng)
            lines.extend(body)
            rows.append((f"{path.as_posix()}::{method_name}#{start}", family[1]))
        lines.append("}")
        path.write_text("\n".join(lines) + "\n")

    with open(out / "labels.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(("method_id",) + MRS)
        for method_id, labels in rows:
            w.writerow((method_id,) + labels)

    sums = [sum(r[1][m] for r in rows) for m in range(len(MRS))]
    print("methods:", len(rows), "positives:", dict(zip(MRS, sums)))


if __name__ == "__main__":
    main()
