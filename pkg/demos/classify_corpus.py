#!/usr/bin/env python3
# Classify every packaged record and print the verdict for both complements,
# then write a sketch of the cuspidal cubic with its artifact line.
import sys

from dualscope.branches import artifacts
from dualscope.classifier import render_certificate
from dualscope.cli import packaged_corpus, sketch_svg

for rec in packaged_corpus():
    jc, jcl = rec.classify()
    up = " +upgrade" if jcl.kobayashi_upgrade else ""
    print(f"{rec.name:32s} {jc.verdict.value:28s} {jcl.verdict.value}{up}")

rec = next(r for r in packaged_corpus() if r.name == "cuspidal-cubic")
jc, jcl = rec.classify()
print()
print(render_certificate(jcl, "text"))

C = rec.primal()
out = sys.argv[1] if len(sys.argv) > 1 else "cuspidal-cubic.svg"
with open(out, "w") as fh:
    fh.write(sketch_svg(C, artifacts(C)))
print("sketch written to", out)
