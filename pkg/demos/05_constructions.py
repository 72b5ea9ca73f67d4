"""Building perfect sets and writing them to disk.

Large sets come with a generator: base g and exponent chains (step, count),
so {g^(16i + j)} is base 13 with chains [[1, 2], [16, 795]].

Run: python demos/05_constructions.py [outdir]
"""
import sys
import time
from pathlib import Path

from splitter_sets import GroupCtx, Interval, construct_perfect, read_set

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_sets")
out.mkdir(exist_ok=True)

for q, iv in ((463, Interval(1, 5)), (12721, Interval(3, 5)), (307009, Interval(2, 6)),
              (475729, Interval(1, 7))):
    start = time.perf_counter()
    s = construct_perfect(GroupCtx.create(q), iv)
    path = out / f"B{iv.k1}_{iv.k2}_{q}.json"
    s.write(path)
    again = read_set(path)
    took = time.perf_counter() - start
    print(f"B{iv}({q}): {len(s)} elements, generator {s.generator}")
    print(f"    wrote {path}, reread as {again.classify().kind.value} ({took:.2f}s)")
