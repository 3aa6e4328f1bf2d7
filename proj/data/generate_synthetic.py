#!/usr/bin/env python3
"""Regenerates data/synthetic.csv: linear trend + two periodic components +
small Gaussian noise, fixed seed."""
import math
import random

rng = random.Random(20110324)
with open("data/synthetic.csv", "w") as f:
    f.write("index,close\n")
    for i in range(1024):
        v = (100.0 + 0.02 * i
             + 4.0 * math.sin(2 * math.pi * i / 8)
             + 2.0 * math.sin(2 * math.pi * i / 32)
             + rng.gauss(0.0, 0.3))
        f.write("%d,%.6f\n" % (i, v))
