"""Writes tests/data/log_gamma_oracle.txt: z and log Gamma(z) from mpmath at 40 digits."""
import random
import sys

import mpmath

mpmath.mp.dps = 40
rng = random.Random(20240611)
points = []
while len(points) < 100:
    z = complex(rng.uniform(-100, 100), rng.uniform(-100, 100))
    if abs(z) <= 100:
        points.append(z)
points += [1.0, 0.5, 2.0, 1.0 + 1e-7, 2.0 - 3e-6j, 1.15 + 0.1j, 1.9 - 0.05j, 3.0, 10.5, 0.1 + 0.001j,
           -0.5, -2.5, -7.25, -99.5 + 0j, -30.1 + 0.5j, -30.1 - 0.5j, 1e-8 + 0j, 0.25 + 14.9j, 1e5 + 3e5j, -1e6 + 7j]
out = sys.argv[1] if len(sys.argv) > 1 else "tests/data/log_gamma_oracle.txt"
with open(out, "w") as f:
    f.write("# re(z) im(z) re(logGamma) im(logGamma), principal branch\n")
    for z in points:
        w = mpmath.loggamma(mpmath.mpc(z.real, z.imag))
        f.write(f"{z.real!r} {z.imag!r} {mpmath.nstr(w.real, 25)} {mpmath.nstr(w.imag, 25)}\n")
