"""Tour of geodesic polar coordinates on the Heisenberg group.

Walks through the group law, the polar chart (t, varpi, r), its inverse,
the distance function, and the Koranyi gauge, printing a residual for
every claimed identity.
"""

import math

import numpy as np

from heisenberg_hardy import (
    Point,
    Polar,
    cc_distance,
    dilate,
    eval_phi,
    from_polar,
    gamma,
    group_inverse,
    group_mul,
    invert_phi,
    koranyi,
    to_polar,
)

TWO_PI = 2.0 * math.pi
rng = np.random.default_rng(0)

print("=== group structure (n = 1, points (x, y, z)) ===")
p = Point(np.array([1.0, 0.5]), 0.25)
q = Point(np.array([-0.3, 2.0]), -1.0)
pq = group_mul(p, q)
print(f"p * q           = ({pq.xi[0]:+.6f}, {pq.xi[1]:+.6f}, {pq.z:+.6f})")
qp = group_mul(q, p)
print(f"q * p           = ({qp.xi[0]:+.6f}, {qp.xi[1]:+.6f}, {qp.z:+.6f})   (noncommutative)")
e = group_mul(p, group_inverse(p))
print(f"p * p^-1        = ({e.xi[0]:.1e}, {e.xi[1]:.1e}, {e.z:.1e})")
lam = 2.0
hom = group_mul(dilate(lam, p), dilate(lam, q))
aut = dilate(lam, pq)
print(f"dilation automorphism residual: {max(np.max(np.abs(hom.xi - aut.xi)), abs(hom.z - aut.z)):.2e}")

print()
print("=== the polar chart ===")
print("A point at polar coordinates (t, varpi, r): t is the distance from")
print("the origin, varpi the launch direction, r the accumulated vertical angle.")
c = Polar(t=1.5, varpi=np.array([0.6, 0.8]), r=2.0)
pt = from_polar(c)
print(f"Phi(1.5, (0.6, 0.8), 2.0) = ({pt.xi[0]:+.8f}, {pt.xi[1]:+.8f}, {pt.z:+.8f})")
back = to_polar(pt)
print(f"round trip: |dt| = {abs(back.t - c.t):.2e}, |dr| = {abs(back.r - c.r):.2e}, "
      f"|dvarpi| = {np.max(np.abs(back.varpi - c.varpi)):.2e}")

worst = 0.0
for _ in range(500):
    t = float(rng.uniform(0.1, 5.0))
    r = float(rng.uniform(-TWO_PI + 1e-6, TWO_PI - 1e-6))
    varpi = rng.normal(size=2)
    varpi /= np.linalg.norm(varpi)
    cc = Polar(t=t, varpi=varpi, r=r)
    b = to_polar(from_polar(cc))
    worst = max(worst, abs(b.t - t), abs(b.r - r), float(np.max(np.abs(b.varpi - varpi))))
print(f"500 random round trips, worst componentwise error: {worst:.2e}")

print()
print("=== special cases of the chart ===")
ray = from_polar(Polar(t=2.0, varpi=np.array([1.0, 0.0]), r=0.0))
print(f"r = 0 is the Euclidean ray:        Phi = ({ray.xi[0]}, {ray.xi[1]}, {ray.z})")
top = from_polar(Polar(t=2.0, varpi=np.array([1.0, 0.0]), r=TWO_PI))
print(f"|r| = 2*pi hits the center:        Phi = ({top.xi[0]}, {top.xi[1]}, {top.z:.8f})")
print(f"  (height t^2/(4 pi) = {4.0 / (4.0 * math.pi):.8f})")
ctr = to_polar(Point(np.zeros(2), 1.0))
print(f"center (0, 0, 1) pulls back to     t = {ctr.t:.8f} = sqrt(4 pi), r = {ctr.r:.8f} = 2 pi")

print()
print("=== the aperture function phi ===")
print("phi(r) = |xi|^2/z along the geodesic sphere; it decreases from +inf at")
print("r = 0+ to 0 at r = 2 pi, so each cone aperture alpha has one angle rho.")
for a in (8.0 / math.pi, 4.0, 1.0):
    r = invert_phi(a)
    print(f"  invert_phi({a:<12.8f}) = {r:.12f}   phi back: {eval_phi(r):.12f}")
print(f"  invert_phi(0) = {invert_phi(0.0):.12f} = 2 pi  (half-space limit at +inf: "
      f"{invert_phi(math.inf):.1f})")

print()
print("=== distance vs the Koranyi gauge ===")
print("N = (|xi|^4 + 16 z^2)^(1/4) is equivalent to the distance delta;")
print("along polar coordinates N = t * gamma(r) with gamma between 1/sqrt(pi) and 1.")
worst = 0.0
for _ in range(300):
    t = float(rng.uniform(0.1, 5.0))
    r = float(rng.uniform(-TWO_PI + 1e-6, TWO_PI - 1e-6))
    varpi = rng.normal(size=4)
    varpi /= np.linalg.norm(varpi)
    cc = Polar(t=t, varpi=varpi, r=r)
    worst = max(worst, abs(koranyi(from_polar(cc)) - t * gamma(r)))
print(f"N(Phi(t, varpi, r)) = t gamma(r): worst residual over 300 points {worst:.2e}")
print(f"gamma(0) = {gamma(1e-14):.12f}, gamma(2 pi) = {gamma(TWO_PI):.12f} = 1/sqrt(pi)")
sample = Point(np.array([3.0, 4.0]), 0.0)
print(f"on z = 0 the distance is Euclidean: delta(3, 4, 0) = {cc_distance(sample):.12f}")
