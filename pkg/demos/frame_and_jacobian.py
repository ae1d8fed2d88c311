"""Orthonormal horizontal frames and the polar volume element.

Verifies, at random points of H^n for n = 1 and 2, that the constructed
horizontal frame is orthonormal and horizontal, that the gradient of the
distance is the first frame vector, and that the polar Jacobian matches
both its closed form t^(2n+1) mu(r) and a finite-difference determinant.
"""

import math

import numpy as np

from heisenberg_hardy import (
    Polar,
    frame,
    from_polar,
    grad_delta,
    is_horizontal,
    jacobian,
    mu,
    w,
)

TWO_PI = 2.0 * math.pi
rng = np.random.default_rng(7)


def random_polar(n):
    t = float(rng.uniform(0.2, 4.0))
    r = float(rng.uniform(-TWO_PI + 1e-3, TWO_PI - 1e-3))
    varpi = rng.normal(size=2 * n)
    varpi /= np.linalg.norm(varpi)
    return Polar(t=t, varpi=varpi, r=r)


def fd_jacobian(c, h=1e-5):
    """Determinant of d Phi by central differences in (t, varpi, r)."""
    n = c.varpi.size // 2

    def embed(cc):
        p = from_polar(cc)
        return np.concatenate([p.xi, [p.z]])

    cols = [(embed(Polar(t=c.t + h, varpi=c.varpi, r=c.r))
             - embed(Polar(t=c.t - h, varpi=c.varpi, r=c.r))) / (2.0 * h)]
    # orthonormal tangent directions on the sphere |varpi| = 1
    q, _ = np.linalg.qr(np.column_stack(
        [c.varpi] + [rng.normal(size=2 * n) for _ in range(2 * n - 1)]))
    for k in range(1, 2 * n):
        u = q[:, k]
        plus = embed(Polar(t=c.t, varpi=np.cos(h) * c.varpi + np.sin(h) * u, r=c.r))
        minus = embed(Polar(t=c.t, varpi=np.cos(h) * c.varpi - np.sin(h) * u, r=c.r))
        cols.append((plus - minus) / (2.0 * h))
    cols.append((embed(Polar(t=c.t, varpi=c.varpi, r=c.r + h))
                 - embed(Polar(t=c.t, varpi=c.varpi, r=c.r - h))) / (2.0 * h))
    return abs(np.linalg.det(np.column_stack(cols)))


for n in (1, 2):
    print(f"=== H^{n}  (ambient dimension {2 * n + 1}) ===")

    worst_gram = 0.0
    worst_hor = 0.0
    worst_grad = 0.0
    worst_tsq = 0.0
    for _ in range(400):
        c = random_polar(n)
        fr = frame(c)
        vecs = fr.vectors
        gram = np.array([[np.dot(a.v_xi, b.v_xi) for b in vecs] for a in vecs])
        worst_gram = max(worst_gram, float(np.max(np.abs(gram - np.eye(2 * n)))))
        for vec in vecs:
            ok, resid = is_horizontal(vec)
            worst_hor = max(worst_hor, resid)
        gd = grad_delta(from_polar(c))
        worst_grad = max(worst_grad, float(np.max(np.abs(gd.v_xi - vecs[0].v_xi))))
        # vertical combination T = V1 - V2/w with |T|^2 = (1 + w^2)/w^2
        ww = w(c.r)
        tsq = float(np.dot(fr.t_field.v_xi, fr.t_field.v_xi))
        worst_tsq = max(worst_tsq, abs(tsq - (1.0 + ww * ww) / (ww * ww)) / tsq)
    print(f"frame Gram matrix vs identity, 400 points:     {worst_gram:.2e}")
    print(f"worst horizontality residual:                  {worst_hor:.2e}")
    print(f"grad delta vs first frame vector:              {worst_grad:.2e}")
    print(f"|T|^2 vs (1 + w^2)/w^2 (relative):             {worst_tsq:.2e}")

    worst_cf = 0.0
    worst_fd = 0.0
    for _ in range(60):
        c = random_polar(n)
        jd = jacobian(c).det
        closed = c.t ** (2 * n + 1) * mu(c.r, n)
        worst_cf = max(worst_cf, abs(jd - closed) / closed)
        worst_fd = max(worst_fd, abs(jd - fd_jacobian(c)) / jd)
    print(f"jacobian det vs t^(2n+1) mu(r), 60 points:     {worst_cf:.2e}  (relative)")
    print(f"jacobian det vs finite differences:            {worst_fd:.2e}  (relative)")

    c = random_polar(n)
    jd = jacobian(c)
    print(f"sample point  t = {c.t:.4f}, r = {c.r:+.4f}:")
    print(f"  det d Phi          = {jd.det:+.12e}")
    print(f"  t^(2n+1) mu(r)     = {c.t ** (2 * n + 1) * mu(c.r, n):+.12e}")
    print()

print("mu itself: mu(0+) = 1/12 (n = 1), mu(pi, 1) = 4/pi^4")
print(f"  mu(1e-14, 1) = {mu(1e-14, 1):.12e}   1/12      = {1.0 / 12.0:.12e}")
print(f"  mu(pi, 1)    = {mu(math.pi, 1):.12e}   4/pi^4    = {4.0 / math.pi ** 4:.12e}")
