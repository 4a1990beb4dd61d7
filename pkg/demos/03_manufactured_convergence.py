"""Convergence of the slicing solver against a manufactured solution.

The traveling wave u*(x, t) = sin(pi (x - c t)) solves the p = 2 problem on
the drifting interval [c t, 1 + c t] with forcing f = pi^2 u* (the drift
terms cancel in the residual). The study reports three regimes:

* time refinement on the moving domain: first order, as expected for
  backward Euler plus O(Delta) slicing;
* space refinement on a static domain (c = 0): second order, the clean
  spatial rate of the P1 discretization;
* space refinement on the moving domain: the rate degrades to ~1, the
  combined floor of the frozen-boundary error, which scales with the slice
  width, and of the handoff resampling, whose accumulated artificial
  diffusion scales with h. Both floors are proportional to the drift speed,
  so this is a property of the freeze-and-glue construction itself.
"""

import math

import numpy as np

from movingflow.flowmap import FlowMap, MovingDomain, VelocityField
from movingflow.presets import data_preset, law_preset, mms_exact
from movingflow.solver import SolverConfig, partition_time, solve_moving


def l2_qt_error(run, exact):
    total = 0.0
    for sl in run.solution.slices:
        xq, wq = sl.mesh.quad_points()
        per = [float(np.sum(wq * (sl.field(k)(xq) - exact(xq, sl.times[k])) ** 2))
               for k in range(sl.times.size)]
        total += float(np.trapezoid(per, sl.times))
    return math.sqrt(total)


def solve(c, n_h, dt, slices, T=0.5):
    vel = VelocityField(lambda x, t: np.full_like(np.asarray(x, dtype=float), c),
                        lambda x, t: np.zeros_like(np.asarray(x, dtype=float)),
                        abs(c), 0.0)
    dom = MovingDomain((0.0, 1.0), FlowMap(vel, ode_step=5e-3))
    law = law_preset("p_laplace", {"p": 2.0, "newton_eta": 1e-8})
    data = data_preset({"name": "mms_drift", "c": c}, {"name": "sine", "amplitude": 1.0},
                       T, (0.0, 1.0))
    grid = partition_time(T, slices, dom)
    cfg = SolverConfig(eps=1e-9, h_target=1.0 / n_h, dt=dt, newton_tol=1e-11,
                       newton_max_iter=50, convection_scheme="centered")
    run = solve_moving(dom, law, None, vel, data, 1e-9, grid, cfg)
    return l2_qt_error(run, mms_exact(c))


def study(title, rows):
    print(f"\n--- {title} ---")
    errs = [e for _, e in rows]
    for (label, e), prev in zip(rows, [None] + errs[:-1]):
        order = "" if prev is None else f"   order {math.log2(prev / e):5.2f}"
        print(f"  {label:<24} error {e:.4e}{order}")


def main():
    T = 0.5
    study("dt refinement, moving domain (c = 0.2)", [
        (f"dt = 1/{m}", solve(0.2, 96, 1.0 / m, round(T * m)))
        for m in (10, 20, 40)
    ])
    study("h refinement, static domain (c = 0)", [
        (f"h = 1/{n}, dt = h^2", solve(0.0, n, 0.4 / n**2, 1))
        for n in (8, 16, 32)
    ])
    study("h refinement, moving domain (c = 0.2)", [
        (f"h = 1/{n}, dt = h^2", solve(0.2, n, 1.0 / n**2, round(T * n**2)))
        for n in (16, 32, 64)
    ])
    print("\nThe moving-domain h-rate saturates near first order: the slicing")
    print("construction pays O(Delta) at the frozen boundaries and O(h) for")
    print("resampling the handoff between slice meshes.")


if __name__ == "__main__":
    main()
