"""The truncation toolbox behind the estimate chain.

T_k clamps, S_k is its primitive (the energy the L^1 bound tests against),
phi_n is the odd band ramp active on n <= |z| <= n+1, and Psi_n is its
primitive. The script prints the closed forms at a few points, checks the
derivative relations by finite differences, and decomposes a sample field
into bands.
"""

import numpy as np

from movingflow.flowmap import FlowMap, VelocityField
from movingflow.mesh import Mesh, Slice, SpaceTimeField
from movingflow.truncation import Psi_n, S_k, T_k, band_decompose, phi_n


def main():
    z = np.array([-3.0, -1.5, -0.5, 0.0, 0.5, 1.5, 3.0])
    print("z      :", z)
    print("T_1(z) :", T_k(1.0, z))
    print("S_1(z) :", S_k(1.0, z))
    print("phi_1  :", phi_n(1, z))
    print("Psi_1  :", Psi_n(1, z))

    h = 1e-6
    zz = np.linspace(-4, 4, 1001)
    zz = zz[np.min(np.abs(zz[:, None] - np.array([[-2.0, -1.0, 1.0, 2.0]])), axis=1) > 1e-2]
    fd_S = (S_k(1.0, zz + h) - S_k(1.0, zz - h)) / (2 * h)
    fd_Psi = (Psi_n(1, zz + h) - Psi_n(1, zz - h)) / (2 * h)
    print(f"\nmax |S_1' - T_1|   = {np.max(np.abs(fd_S - T_k(1.0, zz))):.2e}")
    print(f"max |Psi_1' - phi_1| = {np.max(np.abs(fd_Psi - phi_n(1, zz))):.2e}")

    # band decomposition of u(x) = 3x on [0, 1]: thirds by construction
    nodes = np.linspace(0.0, 1.0, 301)
    mesh = Mesh(nodes)
    vals = 3.0 * nodes
    zero = lambda x, t: np.zeros_like(np.asarray(x, dtype=float))
    stf = SpaceTimeField(
        [Slice(0.0, 1.0, mesh, np.array([0.0, 1.0]), np.vstack([vals, vals]))],
        FlowMap(VelocityField(zero, zero, 0.0, 0.0)),
    )
    print("\nband decomposition of u = 3x on the unit space-time square:")
    for n in range(3):
        bd = band_decompose(stf, n)
        print(f"  n = {n}: |B_n| = {bd.b_measure:.6f}, |E_n| = {bd.e_measure:.6f}")


if __name__ == "__main__":
    main()
