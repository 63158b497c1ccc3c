"""Regenerate tests/data/phi_reference.csv by high-precision quadrature.

Grid: z = i/100 for i in -800..800, as exact doubles. Positive values
accumulate small Gauss-Legendre integrals of exp(-t^2/2)/sqrt(2*pi) from the
exact anchor Phi(0) = 1/2; negative values follow by reflection. No erf or
erfc implementation is involved, so the grid stays an independent reference
for the library's normal CDF.

Usage: python tools/gen_phi_reference.py [OUTPUT]

Needs mpmath (not a package dependency; install it just for this script).
"""

import sys

import mpmath as mp

mp.mp.dps = 40

INV_SQRT_2PI = 1 / mp.sqrt(2 * mp.pi)


def density(t):
    return mp.exp(-t * t / 2) * INV_SQRT_2PI


def main(path: str) -> None:
    zs = [float(i) / 100.0 for i in range(801)]
    phis = [mp.mpf("0.5")]
    for i in range(1, 801):
        phis.append(phis[-1] + mp.quad(density, [mp.mpf(zs[i - 1]), mp.mpf(zs[i])]))
    with open(path, "w", encoding="utf-8") as f:
        f.write("z,phi\n")
        for i in range(-800, 801):
            z = float(i) / 100.0
            phi = phis[i] if i >= 0 else 1 - phis[-i]
            f.write(f"{z!r},{mp.nstr(phi, 25)}\n")
    print(f"wrote 1601 rows to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/phi_reference.csv")
