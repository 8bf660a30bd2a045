#!/usr/bin/env python3
"""Cross-validate the independent routes to the same gap probability.

The probability that the hard edge of a beta ensemble is free of
eigenvalues can be computed three ways that share no code path: a
hypergeometric series over partitions, a compact torus integral (when
``2/beta`` is a positive integer), and a complex contour integral (when
``beta*a/2`` is a small nonnegative integer).  This script evaluates
all applicable routes at a few parameter points and prints them side
by side, then shows the finite-size probability converging to its
hard-edge limit as the ensemble grows.
"""

from __future__ import annotations

from betagap.contour import hard_contour_E0, torus_E0_finiteN, torus_E0_hard
from betagap.gap import exact_E0_finiteN, exact_E0_hard


def print_hard_edge_routes() -> None:
    """Print series / torus / contour values at shared parameter points."""
    print("hard-edge E(0;(0,s)): independent routes")
    print(f"{'beta':>6} {'a':>6} {'s':>5}  {'series':>18} {'torus':>18} {'contour':>18}")
    points = [
        (1.0, 2.0, 2.0),
        (2.0, 1.0, 2.0),
        (3.0, 2.0 / 3.0, 2.0),
        (4.0, 1.0, 1.5),
    ]
    for beta, a, s in points:
        series = exact_E0_hard(s, a, beta)
        torus = torus_E0_hard(s, a, beta) if (2.0 / beta).is_integer() else None
        contour = hard_contour_E0(s, a, beta)
        torus_txt = f"{torus:18.15f}" if torus is not None else f"{'(2/beta not int)':>18}"
        print(f"{beta:6.1f} {a:6.3f} {s:5.2f}  {series:18.15f} {torus_txt} {contour:18.15f}")
    print()


def print_finite_size_routes() -> None:
    """Print the finite-size series against the torus integral."""
    print("finite-size E_N(0;(0,s)): series vs torus")
    for s, a, beta, N in [(0.5, 2.0 / 3.0, 3.0, 4), (0.4, 2.0, 2.0, 3)]:
        series = exact_E0_finiteN(s, a, beta, N)
        torus = torus_E0_finiteN(s, a, beta, N)
        print(
            f"  beta={beta:.1f} a={a:.3f} N={N} s={s}: "
            f"series={series:.15f} torus={torus:.15f} "
            f"rel_diff={abs(series / torus - 1.0):.2e}"
        )
    print()


def print_hard_edge_limit() -> None:
    """Show E_N(0;(0,s/4N)) approaching the hard-edge value."""
    beta, a, s = 2.0, 1.0, 2.0
    hard = exact_E0_hard(s, a, beta)
    print(f"hard-edge limit at beta={beta:.0f}, a={a:.0f}, s={s:.0f}")
    print(f"  limit value: {hard:.15f}")
    for N in (5, 10, 20, 40, 80):
        fin = exact_E0_finiteN(s / (4.0 * N), a, beta, N)
        print(f"  N={N:3d}: {fin:.15f}  rel_gap={abs(fin / hard - 1.0):.2e}")


def main() -> int:
    print_hard_edge_routes()
    print_finite_size_routes()
    print_hard_edge_limit()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
