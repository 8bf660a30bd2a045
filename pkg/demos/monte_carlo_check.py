#!/usr/bin/env python3
"""Validate analytic gap probabilities against tridiagonal sampling.

A beta ensemble with the Laguerre-type weight can be sampled in
``O(N^2)`` time per draw through its bidiagonal matrix model, so the
analytic routes can be checked end to end against straightforward
counting: sample many spectra, count how often the interval
``(0, s/(4N))`` holds exactly ``n`` eigenvalues, and compare with the
series value.  This script runs that comparison at a few parameter
points and reports the distance in estimated standard errors.
"""

from __future__ import annotations

import argparse
import math

from betagap.gap import exact_E0_hard, exact_En_hard
from betagap.mc import EnsembleSpec, estimate_gap


def compare_point(
    beta: float, a: float, N: int, s: float, n: int, samples: int, seed: int
) -> None:
    """Print one MC-vs-exact comparison line."""
    est = estimate_gap(EnsembleSpec(beta=beta, a=a, N=N), s, n=n, samples=samples, seed=seed)
    if a == 0.0 and n == 0:
        # with no weight exponent the scaled minimum is exactly exponential
        exact = math.exp(-beta * s / 8.0)
        label = "closed form"
    elif n == 0:
        exact = exact_E0_hard(s, a, beta)
        label = "series"
    else:
        exact = exact_En_hard(s, a, beta, n)
        label = "series"
    sigma = abs(est.probability - exact) / est.stderr
    print(
        f"  beta={beta:<4.2g} a={a:<4.2g} N={N:<4d} s={s:<4.2g} n={n}: "
        f"mc={est.probability:.5f} +/- {est.stderr:.5f}  "
        f"{label}={exact:.5f}  distance={sigma:.2f} stderr"
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=20_000, help="draws per point")
    parser.add_argument("--seed", type=int, default=2024, help="base RNG seed")
    args = parser.parse_args()

    print(f"tridiagonal sampling vs analytic values ({args.samples} draws per point)")
    points = [
        (2.0, 0.0, 20, 1.6, 0),
        (2.0, 1.0, 100, 1.0, 0),
        (2.0, 1.0, 100, 4.0, 0),
        (1.0, 2.0, 50, 2.0, 0),
        (4.0, 1.0, 50, 1.5, 0),
        (2.0, 0.0, 100, 4.0, 1),
        (2.5, 0.8, 60, 1.0, 0),
    ]
    for offset, (beta, a, N, s, n) in enumerate(points):
        if a == 0.8:
            # fractional beta*a/2 has no series route; show the estimate alone
            est = estimate_gap(
                EnsembleSpec(beta=beta, a=a, N=N), s, n=n,
                samples=args.samples, seed=args.seed + offset,
            )
            print(
                f"  beta={beta:<4.2g} a={a:<4.2g} N={N:<4d} s={s:<4.2g} n={n}: "
                f"mc={est.probability:.5f} +/- {est.stderr:.5f}  "
                f"(no quantized series route at this a)"
            )
            continue
        compare_point(beta, a, N, s, n, args.samples, args.seed + offset)
    print()
    print("distances of a few stderr are expected; persistent large distances")
    print("would indicate a sampling or series error.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
