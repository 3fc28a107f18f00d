#!/usr/bin/env python3
"""Write the imaginary parts of the first N nontrivial zeta zeros to a text file.

Uses mpmath.zetazero, which is independent of the C++ code in this
repository. Output format: '#' comment header, then one ordinate per line.
"""
import argparse
import sys

import mpmath


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("count", type=int)
    ap.add_argument("out")
    ap.add_argument("--digits", type=int, default=15,
                    help="decimal places after the point")
    args = ap.parse_args()

    mpmath.mp.dps = args.digits + 10
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(f"# first {args.count} nontrivial zeta zeros, Im(rho), "
                 f"{args.digits} decimals, computed with mpmath.zetazero\n")
        for n in range(1, args.count + 1):
            t = mpmath.im(mpmath.zetazero(n))
            scaled = int(mpmath.nint(t * 10**args.digits))
            whole, frac = divmod(scaled, 10**args.digits)
            fh.write(f"{whole}.{frac:0{args.digits}d}\n")
            if n % 200 == 0:
                fh.flush()
                print(n, file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
