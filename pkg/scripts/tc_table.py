#!/usr/bin/env python3
"""Print the reconciled bound table for all signatures up to a given n."""

import argparse

from torustc.bounds import compute_bounds


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--csv", action="store_true")
    args = parser.parse_args()

    if args.csv:
        print("n,r,lower,upper_constructive,upper_dimension,tc")
    else:
        print(f"{'n':>3} {'r':>3} {'lower':>6} {'constructive':>13} {'dimension':>10} {'tc':>4}")
    for n in range(1, args.max_n + 1):
        for r in range(1, n + 1):
            b = compute_bounds(n, r)
            if args.csv:
                print(f"{b.n},{b.r},{b.lower},{b.upper_constructive},{b.upper_dimension},{b.tc}")
            else:
                mark = " " if b.constructive_tight else "*"
                print(f"{b.n:>3} {b.r:>3} {b.lower:>6} {b.upper_constructive:>12}{mark} "
                      f"{b.upper_dimension:>10} {b.tc:>4}")


if __name__ == "__main__":
    main()
