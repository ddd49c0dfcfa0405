#!/usr/bin/env python3
"""Regenerate zeta_zeros_1000.txt: imaginary parts of the nontrivial zeta
zeros up to height 1005, one per line, 18 significant digits.

Needs mpmath. Takes a few minutes.
"""

from mpmath import mp, zetazero

mp.dps = 25

HEIGHT = 1005


def main() -> None:
    out = []
    n = 1
    while True:
        gamma = zetazero(n).imag
        if gamma > HEIGHT:
            break
        out.append(mp.nstr(gamma, 18, strip_zeros=False))
        n += 1
    with open("zeta_zeros_1000.txt", "w") as fh:
        fh.write("\n".join(out) + "\n")
    print(f"wrote {len(out)} zeros")


if __name__ == "__main__":
    main()
