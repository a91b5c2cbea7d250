"""E-polynomials of the Cartan brane for small genus and rank."""

import argparse
from dataclasses import dataclass

from epoly import charvar as cv


@dataclass
class Config:
    max_genus: int = 2
    max_n: int = 3
    latex: bool = False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-genus", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--latex", action="store_true")
    cfg = Config(**vars(ap.parse_args()))

    for g in range(1, cfg.max_genus + 1):
        for n in range(1, cfg.max_n + 1):
            p = cv.cartan_brane(g, n)
            body = p.to_latex() if cfg.latex else p.to_text()
            print(f"g={g} n={n} ({len(p.terms)} terms): {body}")


if __name__ == "__main__":
    main()
