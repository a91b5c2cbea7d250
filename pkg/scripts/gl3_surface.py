"""Strata of the GL_3 character variety of a genus g surface group."""

import argparse
from dataclasses import dataclass

from epoly import charvar as cv
from epoly.polycore import PolyX


@dataclass
class Config:
    genera: tuple = (2, 3, 4)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--genus", type=int, nargs="+", default=[2, 3, 4])
    cfg = Config(genera=tuple(ap.parse_args().genus))

    for g in cfg.genera:
        parts = cv.strata(cv.SurfaceGroup(g), 3)
        total = sum(parts.values(), PolyX.zero())
        print(f"g = {g}")
        for m, p in parts.items():
            print(f"  {str(m):<6} deg {p.degree():>3}  chi {cv.euler_char(p)}  lead {cv.component_count(p)}")
        print(f"  total  deg {total.degree():>3}  chi {cv.euler_char(total)}")


if __name__ == "__main__":
    main()
