"""Tabulate GL_2 irreducible E-polynomials over the standard parameter sweep.

For each group: Euler characteristic, leading coefficient, the component
count predicted by the closed form, and whether the closure
irr = full - abelian holds.
"""

import argparse
from dataclasses import dataclass

from epoly import charvar as cv
from epoly.verify import gl2_sweep


@dataclass
class Config:
    family: str = "all"
    show_poly: bool = False


def rows(cfg: Config):
    for family, specs in gl2_sweep().items():
        if cfg.family not in ("all", family):
            continue
        for spec in specs:
            irr = cv.printed_irr_gl2(spec)
            lead = cv.component_count(irr) if irr else 0
            yield family, spec, irr, cv.euler_char(irr), lead, cv.corollary_component_count(spec), not cv.gl2_difference(spec)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="all", choices=("all", "free", "surface", "nonorientable", "torusknot"))
    ap.add_argument("--show-poly", action="store_true")
    cfg = Config(**vars(ap.parse_args()))

    print(f"{'group':<22} {'chi':>4} {'lead':>5} {'pred':>5}  closure")
    for family, spec, irr, chi, lead, pred, ok in rows(cfg):
        flag = "" if lead == pred else "  <- mismatch"
        print(f"{str(spec):<22} {str(chi):>4} {str(lead):>5} {str(pred):>5}  {'ok' if ok else 'FAIL'}{flag}")
        if cfg.show_poly:
            print(f"    {irr}")


if __name__ == "__main__":
    main()
