"""Count injective quandle maps R_m -> R_n twice: directly, and through the
group side as backwards-partial morphisms between the inner pairs.

The two counts agree because the forward functor is a bijection on hom sets;
the default m = 3, n = 9 reproduces the 18-element hom set whose group-side
shape is three subgroups, each contributing six generator bijections.
"""

import argparse
from collections import Counter

from quandlekit import (
    dihedral,
    enumerate_homs,
    enumerate_star_morphisms,
    inn,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-m", type=int, default=3, help="source dihedral order (odd)")
    parser.add_argument("-n", type=int, default=9, help="target dihedral order (odd)")
    args = parser.parse_args()
    if args.m % 2 == 0 or args.n % 2 == 0:
        parser.error("both orders must be odd, faithfulness fails otherwise")

    rm, rn = dihedral(args.m), dihedral(args.n)
    homs = enumerate_homs(rm, rn, "injective")
    print("quandle side: %d injective maps R%d -> R%d" % (len(homs), args.m, args.n))
    for f in homs:
        print("  ", " ".join("%d" % v for v in f.mapping))

    pm, pn = inn(rm), inn(rn)
    print(
        "group side: inner pairs of orders %d and %d" % (len(pm.group), len(pn.group))
    )
    morphisms = enumerate_star_morphisms(pm, pn)
    print("            %d backwards-partial morphisms" % len(morphisms))

    by_subgroup = Counter()
    for m in morphisms:
        # reflections of the target pair are indexed by their rotation
        # exponent, readable off the image of point 0
        expos = tuple(sorted(p[0] for p in m.domain_omega))
        by_subgroup[expos] += 1
    for expos, count in sorted(by_subgroup.items()):
        print(
            "            subgroup from exponents %s: %d bijections" % (list(expos), count)
        )

    agree = len(homs) == len(morphisms)
    print("counts agree" if agree else "COUNTS DIFFER")
    raise SystemExit(0 if agree else 1)


if __name__ == "__main__":
    main()
