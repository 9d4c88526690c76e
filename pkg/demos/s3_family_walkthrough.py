"""Tour of the two-parameter family of admissible candidates on S3.

The family s3_family(lam, mu) produces, for each pair of rational
parameters, a two-tensor candidate P in kQ[S3] (x) kQ[S3].  This script
walks a handful of family members through the membership checks and
prints what each one satisfies:

  * admissibility (the three defining conditions at once),
  * multiplicativity on components of the regular representation,
  * multiplicativity on characters alone, which is strictly weaker,
  * the rank of the associated transfer map.

Run it directly; it prints a short report per candidate and finishes
with the one family member that separates the two multiplicativity
notions.
"""

from fractions import Fraction

from peterweyl.transfer import (
    in_a,
    membership_report,
    phi_rank,
    regular_p,
    s3_family,
    unit_p,
)
from peterweyl.groups import symmetric


def describe(p) -> None:
    rep = membership_report(p)
    print("candidate:", p.note or "(unnamed)")
    print("  admissible            :", rep.admissible)
    print("  multiplicative (M)    :", rep.multiplicative)
    print("  on characters (M0)    :", rep.character_multiplicative)
    print("  transfer rank         : %d of %d" % (rep.rank, 6))
    print("  image lands in center :", rep.center_image)
    if rep.witnesses:
        pair = rep.witnesses[0]
        print("  first escaping pair   : (%s, %s)" % pair)
    print()


def main() -> None:
    print("== generic family members ==")
    print()
    for lam, mu in ((1, 1), (2, 3), (5, 7)):
        describe(s3_family(Fraction(lam), Fraction(mu)))

    print("== degenerate parameter choices ==")
    print()
    print("Setting either parameter to zero kills part of the transfer")
    print("map; the candidate stays admissible but the rank drops.")
    print()
    for lam, mu in ((0, 1), (1, 0)):
        describe(s3_family(Fraction(lam), Fraction(mu)))

    print("== the two baseline candidates ==")
    print()
    grp = symmetric(3)
    describe(unit_p(grp))
    describe(regular_p(grp))

    print("== characters are not the whole story ==")
    print()
    p = s3_family(Fraction(0), Fraction(1))
    rep = membership_report(p)
    print("s3_family(0, 1) is multiplicative on every character, yet the")
    print("product of two copies of the 2-dimensional component escapes")
    print("its target block:")
    print("  on characters:", rep.character_multiplicative)
    print("  on components:", rep.multiplicative,
          "   witness:", rep.witnesses[0])
    print()
    print("So checking characters alone can miss a failure that the")
    print("componentwise condition catches.")

    assert in_a(p)
    assert phi_rank(s3_family(Fraction(1), Fraction(1))) == 6


if __name__ == "__main__":
    main()
