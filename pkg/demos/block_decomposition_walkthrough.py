"""How the dual of a group algebra splits into matrix-coefficient blocks.

For a finite group G, the space of functions on G decomposes as a
direct sum of blocks, one per irreducible representation, each spanned
by that representation's matrix coefficients.  This script makes the
decomposition concrete for S3:

  * the blocks and their dimensions (dim V squared each),
  * the verification that they really are independent and exhaust
    everything,
  * the trace functionals z_V, one per block, which multiply exactly
    like the representation ring,
  * the central elements produced by an admissible candidate, which
    span the center of the group algebra.

Everything is computed over Q or a cyclotomic field; every equality
printed below is exact.
"""

from fractions import Fraction

from peterweyl.groups import symmetric
from peterweyl.pw import (
    character_structure_constants,
    component,
    direct_sum_decomposition,
    z,
    z_multiplicative_check,
)
from peterweyl.reps import decompose, irreps
from peterweyl.transfer import mock_pw_decomposition, s3_family


def main() -> None:
    grp = symmetric(3)
    simples = irreps(grp)

    print("== the blocks for S3 ==")
    print()
    total = 0
    for v in simples:
        block = component(v)
        total += block.subspace.dim
        print("  %-4s  dim V = %d   block dim = %d"
              % (v.label, v.dim, block.subspace.dim))
    print("  sum of block dims = %d = |G|" % total)
    print("  blocks independent and exhaustive:",
          direct_sum_decomposition(grp))
    print()

    print("== trace functionals multiply like the representation ring ==")
    print()
    print("For each pair of irreducibles, the product z_V z_W decomposes")
    print("with the same multiplicities as the tensor product V (x) W:")
    print()
    for v in simples:
        for w in simples:
            assert z_multiplicative_check(v, w)
            mults = decompose(v.tensor(w)).multiplicities
            terms = " + ".join(
                ("%d*%s" % (k, lbl)) if k > 1 else lbl
                for lbl, k in sorted(mults.items()) if k)
            print("  z_%s * z_%s = z of (%s)" % (v.label, w.label, terms))
    print()

    print("== the same constants, read off from characters alone ==")
    print()
    constants = character_structure_constants(grp)
    for (a, b), row in sorted(constants.items()):
        cells = ", ".join("%s: %s" % (lbl, coeff)
                          for lbl, coeff in sorted(row.items()))
        print("  (%s, %s) -> {%s}" % (a, b, cells))
    print()

    print("== central elements from an admissible candidate ==")
    print()
    result = mock_pw_decomposition(s3_family(Fraction(1), Fraction(1)))
    print("block dims        :", sorted(result["dims"]))
    print("decomposition     :", "direct" if result["direct"] else "NOT direct")
    print("central elements  : rank %d of a %d-dimensional center"
          % (result["c_rank"], result["center_dim"]))
    print("span the center   :", result["c_spans_center"])
    print()
    print("Each block also records how the adjoint action decomposes on")
    print("it, matching the character of V (x) V*:")
    for block in result["blocks"]:
        print("  %-4s  adjoint type: %s"
              % (block["label"], dict(sorted(block["ad_type"].items()))))


if __name__ == "__main__":
    main()
