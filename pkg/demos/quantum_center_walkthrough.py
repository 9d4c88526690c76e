"""Central elements of a quantized enveloping algebra, checked exactly.

All arithmetic below happens in the rational function field Q(v) with
q = v^2, so every printed identity is an exact equality of normal
forms, not a numerical approximation.  The script walks through:

  * the defining relations in the PBW basis F^a K^b E^c,
  * the expansion element theta and its frozen coefficients,
  * the central elements c_n, their eigenvalues on the simple modules,
    and the product rule tying them to the representation ring,
  * the commutant filtration and the componentwise transfer checks.

Each section prints the identity as stated and then asserts it, so a
convention drift anywhere in the algebra would crash the walkthrough.
"""

from peterweyl.exact.scalars import RatFun
from peterweyl.exact.linalg import Matrix
from peterweyl.uqsl2 import (
    UqElement,
    c_q,
    central_commutant_solve,
    joseph_component_check,
    module,
    qint,
    qpow,
    theta,
    transferred_coefficient,
)

E = UqElement.e()
F = UqElement.f()
K = UqElement.k()
KINV = UqElement.k(-1)
QDIFF = qpow(1) - qpow(-1)


def confirmed(label: str, ok: bool) -> None:
    print("  %-46s %s" % (label, "confirmed" if ok else "FAILED"))
    assert ok, label


def main() -> None:
    print("== defining relations in the PBW normal form ==")
    print()
    confirmed("E F - F E  =  (K - K^-1)/(q - q^-1)",
              E * F - F * E == (K - KINV) * (1 / QDIFF))
    confirmed("K E K^-1   =  q^2 E", K * E * KINV == qpow(2) * E)
    confirmed("K F K^-1   =  q^-2 F", K * F * KINV == qpow(-2) * F)
    print()

    print("== the expansion element ==")
    print()
    th = theta(2)
    print("theta to order 2 has coefficients")
    print("  c_0 = 1")
    print("  c_1 = q - q^-1")
    print("  c_2 = q (q - q^-1)^2 / [2]        with [2] = q + q^-1")
    confirmed("coefficients match the stated formulas",
              list(th.coeffs) == [RatFun.of(1), QDIFF,
                                  qpow(1) * QDIFF * QDIFF / qint(2)])
    print()

    print("== central elements and their spectra ==")
    print()
    confirmed("c_1  =  q K + q^-1 K^-1 + (q - q^-1)^2 F E",
              c_q(1) == qpow(1) * K + qpow(-1) * KINV
              + (QDIFF * QDIFF) * (F * E))
    print()
    print("On the simple module with highest weight m, the element c_n")
    print("acts by the scalar  sum over t of q^((m+1)(n-2t)),  t = 0..n:")
    print()
    for n in (1, 2):
        for m in range(4):
            mod = module(m)
            expected = sum((qpow((m + 1) * (n - 2 * t)) for t in range(n + 1)),
                           RatFun.of(0))
            ok = mod.act(c_q(n)) == Matrix.identity(mod.dim).scale(expected)
            exponents = ", ".join(str((m + 1) * (n - 2 * t))
                                  for t in range(n + 1))
            confirmed("c_%d on module(%d): q-exponents {%s}"
                      % (n, m, exponents), ok)
    print()
    confirmed("product rule: c_1 * c_1  =  c_0 + c_2",
              c_q(1) * c_q(1) == c_q(0) + c_q(2))
    print()
    print("The product rule mirrors the tensor square of the defining")
    print("module: two-dimensional times two-dimensional is trivial plus")
    print("three-dimensional.")
    print()

    print("== the commutant filtration ==")
    print()
    print("Among PBW monomials F^a K^b E^c with a, c up to a degree cap,")
    print("the ones commuting with E, F and K form a filtration whose")
    print("steps are spanned by the c_n:")
    print()
    for deg in (0, 1, 2):
        basis = central_commutant_solve(deg)
        print("  degree cap %d: commutant dimension %d" % (deg, len(basis)))
    print()

    print("== componentwise transfer checks ==")
    print()
    for n in (1, 2, 3):
        report = joseph_component_check(n)
        flags = (report["highest_to_lowest_unit"]
                 and report["spans_component"]
                 and report["central_element_inside"])
        confirmed("component n=%d: orbit dim %d of %d, all checks"
                  % (n, report["ad_orbit_dimension"],
                     report["expected_dimension"]), flags)
    print()
    print("The corner coefficient of the transfer is grouplike up to the")
    print("expected power of q:")
    for n in (1, 2, 3):
        confirmed("corner(n=%d)  =  q^-%d K^%d" % (n, n, n),
                  transferred_coefficient(n, 0, 0)
                  == UqElement.monomial(0, n, 0, qpow(-n)))


if __name__ == "__main__":
    main()
