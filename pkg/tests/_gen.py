"""Seeded random scalar generators shared by the test modules."""

from fractions import Fraction

from peterweyl.exact.scalars import Cyclotomic, RatFun


def rand_frac(rng, height=30):
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return Fraction(num, den)


def rand_nonzero_frac(rng, height=30):
    while True:
        f = rand_frac(rng, height)
        if f:
            return f


def rand_cyclo(rng, n, height=9):
    deg = len(Cyclotomic.of(n, 0).coeffs)
    return Cyclotomic(n, [rand_frac(rng, height) for _ in range(deg)])


def rand_ratfun(rng, deg=2, height=6):
    num = [rand_frac(rng, height) for _ in range(rng.randint(1, deg + 1))]
    den = [rand_frac(rng, height) for _ in range(rng.randint(1, deg + 1))]
    if not any(den):
        den = [Fraction(1)]
    return RatFun(num, den)


def rand_scalar(rng, variant):
    if variant == "rational":
        return rand_frac(rng)
    if variant.startswith("cyclotomic"):
        n = int(variant.split("(")[1].rstrip(")"))
        return rand_cyclo(rng, n)
    return rand_ratfun(rng)
