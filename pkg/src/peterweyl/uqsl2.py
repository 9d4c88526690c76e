"""A PBW-truncated quantized enveloping algebra of sl2 over Q(v).

Elements are finite combinations of ordered monomials F^a K^b E^c with
a, c >= 0 and b any integer, coefficients in Q(v), and q = v^2.  Products
are rewritten into that normal form through the defining relations

    K E = q^2 E K,    K F = q^-2 F K,
    E F - F E = (K - K^-1) / (q - q^-1).

Weights are recorded as integer multiples of the fundamental weight, so
the n+1 dimensional simple module has weights n, n-2, ..., -n and K acts
on a weight-m vector by q^m.  The exponent b counts powers of K itself;
the group-like element attached to twice the weight m is then K^m, which
keeps every element of interest inside the integer-exponent algebra even
though single fundamental weights would need a square root of K.

The braiding data is a diagonal weight pairing together with a truncated
expansion sum_k c_k E^k (x) F^k.  The coefficient convention for c_k is
not hard-coded: a small sign/twist family is enumerated and the member
that intertwines the coproduct with its opposite on tensor products of
small modules is selected (ConventionError if none does).  Pairing the
two braiding legs against a module turns matrix coefficients of the
module into algebra elements; summing the diagonal ones yields, for each
module, a central element, and these satisfy the same product rule as
the modules' tensor decompositions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import (
    ConventionError,
    InternalError,
    PreconditionError,
    VariantError,
)
from .exact.linalg import Matrix, solve_linear, rref
from .exact.scalars import RatFun, scalar_to_str

_V = RatFun.gen()
_R1 = RatFun.of(1)
_R0 = RatFun.of(0)


def qpow(m: int) -> RatFun:
    """q^m in Q(v), with q = v^2."""
    return _V ** (2 * m)


def qint(k: int) -> RatFun:
    """The balanced q-integer [k] = (q^k - q^-k) / (q - q^-1)."""
    if k < 0:
        return -qint(-k)
    out = _R0
    for t in range(k):
        out = out + qpow(k - 1 - 2 * t)
    return out


def qfact(k: int) -> RatFun:
    """The q-factorial [k]! = [1][2]...[k]."""
    out = _R1
    for t in range(2, k + 1):
        out = out * qint(t)
    return out


_QDIFF = qpow(1) - qpow(-1)


def _coeff(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFun.of(x)
    raise VariantError("coefficients live in Q(v), got %r" % (x,))


def _acc(terms: dict, key, value) -> None:
    cur = terms.get(key)
    cur = value if cur is None else cur + value
    if cur:
        terms[key] = cur
    elif key in terms:
        del terms[key]


# ---------------------------------------------------------------------------
# normal-form rewriting
# ---------------------------------------------------------------------------
#
# An element in normal form is multiplied on the right by one generator at
# a time.  Appending E extends the monomial directly.  Appending K walks
# past E^c at the cost of q^-2c per K (and q^+2c per K^-1).  Appending F
# walks past E^c with the commutator identity
#
#   E^c F = F E^c + [c] (q^-(c-1) K - q^(c-1) K^-1) E^(c-1) / (q - q^-1)
#
# and then past K^b, so one F step produces at most three monomials.


def _rmul_e(terms: dict) -> dict:
    return {(a, b, c + 1): v for (a, b, c), v in terms.items()}


def _rmul_k(terms: dict, step: int) -> dict:
    out: dict = {}
    for (a, b, c), v in terms.items():
        _acc(out, (a, b + step, c), v * qpow(-2 * step * c))
    return out


def _rmul_f(terms: dict) -> dict:
    out: dict = {}
    for (a, b, c), v in terms.items():
        _acc(out, (a + 1, b, c), v * qpow(-2 * b))
        if c:
            w = v * qint(c) / _QDIFF
            _acc(out, (a, b + 1, c - 1), w * qpow(-(c - 1)))
            _acc(out, (a, b - 1, c - 1), -w * qpow(c - 1))
    return out


class UqElement:
    """An element in PBW normal form: (a, b, c) -> coefficient of F^a K^b E^c."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict = {}
        for (a, b, c), v in (terms or {}).items():
            if a < 0 or c < 0:
                raise PreconditionError("negative E or F exponent: %r" % ((a, b, c),))
            v = _coeff(v)
            if v:
                _acc(clean, (int(a), int(b), int(c)), v)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("UqElement is immutable")

    @staticmethod
    def zero() -> "UqElement":
        return UqElement()

    @staticmethod
    def one() -> "UqElement":
        return UqElement({(0, 0, 0): 1})

    @staticmethod
    def monomial(a: int, b: int, c: int, coeff=1) -> "UqElement":
        return UqElement({(a, b, c): coeff})

    @staticmethod
    def e() -> "UqElement":
        return UqElement({(0, 0, 1): 1})

    @staticmethod
    def f() -> "UqElement":
        return UqElement({(1, 0, 0): 1})

    @staticmethod
    def k(power: int = 1) -> "UqElement":
        return UqElement({(0, power, 0): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, UqElement):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, UqElement):
            return NotImplemented
        out = dict(self.terms)
        for key, v in other.terms.items():
            _acc(out, key, v)
        return UqElement(out)

    def __sub__(self, other):
        if not isinstance(other, UqElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return UqElement({key: -v for key, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UqElement):
            total: dict = {}
            for (a, b, c), d in other.terms.items():
                cur = dict(self.terms)
                for _ in range(a):
                    cur = _rmul_f(cur)
                step = 1 if b > 0 else -1
                for _ in range(abs(b)):
                    cur = _rmul_k(cur, step)
                for _ in range(c):
                    cur = _rmul_e(cur)
                for key, v in cur.items():
                    _acc(total, key, v * d)
            return UqElement(total)
        try:
            s = _coeff(other)
        except VariantError:
            return NotImplemented
        return UqElement({key: v * s for key, v in self.terms.items()})

    def __rmul__(self, other):
        try:
            s = _coeff(other)
        except VariantError:
            return NotImplemented
        return UqElement({key: s * v for key, v in self.terms.items()})

    def counit(self) -> RatFun:
        """Coefficient sum over the K-power monomials (E, F both vanish)."""
        out = _R0
        for (a, b, c), v in self.terms.items():
            if a == 0 and c == 0:
                out = out + v
        return out

    def antipode(self) -> "UqElement":
        """Anti-homomorphic extension of S(E) = -E K^-1, S(F) = -K F, S(K) = K^-1."""
        se = -(UqElement.e() * UqElement.k(-1))
        sf = -(UqElement.k() * UqElement.f())
        out = UqElement.zero()
        for (a, b, c), v in self.terms.items():
            m = UqElement.one()
            for _ in range(c):
                m = m * se
            m = m * UqElement.k(-b)
            for _ in range(a):
                m = m * sf
            out = out + v * m
        return out

    def delta(self) -> "UqTensor":
        """Coproduct, extended multiplicatively from the generator images."""
        de = UqTensor({((0, 0, 0), (0, 0, 1)): 1, ((0, 0, 1), (0, 1, 0)): 1})
        df = UqTensor({((1, 0, 0), (0, 0, 0)): 1, ((0, -1, 0), (1, 0, 0)): 1})
        out = UqTensor()
        for (a, b, c), v in self.terms.items():
            m = UqTensor.unit()
            for _ in range(a):
                m = m * df
            m = m * UqTensor({((0, b, 0), (0, b, 0)): 1})
            for _ in range(c):
                m = m * de
            out = out + v * m
        return out

    def to_json(self) -> dict:
        return {
            "%d,%d,%d" % key: scalar_to_str(self.terms[key])
            for key in sorted(self.terms)
        }

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            a, b, c = key
            word = ""
            if a:
                word += "F" if a == 1 else "F^%d" % a
            if b:
                word += "K" if b == 1 else "K^%d" % b
            if c:
                word += "E" if c == 1 else "E^%d" % c
            bits.append("(%s)%s" % (scalar_to_str(self.terms[key]), word or "1"))
        return " + ".join(bits)


class UqTensor:
    """A sum of pure tensors of PBW monomials in two slots."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict = {}
        for key, v in (terms or {}).items():
            v = _coeff(v)
            if v:
                _acc(clean, key, v)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("UqTensor is immutable")

    @staticmethod
    def unit() -> "UqTensor":
        return UqTensor({((0, 0, 0), (0, 0, 0)): 1})

    def __eq__(self, other):
        if isinstance(other, UqTensor):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, UqTensor):
            return NotImplemented
        out = dict(self.terms)
        for key, v in other.terms.items():
            _acc(out, key, v)
        return UqTensor(out)

    def __mul__(self, other):
        if isinstance(other, UqTensor):
            out: dict = {}
            for (m1, m2), u in self.terms.items():
                for (n1, n2), w in other.terms.items():
                    left = UqElement.monomial(*m1) * UqElement.monomial(*n1)
                    right = UqElement.monomial(*m2) * UqElement.monomial(*n2)
                    for k1, c1 in left.terms.items():
                        for k2, c2 in right.terms.items():
                            _acc(out, (k1, k2), u * w * c1 * c2)
            return UqTensor(out)
        try:
            s = _coeff(other)
        except VariantError:
            return NotImplemented
        return UqTensor({key: v * s for key, v in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return "UqTensor(%d terms)" % len(self.terms)


def adjoint(x: UqElement, y: UqElement) -> UqElement:
    """Adjoint action sum x_(1) y S(x_(2)) through the coproduct of x."""
    out = UqElement.zero()
    for (m1, m2), cf in x.delta().terms.items():
        piece = UqElement.monomial(*m1) * y * UqElement.monomial(*m2).antipode()
        out = out + cf * piece
    return out


# ---------------------------------------------------------------------------
# simple modules
# ---------------------------------------------------------------------------


class UqModule:
    """The n+1 dimensional simple module with weights n, n-2, ..., -n.

    Basis vectors are indexed 0..n from the highest weight down, with
    E v_i = [n-i+1] v_(i-1), F v_i = [i+1] v_(i+1), K v_i = q^(n-2i) v_i.
    """

    __slots__ = ("n", "dim", "weights", "mat_e", "mat_f", "mat_k")

    def __init__(self, n, dim, weights, mat_e, mat_f, mat_k):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "mat_e", mat_e)
        object.__setattr__(self, "mat_f", mat_f)
        object.__setattr__(self, "mat_k", mat_k)

    def __setattr__(self, *a):
        raise AttributeError("UqModule is immutable")

    def k_power(self, b: int) -> Matrix:
        d = self.dim
        return Matrix(
            [
                [qpow(self.weights[i] * b) if i == j else _R0 for j in range(d)]
                for i in range(d)
            ]
        )

    def act(self, x: UqElement) -> Matrix:
        """Matrix of x, assembled monomial by monomial."""
        d = self.dim
        out = Matrix.zeros(d, d)
        for (a, b, c), v in x.terms.items():
            m = self.k_power(b)
            for _ in range(a):
                m = self.mat_f * m
            for _ in range(c):
                m = m * self.mat_e
            out = out + m.scale(v)
        return out

    def __repr__(self):
        return "UqModule(n=%d)" % self.n


def _commutant_dimension(mats) -> int:
    """Dimension of the joint commutant of a list of d x d matrices."""
    d = mats[0].nrows
    rows = []
    for m in mats:
        for i in range(d):
            for j in range(d):
                row = [_R0] * (d * d)
                for t in range(d):
                    row[t * d + j] = row[t * d + j] + m[i, t]
                    row[i * d + t] = row[i * d + t] - m[t, j]
                rows.append(row)
    sol = solve_linear(rows, [_R0] * len(rows))
    return len(sol.nullspace)


@lru_cache(maxsize=None)
def module(n: int) -> UqModule:
    """Build the n+1 dimensional simple module and verify it is one."""
    if n < 0:
        raise PreconditionError("module label must be >= 0, got %d" % n)
    d = n + 1
    weights = tuple(n - 2 * i for i in range(d))
    mat_e = Matrix(
        [
            [qint(n - i) if j == i + 1 else _R0 for j in range(d)]
            for i in range(d)
        ]
    )
    mat_f = Matrix(
        [
            [qint(i) if j == i - 1 else _R0 for j in range(d)]
            for i in range(d)
        ]
    )
    mat_k = Matrix(
        [
            [qpow(weights[i]) if i == j else _R0 for j in range(d)]
            for i in range(d)
        ]
    )
    mod = UqModule(n, d, weights, mat_e, mat_f, mat_k)
    relation = mat_e * mat_f - mat_f * mat_e
    expected = (mod.k_power(1) - mod.k_power(-1)).scale(_R1 / _QDIFF)
    if relation != expected:
        raise InternalError("module matrices break the E,F commutator")
    if mod.k_power(1) * mat_e != (mat_e * mod.k_power(1)).scale(qpow(1) ** 2):
        raise InternalError("module matrices break the K,E relation")
    if _commutant_dimension([mat_e, mat_f, mat_k]) != 1:
        raise InternalError("module(%d) is not simple" % n)
    return mod


# ---------------------------------------------------------------------------
# braiding data
# ---------------------------------------------------------------------------


def r0_pairing(mu_minus: int, mu_plus: int) -> RatFun:
    """Diagonal braiding scalar for a weight pair, as a power of v.

    Weights are integer multiples of the fundamental weight, whose self
    pairing is 1/2 under the normalization that the root pairs to 2 with
    itself; q to that half-integral pairing is the integral power
    v^(mu_minus * mu_plus).
    """
    return _V ** (mu_minus * mu_plus)


class ThetaExpansion:
    """Truncated expansion sum_k c_k E^k (x) F^k with a selected convention."""

    __slots__ = ("order", "sign", "twist", "coeffs")

    def __init__(self, order: int, sign: int, twist: int):
        coeffs = []
        for kk in range(order + 1):
            c = _QDIFF ** kk / qfact(kk)
            if sign == -1 and kk % 2:
                c = -c
            c = c * qpow(twist * (kk * (kk - 1) // 2))
            coeffs.append(c)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("ThetaExpansion is immutable")

    def __repr__(self):
        return "ThetaExpansion(order=%d, sign=%d, twist=%d)" % (
            self.order,
            self.sign,
            self.twist,
        )


def _matrix_power(m: Matrix, k: int) -> Matrix:
    out = Matrix.identity(m.nrows)
    for _ in range(k):
        out = out * m
    return out


def r_action(theta_exp: ThetaExpansion, mv: UqModule, mw: UqModule) -> Matrix:
    """Matrix of the braiding on mv (x) mw: weight scaling after the expansion."""
    dv, dw = mv.dim, mw.dim
    total = Matrix.zeros(dv * dw, dv * dw)
    for kk in range(min(theta_exp.order, mv.n, mw.n) + 1):
        block = _matrix_power(mv.mat_e, kk).kron(_matrix_power(mw.mat_f, kk))
        total = total + block.scale(theta_exp.coeffs[kk])
    scaled = [
        [
            total[i, j] * r0_pairing(mv.weights[i // dw], mw.weights[i % dw])
            for j in range(dv * dw)
        ]
        for i in range(dv * dw)
    ]
    return Matrix(scaled)


def _coproduct_action(mv: UqModule, mw: UqModule, gen: str, opposite: bool) -> Matrix:
    iv, iw = Matrix.identity(mv.dim), Matrix.identity(mw.dim)
    if gen == "E":
        pairs = [(iv, mw.mat_e), (mv.mat_e, mw.mat_k)]
    elif gen == "F":
        pairs = [(mv.mat_f, iw), (mv.k_power(-1), mw.mat_f)]
    elif gen == "K":
        pairs = [(mv.mat_k, mw.mat_k)]
    else:
        raise PreconditionError("unknown generator %r" % gen)
    if opposite and gen == "E":
        pairs = [(mv.mat_e, iw), (mv.mat_k, mw.mat_e)]
    if opposite and gen == "F":
        pairs = [(iv, mw.mat_f), (mv.mat_f, mw.k_power(-1))]
    out = Matrix.zeros(mv.dim * mw.dim, mv.dim * mw.dim)
    for left, right in pairs:
        out = out + left.kron(right)
    return out


def _intertwines(theta_exp: ThetaExpansion, mv: UqModule, mw: UqModule) -> bool:
    rmat = r_action(theta_exp, mv, mw)
    for gen in ("E", "F", "K"):
        straight = _coproduct_action(mv, mw, gen, opposite=False)
        flipped = _coproduct_action(mv, mw, gen, opposite=True)
        if rmat * straight != flipped * rmat:
            return False
    return True


_CONVENTION: list = []


def theta(order: int) -> ThetaExpansion:
    """Truncated braiding expansion in the convention that intertwines.

    The sign/twist family c_k = sign^k q^(twist k(k-1)/2) (q - q^-1)^k / [k]!
    is enumerated once; the single member turning the braiding into an
    intertwiner between the coproduct and its opposite (checked on the two
    smallest nontrivial module squares) is kept.
    """
    if order < 0:
        raise PreconditionError("expansion order must be >= 0, got %d" % order)
    if not _CONVENTION:
        survivors = []
        for sign in (1, -1):
            for twist in (1, 0, -1):
                cand = ThetaExpansion(2, sign, twist)
                if _intertwines(cand, module(1), module(1)) and _intertwines(
                    cand, module(2), module(2)
                ):
                    survivors.append((sign, twist))
        if not survivors:
            raise ConventionError(
                "no sign/twist convention intertwines the coproducts"
            )
        if len(survivors) > 1:
            raise InternalError("convention selection is ambiguous: %r" % survivors)
        _CONVENTION.append(survivors[0])
    sign, twist = _CONVENTION[0]
    return ThetaExpansion(order, sign, twist)


def validate_theta(mv: UqModule, mw: UqModule) -> bool:
    """Check the selected convention intertwines the coproducts on mv (x) mw."""
    theta_exp = theta(min(mv.n, mw.n))
    return _intertwines(theta_exp, mv, mw)


# ---------------------------------------------------------------------------
# transferred matrix coefficients and central elements
# ---------------------------------------------------------------------------


def transferred_coefficient(n: int, i: int, j: int) -> UqElement:
    """Algebra element carried by the (i, j) matrix coefficient of module(n).

    Both braiding legs are paired against the module with the group-like
    element K^-1 inserted: one leg of each braiding factor acts on the
    module while the diagonal weight part contributes a K-power equal to
    the weight it faces.  Writing m_i = n - 2i, the expansion indices k, l
    survive only when l - k = i - j, and such a pair contributes

      c_k c_l q^(-m_i) <F^k E^l v_i, f_j> q^(-k (m_i + 2l)) K^((m_i+m_j)/2 + l) E^k F^l

    which has an integer K-exponent because m_i and m_j share parity.
    """
    mod = module(n)
    theta_exp = theta(n)
    if not 0 <= i <= n and 0 <= j <= n:
        raise PreconditionError("basis indices out of range")
    mi, mj = mod.weights[i], mod.weights[j]
    if (mi + mj) % 2:
        raise InternalError("weight parity broken for (%d, %d)" % (i, j))
    out = UqElement.zero()
    for l in range(max(0, i - j), i + 1):
        k = l - (i - j)
        if k < 0 or k > n:
            continue
        gamma = (_matrix_power(mod.mat_f, k) * _matrix_power(mod.mat_e, l))[j, i]
        if not gamma:
            continue
        coeff = (
            theta_exp.coeffs[k]
            * theta_exp.coeffs[l]
            * gamma
            * qpow(-mi)
            * qpow(-k * (mi + 2 * l))
        )
        term = UqElement.monomial(0, (mi + mj) // 2 + l, k, coeff)
        out = out + term * UqElement.monomial(l, 0, 0)
    return out


@lru_cache(maxsize=None)
def c_q(n: int) -> UqElement:
    """Central element attached to module(n): the transferred character.

    The diagonal matrix coefficients of the module are transferred into
    the algebra and summed; c_q(0) is the identity and the family obeys
    the same product rule as tensor products of the modules.
    """
    if n < 0:
        raise PreconditionError("module label must be >= 0, got %d" % n)
    out = UqElement.zero()
    for i in range(n + 1):
        out = out + transferred_coefficient(n, i, i)
    return out


def central_commutant_solve(deg: int, k_powers=None):
    """Basis of the commutant of {E, F, K} in a bounded monomial span.

    The span holds every monomial F^a K^b E^c with a, c <= deg and b in
    k_powers (default: |b| <= deg).  Commutation against each generator
    is one linear system over Q(v); the returned tuple of elements is the
    canonical nullspace basis.  This is an independent route to central
    elements: it never looks at modules or braiding data.
    """
    if deg < 0:
        raise PreconditionError("degree bound must be >= 0, got %d" % deg)
    if k_powers is None:
        k_powers = range(-deg, deg + 1)
    monos = sorted(
        (a, b, c)
        for a in range(deg + 1)
        for b in k_powers
        for c in range(deg + 1)
    )
    gens = [UqElement.e(), UqElement.f(), UqElement.k()]
    commutators = []
    row_keys: set = set()
    for mono in monos:
        x = UqElement.monomial(*mono)
        per = []
        for g in gens:
            comm = x * g - g * x
            per.append(comm)
            row_keys.update(comm.terms)
        commutators.append(per)
    keys = sorted(row_keys)
    if not keys:
        # every monomial in the span already commutes with the generators
        return tuple(UqElement.monomial(*mono) for mono in monos)
    rows = []
    for gi in range(len(gens)):
        for key in keys:
            rows.append([
                commutators[ci][gi].terms.get(key, _R0)
                for ci in range(len(monos))
            ])
    sol = solve_linear(rows, [_R0] * len(rows))
    basis = []
    for vec in sol.nullspace:
        terms = {mono: vec[ci] for ci, mono in enumerate(monos)}
        basis.append(UqElement(terms))
    return tuple(basis)


# ---------------------------------------------------------------------------
# component checks
# ---------------------------------------------------------------------------


def _coordinates(elems):
    """Common monomial index and coordinate rows for a list of elements."""
    keys = sorted({key for x in elems for key in x.terms})
    rows = [[x.terms.get(key, _R0) for key in keys] for x in elems]
    return keys, rows


def _in_span(rows, vec) -> bool:
    base, _ = rref(rows)
    ext, _ = rref(list(rows) + [vec])
    base = [r for r in base if any(r)]
    ext = [r for r in ext if any(r)]
    return len(base) == len(ext)


def joseph_component_check(n: int) -> dict:
    """Verify the block of the algebra carried by module(n).

    Checks that the transferred highest-to-lowest matrix coefficient is a
    unit multiple of K^n, grows the adjoint orbit of K^n under words of
    length at most 2n in the generators, and reports whether that orbit
    spans the expected (n+1)^2 dimensional block containing c_q(n).
    """
    if n < 0:
        raise PreconditionError("module label must be >= 0, got %d" % n)
    corner = transferred_coefficient(n, 0, 0)
    unit_ok = set(corner.terms) == {(0, n, 0)}
    gens = [UqElement.e(), UqElement.f(), UqElement.k()]
    target = (n + 1) ** 2
    basis = [UqElement.monomial(0, n, 0)]
    dim = 1
    for _ in range(2 * n):
        grown = list(basis)
        for x in basis:
            for g in gens:
                y = adjoint(g, x)
                if y:
                    grown.append(y)
        keys, rows = _coordinates(grown)
        reduced, pivots = rref(rows)
        basis = [
            UqElement({keys[ci]: row[ci] for ci in range(len(keys))})
            for row in reduced[: len(pivots)]
        ]
        if len(basis) == dim:
            break
        dim = len(basis)
        if dim > target:
            raise InternalError("adjoint orbit overshoots the block")
    keys, rows = _coordinates(basis + [c_q(n)])
    contains = _in_span(rows[: len(basis)], rows[-1])
    return {
        "n": n,
        "highest_to_lowest_unit": unit_ok,
        "ad_orbit_dimension": dim,
        "expected_dimension": target,
        "spans_component": dim == target,
        "central_element_inside": contains,
    }
