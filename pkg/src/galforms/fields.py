"""Exact arithmetic in quadratic and cyclotomic extensions of Q.

Fields carry explicit Galois groups acting on elements; norms, quadratic
Hilbert symbols over Q with their local formulas, the norm test for
quadratic extensions, and 2-torsion Brauer classes recorded by their
ramified places.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import qlinalg
from .groups import FiniteGroup

INFINITE_PLACE = "inf"


def _squarefree(d):
    d = abs(d)
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


def _factorize(n):
    n = abs(n)
    factors = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n):
    result = n
    for p in _factorize(n):
        result = result // p * (p - 1)
    return result


def _poly_divmod(num, den):
    """Quotient and remainder of integer/fraction polynomials
    (coefficient lists, low degree first)."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    r = list(num)
    while len(r) >= len(den) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(den):
            break
        coeff = r[-1] / den[-1]
        shift = len(r) - len(den)
        q[shift] += coeff
        for i, c in enumerate(den):
            r[shift + i] -= coeff * c
    while r and r[-1] == 0:
        r.pop()
    return q, r


def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, low degree first, as ints."""
    if n == 1:
        return [-1, 1]
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            phi_d = cyclotomic_polynomial(d)
            # multiply den by phi_d
            new = [Fraction(0)] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                for j, b in enumerate(phi_d):
                    new[i + j] += a * b
            den = new
    q, r = _poly_divmod(num, den)
    assert not r
    return [int(c) for c in q]


class GaloisField:
    """Q, Q(sqrt(d)), or Q(zeta_n), with the power basis."""

    __slots__ = ("kind", "param", "degree", "_reduction")

    def __init__(self, kind, param=None):
        if kind == "rationals":
            self.kind, self.param, self.degree = kind, None, 1
            self._reduction = None
        elif kind == "quadratic":
            d = int(param)
            if d in (0, 1) or not _squarefree(d):
                raise ValueError("quadratic parameter must be squarefree and != 0, 1")
            self.kind, self.param, self.degree = kind, d, 2
            self._reduction = None
        elif kind == "cyclotomic":
            n = int(param)
            if n < 3:
                raise ValueError("cyclotomic parameter must be >= 3")
            self.kind, self.param = kind, n
            m = euler_phi(n)
            self.degree = m
            phi = cyclotomic_polynomial(n)
            # x^m = -(phi[0] + phi[1] x + ... + phi[m-1] x^{m-1})
            reduction = [None] * (2 * m - 1)
            for k in range(m):
                vec = [Fraction(0)] * m
                vec[k] = Fraction(1)
                reduction[k] = vec
            for k in range(m, 2 * m - 1):
                prev = reduction[k - 1]
                shifted = [Fraction(0)] + prev[:-1]
                overflow = prev[-1]
                if overflow:
                    for i in range(m):
                        shifted[i] -= overflow * phi[i]
                reduction[k] = shifted
            self._reduction = tuple(tuple(v) for v in reduction)
        else:
            raise ValueError(f"unknown field kind {kind!r}")

    def __eq__(self, other):
        return (
            isinstance(other, GaloisField)
            and self.kind == other.kind
            and self.param == other.param
        )

    def __hash__(self):
        return hash((self.kind, self.param))

    def __repr__(self):
        if self.kind == "rationals":
            return "Q"
        if self.kind == "quadratic":
            return f"Q(sqrt({self.param}))"
        return f"Q(zeta_{self.param})"

    def element(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError("coordinate count must equal the degree")
        return FieldElement(self, coords)

    def zero(self):
        return self.element([0] * self.degree)

    def one(self):
        return self.element([1] + [0] * (self.degree - 1))

    def from_rational(self, q):
        return self.element([Fraction(q)] + [0] * (self.degree - 1))

    def generator(self):
        """sqrt(d) or zeta_n (the identity for Q)."""
        if self.degree == 1:
            return self.one()
        return self.element([0, 1] + [0] * (self.degree - 2))

    def _mul_coords(self, x, y):
        if self.kind == "rationals":
            return (x[0] * y[0],)
        if self.kind == "quadratic":
            d = self.param
            return (x[0] * y[0] + d * x[1] * y[1], x[0] * y[1] + x[1] * y[0])
        m = self.degree
        conv = [Fraction(0)] * (2 * m - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        conv[i + j] += a * b
        out = [Fraction(0)] * m
        for k, c in enumerate(conv):
            if c:
                red = self._reduction[k]
                for i in range(m):
                    if red[i]:
                        out[i] += c * red[i]
        return tuple(out)


RATIONALS = GaloisField("rationals")


def quadratic_field(d):
    return GaloisField("quadratic", d)


def cyclotomic_field(n):
    return GaloisField("cyclotomic", n)


@dataclass(frozen=True)
class FieldElement:
    field: GaloisField
    coords: tuple

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.from_rational(other)

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field._mul_coords(self.coords, o.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        m = self.field.degree
        # multiplication-by-self matrix, columns = self * basis vector
        cols = []
        for j in range(m):
            basis = [Fraction(0)] * m
            basis[j] = Fraction(1)
            cols.append(self.field._mul_coords(self.coords, tuple(basis)))
        mat = [[cols[j][i] for j in range(m)] for i in range(m)]
        rhs = [Fraction(0)] * m
        rhs[0] = Fraction(1)
        sol = qlinalg.solve(mat, rhs)
        return FieldElement(self.field, tuple(sol))

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __repr__(self):
        return f"FieldElement({self.field!r}, {list(self.coords)})"


@dataclass(frozen=True)
class GaloisGroupElement:
    """Field automorphism given by its matrix on the power basis; for
    cyclotomic fields also the unit u with zeta -> zeta^u."""

    field: GaloisField
    matrix: tuple  # rows of Fractions
    unit: int = None

    def apply(self, x):
        if x.field != self.field:
            raise ValueError("element of a different field")
        coords = tuple(
            sum(row[j] * x.coords[j] for j in range(len(row)))
            for row in self.matrix
        )
        return FieldElement(self.field, coords)

    def __call__(self, x):
        return self.apply(x)

    def is_identity(self):
        m = self.field.degree
        return all(
            self.matrix[i][j] == (1 if i == j else 0)
            for i in range(m)
            for j in range(m)
        )


def _automorphism_from_generator_image(field, image):
    """Matrix of the automorphism sending the power-basis generator to
    the given element (columns = images of basis powers)."""
    m = field.degree
    cols = [field.one().coords]
    current = field.one()
    for _ in range(1, m):
        current = current * image
        cols.append(current.coords)
    return tuple(
        tuple(cols[j][i] for j in range(m)) for i in range(m)
    )


def galois_group(field):
    """(group, elements) for Gal(K/Q); abelian, order = degree."""
    if field.kind == "rationals":
        raise ValueError("galois_group requires a proper extension")
    if field.kind == "quadratic":
        elems = [
            GaloisGroupElement(field, _automorphism_from_generator_image(field, field.generator())),
            GaloisGroupElement(field, _automorphism_from_generator_image(field, -field.generator())),
        ]
        table = [[0, 1], [1, 0]]
        return FiniteGroup(table, check=False), elems
    n = field.param
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    zeta = field.generator()
    elems = [
        GaloisGroupElement(
            field, _automorphism_from_generator_image(field, zeta ** u), unit=u
        )
        for u in units
    ]
    index = {u: i for i, u in enumerate(units)}
    table = [[index[(u * v) % n] for v in units] for u in units]
    return FiniteGroup(table), elems


def norm(field, x):
    """Product of all Galois conjugates; a rational number."""
    if field.kind == "rationals":
        return Fraction(x.coords[0])
    _group, elems = galois_group(field)
    product = field.one()
    for g in elems:
        product = product * g.apply(x)
    return product.rational_value()


def _valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(a, p):
    a %= p
    if a == 0:
        raise ValueError("legendre symbol of multiple of p")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _as_integer_pair(q):
    """Represent a nonzero rational as an integer with the same square
    class (multiply by the square of the denominator)."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("nonzero rational required")
    return q.numerator * q.denominator


def hilbert_symbol(a, b, place):
    """Quadratic Hilbert symbol (a, b)_v over Q: +1 iff z^2 = a x^2 + b y^2
    has a nontrivial solution over the completion at the place (a prime p
    or the infinite place 'inf')."""
    a = _as_integer_pair(a)
    b = _as_integer_pair(b)
    if place in (INFINITE_PLACE, "oo", "infinity"):
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    if p < 2:
        raise ValueError(f"bad place {place!r}")
    alpha, u = _valuation(a, p)
    beta, w = _valuation(b, p)
    if p != 2:
        eps = (p - 1) // 2
        sign = -1 if (alpha * beta * eps) % 2 else 1
        if beta % 2:
            sign *= _legendre(u, p)
        if alpha % 2:
            sign *= _legendre(w, p)
        return sign
    # p = 2: epsilon(u) = (u-1)/2, omega(u) = (u^2-1)/8 mod 2
    e_u = ((u - 1) // 2) % 2
    e_w = ((w - 1) // 2) % 2
    o_u = ((u * u - 1) // 8) % 2
    o_w = ((w * w - 1) // 8) % 2
    exponent = e_u * e_w + alpha * o_w + beta * o_u
    return -1 if exponent % 2 else 1


def relevant_places(*rationals):
    """2, the primes dividing any argument (numerator or denominator),
    and the infinite place."""
    primes = {2}
    for q in rationals:
        q = Fraction(q)
        for n in (q.numerator, q.denominator):
            primes.update(_factorize(n))
    return sorted(primes) + [INFINITE_PLACE]


def is_norm_quadratic(d, c):
    """True iff c is a norm from Q(sqrt(d)): all local symbols (d, c)_v
    are +1 at the places dividing 2 d c and at infinity."""
    d = int(d)
    if d in (0, 1) or not _squarefree(d):
        raise ValueError("d must be squarefree and != 0, 1")
    c = Fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    return all(hilbert_symbol(d, c, v) == 1 for v in relevant_places(d, c))


@dataclass(frozen=True)
class BrauerClass:
    """2-torsion Brauer class over Q, recorded by the finite set of
    places with local invariant 1/2."""

    ramified_places: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ramified_places", frozenset(self.ramified_places))
        if len(self.ramified_places) % 2:
            raise ValueError("ramified set must have even cardinality (reciprocity)")

    def __add__(self, other):
        return BrauerClass(self.ramified_places ^ other.ramified_places)

    def is_trivial(self):
        return not self.ramified_places

    def sorted_places(self):
        finite = sorted(p for p in self.ramified_places if p != INFINITE_PLACE)
        return finite + ([INFINITE_PLACE] if INFINITE_PLACE in self.ramified_places else [])


def brauer_class_quaternion(d, c):
    """Class of the quaternion algebra (d, c) over Q."""
    d = int(d)
    c = Fraction(c)
    if c == 0 or d == 0:
        raise ValueError("nonzero arguments required")
    ramified = {
        v for v in relevant_places(d, c) if hilbert_symbol(d, c, v) == -1
    }
    return BrauerClass(frozenset(ramified))
