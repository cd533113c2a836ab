"""Twisted semilinear descent for finite-dimensional K-vector spaces.

A datum on V = K^n assigns to each a in Gamma the map
a_V = (matrix M_a over K) composed with the a^-1-twist on coordinates,
subject to  b_V o a_V = (ab)_V o (multiply by zeta(a,b))  and 1_V = id.
With these conventions e_a |-> a_V makes the k-restriction of V a right
module over the crossed product A_zeta, with K acting by its original
scalar action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from . import qlinalg
from .cohomology import kx_coboundary_of, trivial_kx_cocycle
from .crossed import CrossedProductAlgebra
from .fields import FieldElement


# --- K-matrix helpers -----------------------------------------------------

def kmat(field, rows):
    """Freeze a list-of-lists of field elements (or rationals) into a
    tuple-of-tuples of FieldElements."""
    out = []
    for row in rows:
        out.append(
            tuple(
                x if isinstance(x, FieldElement) else field.from_rational(x)
                for x in row
            )
        )
    return tuple(out)


def kmat_identity(field, n):
    return tuple(
        tuple(field.one() if i == j else field.zero() for j in range(n))
        for i in range(n)
    )


def kmat_mul(a, b):
    return tuple(tuple(row) for row in qlinalg.mat_mul([list(r) for r in a], [list(r) for r in b]))


def kmat_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def kmat_twist(action, g, a):
    """Apply the Galois automorphism g to every entry."""
    return tuple(tuple(action.apply(g, x) for x in row) for row in a)


def kmat_inv(a):
    inv = qlinalg.mat_inv([list(r) for r in a])
    return None if inv is None else tuple(tuple(row) for row in inv)


# --- the datum ------------------------------------------------------------

@dataclass(frozen=True)
class SemilinearDatum:
    """V = K^dim with a_V = M_a o (a^-1 coordinate twist)."""

    action: object          # GaloisAction
    cocycle: object         # KxCocycle (normalized)
    dim: int
    matrices: tuple         # per group element, a dim x dim K-matrix

    @property
    def field(self):
        return self.action.field

    def matrix(self, a):
        return self.matrices[a]

    def apply(self, a, vec):
        """a_V applied to a K-coordinate vector."""
        ainv = self.action.group.inv(a)
        twisted = [self.action.apply(ainv, x) for x in vec]
        return qlinalg.mat_vec([list(r) for r in self.matrices[a]], twisted)


def make_datum(action, cocycle, matrices):
    mats = tuple(kmat(action.field, m) for m in matrices)
    dim = len(mats[0])
    return SemilinearDatum(action, cocycle, dim, mats)


def identity_datum(action, dim):
    """The untwisted datum: a_V = coordinate twist alone."""
    eye = kmat_identity(action.field, dim)
    return SemilinearDatum(
        action,
        trivial_kx_cocycle(action),
        dim,
        tuple(eye for _ in action.group.elements()),
    )


def validate_datum(datum):
    """Returns (True, None) or (False, violation description with the
    witnessing group element(s))."""
    action = datum.action
    group = action.group
    field = action.field
    n = datum.dim
    if len(datum.matrices) != group.order:
        return False, "one matrix per Galois group element required"
    for a in group.elements():
        m = datum.matrices[a]
        if len(m) != n or any(len(row) != n for row in m):
            return False, f"matrix for element {a} is not {n}x{n}"
    eye = kmat_identity(field, n)
    if datum.matrices[group.identity] != eye:
        return False, f"identity component is not the identity map (witness {group.identity})"
    if not datum.cocycle.is_normalized():
        return False, "cocycle is not normalized"
    for a in group.elements():
        if n and kmat_inv(datum.matrices[a]) is None:
            return False, f"component {a} is not bijective"
    # semilinearity is structural (matrix o twist); spot-check it anyway
    # on basis scalars and vectors
    gen = field.generator()
    for a in group.elements():
        ainv = group.inv(a)
        for j in range(n):
            vec = [field.zero()] * n
            vec[j] = field.one()
            lhs = datum.apply(a, [gen * x for x in vec])
            rhs = [action.apply(ainv, gen) * x for x in datum.apply(a, vec)]
            if lhs != rhs:
                return False, f"semilinearity fails at component {a}"
    for a in group.elements():
        for b in group.elements():
            ab = group.table[a][b]
            lhs = kmat_mul(
                datum.matrices[b],
                kmat_twist(action, group.inv(b), datum.matrices[a]),
            )
            scalar = action.apply(group.inv(ab), datum.cocycle.value(a, b))
            rhs = kmat_scale(scalar, datum.matrices[ab])
            if lhs != rhs:
                return False, f"twisted composition fails at pair ({a}, {b})"
    return True, None


# --- modules over the crossed product ------------------------------------

class AModule:
    """Right module over a crossed product, by rational action matrices
    (one per algebra k-basis element) on a k-space of dimension dim."""

    def __init__(self, algebra, dim, actions, check=True):
        self.algebra = algebra
        self.dim = dim
        self.actions = tuple(
            tuple(tuple(Fraction(x) for x in row) for row in m) for m in actions
        )
        if len(self.actions) != algebra.dim:
            raise ValueError("one action matrix per algebra basis element required")
        for m in self.actions:
            if len(m) != dim or any(len(row) != dim for row in m):
                raise ValueError("action matrix of the wrong shape")
        if check:
            self._check_axioms()

    def action_of(self, x):
        """Rational matrix of v -> v*x for an arbitrary algebra element."""
        coords = x.k_coords()
        out = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for z, c in enumerate(coords):
            if c:
                m = self.actions[z]
                for i in range(self.dim):
                    for j in range(self.dim):
                        out[i][j] += c * m[i][j]
        return [tuple(row) for row in out]

    def _check_axioms(self):
        algebra = self.algebra
        basis = algebra.k_basis()
        eye = [
            tuple(Fraction(i == j) for j in range(self.dim)) for i in range(self.dim)
        ]
        if self.action_of(algebra.one()) != eye:
            raise ValueError("unit does not act as the identity")
        for x_idx, x in enumerate(basis):
            rx = [list(r) for r in self.actions[x_idx]]
            for y_idx, y in enumerate(basis):
                ry = [list(r) for r in self.actions[y_idx]]
                # right modules: v.(xy) = (v.x).y, so R_{xy} = R_y R_x
                lhs = self.action_of(algebra.multiply(x, y))
                rhs = [tuple(row) for row in qlinalg.mat_mul(ry, rx)]
                if lhs != rhs:
                    raise ValueError(
                        f"module axiom fails on basis pair ({x_idx}, {y_idx})"
                    )

    def apply(self, vec, x):
        return qlinalg.mat_vec([list(r) for r in self.action_of(x)], list(vec))

    def __eq__(self, other):
        return (
            isinstance(other, AModule)
            and self.algebra is other.algebra
            and self.dim == other.dim
            and self.actions == other.actions
        )


def regular_module(algebra):
    """The algebra as a right module over itself."""
    actions = []
    basis = algebra.k_basis()
    for x in basis:
        cols = [algebra.multiply(b, x).k_coords() for b in basis]
        actions.append(
            [[cols[j][i] for j in range(algebra.dim)] for i in range(algebra.dim)]
        )
    return AModule(algebra, algebra.dim, actions)


# --- the equivalence ------------------------------------------------------

def _flatten(field, kvec):
    out = []
    for x in kvec:
        out.extend(x.coords)
    return out


def _unflatten(field, coords):
    deg = field.degree
    return [
        field.element(coords[j * deg: (j + 1) * deg])
        for j in range(len(coords) // deg)
    ]


def _scalar_k_matrix(field, lam, n):
    """k-matrix of v -> lam*v on K^n, flattened coordinates."""
    deg = field.degree
    dim = n * deg
    cols = []
    for j in range(n):
        for t in range(deg):
            basis = [Fraction(0)] * deg
            basis[t] = Fraction(1)
            prod = field._mul_coords(lam.coords, tuple(basis))
            col = [Fraction(0)] * dim
            for s in range(deg):
                col[j * deg + s] = prod[s]
            cols.append(col)
    return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def _semilinear_k_matrix(datum, a):
    """k-matrix of a_V on flattened coordinates."""
    field = datum.field
    deg = field.degree
    dim = datum.dim * deg
    cols = []
    for j in range(datum.dim):
        for t in range(deg):
            coords = [Fraction(0)] * deg
            coords[t] = Fraction(1)
            vec = [field.zero()] * datum.dim
            vec[j] = field.element(coords)
            cols.append(_flatten(field, datum.apply(a, vec)))
    return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def to_module(datum, algebra=None, check=True):
    """The k-restriction of V as a right module over A_zeta: K acts by
    scalars, e_a acts as a_V."""
    ok, why = validate_datum(datum)
    if not ok:
        raise ValueError(f"invalid datum: {why}")
    if algebra is None:
        algebra = CrossedProductAlgebra(datum.action, datum.cocycle)
    elif algebra.cocycle.values != datum.cocycle.values or algebra.action != datum.action:
        raise ValueError("algebra does not match the datum's twist")
    field = datum.field
    deg = field.degree
    semi = {a: _semilinear_k_matrix(datum, a) for a in datum.action.group.elements()}
    actions = []
    for a in datum.action.group.elements():
        for t in range(deg):
            coords = [Fraction(0)] * deg
            coords[t] = Fraction(1)
            lam = field.element(coords)
            # v . (lam e_a) = a_V(lam v)
            actions.append(
                qlinalg.mat_mul(semi[a], _scalar_k_matrix(field, lam, datum.dim))
            )
    return AModule(algebra, datum.dim * deg, actions, check=check)


def from_module(module, check=True):
    """Recover a semilinear datum: K-structure from the K-scalar action,
    a_V from the e_a action.  Returns (datum, basis) where basis columns
    are the chosen K-basis vectors in the module's coordinates; when the
    module came from to_module the basis is the identity and the datum
    roundtrips exactly."""
    algebra = module.algebra
    field = algebra.field
    deg = field.degree
    big = module.dim
    if big % deg:
        raise ValueError("module k-dimension is not a multiple of [K:k]")
    n = big // deg
    cocycle = algebra.cocycle
    if n == 0:
        datum = SemilinearDatum(algebra.action, cocycle, 0, tuple(() for _ in algebra.group.elements()))
        return datum, []
    # rational matrices for the scalar action of the field power basis
    ident = algebra.group.identity
    scalar_mats = [module.actions[ident * deg + t] for t in range(deg)]
    # greedy K-basis from the standard k-basis
    span_cols = []
    chosen = []
    for v_idx in range(big):
        vec = [Fraction(0)] * big
        vec[v_idx] = Fraction(1)
        if span_cols:
            trial = [list(col) for col in span_cols] + [vec]
            mat = [[trial[c][r] for c in range(len(trial))] for r in range(big)]
            if qlinalg.rank(mat) == len(span_cols):
                continue
        chosen.append(v_idx)
        for t in range(deg):
            col = [scalar_mats[t][r][v_idx] for r in range(big)]
            span_cols.append(col)
        if len(chosen) == n:
            break
    if len(chosen) < n:
        raise ValueError("K-scalar action is not free: no K-basis found")
    basis_mat = [[span_cols[c][r] for c in range(big)] for r in range(big)]
    inv = qlinalg.mat_inv(basis_mat)
    if inv is None:
        raise ValueError("K-scalar action is not free: no K-basis found")

    def k_coords_of(vec):
        return _unflatten(field, qlinalg.mat_vec(inv, list(vec)))

    matrices = []
    for a in algebra.group.elements():
        ra = module.actions[a * deg]  # action of e_a (field basis element 1)
        cols = []
        for i in chosen:
            image = [ra[r][i] for r in range(big)]
            cols.append(k_coords_of(image))
        matrices.append(
            tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        )
    datum = SemilinearDatum(algebra.action, cocycle, n, tuple(matrices))
    if check:
        ok, why = validate_datum(datum)
        if not ok:
            raise ValueError(f"module does not come from a valid datum: {why}")
    basis = [[basis_mat[r][c] for r in range(big)] for c in range(big)]
    return datum, basis


def fixed_space(datum):
    """k-basis of {v : a_V(v) = v for all a} for an untwisted datum, in
    flattened k-coordinates; verifies the classical dimension count and
    that the K-span of the fixed space is all of V."""
    one = datum.field.one()
    if any(x != one for x in datum.cocycle.values.values()):
        raise ValueError("fixed spaces only exist for untwisted data")
    ok, why = validate_datum(datum)
    if not ok:
        raise ValueError(f"invalid datum: {why}")
    field = datum.field
    deg = field.degree
    big = datum.dim * deg
    if big == 0:
        return []
    rows = []
    for a in datum.action.group.elements():
        m = _semilinear_k_matrix(datum, a)
        for i in range(big):
            rows.append([m[i][j] - Fraction(i == j) for j in range(big)])
    if all(not x for row in rows for x in row):
        basis = [
            [Fraction(i == j) for i in range(big)] for j in range(big)
        ]
    else:
        basis = qlinalg.kernel(rows)
    if len(basis) != datum.dim:
        raise ValueError("descent dimension count failed")
    # K-span of the fixed vectors must be everything
    span_cols = []
    for vec in basis:
        kvec = _unflatten(field, vec)
        for t in range(deg):
            coords = [Fraction(0)] * deg
            coords[t] = Fraction(1)
            lam = field.element(coords)
            span_cols.append(_flatten(field, [lam * x for x in kvec]))
    mat = [[span_cols[c][r] for c in range(len(span_cols))] for r in range(big)]
    if qlinalg.rank(mat) != big:
        raise ValueError("K-span of the fixed space is not all of V")
    return basis


def transport_datum(datum, primitive):
    """Replace a_V by b(a)*a_V; the result is a datum over the
    coboundary-shifted cocycle zeta * db."""
    action = datum.action
    group = action.group
    new_cocycle = datum.cocycle * kx_coboundary_of(action, primitive)
    matrices = []
    for a in group.elements():
        scalar = action.apply(group.inv(a), primitive[a])
        matrices.append(kmat_scale(scalar, datum.matrices[a]))
    out = SemilinearDatum(action, new_cocycle, datum.dim, tuple(matrices))
    ok, why = validate_datum(out)
    if not ok:
        raise ValueError(f"transport produced an invalid datum: {why}")
    return out


def conjugate_datum(datum, p):
    """The isomorphic datum P o a_V o P^-1 for an invertible K-matrix P."""
    action = datum.action
    group = action.group
    p = kmat(datum.field, p)
    pinv = kmat_inv(p)
    if pinv is None:
        raise ValueError("conjugating matrix must be invertible")
    matrices = []
    for a in group.elements():
        matrices.append(
            kmat_mul(kmat_mul(p, datum.matrices[a]), kmat_twist(action, group.inv(a), pinv))
        )
    return SemilinearDatum(action, datum.cocycle, datum.dim, tuple(matrices))


# --- morphisms ------------------------------------------------------------

def datum_morphisms(src, dst):
    """K-basis of {F : K-linear, F o a_V = a_V' o F for all a}, returned
    as K-matrices (dst.dim x src.dim)."""
    if src.action != dst.action or src.cocycle.values != dst.cocycle.values:
        raise ValueError("data over different twists have no morphisms here")
    field = src.field
    deg = field.degree
    n1, n2 = src.dim, dst.dim
    nun = n2 * n1 * deg  # rational unknowns for F's K-entries
    if nun == 0:
        return []
    rows = []
    group = src.action.group
    for a in group.elements():
        ainv = group.inv(a)
        gal = src.action.elements[ainv].matrix
        for i in range(n2):
            for j in range(n1):
                # (F M_a)_{ij} - (M'_a tau_{a^-1}(F))_{ij} = 0, one row
                # per rational coordinate
                row = [[Fraction(0)] * nun for _ in range(deg)]
                for l in range(n1):
                    c = src.matrices[a][l][j]
                    if not c:
                        continue
                    mm = _mult_matrix(field, c)
                    base = (i * n1 + l) * deg
                    for s in range(deg):
                        for t in range(deg):
                            row[s][base + t] += mm[s][t]
                for l in range(n2):
                    c = dst.matrices[a][i][l]
                    if not c:
                        continue
                    mm = _mult_matrix(field, c)
                    comb = qlinalg.mat_mul(mm, [list(r) for r in gal])
                    base = (l * n1 + j) * deg
                    for s in range(deg):
                        for t in range(deg):
                            row[s][base + t] -= comb[s][t]
                rows.extend(row)
    if all(not x for r in rows for x in r):
        sols = [
            [Fraction(i == j) for i in range(nun)] for j in range(nun)
        ]
    else:
        sols = qlinalg.kernel(rows)
    out = []
    for vec in sols:
        mat = []
        for i in range(n2):
            mat.append(
                tuple(
                    field.element(vec[(i * n1 + j) * deg: (i * n1 + j + 1) * deg])
                    for j in range(n1)
                )
            )
        out.append(tuple(mat))
    return out


def _mult_matrix(field, c):
    """Rational matrix of multiplication by c on the power basis."""
    deg = field.degree
    cols = []
    for t in range(deg):
        basis = [Fraction(0)] * deg
        basis[t] = Fraction(1)
        cols.append(field._mul_coords(c.coords, tuple(basis)))
    return [[cols[t][s] for t in range(deg)] for s in range(deg)]


def module_morphisms(src, dst):
    """Rational basis of {G : G R_x = R'_x G for all algebra basis x},
    i.e. right-module homomorphisms src -> dst."""
    if src.algebra is not dst.algebra:
        raise ValueError("modules over different algebras")
    n1, n2 = src.dim, dst.dim
    nun = n2 * n1
    if nun == 0:
        return []
    rows = []
    for rx, rxp in zip(src.actions, dst.actions):
        for i in range(n2):
            for j in range(n1):
                row = [Fraction(0)] * nun
                for l in range(n1):
                    row[i * n1 + l] += rx[l][j]
                for l in range(n2):
                    row[l * n1 + j] -= rxp[i][l]
                rows.append(row)
    if all(not x for row in rows for x in row):
        sols = [[Fraction(i == j) for i in range(nun)] for j in range(nun)]
    else:
        sols = qlinalg.kernel(rows)
    return [
        [tuple(vec[i * n1 + j] for j in range(n1)) for i in range(n2)]
        for vec in sols
    ]


def datum_morphism_k_matrix(src, dst, f):
    """Flatten a K-linear morphism of data to a rational matrix on the
    module coordinates."""
    field = src.field
    deg = field.degree
    cols = []
    for j in range(src.dim):
        for t in range(deg):
            coords = [Fraction(0)] * deg
            coords[t] = Fraction(1)
            vec = [field.zero()] * src.dim
            vec[j] = field.element(coords)
            image = qlinalg.mat_vec([list(r) for r in f], vec)
            cols.append(_flatten(field, image))
    return [
        [cols[j][i] for j in range(src.dim * deg)]
        for i in range(dst.dim * deg)
    ]


# --- obstruction and random data -----------------------------------------

def dimension_one_witness(action, cocycle, bound=5):
    """Search exhaustively over a coefficient grid for a single field
    element m making M = [[m]] a valid datum over the given quadratic
    cocycle (the condition is m * sigma(m) = zeta(sigma, sigma)).
    Returns m or None."""
    group = action.group
    if group.order != 2:
        raise ValueError("quadratic extensions only")
    sigma = 1 - group.identity
    target = cocycle.value(sigma, sigma)
    field = action.field
    rng = range(-bound, bound + 1)
    for coords in iproduct(rng, repeat=field.degree):
        if not any(coords):
            continue
        m = field.element(list(coords))
        if m * action.apply(sigma, m) == target:
            return m
    return None


def random_datum(action, dim, rand, twisted=True, coeff_bound=2):
    """A valid datum built by construction: start from the untwisted
    identity datum, transport by a random coboundary primitive, and
    conjugate by a random invertible matrix."""
    datum = identity_datum(action, dim)
    field = action.field
    if twisted and dim:
        primitive = {}
        for g in action.group.elements():
            while True:
                coords = [
                    Fraction(rand.randint(-coeff_bound, coeff_bound))
                    for _ in range(field.degree)
                ]
                if any(coords):
                    break
            primitive[g] = field.element(coords)
        primitive[action.group.identity] = field.one()
        datum = transport_datum(datum, primitive)
    if dim:
        while True:
            p = [
                [
                    Fraction(rand.randint(-coeff_bound, coeff_bound))
                    for _ in range(dim)
                ]
                for _ in range(dim)
            ]
            if qlinalg.mat_inv(p) is not None:
                break
        datum = conjugate_datum(datum, p)
    return datum
