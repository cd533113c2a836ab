"""Cohomology of a finite group.

H^0 and nonabelian H^1 by enumeration; abelian H^2 through the
inhomogeneous bar complex for finite modules and through norm classes for
the multiplicative group of a cyclic extension; coboundary tests; the
transport between Hom(P, M)-valued cocycles and families of M-valued
cocycles; and the boundary map of a central extension of Gamma-groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from math import gcd

from .exact_linalg import (
    FiniteAbelianGroup,
    IntMatrix,
    kernel_basis,
    smith_normal_form,
    solve_integer,
)
from .fields import FieldElement, GaloisField, galois_group, is_norm_quadratic
from .groups import FiniteGroup
from . import qlinalg


# ---------------------------------------------------------------------------
# Gamma-groups (possibly nonabelian coefficients, action by permutations)

class GGroup:
    """A finite group A with an action of Gamma by automorphisms.

    action[g] is the permutation of A's elements given by g.
    """

    def __init__(self, gamma, coeff, action):
        self.gamma = gamma
        self.coeff = coeff
        self.action = tuple(tuple(p) for p in action)
        if len(self.action) != gamma.order:
            raise ValueError("need one permutation per Gamma element")
        for g, perm in enumerate(self.action):
            if sorted(perm) != list(range(coeff.order)):
                raise ValueError(f"action of {g} is not a permutation")
            for x in range(coeff.order):
                for y in range(coeff.order):
                    if perm[coeff.table[x][y]] != coeff.table[perm[x]][perm[y]]:
                        raise ValueError(f"action of {g} is not an automorphism")
        for g in range(gamma.order):
            for h in range(gamma.order):
                gh = gamma.table[g][h]
                composed = tuple(self.action[g][self.action[h][x]] for x in range(coeff.order))
                if composed != self.action[gh]:
                    raise ValueError("action is not a group homomorphism")

    def act(self, g, x):
        return self.action[g][x]

    @staticmethod
    def trivial_action(gamma, coeff):
        perm = tuple(range(coeff.order))
        return GGroup(gamma, coeff, [perm] * gamma.order)


def h0(ggroup):
    """Fixed subgroup A^Gamma, as a sorted list of element indices."""
    return [
        x
        for x in range(ggroup.coeff.order)
        if all(ggroup.act(g, x) == x for g in range(ggroup.gamma.order))
    ]


def is_one_cocycle(ggroup, f):
    gamma, coeff = ggroup.gamma, ggroup.coeff
    return all(
        f[gamma.table[s][t]] == coeff.table[f[s]][ggroup.act(s, f[t])]
        for s in range(gamma.order)
        for t in range(gamma.order)
    )


def one_cocycles(ggroup, budget=10**7):
    """All 1-cocycles Gamma -> A, each a tuple indexed by Gamma."""
    gamma, coeff = ggroup.gamma, ggroup.coeff
    n, m = gamma.order, coeff.order
    others = [g for g in range(n) if g != gamma.identity]
    if m ** len(others) > budget:
        raise ValueError(f"enumeration budget exceeded: {m}^{len(others)} candidates")
    cocycles = []
    for values in product(range(m), repeat=len(others)):
        f = [None] * n
        f[gamma.identity] = coeff.identity
        for g, v in zip(others, values):
            f[g] = v
        f = tuple(f)
        if is_one_cocycle(ggroup, f):
            cocycles.append(f)
    return cocycles


def h1_nonabelian(ggroup, budget=10**7):
    """Classes of 1-cocycles under b(s) = c^-1 a(s) s(c).

    Returns a list of classes (each a sorted list of cocycles); the class
    containing the constant-identity cocycle comes first.
    """
    gamma, coeff = ggroup.gamma, ggroup.coeff
    cocycles = one_cocycles(ggroup, budget=budget)
    remaining = set(cocycles)
    base = tuple(coeff.identity for _ in range(gamma.order))
    classes = []
    order = [base] + [z for z in cocycles if z != base]
    for z in order:
        if z not in remaining:
            continue
        cls = set()
        for c in range(coeff.order):
            cinv = coeff.inverse[c]
            twisted = tuple(
                coeff.table[coeff.table[cinv][z[s]]][ggroup.act(s, c)]
                for s in range(gamma.order)
            )
            cls.add(twisted)
        remaining -= cls
        classes.append(sorted(cls))
    return classes


# ---------------------------------------------------------------------------
# Finite abelian Gamma-modules in coordinates

class GModule:
    """Finite abelian Gamma-module: product of Z/d_i with integer action
    matrices (one per Gamma element), entries acting on coordinates mod
    the row modulus."""

    def __init__(self, gamma, moduli, action):
        self.gamma = gamma
        self.moduli = tuple(int(d) for d in moduli)
        if any(d < 1 for d in self.moduli):
            raise ValueError("moduli must be positive")
        self.action = tuple(action)
        k = len(self.moduli)
        if len(self.action) != gamma.order:
            raise ValueError("need one matrix per Gamma element")
        for mat in self.action:
            if mat.rows != k or mat.cols != k:
                raise ValueError("action matrix has wrong shape")
            for i in range(k):
                for j in range(k):
                    if (mat[i, j] * self.moduli[j]) % self.moduli[i]:
                        raise ValueError("action matrix not well defined mod moduli")
        for g in range(gamma.order):
            for h in range(gamma.order):
                gh = gamma.table[g][h]
                prod_mat = self.action[g] * self.action[h]
                if not self._congruent(prod_mat, self.action[gh]):
                    raise ValueError("action is not a group homomorphism")
        ident = IntMatrix.identity(k)
        for g in range(gamma.order):
            ginv = gamma.inverse[g]
            if not self._congruent(self.action[g] * self.action[ginv], ident):
                raise ValueError("action matrices must be invertible mod moduli")

    def _congruent(self, a, b):
        k = len(self.moduli)
        return all(
            (a[i, j] - b[i, j]) % self.moduli[i] == 0
            for i in range(k)
            for j in range(k)
        )

    @property
    def rank(self):
        return len(self.moduli)

    def size(self):
        n = 1
        for d in self.moduli:
            n *= d
        return n

    def reduce(self, vec):
        return tuple(x % d for x, d in zip(vec, self.moduli))

    def zero(self):
        return (0,) * self.rank

    def add(self, x, y):
        return self.reduce(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return self.reduce(a - b for a, b in zip(x, y))

    def act(self, g, vec):
        return self.reduce(self.action[g].apply(vec))

    def elements(self):
        return product(*(range(d) for d in self.moduli))

    @staticmethod
    def trivial(gamma, moduli):
        k = len(moduli)
        return GModule(gamma, moduli, [IntMatrix.identity(k)] * gamma.order)

    @staticmethod
    def inversion(gamma, moduli, inverting):
        """Action where the listed Gamma elements act by negation."""
        k = len(moduli)
        mats = []
        for g in range(gamma.order):
            mats.append(-IntMatrix.identity(k) if g in inverting else IntMatrix.identity(k))
        return GModule(gamma, moduli, mats)

    def to_ggroup(self):
        """The same module as a GGroup (element tables)."""
        elems = list(self.elements())
        index = {e: i for i, e in enumerate(elems)}
        table = [[index[self.add(x, y)] for y in elems] for x in elems]
        coeff = FiniteGroup(table, check=False)
        action = [
            tuple(index[self.act(g, x)] for x in elems)
            for g in range(self.gamma.order)
        ]
        return GGroup(self.gamma, coeff, action), elems


# --- bar complex ---------------------------------------------------------

def _pair_index(n, a, b):
    return a * n + b


def _d1_matrix(module):
    """C^1 -> C^2: (d f)(a,b) = a f(b) - f(ab) + f(a)."""
    gamma, k = module.gamma, module.rank
    n = gamma.order
    rows = n * n * k
    cols = n * k
    entries = [[0] * cols for _ in range(rows)]
    for a in range(n):
        for b in range(n):
            base = _pair_index(n, a, b) * k
            mat = module.action[a]
            for i in range(k):
                for j in range(k):
                    entries[base + i][b * k + j] += mat[i, j]
            ab = gamma.table[a][b]
            for i in range(k):
                entries[base + i][ab * k + i] -= 1
                entries[base + i][a * k + i] += 1
    return IntMatrix(entries)


def _d2_matrix(module):
    """C^2 -> C^3: (d z)(a,b,c) = a z(b,c) - z(ab,c) + z(a,bc) - z(a,b)."""
    gamma, k = module.gamma, module.rank
    n = gamma.order
    rows = n * n * n * k
    cols = n * n * k
    entries = [[0] * cols for _ in range(rows)]
    for a in range(n):
        mat = module.action[a]
        for b in range(n):
            ab = gamma.table[a][b]
            for c in range(n):
                base = ((a * n + b) * n + c) * k
                bc = gamma.table[b][c]
                col_bc = _pair_index(n, b, c) * k
                for i in range(k):
                    for j in range(k):
                        entries[base + i][col_bc + j] += mat[i, j]
                for i in range(k):
                    entries[base + i][_pair_index(n, ab, c) * k + i] -= 1
                    entries[base + i][_pair_index(n, a, bc) * k + i] += 1
                    entries[base + i][_pair_index(n, a, b) * k + i] -= 1
    return IntMatrix(entries)


def _cocycle_lattice_basis(d2, moduli_c2, moduli_c3):
    """Basis (as an IntMatrix of columns) of {x in Z^N2 : d2 x = 0 mod
    the C^3 moduli}.  Fast path when the module is homocyclic."""
    n2 = d2.cols
    if len(set(moduli_c3)) == 1:
        m = moduli_c3[0]
        s, _u, v = smith_normal_form(d2)
        r = min(s.rows, s.cols)
        scales = []
        for t in range(n2):
            st = s[t, t] if t < r else 0
            scales.append(m // gcd(st, m) if st else 1)
        cols = [
            [v[i, t] * scales[t] for i in range(n2)] for t in range(n2)
        ]
        return IntMatrix(cols).transpose()
    diag = IntMatrix.diagonal(list(moduli_c3))
    stacked = d2.hcat(diag)
    basis = kernel_basis(stacked)
    return basis.submatrix(range(n2), range(basis.cols))


def h2_bar(module):
    """(H^2 as FiniteAbelianGroup, representative normalized cocycles).

    Representatives are dicts {(a, b): element tuple}, one per invariant
    factor of H^2, in the same order.
    """
    gamma, k = module.gamma, module.rank
    n = gamma.order
    n1, n2 = n * k, n * n * k
    d1 = _d1_matrix(module)
    d2 = _d2_matrix(module)
    moduli_c2 = [module.moduli[i % k] for i in range(n2)]
    moduli_c3 = [module.moduli[i % k] for i in range(n * n * n * k)]
    bk = _cocycle_lattice_basis(d2, moduli_c2, moduli_c3)
    # generators of im(d1) + (moduli lattice of C^2), in K-coordinates
    gens = d1.hcat(IntMatrix.diagonal(moduli_c2))
    bk_rat = [[Fraction(bk[i, j]) for j in range(n2)] for i in range(n2)]
    bk_inv = qlinalg.mat_inv(bk_rat)
    coords = qlinalg.mat_mul(bk_inv, [[Fraction(gens[i, j]) for j in range(gens.cols)] for i in range(n2)])
    assert all(x.denominator == 1 for row in coords for x in row)
    x = IntMatrix([[int(v) for v in row] for row in coords])
    s, u, _v = smith_normal_form(x)
    diag = [s[t, t] for t in range(min(s.rows, s.cols))] + [0] * (s.rows - min(s.rows, s.cols))
    u_rat = [[Fraction(u[i, j]) for j in range(u.cols)] for i in range(u.rows)]
    u_inv = qlinalg.mat_inv(u_rat)
    factors = []
    reps = []
    for t, d in enumerate(diag):
        if d in (0, 1):
            continue
        factors.append(d)
        gen_k = [int(u_inv[i][t]) for i in range(n2)]
        vec = bk.apply(gen_k)
        table = {}
        for a in range(n):
            for b in range(n):
                base = _pair_index(n, a, b) * k
                table[(a, b)] = module.reduce(vec[base: base + k])
        reps.append(normalize_module_cocycle(module, table))
    order = sorted(range(len(factors)), key=lambda i: factors[i])
    group = FiniteAbelianGroup(tuple(factors[i] for i in order), 0)
    reps = [reps[i] for i in order]
    return group, reps


def is_module_cocycle(module, table):
    gamma = module.gamma
    n = gamma.order
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = module.add(module.act(a, table[(b, c)]), table[(a, gamma.table[b][c])])
                rhs = module.add(table[(gamma.table[a][b], c)], table[(a, b)])
                if lhs != rhs:
                    return False
    return True


def module_coboundary(module, f):
    """d f for f a dict {gamma element: module element}."""
    gamma = module.gamma
    n = gamma.order
    return {
        (a, b): module.sub(
            module.add(module.act(a, f[b]), f[a]), f[gamma.table[a][b]]
        )
        for a in range(n)
        for b in range(n)
    }


def is_module_coboundary(module, table):
    """A primitive f with d f = table, or None.  Exact (integer linear
    algebra, no enumeration)."""
    gamma, k = module.gamma, module.rank
    n = gamma.order
    d1 = _d1_matrix(module)
    n1, n2 = n * k, n * n * k
    moduli_c2 = [module.moduli[i % k] for i in range(n2)]
    a = d1.hcat(IntMatrix.diagonal(moduli_c2))
    target = []
    for idx in range(n2):
        pair = idx // k
        table_val = table[(pair // n, pair % n)]
        target.append(table_val[idx % k])
    sol = solve_integer(a, target)
    if sol is None:
        return None
    return {g: module.reduce(sol[g * k: (g + 1) * k]) for g in range(n)}


def cohomologous_module_cocycles(module, t1, t2):
    diff = {key: module.sub(t1[key], t2[key]) for key in t1}
    return is_module_coboundary(module, diff) is not None


def normalize_module_cocycle(module, table):
    """Cohomologous normalized cocycle: subtract d of the constant map at
    zeta(1,1)."""
    gamma = module.gamma
    e = gamma.identity
    c = table[(e, e)]
    f = {g: c for g in range(gamma.order)}
    d = module_coboundary(module, f)
    return {key: module.sub(table[key], d[key]) for key in table}


def enumerate_cocycles(module):
    """All normalized 2-cocycles, by backtracking over the entries with
    both arguments != identity.  Oracle-grade; desk scale only."""
    gamma = module.gamma
    n = gamma.order
    e = gamma.identity
    others = [g for g in range(n) if g != e]
    pairs = [(a, b) for a in others for b in others]
    elems = list(module.elements())
    zero = module.zero()
    results = []
    table = {}
    for a in range(n):
        table[(e, a)] = zero
        table[(a, e)] = zero

    def backtrack(i):
        if i == len(pairs):
            results.append(dict(table))
            return
        key = pairs[i]
        for val in elems:
            table[key] = val
            if not violates(key):
                backtrack(i + 1)
        del table[key]

    def violates(last_key):
        a0, b0 = last_key
        for a in others:
            for b in others:
                for c in others:
                    ab = gamma.table[a][b]
                    bc = gamma.table[b][c]
                    needed = ((b, c), (a, bc), (ab, c), (a, b))
                    if last_key not in needed:
                        continue
                    if any(key not in table for key in needed):
                        continue
                    lhs = module.add(module.act(a, table[(b, c)]), table[(a, bc)])
                    rhs = module.add(table[(ab, c)], table[(a, b)])
                    if lhs != rhs:
                        return True
        return False

    backtrack(0)
    return results


def h2_enumerate(module):
    """H^2 order by full enumeration of normalized cocycles and
    normalized coboundaries (independent oracle for h2_bar)."""
    gamma = module.gamma
    n = gamma.order
    cocycles = enumerate_cocycles(module)
    e = gamma.identity
    others = [g for g in range(n) if g != e]
    coboundaries = set()
    elems = list(module.elements())
    for values in product(elems, repeat=len(others)):
        f = {e: module.zero()}
        for g, v in zip(others, values):
            f[g] = v
        d = module_coboundary(module, f)
        d = normalize_module_cocycle(module, d)
        coboundaries.add(tuple(sorted(d.items())))
    assert len(cocycles) % len(coboundaries) == 0
    return len(cocycles) // len(coboundaries)


# ---------------------------------------------------------------------------
# K^x - valued cocycles

@dataclass(frozen=True)
class GaloisAction:
    """A Galois group as (finite group, aligned field automorphisms)."""

    field: GaloisField
    group: FiniteGroup
    elements: tuple

    @staticmethod
    def of(field):
        group, elems = galois_group(field)
        return GaloisAction(field, group, tuple(elems))

    def apply(self, g, x):
        return self.elements[g].apply(x)


@dataclass(frozen=True)
class KxCocycle:
    """Normalized-or-not 2-cocycle Gamma x Gamma -> K^x, as a full table."""

    action: GaloisAction
    values: dict = dc_field(compare=False)

    def value(self, a, b):
        return self.values[(a, b)]

    def is_normalized(self):
        gamma = self.action.group
        e = gamma.identity
        one = self.action.field.one()
        return all(
            self.values[(e, a)] == one and self.values[(a, e)] == one
            for a in range(gamma.order)
        )

    def normalized(self):
        """Divide out the coboundary of the constant map at zeta(1,1)."""
        gamma = self.action.group
        e = gamma.identity
        c = self.values[(e, e)]
        b = {g: c for g in range(gamma.order)}
        return KxCocycle(
            self.action,
            {
                key: self.values[key] / _kx_coboundary_value(self.action, b, key)
                for key in self.values
            },
        )

    def __mul__(self, other):
        return KxCocycle(
            self.action,
            {key: self.values[key] * other.values[key] for key in self.values},
        )

    def __truediv__(self, other):
        return KxCocycle(
            self.action,
            {key: self.values[key] / other.values[key] for key in self.values},
        )


def _kx_coboundary_value(action, b, key):
    a, c = key
    gamma = action.group
    return b[a] * action.apply(a, b[c]) / b[gamma.table[a][c]]


def is_two_cocycle_kx(cocycle, report=False):
    """Check zeta(a,bc) * a(zeta(b,c)) = zeta(ab,c) * zeta(a,b); returns
    bool, or (bool, witness triple) when report=True."""
    action = cocycle.action
    gamma = action.group
    n = gamma.order
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = cocycle.value(a, gamma.table[b][c]) * action.apply(a, cocycle.value(b, c))
                rhs = cocycle.value(gamma.table[a][b], c) * cocycle.value(a, b)
                if lhs != rhs:
                    return (False, (a, b, c)) if report else False
    return (True, None) if report else True


def kx_coboundary_of(action, b):
    """The 2-coboundary of b: Gamma -> K^x (a dict of field elements)."""
    gamma = action.group
    n = gamma.order
    if any(not b[g] for g in range(n)):
        raise ValueError("coboundary primitive must be nonzero everywhere")
    values = {
        (x, y): _kx_coboundary_value(action, b, (x, y))
        for x in range(n)
        for y in range(n)
    }
    return KxCocycle(action, values)


def kx_is_coboundary(cocycle, candidates):
    """Search for b with d b = cocycle, with b-values drawn from the given
    finite candidate set (b(1) forced to 1).  Returns b or None; a None
    verdict only means not-found-in-set."""
    action = cocycle.action
    gamma = action.group
    n = gamma.order
    e = gamma.identity
    others = [g for g in range(n) if g != e]
    one = action.field.one()
    cands = [c for c in candidates if c]
    for values in product(cands, repeat=len(others)):
        b = {e: one}
        for g, v in zip(others, values):
            b[g] = v
        if all(
            _kx_coboundary_value(action, b, key) == cocycle.values[key]
            for key in cocycle.values
        ):
            return b
    return None


def trivial_kx_cocycle(action):
    one = action.field.one()
    n = action.group.order
    return KxCocycle(action, {(a, b): one for a in range(n) for b in range(n)})


def quadratic_cocycle(action, c):
    """Normalized cocycle on a quadratic extension with zeta(s,s) = c."""
    if action.group.order != 2:
        raise ValueError("quadratic extension required")
    field = action.field
    c = c if isinstance(c, FieldElement) else field.from_rational(c)
    if not c:
        raise ValueError("cocycle value must be nonzero")
    sigma = 1 - action.group.identity
    one = field.one()
    values = {
        (action.group.identity, action.group.identity): one,
        (action.group.identity, sigma): one,
        (sigma, action.group.identity): one,
        (sigma, sigma): c,
    }
    cocycle = KxCocycle(action, values)
    if not is_two_cocycle_kx(cocycle):
        raise ValueError("value does not define a cocycle (must be fixed by conjugation)")
    return cocycle


# --- cyclic norm classes --------------------------------------------------

class CyclicNormClasses:
    """H^2(Gamma, K^x) for cyclic Gamma, via classes of k^x modulo norms.

    Class of a cocycle = product of zeta(g^i, g) over i, for a fixed
    generator g; triviality decidable in the quadratic case.
    """

    def __init__(self, action):
        self.action = action
        gamma = action.group
        gen = next(
            (g for g in gamma.elements() if gamma.element_order(g) == gamma.order),
            None,
        )
        if gen is None:
            raise ValueError("Galois group is not cyclic")
        self.generator = gen

    def class_element(self, cocycle):
        """The base-field element representing the class of the cocycle."""
        gamma = self.action.group
        g = self.generator
        power = gamma.identity
        result = self.action.field.one()
        for _ in range(gamma.order):
            result = result * cocycle.value(power, g)
            power = gamma.table[power][g]
        return result.rational_value()

    def is_trivial_element(self, c):
        c = Fraction(c)
        if c == 0:
            raise ValueError("class representative must be nonzero")
        field = self.action.field
        if field.kind == "quadratic":
            return is_norm_quadratic(field.param, c)
        raise NotImplementedError(
            "norm-class triviality is only decidable here for quadratic extensions"
        )

    def is_trivial(self, cocycle):
        return self.is_trivial_element(self.class_element(cocycle))

    def same_class(self, c1, c2):
        return self.is_trivial_element(Fraction(c1) / Fraction(c2))


# ---------------------------------------------------------------------------
# Transport between Hom(P, M)-valued cocycles and M-cocycle families

def hom_module(gamma, p_moduli, m_module):
    """Hom(P, M) as a GModule, for trivial Gamma-action on P.

    Coordinates are indexed by (i, j): P generator i, M coordinate j, with
    modulus gcd(p_i, d_j); coordinate value c embeds as the homomorphism
    sending the i-th P generator to c * (d_j / gcd) * e_j.
    Returns (module, to_hom, from_hom) where to_hom(coords) is a dict
    {P element: M element} and from_hom inverts it.
    """
    if m_module.gamma is not gamma and m_module.gamma != gamma:
        raise ValueError("module must be over the same Gamma")
    p_moduli = tuple(int(p) for p in p_moduli)
    d = m_module.moduli
    k = len(d)
    l = len(p_moduli)
    pairs = [(i, j) for i in range(l) for j in range(k)]
    moduli = [gcd(p_moduli[i], d[j]) for i, j in pairs]

    def gen_image(i, j):
        """M-element that the (i,j) basis hom sends generator i to."""
        vec = [0] * k
        g = gcd(p_moduli[i], d[j])
        vec[j] = d[j] // g if g else 0
        return tuple(vec)

    def solve_congruence(step, target, modulus):
        """t with t*step = target mod modulus (exists by construction)."""
        if modulus == 1:
            return 0
        g = gcd(step, modulus)
        if target % g:
            raise ValueError("congruence has no solution; action not well defined")
        step_, target_, modulus_ = step // g, target // g, modulus // g
        return (target_ * pow(step_, -1, modulus_)) % modulus_

    mats = []
    for g in range(gamma.order):
        cols = []
        for i, j in pairs:
            image = m_module.act(g, gen_image(i, j))
            col = []
            for i2, j2 in pairs:
                if i2 != i:
                    col.append(0)
                    continue
                gij2 = gcd(p_moduli[i2], d[j2])
                if gij2 == 0:
                    col.append(0)
                    continue
                step = d[j2] // gij2
                col.append(solve_congruence(step, image[j2], d[j2]) % gij2 if gij2 > 1 else 0)
            cols.append(col)
        mats.append(IntMatrix(cols).transpose())
    module = GModule(gamma, moduli, mats)

    def to_hom(coords):
        gen_images = []
        for i in range(l):
            vec = (0,) * k
            for j in range(k):
                c = coords[pairs.index((i, j))]
                img = gen_image(i, j)
                vec = m_module.add(vec, tuple(c * x for x in img))
            gen_images.append(vec)
        table = {}
        for p_elem in product(*(range(p) for p in p_moduli)):
            vec = (0,) * k
            for i in range(l):
                vec = m_module.add(vec, tuple(p_elem[i] * x for x in gen_images[i]))
            table[p_elem] = vec
        return table

    def from_hom(table):
        coords = []
        for i, j in pairs:
            gen = tuple(1 if t == i else 0 for t in range(l))
            image = table[gen]
            gij = gcd(p_moduli[i], d[j])
            if gij <= 1:
                coords.append(0)
                continue
            step = d[j] // gij
            if image[j] % step:
                raise ValueError("table is not a homomorphism into the right torsion")
            coords.append((image[j] // step) % gij)
        # verify round trip
        if to_hom(tuple(coords)) != dict(table):
            raise ValueError("table is not a homomorphism P -> M")
        return tuple(coords)

    return module, to_hom, from_hom


def transport_to_family(hom_mod, to_hom, p_moduli, m_module, table):
    """zeta valued in Hom(P, M) -> the family mu with mu(alpha)(a, b) =
    zeta(a, b)(alpha)."""
    gamma = hom_mod.gamma
    n = gamma.order
    family = {}
    for p_elem in product(*(range(p) for p in p_moduli)):
        family[p_elem] = {}
    for a in range(n):
        for b in range(n):
            hom_table = to_hom(table[(a, b)])
            for p_elem, m_val in hom_table.items():
                family[p_elem][(a, b)] = m_val
    return family


def family_to_transport(hom_mod, from_hom, p_moduli, m_module, family):
    """Inverse of transport_to_family."""
    gamma = hom_mod.gamma
    n = gamma.order
    table = {}
    for a in range(n):
        for b in range(n):
            hom_table = {p_elem: family[p_elem][(a, b)] for p_elem in family}
            table[(a, b)] = from_hom(hom_table)
    return table


# ---------------------------------------------------------------------------
# Boundary map of a central extension

@dataclass(frozen=True)
class CentralExtension:
    """1 -> Z -> B -> C -> 1 of finite Gamma-groups, Z central in B.

    inclusion[z] = index in B; projection[b] = index in C.
    """

    z: GGroup
    b: GGroup
    c: GGroup
    inclusion: tuple
    projection: tuple

    def __post_init__(self):
        zg, bg, cg = self.z.coeff, self.b.coeff, self.c.coeff
        if len(self.inclusion) != zg.order or len(self.projection) != bg.order:
            raise ValueError("map tables have wrong sizes")
        if len(set(self.inclusion)) != zg.order:
            raise ValueError("inclusion must be injective")
        if set(self.projection) != set(range(cg.order)):
            raise ValueError("projection must be surjective")
        for x in range(zg.order):
            for y in range(zg.order):
                if self.inclusion[zg.table[x][y]] != bg.table[self.inclusion[x]][self.inclusion[y]]:
                    raise ValueError("inclusion is not a homomorphism")
        for x in range(bg.order):
            for y in range(bg.order):
                if self.projection[bg.table[x][y]] != cg.table[self.projection[x]][self.projection[y]]:
                    raise ValueError("projection is not a homomorphism")
        kernel = [x for x in range(bg.order) if self.projection[x] == cg.identity]
        if sorted(self.inclusion) != sorted(kernel):
            raise ValueError("image of Z must equal the kernel of the projection")
        for z_img in self.inclusion:
            if any(bg.table[z_img][x] != bg.table[x][z_img] for x in range(bg.order)):
                raise ValueError("Z must be central in B")
        gamma = self.z.gamma
        for g in range(gamma.order):
            for x in range(zg.order):
                if self.b.act(g, self.inclusion[x]) != self.inclusion[self.z.act(g, x)]:
                    raise ValueError("inclusion is not Gamma-equivariant")
            for x in range(bg.order):
                if self.c.act(g, self.projection[x]) != self.projection[self.b.act(g, x)]:
                    raise ValueError("projection is not Gamma-equivariant")

    def lift(self, c_elem, choice=0):
        """A set-theoretic lift of a C element to B (choice picks among
        the fiber, for re-lift tests)."""
        fiber = [x for x in range(self.b.coeff.order) if self.projection[x] == c_elem]
        return fiber[choice % len(fiber)]


def boundary_map(ext, cocycle, lift_choices=None):
    """Image of a 1-cocycle in C under the boundary to H^2(Gamma, Z):
    delta c(a,b) = lift(a) * a(lift(b)) * lift(ab)^-1, as a dict
    {(a, b): Z element index}."""
    gamma = ext.z.gamma
    bg = ext.b.coeff
    n = gamma.order
    if not is_one_cocycle(ext.c, cocycle):
        raise ValueError("not a 1-cocycle in C")
    if lift_choices is None:
        lift_choices = {}
    lifts = {}
    for a in range(n):
        if a == gamma.identity:
            lifts[a] = bg.identity
        else:
            lifts[a] = ext.lift(cocycle[a], lift_choices.get(a, 0))
    inc_index = {b_idx: z_idx for z_idx, b_idx in enumerate(ext.inclusion)}
    table = {}
    for a in range(n):
        for b in range(n):
            ab = gamma.table[a][b]
            prod_b = bg.table[lifts[a]][ext.b.act(a, lifts[b])]
            val = bg.table[prod_b][bg.inverse[lifts[ab]]]
            if val not in inc_index:
                raise ValueError("boundary value escaped the center")
            table[(a, b)] = inc_index[val]
    return table


def is_group_cocycle(ggroup, table):
    """2-cocycle test for a table valued in an abelian GGroup."""
    gamma, coeff = ggroup.gamma, ggroup.coeff
    n = gamma.order
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = coeff.table[ggroup.act(a, table[(b, c)])][table[(a, gamma.table[b][c])]]
                rhs = coeff.table[table[(gamma.table[a][b], c)]][table[(a, b)]]
                if lhs != rhs:
                    return False
    return True


def is_group_coboundary(ggroup, table):
    """Search f: Gamma -> A with d f = table (abelian A, enumeration)."""
    gamma, coeff = ggroup.gamma, ggroup.coeff
    n = gamma.order
    e = gamma.identity
    others = [g for g in range(n) if g != e]
    for values in product(range(coeff.order), repeat=len(others)):
        f = {e: coeff.identity}
        for g, v in zip(others, values):
            f[g] = v
        ok = True
        for a in range(n):
            for b in range(n):
                d = coeff.table[
                    coeff.table[ggroup.act(a, f[b])][f[a]]
                ][coeff.inverse[f[gamma.table[a][b]]]]
                if d != table[(a, b)]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return f
    return None
