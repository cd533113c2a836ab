"""Root data for reductive groups.

Root data are stored with explicit finite root/coroot lists in coordinates
on the character lattice X and cocharacter lattice X^vee (the pairing is
the standard dot product).  Supports the classical and exceptional types
up to rank 8, both isogeny types, torus factors and direct sums, duality,
the fundamental group, and the group of based-datum (diagram)
automorphisms together with its action on coweights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import FiniteAbelianGroup, IntMatrix, Lattice, cokernel
from .groups import FiniteGroup
from . import qlinalg

_FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


def cartan_matrix(family, n):
    """Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee> (Bourbaki
    numbering)."""
    if family == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
    elif family == "B" or family == "C":
        if n < 2:
            raise ValueError(f"{family}_n needs n >= 2")
    elif family == "D":
        if n < 3:
            raise ValueError("D_n needs n >= 3")
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6,7,8}")
    elif family == "F":
        if n != 4:
            raise ValueError("F_n needs n = 4")
    elif family == "G":
        if n != 2:
            raise ValueError("G_n needs n = 2")
    else:
        raise ValueError(f"unknown family {family!r}")

    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        c[i][j] = a
        c[j][i] = b

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            link(n - 2, n - 1, a=-1, b=-2)
        if family == "C" and n >= 2:
            # alpha_n long
            link(n - 2, n - 1, a=-2, b=-1)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        # Bourbaki: node 2 attaches to node 4 (1-indexed); chain 1-3-4-5-...
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            link(i, j)
        link(1, 3)
    elif family == "F":
        link(0, 1)
        link(1, 2, a=-2, b=-1)
        link(2, 3)
    elif family == "G":
        link(0, 1, a=-1, b=-3)
    return c


@dataclass(frozen=True)
class RootDatum:
    """Root datum (X, R, X^vee, R^vee) in coordinates; the pairing of
    x in X with y in X^vee is the dot product."""

    rank: int
    roots: tuple          # tuple of X-coordinate tuples
    coroots: tuple        # tuple of X^vee-coordinate tuples, in bijection

    def __post_init__(self):
        if len(self.roots) != len(self.coroots):
            raise ValueError("roots and coroots must be in bijection")
        for a, av in zip(self.roots, self.coroots):
            if pairing(a, av) != 2:
                raise ValueError(f"<alpha, alpha^vee> != 2 for {a}, {av}")
        root_set = set(self.roots)
        for a, av in zip(self.roots, self.coroots):
            for x in self.roots:
                y = reflect(x, a, av)
                if y not in root_set:
                    raise ValueError(f"reflection in {a} does not preserve roots")

    @property
    def character_lattice(self):
        return Lattice(self.rank)

    @property
    def cocharacter_lattice(self):
        return Lattice(self.rank)

    def is_semisimple(self):
        if not self.roots:
            return self.rank == 0
        return qlinalg.rank([[Fraction(x) for x in r] for r in self.roots]) == self.rank


def pairing(x, y):
    return sum(a * b for a, b in zip(x, y))


def reflect(x, alpha, alpha_vee):
    """s_alpha(x) = x - <x, alpha^vee> alpha."""
    c = pairing(x, alpha_vee)
    return tuple(a - c * b for a, b in zip(x, alpha))


def coreflect(y, alpha, alpha_vee):
    """Dual reflection on X^vee: y - <alpha, y> alpha^vee."""
    c = pairing(alpha, y)
    return tuple(a - c * b for a, b in zip(y, alpha_vee))


@dataclass(frozen=True)
class BasedRootDatum:
    datum: RootDatum
    simple_indices: tuple  # indices into datum.roots

    def __post_init__(self):
        self._check_positivity()

    def _check_positivity(self):
        simple = [self.datum.roots[i] for i in self.simple_indices]
        if not simple:
            return
        mat = [[Fraction(x) for x in col] for col in zip(*simple)]
        for root in self.datum.roots:
            coeffs = _express(mat, root)
            if coeffs is None:
                raise ValueError("root outside span of simple roots")
            signs = {c > 0 for c in coeffs if c != 0}
            if len(signs) > 1 or any(c.denominator != 1 for c in coeffs):
                raise ValueError(f"root {root} is not +/- integral combination of simple roots")

    @property
    def simple_roots(self):
        return tuple(self.datum.roots[i] for i in self.simple_indices)

    @property
    def simple_coroots(self):
        return tuple(self.datum.coroots[i] for i in self.simple_indices)

    def cartan_matrix(self):
        return [
            [pairing(b, av) for b in self.simple_roots]
            for av in self.simple_coroots
        ]

    def is_dominant_coweight(self, coweight):
        return all(pairing(a, coweight) >= 0 for a in self.simple_roots)


def _express(col_matrix, vector):
    """Solve col_matrix * c = vector over Q (least-squares not needed:
    consistent systems only); returns None if inconsistent."""
    nrows = len(col_matrix)
    ncols = len(col_matrix[0]) if col_matrix else 0
    aug = [list(map(Fraction, col_matrix[i])) + [Fraction(vector[i])] for i in range(nrows)]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][col]
        aug[r] = [x / inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols]:
            return None
    coeffs = [Fraction(0)] * ncols
    for row, col in enumerate(pivots):
        coeffs[col] = aug[row][ncols]
    return coeffs


def _closure(simple_pairs):
    """Reflection closure of the simple (root, coroot) pairs."""
    pairs = set(simple_pairs)
    frontier = list(pairs)
    simple = list(simple_pairs)
    while frontier:
        root, coroot = frontier.pop()
        for s_root, s_coroot in simple:
            new = (
                reflect(root, s_root, s_coroot),
                coreflect(coroot, s_root, s_coroot),
            )
            if new not in pairs:
                pairs.add(new)
                frontier.append(new)
    return sorted(pairs)


def build_root_datum(label, isogeny="simply_connected"):
    """Based root datum for a Cartan label 'A1'..'E8', 'F4', 'G2', or a
    torus 'T<rank>'.  isogeny: 'simply_connected' or 'adjoint' (ignored
    for tori)."""
    label = label.strip()
    if not label:
        raise ValueError("empty type label")
    family = label[0].upper()
    if family == "T":
        try:
            rank = int(label[1:])
        except ValueError:
            raise ValueError(f"bad torus label {label!r}") from None
        return torus(rank)
    try:
        n = int(label[1:])
    except ValueError:
        raise ValueError(f"bad type label {label!r}") from None
    if n > 8:
        raise ValueError("rank > 8 not supported")
    c = cartan_matrix(family, n)
    return _datum_from_cartan(c, isogeny)


def _datum_from_cartan(c, isogeny):
    n = len(c)
    if isogeny == "simply_connected":
        # X^vee basis = simple coroots; simple root j = column j of C
        simple_pairs = [
            (tuple(c[i][j] for i in range(n)), tuple(1 if i == j else 0 for i in range(n)))
            for j in range(n)
        ]
    elif isogeny == "adjoint":
        # X basis = simple roots; simple coroot i = row i of C
        simple_pairs = [
            (tuple(1 if i == j else 0 for i in range(n)), tuple(c[j][i] for i in range(n)))
            for j in range(n)
        ]
    else:
        raise ValueError(f"unknown isogeny {isogeny!r}")
    all_pairs = _closure(simple_pairs)
    roots = tuple(p[0] for p in all_pairs)
    coroots = tuple(p[1] for p in all_pairs)
    datum = RootDatum(n, roots, coroots)
    simple_set = set(simple_pairs)
    simple_indices = tuple(i for i, p in enumerate(all_pairs) if p in simple_set)
    return BasedRootDatum(datum, simple_indices)


def torus(rank):
    return BasedRootDatum(RootDatum(rank, (), ()), ())


def direct_sum(a, b):
    """Direct sum of two based root data (block coordinates)."""
    ra, rb = a.datum.rank, b.datum.rank

    def padl(v):
        return tuple(v) + (0,) * rb

    def padr(v):
        return (0,) * ra + tuple(v)

    pairs = [(padl(r), padl(c)) for r, c in zip(a.datum.roots, a.datum.coroots)]
    pairs += [(padr(r), padr(c)) for r, c in zip(b.datum.roots, b.datum.coroots)]
    simple = {
        (padl(a.datum.roots[i]), padl(a.datum.coroots[i])) for i in a.simple_indices
    } | {
        (padr(b.datum.roots[i]), padr(b.datum.coroots[i])) for i in b.simple_indices
    }
    pairs = sorted(set(pairs))
    datum = RootDatum(ra + rb, tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
    simple_indices = tuple(i for i, p in enumerate(pairs) if p in simple)
    return BasedRootDatum(datum, simple_indices)


def dual(brd):
    """Langlands duality: swap X with X^vee and roots with coroots.
    An exact involution."""
    datum = RootDatum(brd.datum.rank, brd.datum.coroots, brd.datum.roots)
    return BasedRootDatum(datum, brd.simple_indices)


def fundamental_group(brd):
    """pi_1 = X^vee / (span of coroots), including any free part from
    central torus directions."""
    n = brd.datum.rank
    coroots = brd.datum.coroots
    if coroots:
        m = IntMatrix([[cr[i] for cr in coroots] for i in range(n)])
    else:
        m = IntMatrix.zero(n, 1) if n else IntMatrix([[0]])
    group, _proj = cokernel(m)
    return group


@dataclass(frozen=True)
class OuterAutomorphism:
    """Automorphism of a based root datum: simultaneous lattice
    automorphisms of X and X^vee preserving the pairing and the simple
    system, recorded with the induced simple-root permutation."""

    char_matrix: IntMatrix    # action on X
    cochar_matrix: IntMatrix  # action on X^vee (transpose-inverse)
    simple_permutation: tuple

    def act_on_coweight(self, coweight):
        return self.cochar_matrix.apply(coweight)

    def act_on_weight(self, weight):
        return self.char_matrix.apply(weight)


def outer_automorphisms(brd):
    """All based-datum automorphisms, with the group structure.

    Returns (group, elements): a FiniteGroup whose element i multiplies as
    composition of elements[i].  Computed by enumerating Cartan-matrix
    preserving permutations of the simple roots and keeping the ones that
    extend to automorphisms of both lattices.  Requires a semisimple
    datum (roots of full rank)."""
    datum = brd.datum
    if not datum.is_semisimple():
        raise ValueError("outer automorphism enumeration requires a semisimple datum")
    simple = list(brd.simple_roots)
    n = datum.rank
    c = brd.cartan_matrix()
    k = len(simple)
    from itertools import permutations as _perms

    root_set = set(datum.roots)
    coroot_set = set(datum.coroots)
    valid = []
    a_cols = [[Fraction(simple[j][i]) for j in range(k)] for i in range(n)]
    for perm in _perms(range(k)):
        if any(c[perm[i]][perm[j]] != c[i][j] for i in range(k) for j in range(k)):
            continue
        # solve M * alpha_j = alpha_{perm(j)} for the action on X
        target = [[Fraction(simple[perm[j]][i]) for j in range(k)] for i in range(n)]
        a_inv = qlinalg.mat_inv(a_cols)
        m_rat = qlinalg.mat_mul(target, a_inv)
        if any(x.denominator != 1 for row in m_rat for x in row):
            continue
        m = IntMatrix([[int(x) for x in row] for row in m_rat])
        if abs(m.determinant()) != 1:
            continue
        mt_inv = qlinalg.mat_inv([[Fraction(m[j, i]) for j in range(n)] for i in range(n)])
        if any(x.denominator != 1 for row in mt_inv for x in row):
            continue
        mv = IntMatrix([[int(x) for x in row] for row in mt_inv])
        if any(tuple(m.apply(r)) not in root_set for r in datum.roots):
            continue
        if any(tuple(mv.apply(cr)) not in coroot_set for cr in datum.coroots):
            continue
        valid.append(OuterAutomorphism(m, mv, tuple(perm)))

    perms = [aut.simple_permutation for aut in valid]
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for a in valid:
        row = []
        for b in valid:
            composed = tuple(a.simple_permutation[b.simple_permutation[i]] for i in range(k))
            row.append(index[composed])
        table.append(row)
    group = FiniteGroup(table)
    # put identity first for convenience
    return group, valid


def act_on_coweight(aut, coweight):
    return aut.act_on_coweight(coweight)
