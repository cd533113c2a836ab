"""Finite groups given by explicit multiplication tables."""

from __future__ import annotations

from itertools import permutations, product


class FiniteGroup:
    """Finite group on elements 0..n-1 with an explicit table.

    table[a][b] is the product a*b; identity is element 0 unless another
    index satisfies the axioms.
    """

    __slots__ = ("order", "table", "identity", "inverse", "labels")

    def __init__(self, table, labels=None, check=True):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        n = self.order
        if any(len(row) != n for row in self.table):
            raise ValueError("multiplication table must be square")
        identity = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        self.identity = identity
        inverse = [None] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == identity and self.table[b][a] == identity:
                    inverse[a] = b
                    break
            if inverse[a] is None:
                raise ValueError(f"element {a} has no inverse")
        self.inverse = tuple(inverse)
        if check:
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                            raise ValueError(f"not associative at ({a},{b},{c})")
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def elements(self):
        return range(self.order)

    def is_abelian(self):
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(a)
        )

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def conjugate(self, c, a):
        """c * a * c^-1."""
        return self.table[self.table[c][a]][self.inverse[c]]

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def cyclic(n):
    if n < 1:
        raise ValueError("order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, check=False)


def symmetric(n):
    """Symmetric group on n letters; elements sorted lexicographically as
    permutation tuples, so the identity is element 0."""
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms]
        for p in perms
    ]
    return FiniteGroup(table, labels=[str(p) for p in perms], check=False)


def direct_product(g, h):
    n, m = g.order, h.order

    def idx(a, b):
        return a * m + b

    table = [
        [
            idx(g.table[a1][a2], h.table[b1][b2])
            for a2 in range(n)
            for b2 in range(m)
        ]
        for a1 in range(n)
        for b1 in range(m)
    ]
    return FiniteGroup(table, check=False)


def homomorphisms(g, h):
    """All group homomorphisms g -> h, each as a tuple indexed by g's
    elements.  Brute-force over generator images with consistency checks;
    fine at desk scale."""
    homs = []
    n = g.order
    for images in product(range(h.order), repeat=n):
        if images[g.identity] != h.identity:
            continue
        ok = True
        for a in range(n):
            for b in range(n):
                if images[g.table[a][b]] != h.table[images[a]][images[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            homs.append(tuple(images))
    return homs


def subgroup_closure(g, generators):
    """Set of elements generated by the given elements."""
    seen = {g.identity}
    frontier = [g.identity]
    gens = list(generators)
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.table[x][s]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def group_from_elements(elements, mul, eq=None):
    """Build a FiniteGroup from abstract elements and a multiplication
    callable.  Elements must be hashable (or provide eq via a key)."""
    elems = list(elements)
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for a in elems:
        row = []
        for b in elems:
            c = mul(a, b)
            if c not in index:
                raise ValueError("elements not closed under multiplication")
            row.append(index[c])
        table.append(row)
    return FiniteGroup(table), elems
