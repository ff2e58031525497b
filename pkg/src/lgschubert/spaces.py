"""Catalog of Hermitian symmetric space presentations.

Each space comes with multiplicative generators, weighted-homogeneous
relations, its Euler characteristic, and the equivariant / quantum
deformations of the relations.  Quotient dimensions are certified by
degreewise exact linear algebra, never assumed.

Grading convention: a generator of cohomological degree 2i carries algebraic
weight i, so all bookkeeping (including the quantum parameter) stays
integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import linalg
from .poly import Polynomial, gens, monomials_of_weight
from .series import PowerSeries


@dataclass(frozen=True)
class SpaceDescriptor:
    """One of: gr (Grassmannian Gr(k,n)), ogr (OGr(n,2n)), quadric (the even
    quadric of dimension 2n-2), e6, e7, e8 (the three exceptional spaces)."""

    kind: str
    k: int = 0
    n: int = 0

    def __post_init__(self):
        if self.kind == "gr":
            if not 0 < self.k < self.n:
                raise ValueError("Grassmannian needs 0 < k < n")
        elif self.kind == "ogr":
            if self.n < 2:
                raise ValueError("orthogonal Grassmannian needs n >= 2")
        elif self.kind == "quadric":
            if self.n < 3:
                raise ValueError("even quadric needs n >= 3")
        elif self.kind not in ("e6", "e7", "e8"):
            raise ValueError(f"unknown space kind {self.kind!r}")

    def __str__(self):
        if self.kind == "gr":
            return f"gr:{self.k},{self.n}"
        if self.kind == "ogr":
            return f"ogr:{self.n}"
        if self.kind == "quadric":
            return f"quadric:{2 * self.n - 2}"
        return self.kind

    @property
    def euler_characteristic(self):
        return {
            "gr": lambda: comb(self.n, self.k),
            "ogr": lambda: 2 ** (self.n - 1),
            "quadric": lambda: 2 * self.n,
            "e6": lambda: 27,
            "e7": lambda: 56,
            "e8": lambda: 240,
        }[self.kind]()

    @property
    def dim(self):
        """Complex dimension, i.e. the weight of the top cohomology."""
        return {
            "gr": lambda: self.k * (self.n - self.k),
            "ogr": lambda: self.n * (self.n - 1) // 2,
            "quadric": lambda: 2 * self.n - 2,
            "e6": lambda: 16,
            "e7": lambda: 27,
            "e8": lambda: 57,
        }[self.kind]()

    @property
    def weight_one_generator(self):
        return {"gr": "c1", "ogr": "x1", "quadric": "h",
                "e6": "y1", "e7": "y1", "e8": "y1"}[self.kind]


def parse_space(text):
    """Parse compact CLI strings: gr:2,5  ogr:4  quadric:6  e6  e7  e8."""
    text = text.strip().lower()
    if text in ("e6", "e7", "e8"):
        return SpaceDescriptor(text)
    if ":" not in text:
        raise ValueError(f"cannot parse space {text!r}")
    kind, _, args = text.partition(":")
    try:
        nums = [int(a) for a in args.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse space {text!r}") from None
    if kind == "gr" and len(nums) == 2:
        return SpaceDescriptor("gr", k=nums[0], n=nums[1])
    if kind == "ogr" and len(nums) == 1:
        return SpaceDescriptor("ogr", n=nums[0])
    if kind == "quadric" and len(nums) == 1:
        dim = nums[0]
        if dim < 4 or dim % 2:
            raise ValueError("quadric expects an even dimension >= 4")
        return SpaceDescriptor("quadric", n=dim // 2 + 1)
    raise ValueError(f"cannot parse space {text!r}")


@dataclass(frozen=True)
class Presentation:
    space: SpaceDescriptor
    generators: tuple
    relations: tuple
    euler_characteristic: int
    deformation: str = "none"  # none | equivariant | quantum

    def __post_init__(self):
        for r in self.relations:
            if not r.is_homogeneous():
                raise ValueError(f"relation {r} is not weighted-homogeneous")


# -- Grassmannians ----------------------------------------------------------

def _chern_tail_series(k, order, extra=()):
    """The inverse series of C = 1 + c1 + ... + ck, optionally multiplied by
    prod(1 + y_i) for the equivariant deformation, truncated at `order`."""
    cvars = [(f"c{i}", i) for i in range(1, k + 1)]
    cs = gens(tuple(cvars) + tuple(extra))
    C = Polynomial.const(1, tuple(cvars) + tuple(extra))
    for c in cs[:k]:
        C = C + c
    inv = PowerSeries(C, order).inverse()
    if extra:
        prod = PowerSeries.const(1, order, tuple(cvars) + tuple(extra))
        for y in cs[k:]:
            prod = prod * (PowerSeries(y, order) + 1)
        inv = prod * inv
    return inv


def relations_grassmannian(k, n):
    """H*(Gr(k,n)): generators c1..ck, relations the weight n-k+1 .. n
    components of the inverse series of 1 + c1 + ... + ck."""
    space = SpaceDescriptor("gr", k=k, n=n)
    cbar = _chern_tail_series(k, n)
    rels = tuple(cbar.graded_component(j) for j in range(n - k + 1, n + 1))
    return Presentation(space, tuple((f"c{i}", i) for i in range(1, k + 1)),
                        rels, comb(n, k))


def relations_equivariant_grassmannian(k, n):
    """Torus-equivariant deformation: the inverse series is taken against
    prod(1+y_i), so each relation picks up y-terms and the y=0 limit is the
    classical presentation."""
    space = SpaceDescriptor("gr", k=k, n=n)
    ys = tuple((f"y{i}", 1) for i in range(1, n + 1))
    cbar = _chern_tail_series(k, n, extra=ys)
    rels = tuple(cbar.graded_component(j) for j in range(n - k + 1, n + 1))
    return Presentation(space,
                        tuple((f"c{i}", i) for i in range(1, k + 1)) + ys,
                        rels, comb(n, k), deformation="equivariant")


# -- Orthogonal Grassmannians -------------------------------------------------

def relations_ogr(n):
    """H*(OGr(n,2n)): generators x1..x_{n-1} (weight i), relations

        P_i = x_i^2 + 2 sum_{k>=1} (-1)^k x_{i+k} x_{i-k} + (-1)^i x_{2i}

    for i = 1..n-1, where x_j = 0 outside [1, n-1].  The quotient has
    dimension 2^(n-1), certified by `quotient_dimension`.
    """
    space = SpaceDescriptor("ogr", n=n)
    m = n - 1
    vars = tuple((f"x{i}", i) for i in range(1, m + 1))
    xs = {i + 1: g for i, g in enumerate(gens(vars))}
    zero = Polynomial.zero(vars)

    def x(i):
        return xs.get(i, zero)

    rels = []
    for i in range(1, m + 1):
        p = x(i) * x(i)
        for k in range(1, i):
            p = p + 2 * Fraction(-1) ** k * x(i + k) * x(i - k)
        p = p + Fraction(-1) ** i * x(2 * i)
        rels.append(p)
    return Presentation(space, vars, tuple(rels), 2 ** (n - 1))


def ogr_reduced_presentation(n):
    """Eliminate the even generators of OGr(n,2n) using the relations that
    solve them, leaving relations purely in the odd generators x1, x3, ...

    The surviving relations are the P_i with 2i > n-1; they match the graded
    components of the generating series of the even generators.
    """
    pres = relations_ogr(n)
    m = n - 1
    even_names = [f"x{j}" for j in range(2, m + 1, 2)]
    solved = {}
    for i in range(1, m // 2 + 1):  # these P_i solve x_{2i}
        p = pres.relations[i - 1]
        sign = Fraction(-1) ** i
        expr = p - sign * Polynomial.var(f"x{2 * i}", 2 * i)
        expr = expr.subs(solved)
        solved[f"x{2 * i}"] = (-sign) * expr
    odd_vars = tuple((f"x{j}", j) for j in range(1, m + 1, 2))
    rels = []
    for i in range(m // 2 + 1, m + 1):
        rel = pres.relations[i - 1].subs(solved).drop_vars(even_names)
        rels.append(Polynomial(odd_vars, rel.subs({}).terms)
                    if rel.vars != odd_vars else rel)
    return Presentation(pres.space, odd_vars, tuple(rels),
                        pres.euler_characteristic)


def ogr_even_generator_series(n, order):
    """Solve the generating identity for the even generators: with
    u = x1 + x3 + ... (odd generators up to n-1), the even part is

        g(u) = -1/2 + sqrt(1/4 + u^2),

    returned as a truncated series whose weight-2i component is the solved
    x_{2i}.  Restricting the identity to finitely many odd generators is
    exact because g is composed with u as a whole.
    """
    odd_vars = tuple((f"x{j}", j) for j in range(1, n, 2))
    u = Polynomial.zero(odd_vars)
    for g in gens(odd_vars):
        u = u + g
    u = PowerSeries(u, order)
    from .series import series_sqrt1p
    s = series_sqrt1p(4 * (u * u))
    return (s - 1) * Fraction(1, 2)


# -- Quadrics -----------------------------------------------------------------

def relations_quadric(n):
    """The even quadric of dimension 2n-2: generators h (weight 1) and
    l (weight n-1); relations (h^n - 2hl, l^2) for odd n and
    (h^n - 2hl, l^2 - h^(n-1) l) for even n."""
    space = SpaceDescriptor("quadric", n=n)
    vars = (("h", 1), ("l", n - 1))
    h, l = gens(vars)
    r1 = h ** n - 2 * h * l
    r2 = l * l if n % 2 else l * l - h ** (n - 1) * l
    return Presentation(space, vars, (r1, r2), 2 * n)


# -- Exceptional spaces --------------------------------------------------------

def relations_exceptional(case):
    """Hard-coded presentations of the three exceptional spaces."""
    if case == "e6":
        vars = (("y1", 1), ("y4", 4))
        y1, y4 = gens(vars)
        r9 = 2 * y1 ** 9 + 3 * y1 * y4 ** 2 - 6 * y1 ** 5 * y4
        r12 = y4 ** 3 - 6 * y1 ** 4 * y4 ** 2 + y1 ** 12
        rels = (r9, r12)
        chi = 27
    elif case == "e7":
        vars = (("y1", 1), ("y5", 5), ("y9", 9))
        y1, y5, y9 = gens(vars)
        r10 = y5 ** 2 - 2 * y1 * y9
        r14 = 2 * y5 * y9 - 9 * y1 ** 4 * y5 ** 2 + 6 * y1 ** 9 * y5 - y1 ** 14
        r18 = (y9 ** 2 + 10 * y1 ** 3 * y5 ** 3 - 9 * y1 ** 8 * y5 ** 2
               + 2 * y1 ** 13 * y5)
        rels = (r10, r14, r18)
        chi = 56
    elif case == "e8":
        vars = (("y1", 1), ("y6", 6), ("y10", 10), ("y15", 15))
        y1, y6, y10, y15 = gens(vars)
        r15 = (2 * y15 - 16 * y1 ** 5 * y10 - 10 * y1 ** 3 * y6 ** 2
               + 10 * y1 ** 9 * y6 - y1 ** 15)
        r20 = (3 * y10 ** 2 + 10 * y1 ** 2 * y6 ** 3
               + 18 * y1 ** 4 * y6 * y10 - 2 * y1 ** 5 * y15
               - 8 * y1 ** 8 * y6 ** 2 + 4 * y1 ** 10 * y10
               - y1 ** 14 * y6)
        r24 = (5 * y6 ** 4 + 30 * y1 ** 2 * y6 ** 2 * y10
               + 15 * y1 ** 4 * y10 ** 2 - 2 * y1 ** 9 * y15
               - 5 * y1 ** 12 * y6 ** 2 + y1 ** 14 * y10)
        r30 = (y15 ** 2 - 8 * y10 ** 3 + y6 ** 5
               - 2 * y1 ** 3 * y6 ** 2 * y15 + 3 * y1 ** 4 * y6 * y10 ** 2
               - 8 * y1 ** 5 * y10 * y15 + 6 * y1 ** 9 * y6 * y15
               - 9 * y1 ** 10 * y10 ** 2 - y1 ** 12 * y6 ** 3
               - 2 * y1 ** 14 * y6 * y10 - 3 * y1 ** 15 * y15
               + 8 * y1 ** 20 * y10 + y1 ** 24 * y6 - y1 ** 30)
        rels = (r15, r20, r24, r30)
        chi = 240
    else:
        raise ValueError(f"unknown exceptional case {case!r}")
    return Presentation(SpaceDescriptor(case), vars, rels, chi)


# -- deformations and dimension checks ------------------------------------------

def presentation(space):
    """The classical presentation of a catalog space (OGr in reduced form,
    so that gradients and relations live in the same variables)."""
    if isinstance(space, str):
        space = parse_space(space)
    if space.kind == "gr":
        return relations_grassmannian(space.k, space.n)
    if space.kind == "ogr":
        return ogr_reduced_presentation(space.n)
    if space.kind == "quadric":
        return relations_quadric(space.n)
    return relations_exceptional(space.kind)


def quantum_relations(p):
    """Deform the unique top-weight relation r to r + q, with q a new
    variable whose weight is the weight of r."""
    weights = [r.degree() for r in p.relations]
    top = max(weights)
    if weights.count(top) != 1:
        raise ValueError("top relation weight is not unique")
    idx = weights.index(top)
    q = Polynomial.var("q", top)
    rels = tuple(r + q if i == idx else r + Polynomial.zero((("q", top),))
                 for i, r in enumerate(p.relations))
    return Presentation(p.space, p.generators + (("q", top),), rels,
                        p.euler_characteristic, deformation="quantum")


def quotient_dimension(pres, top_weight=None):
    """Dimension of Q[generators]/(relations) by degreewise linear algebra.

    Works weight by weight up to the socle degree (sum of relation weights
    minus sum of generator weights for these complete intersections), then
    certifies vanishing on a window of one full generator-weight span, which
    forces vanishing in all higher weights.
    """
    weights = tuple(w for _, w in pres.generators)
    gen_names = [n for n, _ in pres.generators]
    for r in pres.relations:
        if not set(r.names) <= set(gen_names):
            raise ValueError("relations mention variables outside generators")
    if top_weight is None:
        top_weight = (sum(r.degree() for r in pres.relations) - sum(weights))
    window = max(weights)
    total = 0
    rel_in_ctx = [Polynomial(pres.generators, {}) + r for r in pres.relations]
    for w in range(0, top_weight + window + 1):
        monos = monomials_of_weight(weights, w)
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for r in rel_in_ctx:
            d = r.degree()
            for m in monomials_of_weight(weights, w - d):
                shifted = [Fraction(0)] * len(monos)
                for exp, c in r.terms.items():
                    tgt = tuple(a + b for a, b in zip(exp, m))
                    shifted[index[tgt]] = c
                rows.append(shifted)
        dim_w = len(monos) - linalg.rank(rows)
        if w > top_weight and dim_w:
            raise ArithmeticError(
                f"quotient does not vanish at weight {w}; "
                "the relations are not a regular sequence as expected")
        total += dim_w
    return total
