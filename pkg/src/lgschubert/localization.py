"""Fixed-point sets and the residue pairing, classical and quantum.

The pairing of a class f is sum over fixed points of f(p) divided by the top
Chern value of the tangent bundle at p; at the quantum point set (roots of
-q with q = 1) the same sum with ch^(genus-1) computes Gromov-Witten
invariants.  Everything is exact: rational points for the equivariant case,
cyclotomic points for the quantum one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from .cyclo import CyclotomicNumber, zeta
from .poly import Polynomial, gens
from .spaces import SpaceDescriptor, parse_space


@dataclass(frozen=True)
class FixedPoint:
    tag: tuple    # k-subset of 1..n for gr; sign vector for ogr
    values: tuple  # torus values carried by the point


@dataclass
class PointSet:
    space: SpaceDescriptor
    parameters: tuple       # the full torus tuple the points are built from
    points: list
    quantum: bool = False
    field_order: int = 0    # cyclotomic order when quantum

    def __post_init__(self):
        if len(self.points) != self.space.euler_characteristic:
            raise ValueError("point count does not match Euler characteristic")
        for p in self.points:
            if top_chern_at(p, self) == 0:
                raise ValueError(f"degenerate parameters: zero denominator "
                                 f"at {p.tag}")


def fixed_points_gr(k, n, y):
    """The C(n,k) torus fixed points of Gr(k,n) at parameters y: one point
    per k-subset S, carrying the values (y_i, i in S)."""
    y = tuple(Fraction(v) for v in y)
    if len(y) != n:
        raise ValueError("need one parameter per torus factor")
    if len(set(y)) != n:
        raise ValueError("parameters must be pairwise distinct")
    space = SpaceDescriptor("gr", k=k, n=n)
    points = [FixedPoint(tag=S, values=tuple(y[i - 1] for i in S))
              for S in combinations(range(1, n + 1), k)]
    return PointSet(space, y, points)


def fixed_points_ogr(n, y):
    """The 2^(n-1) fixed points of OGr(n,2n): even sign patterns eps applied
    to y.  Genericity requires all +-y_i pairwise distinct and nonzero."""
    y = tuple(Fraction(v) for v in y)
    if len(y) != n:
        raise ValueError("need one parameter per torus factor")
    if len({abs(v) for v in y}) != n or any(v == 0 for v in y):
        raise ValueError("parameters must have distinct nonzero absolute values")
    space = SpaceDescriptor("ogr", n=n)
    points = []
    for bits in range(1 << (n - 1)):
        eps = [1] * n
        for i in range(n - 1):
            if bits >> i & 1:
                eps[i] = -1
        parity = 1
        for e in eps[:-1]:
            parity *= e
        eps[-1] = parity  # force an even number of sign changes
        points.append(FixedPoint(tag=tuple(eps),
                                 values=tuple(e * v for e, v in zip(eps, y))))
    return PointSet(space, y, points)


def quantum_roots(n):
    """The n-th roots of -1 in Q(zeta_2n): zeta_2n^1, zeta_2n^3, ..."""
    return tuple(zeta(2 * n, 2 * j + 1) for j in range(n))


def quantum_points_gr(k, n):
    """The quantum point set of Gr(k,n) at q = 1: the torus tuple consists of
    the n-th roots of -1, and points are k-subsets exactly as in the
    equivariant case."""
    roots = quantum_roots(n)
    space = SpaceDescriptor("gr", k=k, n=n)
    points = [FixedPoint(tag=S, values=tuple(roots[i - 1] for i in S))
              for S in combinations(range(1, n + 1), k)]
    return PointSet(space, roots, points, quantum=True, field_order=2 * n)


def top_chern_at(point, point_set):
    """Top Chern value of the tangent bundle at a fixed point.

    Gr(k,n): product of (v_i - v_j) over i in S, j outside S.
    OGr(n,2n): product of (eps_i y_i + eps_j y_j) over i < j.
    """
    space = point_set.space
    if space.kind == "gr":
        inside = set(point.tag)
        v = point_set.parameters
        prod = _one_like(v[0])
        for i in range(1, space.n + 1):
            if i in inside:
                for j in range(1, space.n + 1):
                    if j not in inside:
                        prod = prod * (v[i - 1] - v[j - 1])
        return prod
    if space.kind == "ogr":
        vals = point.values
        prod = _one_like(vals[0])
        for i in range(space.n):
            for j in range(i + 1, space.n):
                prod = prod * (vals[i] + vals[j])
        return prod
    raise ValueError(f"no fixed-point formula for {space.kind}")


def _one_like(value):
    if isinstance(value, CyclotomicNumber):
        return CyclotomicNumber.from_rational(1, value.order)
    return Fraction(1)


def _elementary_symmetric(values, upto):
    """e_0..e_upto of the given values, exactly."""
    es = [_one_like(values[0]) if values else Fraction(1)]
    es += [0] * upto
    count = 0
    for v in values:
        count += 1
        for j in range(min(count, upto), 0, -1):
            prev = es[j - 1] * v
            es[j] = prev if es[j] == 0 else es[j] + prev
    return es


def generator_values(point, point_set):
    """Values of the multiplicative generators at a fixed point.

    Gr: c_j = e_j of the selected values.  OGr: x_i = e_i of all signed
    values divided by 2 (the generators are half Chern classes)."""
    space = point_set.space
    if space.kind == "gr":
        es = _elementary_symmetric(list(point.values), space.k)
        return {f"c{j}": es[j] for j in range(1, space.k + 1)}
    if space.kind == "ogr":
        es = _elementary_symmetric(list(point.values), space.n - 1)
        return {f"x{i}": es[i] * Fraction(1, 2)
                for i in range(1, space.n)}
    raise ValueError(f"no generator dictionary for {space.kind}")


def _assignment_for(f, point, point_set):
    names = set(f.names)
    gen_names = {name for name, _ in _generator_context(point_set.space)}
    if names <= gen_names:
        return generator_values(point, point_set)
    t_names = {f"t{i}" for i in range(1, len(point.values) + 1)}
    if names <= t_names:
        return {f"t{i}": v for i, v in enumerate(point.values, start=1)}
    raise ValueError(
        f"polynomial variables {sorted(names)} are neither generators nor "
        "torus variables of this point set")


def _generator_context(space):
    if space.kind == "gr":
        return tuple((f"c{i}", i) for i in range(1, space.k + 1))
    if space.kind == "ogr":
        return tuple((f"x{i}", i) for i in range(1, space.n))
    raise ValueError(f"no generator context for {space.kind}")


def _chunked(seq, chunks):
    n = len(seq)
    chunks = max(1, min(chunks, n)) if n else 1
    size, rem = divmod(n, chunks)
    out, start = [], 0
    for i in range(chunks):
        end = start + size + (1 if i < rem else 0)
        out.append(seq[start:end])
        start = end
    return out


def pair(f, point_set, threads=1):
    """The residue pairing: sum over points of f(p) / ch_top(p).

    f is a polynomial either in the space's generators (c's or x's) or in
    torus variables t1..tn evaluated at the point values; the result does
    not depend on how the sum is chunked (exact field arithmetic).
    """
    partial_sums = []
    for chunk in _chunked(point_set.points, threads):
        total = 0
        for p in chunk:
            value = f.evaluate(_assignment_for(f, p, point_set))
            ch = top_chern_at(p, point_set)
            total = total + value * _invert(ch)
        partial_sums.append(total)
    result = 0
    for s in partial_sums:
        result = result + s
    return result


def _invert(value):
    if isinstance(value, CyclotomicNumber):
        return value.inverse()
    return Fraction(1) / value


def pair_generator_values(point_set, func, threads=1):
    """Pairing of a per-point value supplied by `func(point)`; used for the
    Euler characteristic (func = top Chern) and cross-checks."""
    partial_sums = []
    for chunk in _chunked(point_set.points, threads):
        total = 0
        for p in chunk:
            total = total + func(p) * _invert(top_chern_at(p, point_set))
        partial_sums.append(total)
    result = 0
    for s in partial_sums:
        result = result + s
    return result


def default_parameters(space, alternate=False):
    """Generic torus tuples: consecutive integers for gr (distinct primes as
    the alternate), powers of two for ogr (odd primes as the alternate,
    keeping absolute values distinct)."""
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    if space.kind == "gr":
        return tuple(primes[:space.n]) if alternate \
            else tuple(range(1, space.n + 1))
    if space.kind == "ogr":
        return tuple(primes[:space.n]) if alternate \
            else tuple(2 ** i for i in range(space.n))
    raise ValueError(f"no fixed-point parameters for {space.kind}")


def standard_points(space, y=None, alternate=False):
    if isinstance(space, str):
        space = parse_space(space)
    if y is None:
        y = default_parameters(space, alternate=alternate)
    if space.kind == "gr":
        return fixed_points_gr(space.k, space.n, y)
    if space.kind == "ogr":
        return fixed_points_ogr(space.n, y)
    raise ValueError(f"no fixed-point construction for {space.kind}")


def euler_by_pairing(space, y=None, threads=1):
    """pair(ch_top) = Euler characteristic, summed honestly over the points."""
    ps = standard_points(space, y)
    value = pair_generator_values(ps, lambda p: top_chern_at(p, ps),
                                  threads=threads)
    assert value == ps.space.euler_characteristic
    return int(value)


def gw_pairing(f, point_set, genus=0, threads=1):
    """Vafa-Intriligator sum: sum over quantum points of
    ch_top(p)^(genus-1) * f(p).  The result must be rational; anything else
    signals a convention bug and raises.

    The point set realizes the quantum parameter (-1)^k of the geometric
    normalization, so for genus 0 and homogeneous f the sum is corrected by
    (-1)^(k*d), d = (deg f - k(n-k))/n, making every 3-point invariant a
    nonnegative integer."""
    if not point_set.quantum:
        raise ValueError("gw_pairing needs a quantum point set")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    partial_sums = []
    for chunk in _chunked(point_set.points, threads):
        total = CyclotomicNumber.from_rational(0, point_set.field_order)
        for p in chunk:
            ch = top_chern_at(p, point_set)
            value = f.evaluate(_assignment_for(f, p, point_set))
            if not isinstance(value, CyclotomicNumber):
                value = CyclotomicNumber.from_rational(value,
                                                       point_set.field_order)
            total = total + ch ** (genus - 1) * value
        partial_sums.append(total)
    result = CyclotomicNumber.from_rational(0, point_set.field_order)
    for s in partial_sums:
        result = result + s
    if not result.is_rational():
        raise ArithmeticError(f"non-rational Gromov-Witten value {result}")
    value = result.rational_value()
    if genus == 0 and value:
        space = point_set.space
        if not f.is_homogeneous():
            raise ValueError("genus-0 pairing needs a homogeneous class")
        excess = f.degree() - space.dim
        assert excess % space.n == 0, "nonzero pairing off the degree grid"
        value *= (-1) ** (space.k * (excess // space.n))
    return value


# -- Combinatorial Nullstellensatz cross-check -----------------------------------

def nullstellensatz_sign(k):
    """The fixed global sign relating the coefficient extraction to the
    pairing: extraction = (-1)^(k(k-1)/2) * pair."""
    return (-1) ** (k * (k - 1) // 2)


def pair_nullstellensatz(f, k, n):
    """Coefficient form of the pairing: the coefficient of
    t1^(n-1)...tk^(n-1) in f * prod_(i<j) (t_i - t_j)^2 / k!.

    Valid for symmetric f in t1..tk with deg f <= k(n-k); equals
    nullstellensatz_sign(k) * pair(f) for any generic parameter tuple.
    """
    if f.degree() > k * (n - k):
        raise ValueError("degree exceeds the top pairing degree")
    tvars = tuple((f"t{i}", 1) for i in range(1, k + 1))
    ts = gens(tvars)
    g = Polynomial.const(Fraction(1, factorial(k)), tvars) * f
    for i in range(k):
        for j in range(i + 1, k):
            d = ts[i] - ts[j]
            g = g * d * d
    return g.coefficient({f"t{i}": n - 1 for i in range(1, k + 1)})


# -- Jacobian cross-checks --------------------------------------------------------

def _det(matrix):
    m = [row[:] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for i in range(col + 1, n):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


def jacobian_chern_ratios(k, n, y=None):
    """For each fixed point of Gr(k,n): det of the Jacobian of the
    equivariant relations with respect to c1..ck, divided by the explicit
    top Chern product.  The ratios must agree across points (the Jacobian
    is the top Chern class up to one constant)."""
    from .spaces import relations_equivariant_grassmannian
    pres = relations_equivariant_grassmannian(k, n)
    ps = standard_points(SpaceDescriptor("gr", k=k, n=n), y)
    yvals = {f"y{i}": v for i, v in enumerate(ps.parameters, start=1)}
    ratios = []
    for p in ps.points:
        assignment = dict(yvals)
        assignment.update(generator_values(p, ps))
        jac = [[r.partial(f"c{i}").evaluate(assignment)
                for i in range(1, k + 1)] for r in pres.relations]
        ratios.append(_det(jac) / top_chern_at(p, ps))
    return ratios


def jacobian_torus_ratios_ogr(n, y=None):
    """OGr version in torus coordinates: det(dR_i/dt_j) over det(de_i/dt_j)
    at each fixed point, divided by the explicit product of (t_i + t_j).

    R_i are the even power sums p_2i/(2i) for i < n and the product of all
    t_j for i = n (the invariants of the even orthogonal group); the e_i are
    the elementary symmetric functions (the unitary invariants).
    """
    ps = standard_points(SpaceDescriptor("ogr", n=n), y)
    ratios = []
    for p in ps.points:
        t = list(p.values)
        rows_R = []
        for i in range(1, n):
            rows_R.append([v ** (2 * i - 1) for v in t])
        prod_all = Fraction(1)
        for v in t:
            prod_all *= v
        rows_R.append([prod_all / v for v in t])
        es = _elementary_symmetric(t, n)
        rows_I = []
        for i in range(1, n + 1):
            row = []
            for j in range(n):
                rest = t[:j] + t[j + 1:]
                er = _elementary_symmetric(rest, n - 1) if rest else [Fraction(1)]
                row.append(er[i - 1] if i - 1 < len(er) else Fraction(0))
            rows_I.append(row)
        num = _det(rows_R)
        den = _det(rows_I)
        ratios.append(num / den / top_chern_at(p, ps))
    return ratios


# -- Quantum point data for the classical groups -----------------------------------

def cyclic_base_tuple(family, n):
    """The torus tuple solving the deformed invariant system at q = 1.

    unitary: the n-th roots of -1.  so_odd / sp (same Weyl group): the same
    tuple.  so_even: zero in the last slot and the (n-1)-st roots of -1 in
    the others.
    """
    if family == "unitary":
        return quantum_roots(n)
    if family in ("so_odd", "sp"):
        return quantum_roots(n)
    if family == "so_even":
        order = 2 * (n - 1)
        base = quantum_roots(n - 1)
        return base + (CyclotomicNumber.from_rational(0, order),)
    raise ValueError(f"unknown family {family!r}")


def cyclic_orbit(family, n):
    """The full Weyl orbit of the base tuple, as a sorted deduplicated list:
    permutations for unitary; permutations and sign changes for so_odd/sp;
    permutations and even sign changes for so_even."""
    base = cyclic_base_tuple(family, n)
    seen = set()
    out = []

    def add(t):
        key = tuple(x.coeffs for x in t)
        if key not in seen:
            seen.add(key)
            out.append(t)

    for perm in permutations(base):
        if family == "unitary":
            add(perm)
            continue
        for bits in range(1 << n):
            if family == "so_even" and bin(bits).count("1") % 2:
                continue
            add(tuple(-v if bits >> i & 1 else v
                      for i, v in enumerate(perm)))
    return out


def power_sum_at(values, exponent):
    total = values[0] ** exponent
    for v in values[1:]:
        total = total + v ** exponent
    return total
