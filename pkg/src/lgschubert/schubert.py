"""Schubert classes of Grassmannians: classical and quantum products.

Littlewood-Richardson coefficients come out of the residue pairing; quantum
structure constants come out of the genus-0 Vafa-Intriligator sum.  Both are
cross-checked against independent combinatorial oracles (tableau counting
and rim-hook reduction) that never touch the residue formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclo import CyclotomicNumber
from .poly import Polynomial
from .localization import (fixed_points_gr, default_parameters,
                           generator_values, quantum_points_gr, top_chern_at)
from .spaces import SpaceDescriptor


# -- partitions ------------------------------------------------------------------

def normalize_partition(parts):
    parts = tuple(int(p) for p in parts if int(p) != 0)
    if any(a < b for a, b in zip(parts, parts[1:])) or any(p < 0 for p in parts):
        raise ValueError(f"{parts} is not a partition")
    return parts

def conjugate(lam):
    lam = normalize_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))

def contains(outer, inner):
    outer, inner = normalize_partition(outer), normalize_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))

def in_box(lam, k, n):
    lam = normalize_partition(lam)
    return len(lam) <= k and (not lam or lam[0] <= n - k)

def box_partitions(k, n):
    """All partitions inside the k x (n-k) box, by weight then by shape."""
    cols = n - k

    def rec(rows_left, max_part):
        yield ()
        if rows_left == 0:
            return
        for first in range(1, max_part + 1):
            for rest in rec(rows_left - 1, first):
                yield (first,) + rest
    out = sorted(rec(k, cols), key=lambda p: (sum(p), p))
    return out

def partitions_of(size, max_rows, max_part):
    """Partitions of a given size with bounded rows and part size."""
    def rec(remaining, rows_left, cap):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, rows_left - 1, first):
                yield (first,) + rest
    return list(rec(size, max_rows, max_part))

def dual_partition(nu, k, n):
    """Reversed complement in the k x (n-k) box."""
    nu = normalize_partition(nu)
    if not in_box(nu, k, n):
        raise ValueError(f"{nu} does not fit in the {k} x {n - k} box")
    padded = list(nu) + [0] * (k - len(nu))
    return normalize_partition(tuple((n - k) - padded[k - 1 - i]
                                     for i in range(k)))


# -- Schur classes in the Chern generators ------------------------------------------

@lru_cache(maxsize=None)
def schur_in_chern(lam, k):
    """The Schubert class of shape lam as a polynomial in c1..ck, via the
    determinant in the elementary-symmetric generators indexed by the
    conjugate shape; evaluating at c_j = e_j(t_1..t_k) gives the Schur
    polynomial s_lam(t_1..t_k)."""
    lam = normalize_partition(lam)
    if len(lam) > k:
        raise ValueError(f"{lam} has more than {k} rows")
    vars = tuple((f"c{i}", i) for i in range(1, k + 1))

    def e(j):
        if j == 0:
            return Polynomial.const(1, vars)
        if j < 0 or j > k:
            return Polynomial.zero(vars)
        exp = [0] * k
        exp[j - 1] = 1
        return Polynomial(vars, {tuple(exp): Fraction(1)})

    mu = conjugate(lam)
    m = len(mu)
    if m == 0:
        return Polynomial.const(1, vars)
    # det(e_{mu_i - i + j}) over i, j = 1..m, by permutation expansion
    from itertools import permutations as perms
    det = Polynomial.zero(vars)
    for sigma in perms(range(m)):
        entries = []
        ok = True
        for i in range(m):
            idx = mu[i] - (i + 1) + (sigma[i] + 1)
            if idx < 0 or idx > k:
                ok = False
                break
            entries.append(idx)
        if not ok:
            continue
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if sigma[i] > sigma[j]:
                    sign = -sign
        term = Polynomial.const(sign, vars)
        for idx in entries:
            term = term * e(idx)
        det = det + term
    return det


@lru_cache(maxsize=None)
def schur_in_torus(lam, k):
    """The Schur polynomial s_lam(t1..tk) as an explicit polynomial, from
    the Chern form via c_j = e_j(t1..tk)."""
    from itertools import combinations
    lam = normalize_partition(lam)
    tvars = tuple((f"t{i}", 1) for i in range(1, k + 1))
    if not lam:
        return Polynomial.const(1, tvars)
    es = {}
    for j in range(1, k + 1):
        total = Polynomial.zero(tvars)
        for combo in combinations(range(k), j):
            exp = [0] * k
            for c in combo:
                exp[c] = 1
            total = total + Polynomial(tvars, {tuple(exp): Fraction(1)})
        es[f"c{j}"] = total
    out = schur_in_chern(lam, k).subs(es)
    return out.drop_vars([f"c{j}" for j in range(1, k + 1)])


def schur_value_bialternant(lam, values):
    """Independent oracle: s_lam(values) as the bialternant ratio of
    determinants, for distinct rational values."""
    lam = normalize_partition(lam)
    k = len(values)
    padded = list(lam) + [0] * (k - len(lam))
    from .localization import _det
    num = _det([[Fraction(v) ** (padded[j] + k - 1 - j) for j in range(k)]
                for v in values])
    den = _det([[Fraction(v) ** (k - 1 - j) for j in range(k)]
                for v in values])
    return num / den


# -- cached point data ----------------------------------------------------------

@lru_cache(maxsize=None)
def _classical_data(k, n, y):
    """Fixed points, inverse top Chern values, and per-partition Schur value
    vectors for Gr(k,n) at parameters y."""
    ps = fixed_points_gr(k, n, y)
    inv_ch = [Fraction(1) / top_chern_at(p, ps) for p in ps.points]
    values = {}
    for lam in box_partitions(k, n):
        s = schur_in_chern(lam, k)
        values[lam] = [s.evaluate(generator_values(p, ps))
                       for p in ps.points]
    return ps, inv_ch, values


@lru_cache(maxsize=None)
def _quantum_data(k, n):
    ps = quantum_points_gr(k, n)
    inv_ch = [top_chern_at(p, ps).inverse() for p in ps.points]
    ch = [top_chern_at(p, ps) for p in ps.points]
    values = {}
    for lam in box_partitions(k, n):
        s = schur_in_chern(lam, k)
        values[lam] = [s.evaluate(generator_values(p, ps))
                       for p in ps.points]
    return ps, ch, inv_ch, values


# -- classical structure constants ---------------------------------------------------

def lr_coefficient(lam, mu, nu, k, n, y=None):
    """Littlewood-Richardson coefficient via the residue pairing
    <s_lam s_mu s_(nu dual)>, asserted to be a nonnegative integer."""
    lam, mu, nu = (normalize_partition(p) for p in (lam, mu, nu))
    for p in (lam, mu, nu):
        if not in_box(p, k, n):
            raise ValueError(f"{p} does not fit in the {k} x {n - k} box")
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if y is None:
        y = default_parameters(SpaceDescriptor("gr", k=k, n=n))
    _, inv_ch, values = _classical_data(k, n, tuple(Fraction(v) for v in y))
    dual = dual_partition(nu, k, n)
    total = sum(a * b * c * w for a, b, c, w in
                zip(values[lam], values[mu], values[dual], inv_ch))
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"pairing gave non-LR value {total}")
    return int(total)


def pair_schur(lams, k, n, y=None):
    """Residue pairing of a product of Schur classes (any number)."""
    lams = [normalize_partition(p) for p in lams]
    if y is None:
        y = default_parameters(SpaceDescriptor("gr", k=k, n=n))
    ps, inv_ch, values = _classical_data(k, n, tuple(Fraction(v) for v in y))
    total = Fraction(0)
    for i in range(len(ps.points)):
        prod = inv_ch[i]
        for lam in lams:
            prod *= values[lam][i]
        total += prod
    return total


def lr_oracle(lam, mu, nu):
    """Ground truth: the number of Littlewood-Richardson skew tableaux of
    shape nu/lam and content mu (columns strict, rows weak, reverse reading
    word a lattice word), counted by backtracking."""
    lam, mu, nu = (normalize_partition(p) for p in (lam, mu, nu))
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam):
        return 0
    if not mu:
        return 1
    rows = len(nu)
    lam_pad = list(lam) + [0] * (rows - len(lam))
    # cells in reverse reading order: each row right to left, top to bottom
    cells = []
    for r in range(rows):
        for c in range(nu[r] - 1, lam_pad[r] - 1, -1):
            cells.append((r, c))
    nvals = len(mu)
    grid = {}
    counts = [0] * (nvals + 1)

    def feasible(r, c, v):
        if counts[v] >= mu[v - 1]:
            return False
        if v > 1 and counts[v - 1] <= counts[v]:
            return False  # lattice word fails
        right = grid.get((r, c + 1))
        if right is not None and v > right:
            return False  # rows weakly increase
        up = grid.get((r - 1, c))
        if r > 0 and c >= lam_pad[r - 1]:
            if up is None or v <= up:
                return False  # columns strictly increase
        return True

    def count_fills(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for v in range(1, nvals + 1):
            if feasible(r, c, v):
                grid[(r, c)] = v
                counts[v] += 1
                total += count_fills(idx + 1)
                counts[v] -= 1
                del grid[(r, c)]
        return total

    return count_fills(0)


# -- quantum structure constants ------------------------------------------------------

@dataclass
class ProductTable:
    """Coefficients of a (quantum) product of two Schubert classes: entries
    map (nu, d) to the coefficient of q^d times the class of shape nu."""
    k: int
    n: int
    entries: dict = field(default_factory=dict)

    def classical(self):
        return {nu: c for (nu, d), c in self.entries.items() if d == 0}

    def __eq__(self, other):
        return (self.k, self.n, self.entries) == (other.k, other.n,
                                                  other.entries)

    def sorted_items(self):
        return sorted(self.entries.items())

    def to_tsv_lines(self):
        lines = ["nu\td\tcoeff"]
        for (nu, d), c in self.sorted_items():
            nu_str = ",".join(str(p) for p in nu) if nu else "-"
            lines.append(f"{nu_str}\t{d}\t{c}")
        return lines

    def to_json_dict(self):
        return {"k": self.k, "n": self.n,
                "entries": [{"nu": list(nu), "d": d, "coeff": c}
                            for (nu, d), c in self.sorted_items()]}


def gw_invariant(lams, k, n, genus=0):
    """Genus-g Gromov-Witten pairing of a product of Schur classes over the
    quantum point set, with the degree selection by weight: nonzero needs
    total weight = k(n-k) + d*n for some integer d >= 0 when genus is 0.

    The point set realizes the quantum parameter value (-1)^k in the
    geometric normalization (the one with nonnegative structure constants),
    so the genus-0 sum is corrected by (-1)^(k*d); the convention is pinned
    by quantum Pieri cases and the nonnegativity of every product table.
    """
    lams = [normalize_partition(p) for p in lams]
    ps, ch, inv_ch, values = _quantum_data(k, n)
    total = CyclotomicNumber.from_rational(0, 2 * n)
    for i in range(len(ps.points)):
        if genus == 0:
            prod = inv_ch[i]
        else:
            prod = ch[i] ** (genus - 1)
        for lam in lams:
            prod = prod * values[lam][i]
        total = total + prod
    if not total.is_rational():
        raise ArithmeticError(f"non-rational quantum pairing {total}")
    value = total.rational_value()
    if genus == 0 and value:
        excess = sum(sum(lam) for lam in lams) - k * (n - k)
        assert excess % n == 0, "nonzero pairing off the degree grid"
        value *= (-1) ** (k * (excess // n))
    return value


def quantum_product(lam, mu, k, n):
    """sigma_lam * sigma_mu in the small quantum cohomology of Gr(k,n), from
    the genus-0 Vafa-Intriligator sum at q = 1; the q-degree of each entry
    is recovered from the weight bookkeeping d = (|lam|+|mu|-|nu|)/n."""
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    for p in (lam, mu):
        if not in_box(p, k, n):
            raise ValueError(f"{p} does not fit in the {k} x {n - k} box")
    table = ProductTable(k=k, n=n)
    size = sum(lam) + sum(mu)
    for d in range(size // n + 1):
        rest = size - d * n
        for nu in box_partitions(k, n):
            if sum(nu) != rest:
                continue
            value = gw_invariant([lam, mu, dual_partition(nu, k, n)], k, n)
            if value.denominator != 1 or value < 0:
                raise ArithmeticError(
                    f"quantum coefficient {value} is not a nonnegative "
                    f"integer at nu={nu}, d={d}")
            if value:
                table.entries[(nu, d)] = int(value)
    return table


def genus_pairing(f, k, n, g):
    """Higher-genus Vafa-Intriligator value of a polynomial f in the Chern
    generators (genus 1 with f = 1 returns the Euler characteristic)."""
    from .localization import gw_pairing
    return gw_pairing(f, quantum_points_gr(k, n), genus=g)


# -- rim-hook oracle --------------------------------------------------------------

def rim_hook_reduce(nu, k, n):
    """Reduce a partition with at most k rows modulo n-rim-hooks.

    Beta-number form: subtract n from one beta entry per removed hook and
    resort at the end.  Each removal contributes a factor (-1)^(k+1) (the
    top complete-homogeneous generator maps to (-1)^(k+1) q) times the
    resorting parity (the classical hook-height sign), so the total sign is
    (-1)^(d(k+1) + inversion count).  Returns (rho, d, sign) with rho in
    the k x (n-k) box, or None when two beta residues collide (the shape
    dies).
    """
    nu = list(normalize_partition(nu))
    if len(nu) > k:
        raise ValueError("too many rows")
    nu += [0] * (k - len(nu))
    beta = [nu[i] + (k - 1 - i) for i in range(k)]
    if len({b % n for b in beta}) < k:
        return None
    d = sum((b - b % n) // n for b in beta)
    beta = [b % n for b in beta]
    inversions = sum(1 for i in range(k) for j in range(i + 1, k)
                     if beta[i] < beta[j])
    sign = (-1) ** (d * (k + 1) + inversions)
    beta.sort(reverse=True)
    rho = tuple(beta[i] - (k - 1 - i) for i in range(k))
    return normalize_partition(rho), d, sign


def rim_hook_oracle(lam, mu, k, n):
    """Quantum product oracle that never touches the residue formulas:
    expand classically by tableau counting in at most k rows, then reduce
    every shape modulo n-rim-hooks with signs."""
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    size = sum(lam) + sum(mu)
    max_part = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    table = {}
    for nu in partitions_of(size, k, max_part):
        c = lr_oracle(lam, mu, nu)
        if not c:
            continue
        reduced = rim_hook_reduce(nu, k, n)
        if reduced is None:
            continue
        rho, d, sign = reduced
        table[(rho, d)] = table.get((rho, d), 0) + sign * c
    out = ProductTable(k=k, n=n)
    for key, c in table.items():
        if c < 0:
            raise ArithmeticError(f"rim-hook reduction gave {c} at {key}")
        if c:
            out.entries[key] = c
    return out
