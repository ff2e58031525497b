"""Machine verification that gradient ideals coincide with relation ideals.

All ideals here are weighted-homogeneous, so membership questions split into
finite-dimensional exact linear problems, one per weight: no Groebner bases,
just rational Gaussian elimination on monomial coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .poly import Polynomial, merge_contexts, monomials_of_weight
from .series import PowerSeries
from .spaces import (ogr_even_generator_series, parse_space, presentation,
                     quantum_relations)
from .potentials import potential


@dataclass
class MembershipCertificate:
    """target = sum of multiplier * relations[index], exactly (rechecked at
    construction time by the caller)."""
    target: Polynomial
    multipliers: list  # [(Polynomial, relation index), ...]


@dataclass
class NotMember:
    """Failed membership; residual_dim is the dimension of the weight slice
    of the quotient in which the target is nonzero."""
    residual_dim: int


def _common_context(polys):
    ctx = ()
    for p in polys:
        ctx, _, _ = merge_contexts(ctx, p.vars)
    return ctx


def ideal_membership_homogeneous(f, relations):
    """Decide f in (relations) for weighted-homogeneous input, returning an
    exact MembershipCertificate or NotMember."""
    if not f.is_homogeneous():
        raise ValueError("target polynomial is not weighted-homogeneous")
    for r in relations:
        if not r.is_homogeneous():
            raise ValueError("relations must be weighted-homogeneous")
    ctx = _common_context([f, *relations])
    zero_ctx = Polynomial.zero(ctx)
    f = zero_ctx + f
    rels = [zero_ctx + r for r in relations]
    if f.is_zero():
        return MembershipCertificate(f, [])
    w = f.degree()
    weights = tuple(wt for _, wt in ctx)
    monos = monomials_of_weight(weights, w)
    index = {m: i for i, m in enumerate(monos)}

    columns, producers = [], []
    for ri, r in enumerate(rels):
        d = r.degree()
        if r.is_zero() or d > w:
            continue
        for m in monomials_of_weight(weights, w - d):
            col = [Fraction(0)] * len(monos)
            for exp, c in r.terms.items():
                col[index[tuple(a + b for a, b in zip(exp, m))]] = c
            columns.append(col)
            producers.append((ri, m))
    target = [Fraction(0)] * len(monos)
    for exp, c in f.terms.items():
        target[index[exp]] = c

    solved = linalg.solve(columns, target)
    if solved is None:
        rank_cols = linalg.rank(
            [[columns[j][i] for j in range(len(columns))]
             for i in range(len(monos))]) if columns else 0
        return NotMember(residual_dim=len(monos) - rank_cols)
    solution, _ = solved
    mult_terms = {}
    for coeff, (ri, m) in zip(solution, producers):
        if coeff:
            mult_terms.setdefault(ri, {})[m] = coeff
    multipliers = [(Polynomial(ctx, terms), ri)
                   for ri, terms in sorted(mult_terms.items())]
    check = Polynomial.zero(ctx)
    for mult, ri in multipliers:
        check = check + mult * rels[ri]
    assert check == f, "certificate does not re-multiply to its target"
    return MembershipCertificate(f, multipliers)


@dataclass
class VerifyEntry:
    direction: str  # "gradient_in_relations" | "relation_in_gradient"
    label: str
    weight: int
    ok: bool
    multiplier_terms: int = 0
    residual_dim: int = 0


@dataclass
class VerifyReport:
    space: str
    quantum: bool
    passed: bool
    entries: list = field(default_factory=list)
    max_weight: int = 0

    def to_json_dict(self):
        return {
            "space": self.space,
            "quantum": self.quantum,
            "passed": self.passed,
            "max_weight": self.max_weight,
            "entries": [
                {"direction": e.direction, "label": e.label,
                 "weight": e.weight, "ok": e.ok,
                 "multiplier_terms": e.multiplier_terms,
                 "residual_dim": e.residual_dim}
                for e in self.entries
            ],
        }


def verify_potential(space, quantum=False):
    """Certify both inclusions: every (modified) gradient component lies in
    the relation ideal, and every relation lies in the gradient ideal."""
    if isinstance(space, str):
        space = parse_space(space)
    pres = presentation(space)
    pot = potential(space, quantum=quantum)
    if quantum:
        if space.kind == "e8":
            raise ValueError("quantum verification is not supported for e8")
        pres = quantum_relations(pres)
    grad = [(name, g) for name, g in pot.gradient() if name != "q"]
    rels = list(pres.relations)

    report = VerifyReport(space=str(space), quantum=quantum, passed=True)
    for name, g in grad:
        result = ideal_membership_homogeneous(g, rels)
        ok = isinstance(result, MembershipCertificate)
        entry = VerifyEntry("gradient_in_relations", name,
                            max(g.degree(), 0), ok)
        if ok:
            entry.multiplier_terms = sum(len(m.terms)
                                         for m, _ in result.multipliers)
        else:
            entry.residual_dim = result.residual_dim
            report.passed = False
        report.entries.append(entry)
        report.max_weight = max(report.max_weight, entry.weight)
    grad_polys = [g for _, g in grad]
    for i, r in enumerate(rels):
        result = ideal_membership_homogeneous(r, grad_polys)
        ok = isinstance(result, MembershipCertificate)
        entry = VerifyEntry("relation_in_gradient", f"r{r.degree()}",
                            max(r.degree(), 0), ok)
        if ok:
            entry.multiplier_terms = sum(len(m.terms)
                                         for m, _ in result.multipliers)
        else:
            entry.residual_dim = result.residual_dim
            report.passed = False
        report.entries.append(entry)
        report.max_weight = max(report.max_weight, entry.weight)
    return report


# -- shift identities ----------------------------------------------------------


@dataclass
class ShiftReport:
    ok: bool
    checked: int
    failures: list = field(default_factory=list)


def check_shift_identity_gr(k, n, order, perturbation=None):
    """On the truncated inverse series of C = 1 + c1 + ... + ck, check

        d cbar_i / d c_j  ==  d cbar_(i+l) / d c_(j+l)

    for every i, j, l with j, j+l <= k and i, i+l <= order.  An optional
    perturbation polynomial is added to the series first (negative control).
    """
    if order < n + k:
        raise ValueError("order must be at least n + k")
    vars = tuple((f"c{i}", i) for i in range(1, k + 1))
    C = Polynomial.const(1, vars)
    for g in range(k):
        exp = [0] * k
        exp[g] = 1
        C = C + Polynomial(vars, {tuple(exp): Fraction(1)})
    series = PowerSeries(C, order).inverse().poly
    if perturbation is not None:
        series = series + perturbation
    comp = {w: series.graded_component(w) for w in range(order + 1)}
    report = ShiftReport(ok=True, checked=0)
    for i in range(1, order + 1):
        for j in range(1, k + 1):
            base = comp[i].partial(f"c{j}")
            for l in range(1, min(k - j, order - i) + 1):
                shifted = comp[i + l].partial(f"c{j + l}")
                report.checked += 1
                if base != shifted:
                    report.ok = False
                    report.failures.append((i, j, l))
    return report


def check_shift_identity_ogr(n, order, perturbation=None):
    """Solve the even generators as series in the odd ones and check

        d x_even<w> / d x_odd<v>  ==  d x_even<w+2l> / d x_odd<v+2l>.

    Odd generators up to 2n-3 are kept free, matching the generic
    presentation of OGr(n,2n).
    """
    if order < 2 * n:
        raise ValueError("order must be at least 2n")
    series = ogr_even_generator_series(2 * n - 2, order).poly
    if perturbation is not None:
        series = series + perturbation
    odd = [j for j in range(1, 2 * n - 2, 2)]
    comp = {w: series.graded_component(w) for w in range(0, order + 1, 2)}
    report = ShiftReport(ok=True, checked=0)
    for w in range(2, order + 1, 2):
        for v in odd:
            if v > w:
                continue
            base = comp[w].partial(f"x{v}")
            for l in range(2, order + 1, 2):
                if v + l > max(odd) or w + l > order:
                    break
                shifted = comp[w + l].partial(f"x{v + l}")
                report.checked += 1
                if base != shifted:
                    report.ok = False
                    report.failures.append((w, v, l))
    return report


# -- Catalan numbers -----------------------------------------------------------


def segner_catalan(m):
    """Catalan numbers by Segner's recurrence: C_m = sum C_i C_(m-1-i)."""
    cats = [1]
    for j in range(1, m + 1):
        cats.append(sum(cats[i] * cats[j - 1 - i] for i in range(j)))
    return cats[m]


@dataclass
class CatalanReport:
    ok: bool
    coefficients: list
    catalan: list


def check_catalan(terms):
    """The expansion of g(u) = -1/2 + sqrt(1/4 + u^2) carries the signed
    Catalan numbers: the u^(2m) coefficient is (-1)^(m-1) * C_(m-1).
    Cross-checked against Segner's recurrence."""
    if terms < 1:
        raise ValueError("terms must be positive")
    from .series import series_sqrt1p
    u = Polynomial.var("u", 1)
    g = (series_sqrt1p(PowerSeries(4 * (u * u), 2 * terms)) - 1) \
        * Fraction(1, 2)
    coeffs = [g.poly.coefficient({"u": 2 * m}) for m in range(1, terms + 1)]
    cats = [segner_catalan(m) for m in range(terms)]
    ok = all(c == Fraction((-1) ** m * cats[m]) for m, c in enumerate(coeffs))
    return CatalanReport(ok=ok, coefficients=coeffs, catalan=cats)
