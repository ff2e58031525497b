"""Sparse multivariate polynomials over Q with a weighted grading.

Every variable carries a positive integer weight; the weighted degree of a
monomial is the weight-dot-product of its exponent vector.  Coefficients are
`fractions.Fraction`, so all arithmetic is exact.  Values are immutable after
construction and every operation returns a fresh polynomial.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as an exact rational coefficient")


def merge_contexts(va, vb):
    """Merge two (name, weight) variable tuples by name.

    Returns (merged, map_a, map_b) where map_* send old variable positions to
    positions in the merged context.  A name occurring in both contexts must
    carry the same weight.
    """
    if va == vb:
        idx = tuple(range(len(va)))
        return va, idx, idx
    weights = {name: w for name, w in va}
    merged = list(va)
    for name, w in vb:
        if name in weights:
            if weights[name] != w:
                raise ValueError(f"variable {name} has conflicting weights "
                                 f"{weights[name]} and {w}")
        else:
            weights[name] = w
            merged.append((name, w))
    pos = {name: i for i, (name, _) in enumerate(merged)}
    map_a = tuple(pos[name] for name, _ in va)
    map_b = tuple(pos[name] for name, _ in vb)
    return tuple(merged), map_a, map_b


def _remap(terms, var_map, size):
    if var_map == tuple(range(size)) and all(len(e) == size for e in terms):
        return terms
    out = {}
    for exp, c in terms.items():
        new = [0] * size
        for i, e in enumerate(exp):
            new[var_map[i]] = e
        out[tuple(new)] = c
    return out


class Polynomial:
    """A sparse polynomial: a variable context plus {exponent: coefficient}."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        vars = tuple((str(n), int(w)) for n, w in vars)
        for n, w in vars:
            if w <= 0:
                raise ValueError(f"variable {n} must have positive weight")
        clean = {}
        for exp, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                exp = tuple(int(e) for e in exp)
                if len(exp) != len(vars):
                    raise ValueError("exponent length does not match context")
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponent")
                clean[exp] = c
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, vars=()):
        return cls(vars, {})

    @classmethod
    def const(cls, value, vars=()):
        vars = tuple(vars)
        value = _as_fraction(value)
        if not value:
            return cls(vars, {})
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def var(cls, name, weight=1):
        return cls(((name, weight),), {(1,): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    @property
    def weights(self):
        return tuple(w for _, w in self.vars)

    @property
    def names(self):
        return tuple(n for n, _ in self.vars)

    def is_zero(self):
        return not self.terms

    def wdeg(self, exp):
        return sum(e * w for e, w in zip(exp, self.weights))

    def degree(self):
        """Maximum weighted degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.wdeg(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {self.wdeg(e) for e in self.terms}
        return len(degs) <= 1

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient(self, monomial):
        """Coefficient of a monomial given as {name: exponent}."""
        exp = [0] * len(self.vars)
        pos = {n: i for i, (n, _) in enumerate(self.vars)}
        for name, e in monomial.items():
            exp[pos[name]] = e
        return self.terms.get(tuple(exp), Fraction(0))

    # -- ring operations ---------------------------------------------------

    def _coerced_pair(self, other):
        if isinstance(other, Polynomial):
            merged, ma, mb = merge_contexts(self.vars, other.vars)
            ta = _remap(self.terms, ma, len(merged))
            tb = _remap(other.terms, mb, len(merged))
            return merged, ta, tb
        other = Polynomial.const(_as_fraction(other), self.vars)
        return self.vars, self.terms, other.terms

    def __add__(self, other):
        merged, ta, tb = self._coerced_pair(other)
        out = dict(ta)
        for exp, c in tb.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial(merged, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial)
                       else -_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _as_fraction(other)
            return Polynomial(self.vars,
                              {e: c * v for e, v in self.terms.items()})
        merged, ta, tb = self._coerced_pair(other)
        out = {}
        for ea, ca in ta.items():
            for eb, cb in tb.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(exp, 0) + ca * cb
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return Polynomial(merged, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        result = Polynomial.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, scalar):
        c = _as_fraction(scalar)
        return self * (Fraction(1) / c)

    def __eq__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        diff = self - other
        return not diff.terms

    def __hash__(self):
        return hash((self.vars, tuple(self.sorted_terms())))

    # -- grading -----------------------------------------------------------

    def graded_component(self, w):
        """Sum of the terms of weighted degree exactly w."""
        if w < 0:
            raise ValueError("weighted degree must be nonnegative")
        picked = {e: c for e, c in self.terms.items() if self.wdeg(e) == w}
        return Polynomial(self.vars, picked)

    def homogeneous_components(self):
        """Split into {weight: homogeneous part}; the parts sum to self."""
        comps = {}
        for exp, c in self.terms.items():
            comps.setdefault(self.wdeg(exp), {})[exp] = c
        return {w: Polynomial(self.vars, t) for w, t in sorted(comps.items())}

    # -- calculus ----------------------------------------------------------

    def partial(self, name):
        """Formal partial derivative with respect to a context variable."""
        try:
            i = self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name}") from None
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                new = list(exp)
                new[i] -= 1
                out[tuple(new)] = c * exp[i]
        return Polynomial(self.vars, out)

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, values):
        """Evaluate at {name: value}; values are Fractions, ints or elements
        of one common cyclotomic field.  Every variable must be covered."""
        for name in self.names:
            if name not in values:
                raise KeyError(f"no value supplied for variable {name}")
        vals = [values[n] for n in self.names]
        pow_cache = [{0: 1} for _ in vals]
        total = 0
        for exp, c in self.terms.items():
            acc = c
            for i, e in enumerate(exp):
                if e:
                    cache = pow_cache[i]
                    if e not in cache:
                        k = max(k2 for k2 in cache if k2 <= e)
                        p = cache[k]
                        while k < e:
                            p = p * vals[i]
                            k += 1
                            cache[k] = p
                    acc = acc * cache[e]
            total = acc + total
        return total

    def subs(self, mapping):
        """Substitute polynomials (or scalars) for some variables.

        Unmapped variables stay in place.  The images' contexts are merged
        into the result, so eliminating a variable drops it only when no
        image mentions it.
        """
        keep = [(n, w) for n, w in self.vars if n not in mapping]
        result = Polynomial.zero(tuple(keep))
        images = {}
        for name, img in mapping.items():
            images[name] = (img if isinstance(img, Polynomial)
                            else Polynomial.const(_as_fraction(img)))
        cache = {}
        for exp, c in self.terms.items():
            term = Polynomial.const(c, tuple(keep))
            for i, e in enumerate(exp):
                if not e:
                    continue
                name, w = self.vars[i]
                if name in images:
                    key = (name, e)
                    if key not in cache:
                        cache[key] = images[name] ** e
                    term = term * cache[key]
                else:
                    term = term * Polynomial.var(name, w) ** e
            result = result + term
        return result

    def drop_vars(self, names):
        """Remove variables that no term uses (e.g. after substitution)."""
        names = set(names)
        idx = [i for i, (n, _) in enumerate(self.vars) if n not in names]
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e and i not in idx:
                    raise ValueError(f"variable {self.vars[i][0]} still occurs")
        vars = tuple(self.vars[i] for i in idx)
        terms = {tuple(exp[i] for i in idx): c for exp, c in self.terms.items()}
        return Polynomial(vars, terms)

    # -- canonical form ------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical order: ascending weighted degree, then graded
        reverse-lexicographic (within one degree the lexicographically largest
        exponent vector prints first)."""
        return sorted(self.terms.items(),
                      key=lambda ec: (self.wdeg(ec[0]), tuple(reversed(ec[0]))))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for (name, _), e in zip(self.vars, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"

    def to_json_dict(self):
        """Canonical JSON form: variable context plus ordered terms."""
        return {
            "vars": [{"name": n, "weight": w} for n, w in self.vars],
            "terms": [{"coeff": str(c), "exp": list(e)}
                      for e, c in self.sorted_terms()],
        }


def gens(spec):
    """Build generator polynomials from [(name, weight), ...] sharing one
    context, so arithmetic between them never remaps exponents."""
    spec = tuple((str(n), int(w)) for n, w in spec)
    out = []
    for i in range(len(spec)):
        exp = [0] * len(spec)
        exp[i] = 1
        out.append(Polynomial(spec, {tuple(exp): Fraction(1)}))
    return out


def monomials_of_weight(weights, w):
    """All exponent tuples over the given weights with weighted degree w."""
    weights = tuple(weights)
    if w < 0:
        return []
    if not weights:
        return [()] if w == 0 else []
    out = []
    head = weights[0]
    for e in range(w // head + 1):
        for rest in monomials_of_weight(weights[1:], w - e * head):
            out.append((e,) + rest)
    return out


def parse_polynomial(text, var_weights):
    """Parse the canonical string grammar.

    poly   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := rational | name ['^' int]
    rational := int ['/' int]

    `var_weights` maps allowed variable names to their weights.
    """
    import re

    tokens = re.findall(r"\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|-", text)
    if "".join(tokens).replace(" ", "") != text.replace(" ", ""):
        raise ValueError(f"cannot tokenize polynomial {text!r}")
    vars = tuple(sorted(var_weights.items()))
    result = Polynomial.zero(vars)
    i = 0
    n = len(tokens)

    def parse_factor(i, term):
        tok = tokens[i]
        i += 1
        if re.fullmatch(r"\d+/\d+|\d+", tok):
            return i, term * Fraction(tok)
        if tok not in var_weights:
            raise ValueError(f"unknown variable {tok!r}")
        e = 1
        if i < n and tokens[i] == "^":
            if i + 1 >= n or not tokens[i + 1].isdigit():
                raise ValueError("expected integer exponent after '^'")
            e = int(tokens[i + 1])
            i += 2
        return i, term * Polynomial.var(tok, var_weights[tok]) ** e

    while i < n:
        sign = 1
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError("dangling sign in polynomial")
        term = Polynomial.const(sign, vars)
        i, term = parse_factor(i, term)
        while i < n and tokens[i] == "*":
            i, term = parse_factor(i + 1, term)
        result = result + term
    return result
