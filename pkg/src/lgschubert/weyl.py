"""Type-A Weyl group machinery and Schubert-basis expansion by divided
differences.

Permutations are tuples in one-line notation on 1..n.  The coefficients
C[w, u, x] of the expansion functional are built from the recursion

    C[id, id, x] = 1,
    C[s_a w', u, x] = (C[w', u, x] - C[w', s_a u, s_a x]) / alpha(x),

with alpha the simple root x_i - x_(i+1) and s_a w' a length-increasing
factorization.  Evaluation f(u x) means f at the tuple (x_u(1), ..., x_u(n));
under that convention the recursion reproduces Schur-class indicators, which
is the test that pins the convention down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations as _all_perms

from .poly import Polynomial


def identity(n):
    return tuple(range(1, n + 1))


def compose(u, v):
    """(u o v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w):
    out = [0] * len(w)
    for i, val in enumerate(w):
        out[val - 1] = i + 1
    return tuple(out)


def length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] > w[j])


def simple(i, n):
    """The transposition s_i swapping i and i+1 (1-based, i < n)."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def left_descents(w):
    """Simple letters i with l(s_i w) < l(w): value i appears after i+1."""
    pos = inverse(w)
    return [i for i in range(1, len(w)) if pos[i - 1] > pos[i]]


def reduced_word(w):
    """Canonical reduced word via smallest left descents:
    w = s_(word[0]) s_(word[1]) ... s_(word[-1])."""
    word = []
    w = tuple(w)
    n = len(w)
    while True:
        ds = left_descents(w)
        if not ds:
            return tuple(word)
        i = ds[0]
        word.append(i)
        w = compose(simple(i, n), w)


def all_reduced_words(w):
    """Every reduced word of w (exponential; for small test cases)."""
    if length(w) == 0:
        return [()]
    n = len(w)
    out = []
    for i in left_descents(w):
        for rest in all_reduced_words(compose(simple(i, n), w)):
            out.append((i,) + rest)
    return out


def bruhat_leq(u, w):
    """Bruhat order by the sorted-prefix (Ehresmann) criterion."""
    if len(u) != len(w):
        raise ValueError("permutations act on different sets")
    n = len(u)
    for i in range(1, n):
        us = sorted(u[:i])
        ws = sorted(w[:i])
        if any(a > b for a, b in zip(us, ws)):
            return False
    return True


def bruhat_leq_subword_oracle(u, w):
    """Ground truth: u <= w iff some subword of one fixed reduced word of w
    of length l(u) multiplies to u."""
    word = reduced_word(w)
    n = len(w)
    lu = length(u)
    target = tuple(u)

    def rec(idx, current, used):
        if used == lu:
            return current == target
        if idx == len(word) or len(word) - idx < lu - used:
            return False
        if rec(idx + 1, compose(current, simple(word[idx], n)), used + 1):
            return True
        return rec(idx + 1, current, used)

    # left-to-right product of the chosen letters: build by right-multiplying
    return rec(0, identity(n), 0)


# -- Grassmannian permutations ------------------------------------------------------

def grassmannian_permutation(lam, k, n):
    """The minimal coset representative with at most one descent at k whose
    Schubert polynomial is the Schur polynomial s_lam(t1..tk)."""
    lam = tuple(lam) + (0,) * (k - len(lam))
    if len(lam) > k or any(p > n - k for p in lam):
        raise ValueError("partition does not fit the box")
    first = [lam[k - i] + i for i in range(1, k + 1)]
    rest = [v for v in range(1, n + 1) if v not in set(first)]
    w = tuple(first + rest)
    assert length(w) == sum(lam)
    return w


def grassmannian_partition(w, k):
    """Inverse of grassmannian_permutation."""
    lam = tuple(sorted((w[i] - (i + 1) for i in range(k)), reverse=True))
    return tuple(p for p in lam if p)


def is_grassmannian(w, k):
    ds = [i for i in range(1, len(w)) if w[i - 1] > w[i]]
    return ds == [] or ds == [k]


# -- divided-difference coefficients ----------------------------------------------


@dataclass
class CoefficientTable:
    """C[w, u, x] for fixed w and base point x, keyed by u <= w."""
    w: tuple
    base_point: tuple
    entries: dict = field(default_factory=dict)


def _swap(x, i):
    x = list(x)
    x[i - 1], x[i] = x[i], x[i - 1]
    return tuple(x)


def _coeff(word, u, x, memo):
    key = (word, u, x)
    if key in memo:
        return memo[key]
    if not word:
        value = Fraction(1) if u == identity(len(u)) else Fraction(0)
    else:
        i, rest = word[0], word[1:]
        alpha = x[i - 1] - x[i]
        if alpha == 0:
            raise ZeroDivisionError(
                f"base point is not regular: x_{i} == x_{i + 1}")
        value = (_coeff(rest, u, x, memo)
                 - _coeff(rest, compose(simple(i, len(u)), u), _swap(x, i),
                          memo)) / alpha
    memo[key] = value
    return value


def coefficient_table(w, x, word=None):
    """All coefficients C[w, u, x] for u <= w at a regular base point.

    The table does not depend on the choice of reduced word (checked in the
    test suite by recomputation with other words)."""
    w = tuple(w)
    n = len(w)
    x = tuple(Fraction(v) for v in x)
    if len(set(x)) != n:
        raise ValueError("base point must have distinct coordinates")
    if word is None:
        word = reduced_word(w)
    else:
        word = tuple(word)
        check = identity(n)
        for i in reversed(word):
            check = compose(simple(i, n), check)
        if check != w or len(word) != length(w):
            raise ValueError("not a reduced word for w")
    memo = {}
    table = CoefficientTable(w=w, base_point=x)
    for u in _all_perms(range(1, n + 1)):
        value = _coeff(word, u, x, memo)
        if value:
            if not bruhat_leq(u, w):
                raise AssertionError(f"nonzero coefficient at u > w: {u}")
            table.entries[u] = value
    return table


def point_action(u, x):
    """The tuple (x_u(1), ..., x_u(n)) used for the evaluations f(u x)."""
    return tuple(x[u[i] - 1] for i in range(len(u)))


def check_block_invariance(f, k, n):
    """f must be invariant under the parabolic subgroup permuting 1..k and
    k+1..n separately; checked exactly on adjacent transpositions."""
    present = set(f.names)
    for i in list(range(1, k)) + list(range(k + 1, n)):
        a, b = f"t{i}", f"t{i + 1}"
        if a in present or b in present:
            swapped = f.subs({a: Polynomial.var(b, 1),
                              b: Polynomial.var(a, 1)})
            if swapped != f:
                raise ValueError(f"polynomial is not invariant under "
                                 f"swapping t{i}, t{i + 1}")


def expand_in_schubert(f, x, k, n, word_choice=None):
    """Expand a block-invariant homogeneous polynomial in the Schubert basis
    of Gr(k,n): the coefficient of the class of shape lam is

        sum over u <= w_lam of C[w_lam, u, x] * f(u x).

    Returns {lam: coefficient} over all box shapes of f's weight."""
    if not f.is_homogeneous():
        raise ValueError("expansion needs a homogeneous polynomial")
    bad = [name for name in f.names if not name.startswith("t")]
    if bad:
        raise ValueError(f"expected torus variables t1..t{n}, found {bad}")
    check_block_invariance(f, k, n)
    d = max(f.degree(), 0)
    x = tuple(Fraction(v) for v in x)
    out = {}
    from .schubert import box_partitions
    values = {}
    for lam in box_partitions(k, n):
        if sum(lam) != d:
            continue
        w = grassmannian_permutation(lam, k, n)
        table = coefficient_table(w, x, word=word_choice)
        total = Fraction(0)
        for u, c in table.entries.items():
            ux = point_action(u, x)
            key = ux
            if key not in values:
                values[key] = f.evaluate(
                    {f"t{i}": ux[i - 1] for i in range(1, n + 1)
                     if f"t{i}" in set(f.names)})
            total += c * values[key]
        out[lam] = total
    return out
