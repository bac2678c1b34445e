"""Exact rational arithmetic and sparse polynomials.

Rationals are :class:`fractions.Fraction` (aliased as ``BigRat``); Python
integers are already arbitrary precision.  Polynomials are sparse maps from
exponent tuples to integer coefficients.  Two concrete shapes are used
throughout the package:

* :class:`UnivarPoly` -- one variable, non-negative exponents (``t``, ``q``,
  ``L``).
* :class:`LaurentBivarPoly` -- two variables ``u, v``; negative exponents are
  allowed while a formula is being evaluated and are rejected by
  :meth:`LaurentBivarPoly.finalize`.

The module also holds the small amount of exact linear algebra the geometry
code needs (rank, kernels, integer kernels, determinants).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import NonExactDivision, ParseError, UnsupportedOperation

BigRat = Fraction


def _as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact number: {x!r}")


# ---------------------------------------------------------------------------
# sparse polynomials
# ---------------------------------------------------------------------------


class SparsePoly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("vars", "_terms", "_hash")
    allow_negative = True

    def __init__(self, terms: Mapping[tuple, int] | None = None, vars: Sequence[str] = ("x",)):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match variables {self.vars}")
            if not self.allow_negative and min(e, default=0) < 0:
                raise ValueError(f"negative exponent {e} in {type(self).__name__}")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # construction helpers ------------------------------------------------

    def _new(self, terms):
        return type(self)(terms, self.vars)

    @classmethod
    def constant(cls, c: int, vars=None):
        vars = vars or cls._default_vars()
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def _default_vars(cls):
        return ("x",)

    def zero_like(self):
        return self._new({})

    # basic protocol ------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, e) -> int:
        if isinstance(e, int):
            e = (e,)
        return self._terms.get(tuple(e), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.constant(other, self.vars)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, int):
            return self.constant(other, self.vars)
        if isinstance(other, SparsePoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return NotImplemented

    # ring operations -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: Sequence[int]):
        """Multiply by the monomial with exponent ``e``."""
        return self._new({tuple(a + b for a, b in zip(k, e)): c for k, c in self._terms.items()})

    # evaluation ----------------------------------------------------------

    def __call__(self, *point):
        return eval_poly(self, point)

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"e": list(e), "c": str(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: Mapping):
        try:
            vars = tuple(obj["vars"])
            terms = {}
            for t in obj["terms"]:
                e = tuple(int(k) for k in t["e"])
                terms[e] = terms.get(e, 0) + int(t["c"])
            return cls(terms, vars)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial encoding: {exc}") from exc

    # display -------------------------------------------------------------

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class UnivarPoly(SparsePoly):
    """Polynomial in one variable with non-negative exponents."""

    __slots__ = ()
    allow_negative = False

    def __init__(self, terms=None, vars=("t",)):
        if isinstance(vars, str):
            vars = (vars,)
        if terms is not None and not isinstance(terms, Mapping):
            raise TypeError("use UnivarPoly.from_coeffs for coefficient lists")
        if terms:
            terms = {((e,) if isinstance(e, int) else e): c for e, c in terms.items()}
        super().__init__(terms, vars)

    @classmethod
    def _default_vars(cls):
        return ("t",)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], var: str = "t"):
        return cls({(i,): c for i, c in enumerate(coeffs)}, (var,))

    @classmethod
    def gen(cls, var: str = "t"):
        return cls({(1,): 1}, (var,))

    @property
    def var(self) -> str:
        return self.vars[0]

    @property
    def degree(self) -> int:
        return max((e[0] for e in self._terms), default=-1)

    def coeffs(self) -> list[int]:
        """Dense coefficient list, constant term first (``[]`` for zero)."""
        return [self._terms.get((i,), 0) for i in range(self.degree + 1)]

    def truncate_below(self, n) -> "UnivarPoly":
        """Keep the terms of degree strictly less than ``n``."""
        return self._new({e: c for e, c in self._terms.items() if e[0] < n})

    def derivative(self) -> "UnivarPoly":
        return self._new({(e[0] - 1,): e[0] * c for e, c in self._terms.items() if e[0]})

    def rename(self, var: str) -> "UnivarPoly":
        return UnivarPoly(self._terms, (var,))


class LaurentBivarPoly(SparsePoly):
    """Laurent polynomial in ``u, v`` with integer coefficients."""

    __slots__ = ()

    def __init__(self, terms=None, vars=("u", "v")):
        super().__init__(terms, vars)

    @classmethod
    def _default_vars(cls):
        return ("u", "v")

    @classmethod
    def monomial(cls, p: int, q: int, c: int = 1):
        return cls({(p, q): c})

    @classmethod
    def from_univar(cls, poly: UnivarPoly, step: tuple[int, int]):
        """Substitute ``t -> u^a v^b`` where ``step = (a, b)``."""
        a, b = step
        return cls({(a * e[0], b * e[0]): c for e, c in poly.terms.items()})

    def is_polynomial(self) -> bool:
        return all(p >= 0 and q >= 0 for p, q in self._terms)

    def finalize(self) -> "LaurentBivarPoly":
        """Return ``self`` after checking that no negative exponent survived."""
        if not self.is_polynomial():
            raise NonExactDivision(f"Laurent terms left in final polynomial {self!r}")
        return self

    def hodge_numbers(self) -> dict[tuple[int, int], int]:
        """Coefficients ``e^{p,q}`` as a plain dict."""
        return dict(self._terms)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def poly_arith(a: SparsePoly, b: SparsePoly, op: str) -> SparsePoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UnsupportedOperation(f"unsupported polynomial operation {op!r}")


def exact_divide(num: SparsePoly, den: SparsePoly) -> SparsePoly:
    """Quotient of an exact division over the integers.

    Lexicographic long division; raises :class:`NonExactDivision` as soon as
    a leading coefficient fails to divide or the remainder escapes the range
    an exact quotient could occupy.
    """
    den = num._coerce(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return num.zero_like()
    lead_d = max(den._terms)
    # Newton polytopes add under multiplication, so every exponent of an
    # exact quotient lies in this box; leaving it proves non-divisibility.
    nv = len(num.vars)
    lo = [min(e[i] for e in num._terms) - min(e[i] for e in den._terms) for i in range(nv)]
    hi = [max(e[i] for e in num._terms) - max(e[i] for e in den._terms) for i in range(nv)]
    quotient: dict = {}
    rem = dict(num._terms)
    while rem:
        lead_r = max(rem)
        e = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(not lo[i] <= e[i] <= hi[i] for i in range(nv)):
            raise NonExactDivision(f"{num!r} is not divisible by {den!r}")
        c, r = divmod(rem[lead_r], den._terms[lead_d])
        if r:
            raise NonExactDivision(f"{num!r} is not divisible by {den!r}")
        if not num.allow_negative and min(e) < 0:
            raise NonExactDivision(f"{num!r} is not divisible by {den!r}")
        quotient[e] = c
        for ed, cd in den._terms.items():
            k = tuple(a + b for a, b in zip(e, ed))
            v = rem.get(k, 0) - c * cd
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return num._new(quotient)


def eval_poly(p: SparsePoly, point: Sequence) -> Fraction:
    point = tuple(_as_rational(x) for x in point)
    if len(point) != len(p.vars):
        raise ValueError(f"expected {len(p.vars)} coordinates, got {len(point)}")
    total = Fraction(0)
    for e, c in p.terms.items():
        term = Fraction(c)
        for x, k in zip(point, e):
            term *= x**k
        total += term
    return total


def specialize_v_to_1(p: LaurentBivarPoly) -> UnivarPoly:
    out: dict = {}
    for (a, b), c in p.terms.items():
        if a < 0:
            raise ValueError("negative power of u survives v = 1")
        out[(a,)] = out.get((a,), 0) + c
    return UnivarPoly(out, ("u",))


def poly_from_json(obj: Mapping) -> SparsePoly:
    """Decode either polynomial shape from the JSON encoding."""
    vars = tuple(obj.get("vars", ()))
    if len(vars) == 1:
        return UnivarPoly.from_json(obj)
    if len(vars) == 2:
        return LaurentBivarPoly.from_json(obj)
    raise ParseError(f"unsupported variable list {vars!r}")


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    m = [[_as_rational(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel over Q."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    v = [_as_rational(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of ``a x = b`` over Q, or None if inconsistent."""
    ncols = len(a[0])
    aug = [list(r) + [bb] for r, bb in zip(a, b)]
    red, pivots = row_echelon(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x


def det(m: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    a = [list(map(int, r)) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Lattice basis of ``{x in Z^n : A x = 0}``.

    Column reduction of ``A`` with a tracked unimodular matrix: the columns of
    the transform that end up under zero columns span the integer kernel.
    """
    a = [list(map(int, r)) for r in rows]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]  # columns are tracked

    def col_op(j, k, q):  # col_j -= q * col_k
        for r in a:
            r[j] -= q * r[k]
        for r in u:
            r[j] -= q * r[k]

    def swap(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in u:
            r[j], r[k] = r[k], r[j]

    col = 0
    for row in range(len(a)):
        if col >= ncols:
            break
        while True:
            nz = [j for j in range(col, ncols) if a[row][j] != 0]
            if not nz:
                break
            k = min(nz, key=lambda j: abs(a[row][j]))
            swap(col, k)
            done = True
            for j in range(col + 1, ncols):
                if a[row][j]:
                    col_op(j, col, a[row][j] // a[row][col])
                    if a[row][j]:
                        done = False
            if done:
                col += 1
                break
    return [[u[i][j] for i in range(ncols)] for j in range(col, ncols)]


def lattice_basis(vectors: Sequence[Sequence[int]], ambient: int) -> list[list[int]]:
    """Basis of the saturated lattice ``span_Q(vectors) ∩ Z^n``."""
    if not vectors or rank(vectors) == 0:
        return []
    complement = nullspace(vectors, ambient)  # normals of the span
    normals = [list(primitive(v)) for v in complement]
    if not normals:
        return [[int(i == j) for j in range(ambient)] for i in range(ambient)]
    return integer_kernel(normals, ambient)


def nonneg_solution(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """A solution of ``a x = b, x >= 0`` or None (exact Phase-I simplex with
    Bland's rule).  The returned point is verified before it is handed out."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = []
    for r, rhs in zip(a, b):
        r = [Fraction(x) for x in r]
        rhs = Fraction(rhs)
        if rhs < 0:
            r, rhs = [-x for x in r], -rhs
        rows.append(r + [Fraction(int(i == len(rows))) for i in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    # objective: minimize the sum of artificials, expressed in reduced costs
    cost = [-sum(row[j] for row in rows) for j in range(n + m + 1)]
    for i in range(m):
        cost[n + i] = Fraction(0)
    while True:
        enter = next((j for j in range(n + m) if cost[j] < 0), None)
        if enter is None:
            break
        ratios = [(rows[i][-1] / rows[i][enter], basis[i], i) for i in range(m) if rows[i][enter] > 0]
        if not ratios:  # unbounded cannot happen for Phase I
            break
        _, _, leave = min(ratios)
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[leave])]
        basis[leave] = enter
    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * (n + m)
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    if any(x[n:]):
        return None
    x = x[:n]
    if any(sum(Fraction(c) * xi for c, xi in zip(r, x)) != Fraction(rhs) for r, rhs in zip(a, b)):
        raise ArithmeticError("simplex produced an infeasible point")
    return x
