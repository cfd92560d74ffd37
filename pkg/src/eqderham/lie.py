"""Lie algebras by structure constants, and Ad-invariant polynomials.

A Lie algebra is a table c[i][j][k] of rationals with [X_i, X_j] =
sum_k c[i][j][k] X_k.  Invariance of polynomials is tested infinitesimally
(derivative of f along every coadjoint direction vanishes identically),
which is equivalent to Ad-invariance for connected groups; the acting
groups here are assumed compact connected throughout.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DimensionMismatchError
from .ratlin import ONE, ZERO, RatMatrix, rat
from .report import CheckReport

__all__ = [
    "LieAlgebraData",
    "u1",
    "su2",
    "validate_lie",
    "bracket",
    "coadjoint_matrix",
    "InvariantPolynomial",
    "check_ad_invariance",
]


@dataclass(frozen=True)
class LieAlgebraData:
    """Dimension, generator names and full structure-constant table."""

    names: tuple
    c: tuple  # c[i][j][k] : Fraction, full (antisymmetrized) table

    @property
    def dim(self):
        return len(self.names)

    @classmethod
    def from_sparse(cls, dim, triples, names=None):
        """Build from (i, j, k, value) entries with i < j, zero elsewhere.

        Indices are 0-based here; the file format uses 1-based indices and
        shifts before calling.  Supplying only i < j makes inconsistent
        (non-antisymmetric) input impossible.
        """
        if names is None:
            names = tuple(f"X{i + 1}" for i in range(dim))
        table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, v in triples:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise DimensionMismatchError(f"index out of range in entry ({i},{j},{k})")
            if i >= j:
                raise ValueError(f"structure constants must be given with i < j, got ({i},{j})")
            v = rat(v)
            table[i][j][k] += v
            table[j][i][k] -= v
        frozen = tuple(tuple(tuple(row) for row in plane) for plane in table)
        return cls(tuple(names), frozen)


def u1():
    """The one-dimensional abelian Lie algebra."""
    return LieAlgebraData.from_sparse(1, [], names=("X1",))


def su2():
    """su(2): [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X2."""
    return LieAlgebraData.from_sparse(
        3, [(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 1, -1)]
    )


def validate_lie(g: LieAlgebraData) -> CheckReport:
    """Check antisymmetry and the Jacobi identity, reporting first failures."""
    n = g.dim
    rep = CheckReport(subject=f"lie algebra ({n}-dim)")
    anti_ok, anti_wit = True, ""
    for i, j, k in product(range(n), repeat=3):
        if g.c[i][j][k] != -g.c[j][i][k]:
            anti_ok, anti_wit = False, f"c[{i + 1}][{j + 1}][{k + 1}] != -c[{j + 1}][{i + 1}][{k + 1}]"
            break
    rep.add("antisymmetry", anti_ok, anti_wit)
    jac_ok, jac_wit = True, ""
    for i, j, k, p in product(range(n), repeat=4):
        s = sum(
            (
                g.c[i][j][m] * g.c[m][k][p]
                + g.c[j][k][m] * g.c[m][i][p]
                + g.c[k][i][m] * g.c[m][j][p]
            )
            for m in range(n)
        )
        if s:
            jac_ok = False
            jac_wit = f"jacobi fails at (i,j,k,p) = ({i + 1},{j + 1},{k + 1},{p + 1}): sum = {s}"
            break
    rep.add("jacobi", jac_ok, jac_wit)
    return rep


def bracket(g: LieAlgebraData, v, w):
    """Coordinates of [v, w] for coordinate vectors v, w."""
    n = g.dim
    if len(v) != n or len(w) != n:
        raise DimensionMismatchError("coordinate vectors must match the algebra dimension")
    out = [ZERO] * n
    for i, vi in enumerate(v):
        if not vi:
            continue
        for j, wj in enumerate(w):
            if not wj:
                continue
            row = g.c[i][j]
            for k in range(n):
                if row[k]:
                    out[k] += vi * wj * row[k]
    return tuple(out)


def coadjoint_matrix(g: LieAlgebraData, i) -> RatMatrix:
    """Derivation action of X_i on the dual basis: M[k][j] = -c[i][k][j].

    The same matrix acts on the u_j and the theta_j of the Weil algebra:
    L_i applied to generator j has k-th coordinate M[k][j].
    """
    n = g.dim
    if not (0 <= i < n):
        raise DimensionMismatchError(f"index {i} out of range for dimension {n}")
    entries = {}
    for k in range(n):
        for j in range(n):
            v = -g.c[i][k][j]
            if v:
                entries[(k, j)] = v
    return RatMatrix(n, n, entries)


class InvariantPolynomial:
    """Polynomial in n variables x1..xn with exact rational coefficients.

    Sparse map from exponent tuple to coefficient.  The name records the
    intended use; invariance is a property checked by check_ad_invariance,
    not enforced at construction.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n:
                    raise DimensionMismatchError("exponent tuple length != n")
                c = rat(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def variable(cls, n, i, power=1):
        e = [0] * n
        e[i] = power
        return cls(n, {tuple(e): ONE})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: rat(c)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, InvariantPolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, ZERO) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return InvariantPolynomial(self.n, terms)

    def __neg__(self):
        return InvariantPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return InvariantPolynomial(
                self.n, {e: c * v for e, v in self.terms.items()} if c else {}
            )
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, ZERO) + c1 * c2
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return InvariantPolynomial(self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = InvariantPolynomial.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, i):
        """Partial derivative with respect to x_{i+1}."""
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                terms[tuple(e2)] = c * e[i]
        return InvariantPolynomial(self.n, terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def substitute(self, values, one):
        """Evaluate at commuting ring elements; ``one`` is the ring unit.

        Used with scalars, model elements and Cartan/Weil elements alike;
        the caller guarantees the values commute (even total degree).
        """
        if len(values) != self.n:
            raise DimensionMismatchError("need one value per variable")
        out = 0 * one
        for e, c in self.terms.items():
            term = c * one
            for i, p in enumerate(e):
                for _ in range(p):
                    term = term * values[i]
            out = out + term
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t)):
            c = self.terms[e]
            factors = [
                (f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}")
                for i, p in enumerate(e)
                if p
            ]
            body = "*".join(factors)
            if not body:
                bits.append(str(c))
            elif c == 1:
                bits.append(body)
            elif c == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{c}*{body}")
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


def check_ad_invariance(f: InvariantPolynomial, g: LieAlgebraData) -> bool:
    """Infinitesimal Ad-invariance: the coadjoint derivative of f vanishes.

    True iff sum_{b,c} c[a][b][c] x_b df/dx_c = 0 identically for every a.
    """
    n = g.dim
    if f.n != n:
        raise DimensionMismatchError("polynomial arity != algebra dimension")
    for a in range(n):
        total = InvariantPolynomial(n)
        for b in range(n):
            xb = InvariantPolynomial.variable(n, b)
            for cidx in range(n):
                coeff = g.c[a][b][cidx]
                if coeff:
                    total = total + coeff * (xb * f.diff(cidx))
        if total:
            return False
    return True
