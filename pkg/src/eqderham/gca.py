"""Free graded-commutative algebra with exact rational coefficients.

Monomial normal form: exponent vector over the even generators (in fixed
declaration order) followed by a strictly increasing tuple of odd-generator
indices.  All Koszul signs arise from counting transpositions of odd
generators during merges; even generators never contribute a sign.  Normal
form is canonical, so element equality is dict equality.

Derivations (even) and antiderivations (odd) are specified by their values
on generators and extended by the graded Leibniz rule

    D(ab) = (Da) b + (-1)**(p |a|) a (Db),     p = parity of D.

Applying an operator to a generator it has no assigned action for is a hard
error, not an implicit zero.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._backend import merge_odd
from .errors import GeneratorActionError, UniverseMismatchError
from .ratlin import ONE, ZERO, rat

__all__ = [
    "GeneratorSpec",
    "GcaAlgebra",
    "GcaElement",
    "GradedOperator",
    "multiply",
    "apply",
    "graded_commutator",
]


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int

    @property
    def parity(self):
        return self.degree & 1


class GcaAlgebra:
    """Generator universe; every element carries a reference to one."""

    def __init__(self, gens):
        specs = []
        for g in gens:
            specs.append(g if isinstance(g, GeneratorSpec) else GeneratorSpec(*g))
        names = [g.name for g in specs]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        if any(g.degree < 0 for g in specs):
            raise ValueError("generator degrees must be nonnegative")
        self.gens = tuple(specs)
        self.even = tuple(i for i, g in enumerate(specs) if g.parity == 0)
        self.odd = tuple(i for i, g in enumerate(specs) if g.parity == 1)
        self._even_slot = {g: s for s, g in enumerate(self.even)}
        self._odd_slot = {g: s for s, g in enumerate(self.odd)}
        self._name_to_index = {g.name: i for i, g in enumerate(specs)}

    @property
    def empty_monomial(self):
        return ((0,) * len(self.even), ())

    def monomial_degree(self, mon):
        exps, odd = mon
        d = sum(e * self.gens[self.even[s]].degree for s, e in enumerate(exps) if e)
        d += sum(self.gens[self.odd[s]].degree for s in odd)
        return d

    def index(self, name):
        return self._name_to_index[name]

    def zero(self):
        return GcaElement(self, {})

    def one(self):
        return GcaElement(self, {self.empty_monomial: ONE})

    def scalar(self, c):
        c = rat(c)
        return GcaElement(self, {self.empty_monomial: c} if c else {})

    def gen(self, which):
        i = self.index(which) if isinstance(which, str) else which
        exps = [0] * len(self.even)
        odd = ()
        if i in self._even_slot:
            exps[self._even_slot[i]] = 1
        else:
            odd = (self._odd_slot[i],)
        return GcaElement(self, {(tuple(exps), odd): ONE})

    def monomial(self, mon, coeff=ONE):
        coeff = rat(coeff)
        return GcaElement(self, {mon: coeff} if coeff else {})

    def _flatten(self, mon):
        """Monomial as the ordered list of generator indices it multiplies."""
        exps, odd = mon
        out = []
        for s, e in enumerate(exps):
            out.extend([self.even[s]] * e)
        out.extend(self.odd[s] for s in odd)
        return out


class GcaElement:
    """Sparse monomial -> coefficient map over a GcaAlgebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise UniverseMismatchError("elements from different generator universes")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, GcaElement):
            return self.algebra is other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, ZERO) + c
            if s:
                terms[m] = s
            elif m in terms:
                del terms[m]
        return GcaElement(self.algebra, terms)

    def __neg__(self):
        return GcaElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = rat(c)
        if not c:
            return self.algebra.zero()
        return GcaElement(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply(self, other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def is_homogeneous(self):
        degs = {self.algebra.monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self):
        """Degree of a homogeneous element; 0 for the zero element."""
        degs = {self.algebra.monomial_degree(m) for m in self.terms}
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element of degrees {sorted(degs)}")
        return degs.pop()

    def homogeneous_parts(self):
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(self.algebra.monomial_degree(m), {})[m] = c
        return {d: GcaElement(self.algebra, t) for d, t in sorted(parts.items())}

    def __repr__(self):
        return f"GcaElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        alg = self.algebra
        bits = []
        for mon in sorted(self.terms, key=lambda m: (alg.monomial_degree(m), m)):
            c = self.terms[mon]
            factors = []
            exps, odd = mon
            for s, e in enumerate(exps):
                if e:
                    name = alg.gens[alg.even[s]].name
                    factors.append(name if e == 1 else f"{name}^{e}")
            factors.extend(alg.gens[alg.odd[s]].name for s in odd)
            body = " ".join(factors)
            if not body:
                bits.append(str(c))
            elif c == 1:
                bits.append(body)
            elif c == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{c} {body}")
        out = " + ".join(bits)
        return out.replace("+ -", "- ")


def multiply(a: GcaElement, b: GcaElement) -> GcaElement:
    """Graded-commutative product with Koszul signs."""
    a._check(b)
    alg = a.algebra
    terms = {}
    for (e1, o1), c1 in a.terms.items():
        for (e2, o2), c2 in b.terms.items():
            merged = merge_odd(o1, o2)
            if merged is None:
                continue
            sign, odd = merged
            exps = tuple(x + y for x, y in zip(e1, e2))
            key = (exps, odd)
            c = terms.get(key, ZERO) + sign * c1 * c2
            if c:
                terms[key] = c
            elif key in terms:
                del terms[key]
    return GcaElement(alg, terms)


@dataclass
class GradedOperator:
    """Degree-homogeneous (anti)derivation given by its generator actions.

    ``parity`` is 0 for a derivation, 1 for an antiderivation; ``degree`` is
    the shift added to the degree of homogeneous inputs.
    """

    algebra: GcaAlgebra
    name: str
    degree: int
    parity: int
    actions: dict  # generator index -> GcaElement

    def __post_init__(self):
        for i, val in self.actions.items():
            g = self.algebra.gens[i]
            if val and val.degree() != g.degree + self.degree:
                raise ValueError(
                    f"{self.name}({g.name}) has degree {val.degree()}, "
                    f"expected {g.degree + self.degree}"
                )

    def __call__(self, x):
        return apply(self, x)


def _apply_monomial(op: GradedOperator, mon) -> GcaElement:
    alg = op.algebra
    factors = alg._flatten(mon)
    result = alg.zero()
    left = alg.one()
    parity_sum = 0
    for j, g in enumerate(factors):
        if g not in op.actions:
            raise GeneratorActionError(
                f"operator {op.name} has no action for generator "
                f"{alg.gens[g].name!r}"
            )
        dg = op.actions[g]
        if dg:
            sign = -1 if (op.parity and parity_sum & 1) else 1
            right = _tail_monomial(alg, factors[j + 1 :])
            result = result + (left * dg * right).scale(sign)
        left = left * alg.gen(g)
        parity_sum += alg.gens[g].degree
    return result


def _tail_monomial(alg, factors):
    """Monomial element from a normal-ordered factor suffix (no signs)."""
    exps = [0] * len(alg.even)
    odd = []
    for g in factors:
        if g in alg._even_slot:
            exps[alg._even_slot[g]] += 1
        else:
            odd.append(alg._odd_slot[g])
    return GcaElement(alg, {(tuple(exps), tuple(odd)): ONE})


def apply(op: GradedOperator, a: GcaElement) -> GcaElement:
    """Extend the operator's generator actions by the graded Leibniz rule."""
    if op.algebra is not a.algebra:
        raise UniverseMismatchError("operator and element universes differ")
    out = op.algebra.zero()
    for mon, coeff in a.terms.items():
        out = out + _apply_monomial(op, mon).scale(coeff)
    return out


def _as_map(op):
    if isinstance(op, GradedOperator):
        return op, op.parity
    func, parity = op
    return func, parity


def graded_commutator(op1, op2, basis):
    """[D1, D2] = D1 D2 - (-1)**(p1 p2) D2 D1 on each test-basis element.

    Operators are GradedOperators or ``(callable, parity)`` pairs.  Returns
    the list of results in basis order.
    """
    f1, p1 = _as_map(op1)
    f2, p2 = _as_map(op2)
    sign = -1 if (p1 and p2) else 1
    out = []
    for x in basis:
        out.append(f1(f2(x)) - f2(f1(x)).scale(sign))
    return out
