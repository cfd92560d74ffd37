"""The Weil algebra of a Lie algebra, with differential and contractions.

Generators u_1..u_l in degree 2 and theta_1..theta_l in degree 1.  The
differential is the antiderivation with

    d theta_i = u_i - (1/2) sum_{j,k} c[j][k][i] theta_j theta_k
    d u_i     = sum_{j,k} c[j][k][i] u_j theta_k

and the contractions are iota_i theta_j = delta_ij, iota_i u_j = 0.  Lie
derivatives are never assigned: they are always derived from the magic
formula L_i = d iota_i + iota_i d, so the classical formula
L_i theta_j = -sum_k c[i][k][j] theta_k is a theorem checked by
``verify_weil``, not an input.
"""

from functools import lru_cache

from .errors import WeilConstructionError
from .gca import GcaAlgebra, GradedOperator, graded_commutator
from .lie import LieAlgebraData
from .ratlin import ONE
from .report import CheckReport

__all__ = ["WeilAlgebra", "build_weil", "verify_weil"]


class WeilAlgebra:
    """W(s) = S(s*) (x) Lambda(s*) with d, iota_i and derived L_i."""

    def __init__(self, lie: LieAlgebraData):
        l = lie.dim
        self.lie = lie
        gens = [(f"u{i + 1}", 2) for i in range(l)] + [(f"theta{i + 1}", 1) for i in range(l)]
        self.algebra = GcaAlgebra(gens)
        self._op_cache = {}

        alg = self.algebra
        c = lie.c
        d_actions = {}
        for i in range(l):
            # d theta_i = u_i - sum_{j<k} c[j][k][i] theta_j theta_k
            val = alg.gen(i)
            for j in range(l):
                for k in range(j + 1, l):
                    if c[j][k][i]:
                        val = val - c[j][k][i] * (alg.gen(l + j) * alg.gen(l + k))
            d_actions[l + i] = val
            # d u_i = sum_{j,k} c[j][k][i] u_j theta_k
            val = alg.zero()
            for j in range(l):
                for k in range(l):
                    if c[j][k][i]:
                        val = val + c[j][k][i] * (alg.gen(j) * alg.gen(l + k))
            d_actions[i] = val
        self.d = GradedOperator(alg, "d", 1, 1, d_actions)

        self.iota = []
        for i in range(l):
            actions = {j: alg.zero() for j in range(l)}
            for j in range(l):
                actions[l + j] = alg.scalar(ONE if i == j else 0)
            self.iota.append(GradedOperator(alg, f"iota{i + 1}", -1, 1, actions))
        self.iota = tuple(self.iota)

        # L_i derived generator by generator from the magic formula
        self.lie_ops = []
        for i in range(l):
            actions = {}
            for g in range(2 * l):
                gen = alg.gen(g)
                actions[g] = self.d(self.iota[i](gen)) + self.iota[i](self.d(gen))
            self.lie_ops.append(GradedOperator(alg, f"L{i + 1}", 0, 0, actions))
        self.lie_ops = tuple(self.lie_ops)

    @property
    def dim(self):
        return self.lie.dim

    def u(self, i):
        return self.algebra.gen(i)

    def theta(self, i):
        return self.algebra.gen(self.dim + i)

    def op_on_monomial(self, key, mon):
        """Cached action of 'd' / ('iota', i) / ('lie', i) on one monomial.

        Returns a plain {monomial: coefficient} dict.
        """
        cached = self._op_cache.get((key, mon))
        if cached is None:
            if key == "d":
                op = self.d
            elif key[0] == "iota":
                op = self.iota[key[1]]
            else:
                op = self.lie_ops[key[1]]
            cached = dict(op(self.algebra.monomial(mon)).terms)
            self._op_cache[(key, mon)] = cached
        return cached


@lru_cache(maxsize=None)
def build_weil(lie: LieAlgebraData) -> WeilAlgebra:
    """Construct W(lie) and fail loudly if any axiom check fails."""
    w = WeilAlgebra(lie)
    rep = verify_weil(w)
    if not rep.ok:
        first = rep.first_failure()
        raise WeilConstructionError(
            f"Weil algebra axioms fail: {first.name} ({first.witness})", report=rep
        )
    return w


def verify_weil(w: WeilAlgebra) -> CheckReport:
    """Check every displayed operator identity on every generator.

    All operators involved are (anti)derivations determined by generator
    values, so equality on generators implies equality everywhere.
    """
    rep = CheckReport(subject="Weil algebra")
    alg, l, c = w.algebra, w.dim, w.lie.c
    gens = [alg.gen(g) for g in range(2 * l)]
    names = [g.name for g in alg.gens]

    def check_zero(name, results):
        for g, r in zip(names, results):
            if r:
                rep.add(name, False, f"on {g}: {r}")
                return
        rep.add(name, True)

    check_zero("d^2 = 0", [w.d(w.d(x)) for x in gens])
    for i in range(l):
        check_zero(f"iota{i + 1}^2 = 0", [w.iota[i](w.iota[i](x)) for x in gens])
    for i in range(l):
        for j in range(i + 1, l):
            check_zero(
                f"{{iota{i + 1}, iota{j + 1}}} = 0",
                graded_commutator(w.iota[i], w.iota[j], gens),
            )

    # the derived L_i must reproduce the coadjoint pattern on both u and theta
    theta_fail = u_fail = ""
    for i in range(l):
        for j in range(l):
            want_theta = alg.zero()
            want_u = alg.zero()
            for k in range(l):
                if c[i][k][j]:
                    want_theta = want_theta - c[i][k][j] * w.theta(k)
                    want_u = want_u - c[i][k][j] * w.u(k)
            got_t = w.lie_ops[i](w.theta(j))
            got_u = w.lie_ops[i](w.u(j))
            if not theta_fail and got_t != want_theta:
                theta_fail = f"i={i + 1}, j={j + 1}: got {got_t}, want {want_theta}"
            if not u_fail and got_u != want_u:
                u_fail = f"i={i + 1}, j={j + 1}: got {got_u}, want {want_u}"
    rep.add("L_i theta_j = -sum c[i][k][j] theta_k", not theta_fail, theta_fail)
    rep.add("L_i u_j = -sum c[i][k][j] u_k", not u_fail, u_fail)

    for i in range(l):
        for j in range(l):
            comm = graded_commutator(w.lie_ops[i], w.lie_ops[j], gens)
            want = [
                sum((c[i][j][k] * w.lie_ops[k](x) for k in range(l)), alg.zero())
                for x in gens
            ]
            check_zero(f"[L{i + 1}, L{j + 1}] = sum c L", [a - b for a, b in zip(comm, want)])

    for i in range(l):
        for j in range(l):
            comm = graded_commutator(w.lie_ops[i], w.iota[j], gens)
            want = [
                sum((c[i][j][k] * w.iota[k](x) for k in range(l)), alg.zero())
                for x in gens
            ]
            check_zero(f"[L{i + 1}, iota{j + 1}] = sum c iota", [a - b for a, b in zip(comm, want)])

    for i in range(l):
        check_zero(
            f"L{i + 1} d = d L{i + 1}",
            [w.lie_ops[i](w.d(x)) - w.d(w.lie_ops[i](x)) for x in gens],
        )
    return rep
