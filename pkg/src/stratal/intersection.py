"""Allowable chains with stratified coefficients, and their exact homology.

Coefficients are fixed to the rationals, realized as the "zero on the
singular set" system: the degree-i basis consists of the regular i-simplices
(those not contained in X_{n-1}), and boundaries drop faces that lie inside
X_{n-1}. A simplex is p-allowable in chain degree i when, for every singular
stratum Y, its largest face labeled Y has dimension at most
i - codim(Y) + p(Y). The intersection chain space in degree i is the kernel
of the non-allowable row block of the boundary restricted to allowable
columns; bases are returned in reduced column echelon form so that subspace
comparisons are deterministic.
"""

from itertools import combinations

from . import linalg
from .complexes import check_orientation
from .perversity import Perversity, dual, perversity_to_json


def _regular_cache(K):
    """Per-degree regular bases, boundaries with singular faces dropped, and
    singular-face profiles. Cached on the complex (immutable after load)."""
    cache = getattr(K, "_r0_cache", None)
    if cache is not None:
        return cache
    n = K.n
    reg = []
    reg_index = []
    for i in range(n + 1):
        simplices = [s for s in K.simplices(i) if K.levels[s] == n]
        reg.append(simplices)
        reg_index.append({s: j for j, s in enumerate(simplices)})
    bnd = [None] * (n + 1)
    for i in range(1, n + 1):
        rows = reg_index[i - 1]
        cols = []
        for s in reg[i]:
            col = {}
            for j in range(len(s)):
                face = s[:j] + s[j + 1 :]
                r = rows.get(face)
                if r is not None:
                    col[r] = -1 if j % 2 else 1
            cols.append(col)
        bnd[i] = cols
    bnd[0] = [{} for _ in reg[0]]
    profiles = {}
    for i in range(n + 1):
        for s in reg[i]:
            prof = {}
            for size in range(1, len(s)):
                for face in combinations(s, size):
                    sid = K.label_of[face]
                    if K.strata[sid].singular:
                        d = size - 1
                        if prof.get(sid, -1) < d:
                            prof[sid] = d
            profiles[s] = prof
    cache = (reg, reg_index, bnd, profiles)
    K._r0_cache = cache
    return cache


def allowable(sigma, i, K, p: Perversity) -> bool:
    """p-allowability of a regular simplex at chain degree i.

    The degree is the chain degree, which exceeds dim(sigma) when boundary
    faces are being checked at their own degree i-1.
    """
    _, _, _, profiles = _regular_cache(K)
    prof = profiles[tuple(sigma)]
    for sid, d in prof.items():
        st = K.strata[sid]
        if d > i - st.codim + p.value(sid, st.codim):
            return False
    return True


class StratifiedChainComplex:
    """The intersection chain complex of (K, p) with explicit rational bases."""

    def __init__(self, K, p: Perversity):
        self.K = K
        self.p = p
        reg, _, bnd, profiles = _regular_cache(K)
        n = K.n
        self.reg = reg
        self._bnd = bnd
        allow = []
        for i in range(n + 1):
            allow.append([j for j, s in enumerate(reg[i]) if self._allow(profiles[s], i)])
        self.allowable_indices = allow
        bases = []
        for i in range(n + 1):
            cols_idx = allow[i]
            if i == 0:
                combos = [{j: 1} for j in cols_idx]
            else:
                bad_rows = set(range(len(reg[i - 1]))) - set(allow[i - 1])
                if not bad_rows:
                    combos = [{j: 1} for j in cols_idx]
                else:
                    sub = []
                    for j in cols_idx:
                        col = {r: v for r, v in bnd[i][j].items() if r in bad_rows}
                        sub.append(col)
                    kern = linalg.kernel(sub)
                    combos = [
                        {cols_idx[pos]: v for pos, v in combo.items()} for combo in kern
                    ]
            bases.append(linalg.rcef(combos))
        self.bases = bases

    def _allow(self, prof, i):
        for sid, d in prof.items():
            st = self.K.strata[sid]
            if d > i - st.codim + self.p.value(sid, st.codim):
                return False
        return True

    def dim_chain(self, i):
        return len(self.bases[i])

    def boundary_on_basis(self, i):
        """Images of the degree-i basis under the dropped-face boundary,
        as columns over the regular (i-1)-basis."""
        if i <= 0 or i > self.K.n:
            return []
        return linalg.combine_columns(self._bnd[i], self.bases[i])

    def homology(self):
        n = self.K.n
        ranks = [0] * (n + 2)
        for i in range(1, n + 1):
            ranks[i] = linalg.rank(self.boundary_on_basis(i))
        return tuple(
            len(self.bases[i]) - ranks[i] - ranks[i + 1] for i in range(n + 1)
        )


def build_chains(K, p: Perversity) -> StratifiedChainComplex:
    return StratifiedChainComplex(K, p)


def intersection_betti(K, p: Perversity):
    """Intersection homology ranks with stratified rational coefficients."""
    return StratifiedChainComplex(K, p).homology()


def intersection_cobetti(K, p: Perversity):
    """Cohomological ranks; over a field these equal the betti numbers, and
    the separate name keeps reports in cohomological indexing."""
    return intersection_betti(K, p)


def duality_check(K, p: Perversity):
    """Check dim I^pH_i = dim I^{t-p}H_{n-i} on a compact oriented space.

    Unorientable or bounded inputs yield a not-applicable report (the duality
    hypothesis is unmet), never a failure.
    """
    n = K.n
    report = {
        "space": K.name,
        "perversity": perversity_to_json(p),
        "applicable": True,
        "reason": None,
    }
    if not K.is_closed():
        report["applicable"] = False
        report["reason"] = "space has boundary faces"
        return report
    if check_orientation(K) is None:
        report["applicable"] = False
        report["reason"] = "space is unorientable"
        return report
    q = dual(p, K)
    v_p = intersection_betti(K, p)
    v_q = intersection_betti(K, q)
    report["dual_perversity"] = perversity_to_json(q)
    report["betti"] = list(v_p)
    report["dual_betti"] = list(v_q)
    report["pass"] = all(v_p[i] == v_q[n - i] for i in range(n + 1))
    return report
