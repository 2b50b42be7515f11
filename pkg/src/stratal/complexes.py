"""Finite simplicial complexes with skeleton filtrations and stratum labels.

A FilteredComplex is the combinatorial stand-in for a compact stratified
pseudomanifold: a pure n-dimensional face-closed simplicial complex together
with a chain of closed, full subcomplexes X_0 <= ... <= X_{n-1}. Strata are
the connected components of each difference X_j - X_{j-1}, computed through
shared codimension-one faces at the same filtration level; every simplex
carries exactly one stratum label. Codimension-one strata are allowed, and
the top filtration step X_{n-1} may differ from X_{n-2}.

All homology here is ordinary simplicial homology over the rationals with
exact ranks; the allowable-chain machinery lives in `intersection`.
"""

import json
from fractions import Fraction
from itertools import combinations, permutations
from pathlib import Path

from . import linalg
from .errors import ConfigurationError, SpaceFormatError, StructureError
from .rationals import format_rational, parse_rational


class Stratum:
    """One stratum: its id, dimensions, and member simplices."""

    __slots__ = ("id", "dim", "codim", "link_dim", "singular", "level", "simplices")

    def __init__(self, sid, dim, codim, singular, level, simplices):
        self.id = sid
        self.dim = dim
        self.codim = codim
        self.link_dim = codim - 1
        self.singular = singular
        self.level = level
        self.simplices = simplices

    def __repr__(self):
        kind = "singular" if self.singular else "regular"
        return f"<Stratum {self.id} dim={self.dim} codim={self.codim} {kind}>"


class Orientation:
    """Coherent signs on the n-simplices, when they exist."""

    __slots__ = ("signs",)

    def __init__(self, signs):
        self.signs = signs


def _faces(simplex):
    for size in range(1, len(simplex)):
        yield from combinations(simplex, size)


def _facets(simplex):
    if len(simplex) == 1:
        return []
    return [simplex[:i] + simplex[i + 1 :] for i in range(len(simplex))]


def _face_closure(simplices):
    closed = set()
    stack = [tuple(s) for s in simplices]
    while stack:
        s = stack.pop()
        if s in closed:
            continue
        closed.add(s)
        if len(s) > 1:
            stack.extend(_facets(s))
    return closed


def _maximal_of(simplices):
    # processing in decreasing dimension, a simplex is maximal iff no larger
    # simplex has already marked it as a proper face
    seen = set()
    out = []
    for s in sorted(simplices, key=len, reverse=True):
        if s not in seen:
            out.append(s)
        seen.update(_faces(s))
    return sorted(out)


def _name_simplex(simplex, vertex_ids):
    return "(" + ",".join(str(vertex_ids[v]) for v in simplex) + ")"


class FilteredComplex:
    """Immutable after construction; build via load(), build(), or a constructor."""

    def __init__(self, name, n, vertex_ids, simplices, skeleta, levels, strata,
                 label_of, weights, given_orientation=None):
        self.name = name
        self.n = n
        self.vertex_ids = tuple(vertex_ids)
        self._by_dim = [tuple(sorted(s for s in simplices if len(s) == d + 1))
                        for d in range(n + 1)]
        self._index = [{s: i for i, s in enumerate(level)} for level in self._by_dim]
        self.skeleta = skeleta
        self.levels = levels
        self.strata = strata
        self.label_of = label_of
        self.weights = dict(weights or {})
        self.given_orientation = given_orientation
        self._boundaries = {}

    # ------------------------------------------------------------------ basics

    def simplices(self, i):
        if i < 0 or i > self.n:
            return ()
        return self._by_dim[i]

    def all_simplices(self):
        for level in self._by_dim:
            yield from level

    def counts(self):
        return tuple(len(level) for level in self._by_dim)

    def index(self, simplex):
        return self._index[len(simplex) - 1][simplex]

    def level(self, simplex):
        return self.levels[simplex]

    def label(self, simplex):
        return self.label_of[simplex]

    def singular_strata(self):
        return [s for s in self.strata.values() if s.singular]

    def euler_characteristic(self):
        return sum((-1) ** i * c for i, c in enumerate(self.counts()))

    def is_closed(self):
        """True when every regular (n-1)-simplex has exactly two n-cofaces."""
        if self.n == 0:
            return True
        cofaces = {}
        for s in self._by_dim[self.n]:
            for f in _facets(s):
                cofaces[f] = cofaces.get(f, 0) + 1
        for f in self._by_dim[self.n - 1]:
            if self.levels[f] == self.n and cofaces.get(f, 0) != 2:
                return False
        return True

    # ---------------------------------------------------------------- homology

    def boundary_matrix(self, i):
        """Columns of the simplicial boundary in lexicographic bases."""
        if i in self._boundaries:
            return self._boundaries[i]
        if i <= 0 or i > self.n:
            cols = [{} for _ in self.simplices(i)] if i == 0 else []
        else:
            rows = self._index[i - 1]
            cols = []
            for s in self._by_dim[i]:
                col = {}
                for j in range(len(s)):
                    face = s[:j] + s[j + 1 :]
                    col[rows[face]] = -1 if j % 2 else 1
                cols.append(col)
        self._boundaries[i] = cols
        return cols

    def betti(self):
        """Rational Betti numbers b_0..b_n, exact."""
        ranks = [linalg.rank(self.boundary_matrix(i)) for i in range(self.n + 2)]
        counts = self.counts()
        return tuple(counts[i] - ranks[i] - ranks[i + 1] for i in range(self.n + 1))

    # ----------------------------------------------------------------- reports

    def describe(self):
        strata = []
        for sid in sorted(self.strata):
            s = self.strata[sid]
            entry = {
                "id": s.id,
                "dim": s.dim,
                "codim": s.codim,
                "link_dim": s.link_dim,
                "singular": s.singular,
                "simplex_count": len(s.simplices),
            }
            if sid in self.weights:
                entry["weight"] = format_rational(self.weights[sid])
            strata.append(entry)
        return {
            "name": self.name,
            "dimension": self.n,
            "simplex_counts": list(self.counts()),
            "euler_characteristic": self.euler_characteristic(),
            "closed": self.is_closed(),
            "strata": strata,
            "singular_strata": sum(1 for s in self.strata.values() if s.singular),
        }


# ------------------------------------------------------------------- builders


def _complete_skeleta(n, closure, raw_skeleta, vertex_ids):
    """Validate and complete the filtration chain X_0 <= ... <= X_{n-1}."""
    chain = {}
    prev = frozenset()
    given = {int(j): v for j, v in (raw_skeleta or {}).items()}
    for j in sorted(given):
        if j < 0 or j > n - 1:
            raise SpaceFormatError(f"skeleton level {j} outside 0..{n - 1}")
    for j in range(n):
        if j in given:
            listed = {tuple(sorted(s)) for s in given[j]}
            for s in listed:
                if s not in closure:
                    raise SpaceFormatError(
                        f"skeleton {j} lists unknown simplex {_name_simplex(s, vertex_ids)}"
                    )
            level = frozenset(_face_closure(listed)) if listed else frozenset()
            for s in level:
                if len(s) - 1 > j:
                    raise SpaceFormatError(
                        f"skeleton {j} contains {_name_simplex(s, vertex_ids)} "
                        f"of dimension {len(s) - 1}"
                    )
            if not prev <= level:
                missing = next(iter(prev - level))
                raise SpaceFormatError(
                    f"skeleta not nested: X_{j} lacks {_name_simplex(missing, vertex_ids)}"
                )
            chain[j] = level
            prev = level
        else:
            chain[j] = prev
    return chain


def _levels(n, closure, chain):
    levels = {}
    for s in closure:
        lvl = n
        for j in range(n):
            if s in chain[j]:
                lvl = j
                break
        levels[s] = lvl
    return levels


def _stratify(n, closure, levels, vertex_ids):
    parent = {s: s for s in closure}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for s in closure:
        lvl = levels[s]
        for f in _facets(s):
            if levels[f] == lvl:
                union(s, f)
    groups = {}
    for s in closure:
        groups.setdefault(find(s), []).append(s)
    strata = {}
    label_of = {}
    for members in groups.values():
        members.sort()
        dim = max(len(s) for s in members) - 1
        lvl = levels[members[0]]
        rep = members[0]
        sid = f"s{dim}:" + ".".join(str(vertex_ids[v]) for v in rep)
        stratum = Stratum(sid, dim, n - dim, lvl < n, lvl, tuple(members))
        if sid in strata:
            raise SpaceFormatError(f"stratum id collision at {sid}")
        strata[sid] = stratum
        for s in members:
            label_of[s] = sid
    return strata, label_of


def _check_purity_density(n, closure, levels, vertex_ids):
    for s in _maximal_of(closure):
        if len(s) - 1 != n:
            raise SpaceFormatError(
                f"complex not pure: maximal simplex {_name_simplex(s, vertex_ids)} "
                f"has dimension {len(s) - 1}, expected {n}"
            )
    reachable = _face_closure([s for s in closure if levels[s] == n])
    for s in sorted(closure):
        if s not in reachable:
            raise SpaceFormatError(
                f"regular part not dense at {_name_simplex(s, vertex_ids)}"
            )


def _fullness_offender(closure, chain):
    for j in sorted(chain):
        level = chain[j]
        vset = {s[0] for s in level if len(s) == 1}
        for s in closure:
            if s not in level and all(v in vset for v in s):
                return j, s
    return None


def _subdivide_raw(vertex_ids, maximal, chain):
    """First barycentric subdivision of the raw data (vertices, maximal, skeleta)."""
    closure = sorted(_face_closure(maximal))
    new_index = {s: i for i, s in enumerate(closure)}
    new_ids = ["(" + "|".join(str(vertex_ids[v]) for v in s) + ")" for s in closure]

    def full_chains(simplex):
        out = []
        for perm in permutations(simplex):
            flag = tuple(
                sorted(new_index[tuple(sorted(perm[: k + 1]))] for k in range(len(perm)))
            )
            out.append(flag)
        return out

    new_maximal = []
    for s in _maximal_of(closure):
        new_maximal.extend(full_chains(s))
    new_chain = {}
    for j, level in chain.items():
        flags = []
        for s in _maximal_of(level):
            flags.extend(full_chains(s))
        new_chain[j] = flags
    return new_ids, sorted(set(new_maximal)), new_chain


def _assemble(name, n, vertex_ids, maximal, raw_skeleta, weights_doc=None,
              given_orientation=None, subdivisions_left=2):
    closure = _face_closure(maximal)
    for s in closure:
        if len(s) - 1 > n:
            raise SpaceFormatError(
                f"simplex {_name_simplex(s, vertex_ids)} exceeds dimension {n}"
            )
    chain = _complete_skeleta(n, closure, raw_skeleta, vertex_ids)
    offender = _fullness_offender(closure, chain)
    if offender is not None:
        j, s = offender
        if subdivisions_left == 0:
            raise SpaceFormatError(
                f"skeleton {j} is not full at {_name_simplex(s, vertex_ids)} "
                "even after two barycentric subdivisions"
            )
        new_ids, new_maximal, new_chain = _subdivide_raw(vertex_ids, maximal, chain)
        return _assemble(name, n, new_ids, new_maximal,
                         {j: list(v) for j, v in new_chain.items()},
                         weights_doc, None, subdivisions_left - 1)
    levels = _levels(n, closure, chain)
    _check_purity_density(n, closure, levels, vertex_ids)
    strata, label_of = _stratify(n, closure, levels, vertex_ids)
    K = FilteredComplex(name, n, vertex_ids, closure, chain, levels, strata,
                        label_of, {}, given_orientation)
    if weights_doc:
        singular_ids = {s.id for s in K.singular_strata()}
        for sid, text in weights_doc.items():
            if sid not in singular_ids:
                raise SpaceFormatError(
                    f"weight references unknown singular stratum {sid!r}; "
                    f"known: {sorted(singular_ids)}"
                )
            c = parse_rational(text) if not isinstance(text, Fraction) else text
            if c <= 0:
                raise SpaceFormatError(f"weight for {sid!r} must be positive")
            K.weights[sid] = c
    return K


def build(name, vertex_ids, maximal, skeleta=None, weights=None, dimension=None):
    """Assemble a FilteredComplex from maximal simplices given as index tuples."""
    maximal = [tuple(sorted(s)) for s in maximal]
    if not maximal:
        raise SpaceFormatError("a complex needs at least one simplex")
    n = dimension if dimension is not None else max(len(s) - 1 for s in maximal)
    return _assemble(name, n, list(vertex_ids), maximal, skeleta, weights)


def load(source):
    """Load a space document (dict, JSON text, or path) into a FilteredComplex."""
    if isinstance(source, (str, Path)) and not str(source).lstrip().startswith("{"):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise SpaceFormatError(f"cannot read space file {source}: {exc}") from exc
        doc = json.loads(text)
    elif isinstance(source, str):
        doc = json.loads(source)
    else:
        doc = source
    if not isinstance(doc, dict):
        raise SpaceFormatError("space document must be a JSON object")
    for key in ("dimension", "vertices", "maximal_simplices"):
        if key not in doc:
            raise SpaceFormatError(f"space document lacks {key!r}")
    name = doc.get("name", "unnamed")
    n = doc["dimension"]
    vertex_ids = doc["vertices"]
    if not isinstance(n, int) or n < 0:
        raise SpaceFormatError("dimension must be a non-negative integer")
    if len(set(map(str, vertex_ids))) != len(vertex_ids):
        raise SpaceFormatError("vertex ids must be unique")
    maximal = []
    for s in doc["maximal_simplices"]:
        if not s or any(not isinstance(v, int) or v < 0 or v >= len(vertex_ids) for v in s):
            raise SpaceFormatError(f"bad simplex {s!r} in maximal_simplices")
        if len(set(s)) != len(s):
            raise SpaceFormatError(f"repeated vertex in simplex {s!r}")
        maximal.append(tuple(sorted(s)))
    orientation = doc.get("orientation")
    if orientation is not None:
        if not isinstance(orientation, list) or any(
            len(e) != 2 or e[1] not in (1, -1) for e in orientation
        ):
            raise SpaceFormatError("orientation must be a list of [simplex, ±1] pairs")
    K = _assemble(name, n, list(vertex_ids), maximal, doc.get("skeleta"),
                  doc.get("weights"), orientation)
    return K


def to_document(K):
    """Serialize to the space-file schema; loading it back is stable, including
    stratum ids (which weights are keyed by)."""
    maximal = _maximal_of(set(K.all_simplices()))
    skeleta = {}
    for j in range(K.n):
        level = K.skeleta[j]
        if j > 0 and level == K.skeleta[j - 1]:
            continue
        if not level:
            continue
        skeleta[str(j)] = [list(s) for s in _maximal_of(level)]
    doc = {
        "name": K.name,
        "dimension": K.n,
        "vertices": list(K.vertex_ids),
        "maximal_simplices": [list(s) for s in maximal],
    }
    if skeleta:
        doc["skeleta"] = skeleta
    if K.weights:
        doc["weights"] = {sid: format_rational(c) for sid, c in sorted(K.weights.items())}
    return doc


# --------------------------------------------------------------- constructors


def _fresh_vertex_id(existing, wanted):
    vid = wanted
    while vid in set(map(str, existing)):
        vid += "'"
    return vid


def cone(K, weight=Fraction(1)):
    """Closed simplicial cone: a new apex joined to every simplex of K.

    The apex becomes a singular stratum with link dimension dim(K) carrying
    `weight`; every stratum of K turns into its coned stratum (same
    codimension, weight inherited); base simplices land in the coned strata.
    """
    weight = Fraction(weight)
    if weight <= 0:
        raise ConfigurationError("cone weight must be positive")
    apex = _fresh_vertex_id(K.vertex_ids, "apex")
    a = len(K.vertex_ids)
    vertex_ids = list(K.vertex_ids) + [apex]
    maximal = [s + (a,) for s in K.simplices(K.n)]
    chain = {0: [(a,)]}
    for j in range(1, K.n + 1):
        below = K.skeleta.get(j - 1, frozenset())
        chain[j] = [(a,)] + [s for s in below] + [s + (a,) for s in below]
    C = _assemble(f"cone({K.name})", K.n + 1, vertex_ids, maximal, chain)
    C.weights[C.label((a,))] = weight
    for s in K.singular_strata():
        if s.id in K.weights:
            C.weights[C.label(s.simplices[0])] = K.weights[s.id]
    return C


def suspension(K, weights=(Fraction(1), Fraction(1))):
    """Two cones glued along K; apex strata get the given (north, south) weights.

    Each stratum Y of K yields one suspended stratum holding the base copy and
    both open cone directions; the result is compact without boundary when K is.
    """
    w_north, w_south = (Fraction(w) for w in weights)
    if w_north <= 0 or w_south <= 0:
        raise ConfigurationError("suspension weights must be positive")
    north = _fresh_vertex_id(K.vertex_ids, "north")
    south = _fresh_vertex_id(list(K.vertex_ids) + [north], "south")
    nv = len(K.vertex_ids)
    vertex_ids = list(K.vertex_ids) + [north, south]
    n_idx, s_idx = nv, nv + 1
    maximal = [s + (n_idx,) for s in K.simplices(K.n)]
    maximal += [s + (s_idx,) for s in K.simplices(K.n)]
    chain = {0: [(n_idx,), (s_idx,)]}
    for j in range(1, K.n + 1):
        below = K.skeleta.get(j - 1, frozenset())
        chain[j] = [(n_idx,), (s_idx,)]
        chain[j] += [s for s in below]
        chain[j] += [s + (n_idx,) for s in below]
        chain[j] += [s + (s_idx,) for s in below]
    S = _assemble(f"susp({K.name})", K.n + 1, vertex_ids, maximal, chain)
    S.weights[S.label((n_idx,))] = w_north
    S.weights[S.label((s_idx,))] = w_south
    for s in K.singular_strata():
        if s.id in K.weights:
            S.weights[S.label(s.simplices[0])] = K.weights[s.id]
    return S


def barycentric_subdivide(K):
    """First barycentric subdivision, stratum structure carried along.

    A flag simplex inherits the stratum of the largest simplex in its flag;
    with components recomputed this reproduces exactly one stratum per
    original stratum, and all skeleta of the subdivision are full.
    """
    maximal = _maximal_of(set(K.all_simplices()))
    new_ids, new_maximal, new_chain = _subdivide_raw(K.vertex_ids, maximal, K.skeleta)
    closure_sorted = sorted(_face_closure(maximal))
    flag_vertex = {s: i for i, s in enumerate(closure_sorted)}
    S = _assemble(f"sd({K.name})", K.n, new_ids, new_maximal,
                  {j: list(v) for j, v in new_chain.items()})
    for s in K.singular_strata():
        if s.id in K.weights:
            rep = (flag_vertex[s.simplices[0]],)
            S.weights[S.label(rep)] = K.weights[s.id]
    return S


# ----------------------------------------------------------------- orientation


def check_orientation(K):
    """Coherent orientation of the n-simplices, or None when obstructed.

    Signs must cancel across every regular (n-1)-simplex with exactly two
    top-dimensional cofaces; boundary faces (one coface) impose nothing.
    More than two cofaces on a regular face is a structure error.
    """
    n = K.n
    tops = K.simplices(n)
    if n == 0:
        return Orientation({s: 1 for s in tops})
    cofaces = {}
    for s in tops:
        for idx, f in enumerate(_facets(s)):
            cofaces.setdefault(f, []).append((s, -1 if idx % 2 else 1))
    adj = {s: [] for s in tops}
    for f, incident in cofaces.items():
        if K.levels[f] != n:
            continue
        if len(incident) > 2:
            raise StructureError(
                f"regular face {_name_simplex(f, K.vertex_ids)} has "
                f"{len(incident)} top cofaces"
            )
        if len(incident) == 2:
            (s1, e1), (s2, e2) = incident
            adj[s1].append((s2, e1, e2))
            adj[s2].append((s1, e2, e1))
    signs = {}
    for seed in tops:
        if seed in signs:
            continue
        signs[seed] = 1
        queue = [seed]
        while queue:
            s = queue.pop()
            for t, es, et in adj[s]:
                # cancellation: sign_s * es + sign_t * et = 0
                wanted = -signs[s] * es * et
                if t in signs:
                    if signs[t] != wanted:
                        return None
                else:
                    signs[t] = wanted
                    queue.append(t)
    return Orientation(signs)
