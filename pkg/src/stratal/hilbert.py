"""Finite-dimensional Hilbert complexes over the rationals.

A complex is a sequence of coordinate spaces with differentials satisfying
D_{i+1} D_i = 0 and the identity inner product on each space. In finite
dimensions every range is closed, so harmonic representatives, the weak
Kodaira decomposition, the dual-complex dimension reversal, and the
even-to-odd index are all exact linear algebra. A Gram-matrix parameter for
non-identity inner products is accepted but must be the identity for now;
all the verified identities are basis-invariant.
"""

from fractions import Fraction

from . import linalg
from .errors import ConfigurationError, ConstructionError
from .rationals import parse_rational


class FiniteHilbertComplex:
    """Spaces of the given dimensions with column-stored differentials."""

    def __init__(self, dims, diff_cols):
        self.dims = tuple(int(d) for d in dims)
        self.diffs = diff_cols  # diffs[i]: columns of D_i, mapping H_i -> H_{i+1}

    def __len__(self):
        return len(self.dims)

    def differential(self, i):
        """Columns of D_i; zero maps outside 0..n-1."""
        if 0 <= i < len(self.dims) - 1:
            return self.diffs[i]
        dim = self.dims[i] if 0 <= i < len(self.dims) else 0
        return [{} for _ in range(dim)]

    def diff_rows(self, i):
        """Height of D_i (the dimension of its target space)."""
        return self.dims[i + 1] if 0 <= i + 1 < len(self.dims) else 0


def _to_columns(matrix, nrows, ncols, where):
    if len(matrix) != nrows:
        raise ConstructionError(f"{where}: expected {nrows} rows, got {len(matrix)}")
    cols = [{} for _ in range(ncols)]
    for r, row in enumerate(matrix):
        if len(row) != ncols:
            raise ConstructionError(f"{where}: row {r} has length {len(row)}, expected {ncols}")
        for c, entry in enumerate(row):
            v = parse_rational(entry) if isinstance(entry, str) else Fraction(entry)
            if v:
                cols[c][r] = v
    return cols


def validate(dims, matrices, gram=None) -> FiniteHilbertComplex:
    """Build a complex from dense row-major matrices, verifying D∘D = 0.

    `matrices[i]` is D_i with dims[i+1] rows and dims[i] columns; entries may
    be ints, Fractions, or "p/q" strings.
    """
    if gram is not None:
        raise ConfigurationError("non-identity inner products are not supported yet")
    dims = [int(d) for d in dims]
    if any(d < 0 for d in dims):
        raise ConstructionError("space dimensions cannot be negative")
    if len(matrices) != max(len(dims) - 1, 0):
        raise ConstructionError(
            f"expected {max(len(dims) - 1, 0)} differentials for {len(dims)} spaces, "
            f"got {len(matrices)}"
        )
    cols = []
    for i, mat in enumerate(matrices):
        if isinstance(mat, list) and all(isinstance(e, dict) for e in mat) and (
            mat or dims[i] == 0
        ):
            if len(mat) != dims[i]:
                raise ConstructionError(
                    f"D_{i}: expected {dims[i]} columns, got {len(mat)}"
                )
            cols.append(mat)
        elif mat == [] and dims[i + 1] == 0:
            cols.append([{} for _ in range(dims[i])])
        else:
            cols.append(_to_columns(mat, dims[i + 1], dims[i], f"D_{i}"))
    for i in range(len(cols) - 1):
        for j, col in enumerate(cols[i]):
            image = linalg.combine_columns(cols[i + 1], [col])[0]
            if image:
                raise ConstructionError(
                    f"D_{i + 1} ∘ D_{i} is nonzero on basis vector {j} of degree {i}"
                )
    return FiniteHilbertComplex(dims, cols)


def cohomology_dims(C: FiniteHilbertComplex):
    """dim ker D_i - rank D_{i-1} in every degree, exact."""
    n = len(C.dims)
    ranks = [linalg.rank(C.differential(i)) for i in range(n)]
    out = []
    for i in range(n):
        below = ranks[i - 1] if i > 0 else 0
        out.append(C.dims[i] - ranks[i] - below)
    return tuple(out)


def harmonic_dims(C: FiniteHilbertComplex):
    """dim (ker D_i ∩ ker D_{i-1}^T); equals cohomology_dims in every degree."""
    n = len(C.dims)
    out = []
    for i in range(n):
        down = C.differential(i)
        up_t = (
            linalg.transpose_cols(C.differential(i - 1), C.dims[i]) if i > 0
            else [{} for _ in range(C.dims[i])]
        )
        stacked = linalg.stack_cols(down, up_t, C.dims[i + 1] if i + 1 < n else 0)
        out.append(C.dims[i] - linalg.rank(stacked))
    return tuple(out)


def laplacian_cols(C: FiniteHilbertComplex, i: int):
    """Columns of Δ_i = D_i^T D_i + D_{i-1} D_{i-1}^T."""
    d_i = C.differential(i)
    d_it = linalg.transpose_cols(d_i, C.diff_rows(i))
    term1 = linalg.combine_columns(d_it, d_i)
    if i > 0:
        d_prev = C.differential(i - 1)
        d_prev_t = linalg.transpose_cols(d_prev, C.dims[i])
        term2 = linalg.combine_columns(d_prev, d_prev_t)
    else:
        term2 = [{} for _ in range(C.dims[i])]
    out = []
    for a, b in zip(term1, term2):
        col = dict(a)
        for r, v in b.items():
            w = col.get(r, 0) + v
            if w:
                col[r] = w
            elif r in col:
                del col[r]
        out.append(col)
    return out


def kodaira_decompose(C: FiniteHilbertComplex, i: int, v):
    """Split v into (harmonic, exact, coexact) parts, pairwise orthogonal.

    The exact part is the projection onto the image of D_{i-1}, the coexact
    part the projection onto the image of D_i^T; reconstruction is exact.
    """
    if isinstance(v, dict):
        vec = {int(r): Fraction(val) for r, val in v.items() if val}
    else:
        vec = {r: Fraction(val) for r, val in enumerate(v) if val}
    if any(r < 0 or r >= C.dims[i] for r in vec):
        raise ConfigurationError(f"vector does not live in degree {i}")
    exact_span = C.differential(i - 1) if i > 0 else []
    coexact_span = linalg.transpose_cols(C.differential(i), C.diff_rows(i))
    exact = linalg.project_onto_span(vec, exact_span) if exact_span else {}
    coexact = linalg.project_onto_span(vec, coexact_span) if coexact_span else {}
    harmonic = dict(vec)
    for part in (exact, coexact):
        for r, val in part.items():
            w = harmonic.get(r, 0) - val
            if w:
                harmonic[r] = w
            elif r in harmonic:
                del harmonic[r]
    return harmonic, exact, coexact


def dual_complex(C: FiniteHilbertComplex):
    """The reversed complex with transposed differentials, plus the
    dimension-reversal report on cohomology."""
    n = len(C.dims)
    dims = tuple(reversed(C.dims))
    diffs = []
    for j in range(n - 1):
        i = n - 2 - j
        diffs.append(linalg.transpose_cols(C.differential(i), C.diff_rows(i)))
    D = FiniteHilbertComplex(dims, diffs)
    h_primal = cohomology_dims(C)
    h_dual = cohomology_dims(D)
    report = {
        "cohomology": list(h_primal),
        "dual_cohomology": list(h_dual),
        "pass": all(h_primal[i] == h_dual[n - 1 - i] for i in range(n)),
    }
    return D, report


def index_even_odd(C: FiniteHilbertComplex) -> int:
    """Index of the even-to-odd operator (D on even degrees, D^T downward);
    equals the alternating sum of the cohomology dimensions."""
    n = len(C.dims)
    even = [i for i in range(n) if i % 2 == 0]
    odd = [i for i in range(n) if i % 2 == 1]
    even_offset = {}
    pos = 0
    for i in even:
        even_offset[i] = pos
        pos += C.dims[i]
    odd_offset = {}
    pos = 0
    for i in odd:
        odd_offset[i] = pos
        pos += C.dims[i]
    total_even = sum(C.dims[i] for i in even)
    total_odd = sum(C.dims[i] for i in odd)
    cols = [{} for _ in range(total_even)]
    for i in even:
        up = C.differential(i)
        down_t = (
            linalg.transpose_cols(C.differential(i - 1), C.dims[i]) if i > 0 else None
        )
        for local, col in enumerate(up):
            target = cols[even_offset[i] + local]
            if i + 1 < n:
                for r, val in col.items():
                    target[odd_offset[i + 1] + r] = val
        if down_t is not None:
            for local, col in enumerate(down_t):
                target = cols[even_offset[i] + local]
                for r, val in col.items():
                    target[odd_offset[i - 1] + r] = (
                        target.get(odd_offset[i - 1] + r, 0) + val
                    )
    r = linalg.rank(cols)
    return (total_even - r) - (total_odd - r)


def random_complex(rng, max_total=24, max_spaces=5) -> FiniteHilbertComplex:
    """Seeded random complex: pick the top differential freely, then project
    each lower candidate onto the kernel of the one above."""
    n = rng.randint(2, max_spaces)
    dims = []
    remaining = max_total
    for _ in range(n):
        d = rng.randint(0, min(6, remaining))
        dims.append(d)
        remaining -= d
    diffs = [None] * (n - 1)
    for i in range(n - 2, -1, -1):
        rows, colsn = dims[i + 1], dims[i]
        if i == n - 2:
            cols = []
            for _ in range(colsn):
                col = {
                    r: rng.randint(-2, 2)
                    for r in range(rows)
                    if rng.random() < 0.6
                }
                cols.append({r: v for r, v in col.items() if v})
            diffs[i] = cols
        else:
            kern = linalg.kernel(diffs[i + 1])
            cols = []
            for _ in range(colsn):
                combo = {
                    j: rng.randint(-2, 2)
                    for j in range(len(kern))
                    if rng.random() < 0.7
                }
                combo = {j: v for j, v in combo.items() if v}
                cols.append(linalg.combine_columns(kern, [combo])[0] if combo else {})
            diffs[i] = cols
    return validate(dims, diffs)
