"""Exact linear algebra against brute-force oracles."""

import random
from fractions import Fraction

from stratal import linalg


def _random_cols(rng, nrows, ncols, density=0.5, lo=-3, hi=3):
    cols = []
    for _ in range(ncols):
        col = {r: rng.randint(lo, hi) for r in range(nrows) if rng.random() < density}
        cols.append({r: v for r, v in col.items() if v})
    return cols


def _dense_rank(cols, nrows):
    rows = [[Fraction(col.get(r, 0)) for col in cols] for r in range(nrows)]
    rank = 0
    for c in range(len(cols)):
        piv = next((r for r in range(rank, nrows) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        rows[rank] = [v / pv for v in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def test_rank_against_dense_oracle():
    rng = random.Random(11)
    for _ in range(200):
        nr, nc = rng.randint(1, 7), rng.randint(1, 7)
        cols = _random_cols(rng, nr, nc)
        assert linalg.rank(cols) == _dense_rank(cols, nr)


def test_kernel_vectors_annihilate_and_span():
    rng = random.Random(12)
    for _ in range(200):
        nr, nc = rng.randint(1, 7), rng.randint(1, 7)
        cols = _random_cols(rng, nr, nc)
        kern = linalg.kernel(cols)
        for kv in kern:
            assert not linalg.combine_columns(cols, [kv])[0]
        assert len(kern) == nc - linalg.rank(cols)
        # kernel vectors are independent
        assert linalg.rank(kern) == len(kern)


def test_rcef_canonical_for_equal_spans():
    rng = random.Random(13)
    for _ in range(100):
        nr, nc = rng.randint(1, 6), rng.randint(1, 5)
        cols = _random_cols(rng, nr, nc, density=0.7)
        base = linalg.rcef(cols)
        # shuffle and rescale the generators; the span is unchanged
        mixed = []
        for col in cols:
            k = rng.choice([1, 2, -1, 3])
            mixed.append({r: k * v for r, v in col.items()})
        extra = []
        for _ in range(2):
            a, b = rng.randrange(nc), rng.randrange(nc)
            merged = dict(mixed[a])
            for r, v in mixed[b].items():
                merged[r] = merged.get(r, 0) + v
            extra.append({r: v for r, v in merged.items() if v})
        rng.shuffle(mixed)
        assert linalg.rcef(mixed + extra) == base


def test_rcef_pivots_are_one_and_cleared():
    cols = [{0: 2, 1: 4}, {0: 1, 1: 2, 2: 6}]
    ech = linalg.rcef(cols)
    for col in ech:
        top = min(col)
        assert col[top] == 1
        for other in ech:
            if other is not col:
                assert top not in other


def test_in_span_and_residual():
    cols = [{0: 1, 1: 1}, {1: 1, 2: 1}]
    ech = linalg.rcef(cols)
    assert linalg.in_span({0: 1, 1: 2, 2: 1}, ech)
    assert not linalg.in_span({0: 1}, ech)


def test_projection_is_orthogonal_and_idempotent():
    rng = random.Random(14)
    for _ in range(60):
        nr = rng.randint(1, 6)
        cols = _random_cols(rng, nr, rng.randint(1, 4), density=0.7)
        v = {r: rng.randint(-3, 3) for r in range(nr)}
        v = {r: x for r, x in v.items() if x}
        proj = linalg.project_onto_span(v, cols)
        resid = dict(v)
        for r, val in proj.items():
            w = resid.get(r, 0) - val
            if w:
                resid[r] = w
            elif r in resid:
                del resid[r]
        for col in cols:
            assert linalg.dot(resid, col) == 0
        again = linalg.project_onto_span(proj, cols)
        assert again == proj


def test_transpose_and_stack_shapes():
    cols = [{0: 1, 2: -1}, {1: 5}]
    t = linalg.transpose_cols(cols, 3)
    assert t == [{0: 1}, {1: 5}, {0: -1}]
    stacked = linalg.stack_cols(cols, [{0: 7}, {}], 3)
    assert stacked == [{0: 1, 2: -1, 3: 7}, {1: 5}]
