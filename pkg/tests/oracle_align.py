"""Brute-force alignment oracle.

Enumerates every monotone alignment of two sequences and picks the best
under the same total order the production aligner uses: minimal cost,
then fewest gaps, then the lexicographically smallest column-key tuple
read right to left (substitution < destination gap < source gap).  The
enumeration is genuinely exhaustive; numpy only batches the arithmetic.

Move codes: 0 = substitution, 1 = destination-only column (gap in the
source), 2 = source-only column (gap in the destination).  These match
the production tie-break key values.
"""

import random
from functools import lru_cache

import numpy as np

LETTER_POOL = [
    "a", "b", "c", "ch", "d", "e", "ee", "er", "f", "g", "h", "i", "k",
    "l", "ll", "m", "n", "ng", "o", "oo", "ou", "p", "ph", "r", "s",
    "sh", "ss", "t", "th", "tt", "u", "w", "y",
]

SUB, INS, DEL = 0, 1, 2


@lru_cache(maxsize=None)
def _all_paths(n, m):
    """Every monotone path through an n x m grid, as move tuples."""
    if n == 0 and m == 0:
        return ((),)
    out = []
    if n > 0 and m > 0:
        out.extend(p + (SUB,) for p in _all_paths(n - 1, m - 1))
    if m > 0:
        out.extend(p + (INS,) for p in _all_paths(n, m - 1))
    if n > 0:
        out.extend(p + (DEL,) for p in _all_paths(n - 1, m))
    return tuple(out)


@lru_cache(maxsize=None)
def _shape_tables(n, m):
    """Vectorized per-shape path tables.

    Returns (paths, rev_keys, gaps, diag_groups) where diag_groups maps a
    diagonal-step count d to (path_row_ids, flat_cell_indices[rows, d]).
    """
    paths = _all_paths(n, m)
    npaths = len(paths)
    maxlen = n + m
    rev_keys = np.full((npaths, maxlen), -1, dtype=np.int8)
    gaps = np.zeros(npaths, dtype=np.int32)
    by_d = {}
    for row, moves in enumerate(paths):
        rev = moves[::-1]
        rev_keys[row, : len(rev)] = rev
        i = j = 0
        cells = []
        for mv in moves:
            if mv == SUB:
                cells.append(i * m + j)
                i += 1
                j += 1
            elif mv == INS:
                j += 1
            else:
                i += 1
        gaps[row] = len(moves) - len(cells)
        by_d.setdefault(len(cells), []).append((row, cells))
    diag_groups = {}
    for d, items in by_d.items():
        rows = np.array([r for r, _ in items], dtype=np.int64)
        if d:
            idx = np.array([c for _, c in items], dtype=np.int64)
        else:
            idx = np.empty((len(items), 0), dtype=np.int64)
        diag_groups[d] = (rows, idx)
    return paths, rev_keys, gaps, diag_groups


def _columns(moves, src, dst):
    i = j = 0
    cols = []
    for mv in moves:
        if mv == SUB:
            cols.append((src[i], dst[j]))
            i += 1
            j += 1
        elif mv == INS:
            cols.append((None, dst[j]))
            j += 1
        else:
            cols.append((src[i], None))
            i += 1
    return tuple(cols)


def _cost_matrix(src, dst, equiv):
    n, m = len(src), len(dst)
    c = np.ones((n, m), dtype=np.int32)
    for i, s in enumerate(src):
        for j, d in enumerate(dst):
            if (s, d) in equiv or s.lower() == d.lower():
                c[i, j] = 0
    return c


def random_pairs(count, seed, equiv, cmu_labels, max_len=8):
    """Random (letter units, CMU phones) pairs, biased so about half the
    phones are equivalent to some source letter and ties actually occur."""
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        n, m = rng.randint(1, max_len), rng.randint(1, max_len)
        src = tuple(rng.choice(LETTER_POOL) for _ in range(n))
        dst = []
        for _ in range(m):
            if rng.random() < 0.5:
                s = rng.choice(src)
                mates = [c for (l, c) in equiv if l == s]
                dst.append(rng.choice(mates) if mates else rng.choice(cmu_labels))
            else:
                dst.append(rng.choice(cmu_labels))
        pairs.append((src, tuple(dst)))
    return pairs


def brute_best(src, dst, equiv):
    """Best (cost, columns) over the exhaustive alignment enumeration."""
    src = tuple(src)
    dst = tuple(dst)
    n, m = len(src), len(dst)
    paths, rev_keys, gaps, diag_groups = _shape_tables(n, m)
    flat = _cost_matrix(src, dst, equiv).ravel()
    costs = gaps.astype(np.int64).copy()
    for _, (rows, idx) in diag_groups.items():
        if idx.shape[1]:
            costs[rows] += flat[idx].sum(axis=1)
    best_cost = costs.min()
    tied = np.flatnonzero(costs == best_cost)
    tied_gaps = gaps[tied]
    tied = tied[tied_gaps == tied_gaps.min()]
    if len(tied) > 1:
        keys = rev_keys[tied]
        order = np.lexsort(keys[:, ::-1].T)
        tied = tied[order[:1]]
    moves = paths[int(tied[0])]
    return int(best_cost), _columns(moves, src, dst)
