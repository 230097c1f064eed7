"""Enumeration kernels for structure-preserving maps between small structures.

Every universal-property and equalizer check in the package reduces to listing
all maps ``f: {0..n-1} -> {0..m-1}`` that satisfy three kinds of constraint:

* edges: ``src_adj[u, v] == 1`` implies ``dst_adj[f(u), f(v)] == 1``;
* involutions: ``f(src_inv[v]) == dst_inv[f(v)]`` (skipped when ``src_inv`` is
  all ``-1``);
* triples: for each row ``(a, b, c)`` of ``src_triples``,
  ``dst_triple[f(a), f(b), f(c)] == 1``.

Maps are returned as an ``(count, n)`` int64 array in lexicographic order.

Two implementations are provided.  ``_dfs_enumerate`` is an explicit-stack
depth-first search compiled with numba.  ``_levelwise_enumerate`` extends all
partial maps one vertex at a time with vectorized numpy filtering.  Set
``GRAPHMONADS_DISABLE_NUMBA=1`` to route :func:`enumerate_maps` through the
numpy path (numba is then never imported).
"""

from __future__ import annotations

import os

import numpy as np

USE_NUMBA = os.environ.get("GRAPHMONADS_DISABLE_NUMBA", "").strip().lower() not in (
    "1",
    "true",
    "yes",
    "on",
)

if USE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False


def _jit(fn):
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


def triple_schedule(src_triples: np.ndarray, n: int):
    """Group triples by the vertex that completes them (their max index).

    Returns ``(rows, start)`` in CSR layout: the triples to check when vertex
    ``v`` is assigned are ``rows[start[v]:start[v + 1]]``.  Each row is
    reordered so that its last entry is the completing vertex.
    """
    tr = np.asarray(src_triples, dtype=np.int64).reshape(-1, 3)
    if len(tr) == 0:
        return np.zeros((0, 3), dtype=np.int64), np.zeros(n + 1, dtype=np.int64)
    tr = np.sort(tr, axis=1)
    order = np.argsort(tr[:, 2], kind="stable")
    tr = tr[order]
    counts = np.bincount(tr[:, 2], minlength=n)
    start = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=start[1:])
    return np.ascontiguousarray(tr), start


@_jit
def _dfs_enumerate(src_adj, dst_adj, src_inv, dst_inv, tri_rows, tri_start, dst_triple, use_tri):
    n = src_adj.shape[0]
    m = dst_adj.shape[0]
    cap = 16
    out = np.empty((cap, n), dtype=np.int64)
    count = 0
    if n == 0:
        out = np.empty((1, 0), dtype=np.int64)
        return out
    if m == 0:
        return np.empty((0, n), dtype=np.int64)
    f = np.full(n, -1, dtype=np.int64)
    pos = 0
    while pos >= 0:
        c = f[pos] + 1
        placed = False
        while c < m:
            ok = True
            for u in range(pos):
                if src_adj[u, pos] and not dst_adj[f[u], c]:
                    ok = False
                    break
            if ok:
                w = src_inv[pos]
                if w >= 0 and w < pos and dst_inv[f[w]] != c:
                    ok = False
            if ok and use_tri:
                for t in range(tri_start[pos], tri_start[pos + 1]):
                    if not dst_triple[f[tri_rows[t, 0]], f[tri_rows[t, 1]], c]:
                        ok = False
                        break
            if ok:
                placed = True
                break
            c += 1
        if not placed:
            f[pos] = -1
            pos -= 1
            continue
        f[pos] = c
        if pos == n - 1:
            if count == cap:
                grown = np.empty((cap * 2, n), dtype=np.int64)
                grown[:cap] = out
                out = grown
                cap *= 2
            out[count] = f
            count += 1
        else:
            pos += 1
    return out[:count].copy()


def _levelwise_enumerate(src_adj, dst_adj, src_inv, dst_inv, tri_rows, tri_start, dst_triple, use_tri):
    n = src_adj.shape[0]
    m = dst_adj.shape[0]
    partial = np.zeros((1, 0), dtype=np.int64)
    if n == 0:
        return partial
    if m == 0:
        return np.zeros((0, n), dtype=np.int64)
    dst_adj = dst_adj.astype(bool)
    cand = np.arange(m, dtype=np.int64)
    for v in range(n):
        k = len(partial)
        if k == 0:
            return np.zeros((0, n), dtype=np.int64)
        parents = np.repeat(partial, m, axis=0)
        c = np.tile(cand, k)
        ok = np.ones(len(c), dtype=bool)
        for u in np.flatnonzero(src_adj[:v, v]):
            ok &= dst_adj[parents[:, u], c]
        w = src_inv[v]
        if 0 <= w < v:
            ok &= dst_inv[parents[:, w]] == c
        if use_tri:
            for t in range(tri_start[v], tri_start[v + 1]):
                a, b = tri_rows[t, 0], tri_rows[t, 1]
                ok &= dst_triple[parents[:, a], parents[:, b], c].astype(bool)
        partial = np.column_stack([parents[ok], c[ok]])
    return partial


def _prepare(src_adj, dst_adj, src_inv=None, dst_inv=None, src_triples=None, dst_triple=None):
    src_adj = np.ascontiguousarray(src_adj, dtype=np.uint8)
    dst_adj = np.ascontiguousarray(dst_adj, dtype=np.uint8)
    n, m = src_adj.shape[0], dst_adj.shape[0]
    if src_inv is None:
        src_inv = np.full(n, -1, dtype=np.int64)
        dst_inv = np.full(max(m, 1), -1, dtype=np.int64)
    src_inv = np.ascontiguousarray(src_inv, dtype=np.int64)
    dst_inv = np.ascontiguousarray(dst_inv, dtype=np.int64)
    use_tri = src_triples is not None and len(src_triples) > 0
    if use_tri:
        tri_rows, tri_start = triple_schedule(src_triples, n)
        dst_triple = np.ascontiguousarray(dst_triple, dtype=np.uint8)
    else:
        tri_rows = np.zeros((0, 3), dtype=np.int64)
        tri_start = np.zeros(n + 1, dtype=np.int64)
        dst_triple = np.zeros((1, 1, 1), dtype=np.uint8)
    return src_adj, dst_adj, src_inv, dst_inv, tri_rows, tri_start, dst_triple, use_tri


def enumerate_maps(src_adj, dst_adj, src_inv=None, dst_inv=None, src_triples=None,
                   dst_triple=None, backend=None) -> np.ndarray:
    """All constrained maps in lexicographic order, as an ``(count, n)`` array.

    ``backend`` is ``"numba"``, ``"numpy"`` or ``None`` (the process default).
    """
    args = _prepare(src_adj, dst_adj, src_inv, dst_inv, src_triples, dst_triple)
    if backend is None:
        backend = "numba" if USE_NUMBA else "numpy"
    if backend == "numba":
        if not USE_NUMBA:
            raise RuntimeError("numba backend disabled by GRAPHMONADS_DISABLE_NUMBA")
        return _dfs_enumerate(*args)
    if backend == "numpy":
        return _levelwise_enumerate(*args)
    raise ValueError(f"unknown backend {backend!r}")


def default_backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def all_graph_adjacencies(n: int) -> np.ndarray:
    """Adjacency matrices of all ``2**(n*(n-1)/2)`` labeled graphs on ``n`` vertices.

    Graph number ``k`` has edge ``i`` (in row-major upper-triangle order) iff
    bit ``i`` of ``k`` is set.
    """
    iu, ju = np.triu_indices(n, k=1)
    npairs = len(iu)
    codes = np.arange(2**npairs, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(npairs)) & 1).astype(np.uint8)
    mats = np.zeros((len(codes), n, n), dtype=np.uint8)
    mats[:, iu, ju] = bits
    mats[:, ju, iu] = bits
    return mats
