"""Hot inner loops: isotropic-vector scans and pairwise orbit classification.

Every kernel exists twice: a numba-compiled version and a pure-numpy one.
The active backend is chosen by the UNITARY_SCHEMES_BACKEND environment
variable ("numba", "numpy", or "auto"), falling back to numpy when numba is
not importable.  ``benchmarks/bench_kernels.py`` compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


ENV_FLAG = "UNITARY_SCHEMES_BACKEND"


def _resolve(name: str | None) -> str:
    name = (name or os.environ.get(ENV_FLAG) or "auto").lower()
    if name not in ("auto", "numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}; use 'numba', 'numpy' or 'auto'")
    if name == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return name


_backend = _resolve(None)


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> str:
    """Switch the kernel backend; returns the previously active one."""
    global _backend
    previous = _backend
    _backend = _resolve(name)
    return previous


# ---------------------------------------------------------------------------
# isotropic scan: all nonzero vectors with zero Hermitian self-product,
# emitted in lexicographic coordinate order (first coordinate most
# significant, element ids ascending).


@njit(cache=True)
def _scan_isotropic_nb(n, size, norm_table, add_table, out):  # pragma: no cover
    total = 1
    for _ in range(n):
        total *= size
    digits = np.zeros(n, np.int64)
    found = 0
    for _ in range(total):
        acc = 0
        nonzero = False
        for i in range(n):
            d = digits[i]
            if d != 0:
                nonzero = True
            acc = add_table[acc, norm_table[d]]
        if nonzero and acc == 0:
            for i in range(n):
                out[found, i] = digits[i]
            found += 1
        i = n - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] == size:
                digits[i] = 0
                i -= 1
            else:
                break
    return found


def _scan_isotropic_np(n, size, norm_table, add_table, chunk=1 << 18):
    total = size**n
    parts = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digs = np.empty((idx.size, n), dtype=np.int64)
        t = idx
        for i in range(n - 1, -1, -1):
            digs[:, i] = t % size
            t = t // size
        acc = np.zeros(idx.size, dtype=np.int64)
        for i in range(n):
            acc = add_table[acc, norm_table[digs[:, i]]]
        mask = acc == 0
        if start == 0:
            mask[0] = False  # the zero vector
        parts.append(digs[mask])
    return np.concatenate(parts, axis=0)


def isotropic_scan(n: int, size: int, norm_table, add_table, expected: int) -> np.ndarray:
    """Scan all size**n coordinate vectors; return the isotropic ones."""
    if _backend == "numba":
        out = np.empty((expected, n), dtype=np.int64)
        found = _scan_isotropic_nb(n, size, norm_table, add_table, out)
        if found != expected:
            raise AssertionError(f"scan found {found} isotropic vectors, expected {expected}")
        return out
    vectors = _scan_isotropic_np(n, size, norm_table, add_table)
    if vectors.shape[0] != expected:
        raise AssertionError(f"scan found {vectors.shape[0]} isotropic vectors, expected {expected}")
    return vectors


# ---------------------------------------------------------------------------
# pair classification.  Labels are sequential relation indices:
#   scalar pairs (z = lam * x)        -> log(lam)            in [0, q^2-2]
#   product pairs (<x,z> = g^e != 0)  -> (q^2-1) + e
#   perpendicular independent pairs   -> 2*(q^2-1)
# ``piv`` is the first nonzero coordinate of the fixed vector and ``piv_inv``
# its inverse, so the scalar candidate is one table lookup per row.


@njit(cache=True)
def _classify_first_nb(x, vecs, add, mul, conj, nrel, piv, piv_inv, out):  # pragma: no cover
    count, n = vecs.shape
    for a in range(count):
        acc = 0
        for i in range(n):
            acc = add[acc, mul[x[i], conj[vecs[a, i]]]]
        if acc != 0:
            out[a] = nrel + acc - 1
        else:
            lam = mul[vecs[a, piv], piv_inv]
            ok = lam != 0
            if ok:
                for i in range(n):
                    if vecs[a, i] != mul[lam, x[i]]:
                        ok = False
                        break
            out[a] = lam - 1 if ok else 2 * nrel


@njit(cache=True)
def _classify_second_nb(y, cy, vecs, add, mul, nrel, piv, piv_inv, out):  # pragma: no cover
    count, n = vecs.shape
    for a in range(count):
        acc = 0
        for i in range(n):
            acc = add[acc, mul[vecs[a, i], cy[i]]]
        if acc != 0:
            out[a] = nrel + acc - 1
        else:
            nu = mul[vecs[a, piv], piv_inv]
            ok = nu != 0
            if ok:
                for i in range(n):
                    if vecs[a, i] != mul[nu, y[i]]:
                        ok = False
                        break
            out[a] = (nrel - (nu - 1)) % nrel if ok else 2 * nrel


def _classify_first_np(x, vecs, add, mul, conj, nrel, piv, piv_inv):
    acc = np.zeros(vecs.shape[0], dtype=np.int64)
    for i in range(vecs.shape[1]):
        acc = add[acc, mul[x[i], conj[vecs[:, i]]]]
    lam = mul[vecs[:, piv], piv_inv]
    multiple = lam != 0
    for i in range(vecs.shape[1]):
        multiple &= vecs[:, i] == mul[lam, x[i]]
    out = np.full(vecs.shape[0], 2 * nrel, dtype=np.int64)
    out[multiple] = lam[multiple] - 1
    nz = acc != 0
    out[nz] = nrel + acc[nz] - 1
    return out


def _classify_second_np(y, cy, vecs, add, mul, nrel, piv, piv_inv):
    acc = np.zeros(vecs.shape[0], dtype=np.int64)
    for i in range(vecs.shape[1]):
        acc = add[acc, mul[vecs[:, i], cy[i]]]
    nu = mul[vecs[:, piv], piv_inv]
    multiple = nu != 0
    for i in range(vecs.shape[1]):
        multiple &= vecs[:, i] == mul[nu, y[i]]
    out = np.full(vecs.shape[0], 2 * nrel, dtype=np.int64)
    out[multiple] = (nrel - (nu[multiple] - 1)) % nrel
    nz = acc != 0
    out[nz] = nrel + acc[nz] - 1
    return out


def _pivot(vec, inv_table):
    piv = int(np.flatnonzero(vec)[0])
    return piv, int(inv_table[vec[piv]])


def classify_row(x, vecs, ft) -> np.ndarray:
    """Labels of the pairs (x, z) for every row z of ``vecs``."""
    x = np.asarray(x, dtype=np.int64)
    nrel = ft.order - 1
    piv, piv_inv = _pivot(x, ft.inv_table)
    if _backend == "numba":
        out = np.empty(vecs.shape[0], dtype=np.int64)
        _classify_first_nb(x, vecs, ft.add_table, ft.mul_table, ft.conj_table,
                           nrel, piv, piv_inv, out)
        return out
    return _classify_first_np(x, vecs, ft.add_table, ft.mul_table, ft.conj_table,
                              nrel, piv, piv_inv)


def classify_col(y, vecs, ft) -> np.ndarray:
    """Labels of the pairs (z, y) for every row z of ``vecs``."""
    y = np.asarray(y, dtype=np.int64)
    cy = ft.conj_table[y]
    nrel = ft.order - 1
    piv, piv_inv = _pivot(y, ft.inv_table)
    if _backend == "numba":
        out = np.empty(vecs.shape[0], dtype=np.int64)
        _classify_second_nb(y, cy, vecs, ft.add_table, ft.mul_table,
                            nrel, piv, piv_inv, out)
        return out
    return _classify_second_np(y, cy, vecs, ft.add_table, ft.mul_table,
                               nrel, piv, piv_inv)


@njit(cache=True)
def _classify_all_nb(vecs, add, mul, conj, nrel, pivots, piv_invs, out):  # pragma: no cover
    count, n = vecs.shape
    for a in range(count):
        piv = pivots[a]
        piv_inv = piv_invs[a]
        for b in range(count):
            acc = 0
            for i in range(n):
                acc = add[acc, mul[vecs[a, i], conj[vecs[b, i]]]]
            if acc != 0:
                out[a, b] = nrel + acc - 1
            else:
                lam = mul[vecs[b, piv], piv_inv]
                ok = lam != 0
                if ok:
                    for i in range(n):
                        if vecs[b, i] != mul[lam, vecs[a, i]]:
                            ok = False
                            break
                out[a, b] = lam - 1 if ok else 2 * nrel


def classify_matrix(vecs, ft) -> np.ndarray:
    """Full pairwise label matrix M with M[a, b] = label of (vecs[a], vecs[b])."""
    count = vecs.shape[0]
    nrel = ft.order - 1
    pivots = np.argmax(vecs != 0, axis=1).astype(np.int64)
    piv_invs = ft.inv_table[vecs[np.arange(count), pivots]]
    if _backend == "numba":
        out = np.empty((count, count), dtype=np.int64)
        _classify_all_nb(vecs, ft.add_table, ft.mul_table, ft.conj_table,
                         nrel, pivots, piv_invs, out)
        return out
    out = np.empty((count, count), dtype=np.int64)
    for a in range(count):
        out[a] = _classify_first_np(vecs[a], vecs, ft.add_table, ft.mul_table,
                                    ft.conj_table, nrel, int(pivots[a]), int(piv_invs[a]))
    return out
