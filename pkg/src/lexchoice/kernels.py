"""Pairwise lexicographic kernels.

Two hot loops are accelerated: the signed-degree matrix over all pairs and
the triple scan for transitivity. Each has a numba ``@njit`` version and a
pure-numpy version. Set ``LEXCHOICE_DISABLE_JIT=1`` to force numpy (also used
automatically when numba cannot be imported).

Signed-degree convention: ``D[i, k] = +j`` if alternative i wins at criterion
j (1-based), ``-j`` if k wins there, and 0 if their value vectors are equal.
"""

import os

import numpy as np

INT64_MIN = np.iinfo(np.int64).min
INT64_MAX = np.iinfo(np.int64).max


def degree_matrix_numpy(values):
    values = np.asarray(values, dtype=np.int64)
    n, m = values.shape
    if m == 0 or n == 0:
        return np.zeros((n, n), dtype=np.int64)
    a = values[:, None, :]
    b = values[None, :, :]
    ne = a != b
    first = ne.argmax(axis=2)
    differs = ne.any(axis=2)
    wins = np.take_along_axis(a > b, first[..., None], axis=2)[..., 0]
    signed = np.where(wins, first + 1, -(first + 1))
    return np.where(differs, signed, 0).astype(np.int64)


def transitivity_violation_numpy(weak):
    """First (a, b, c) with a>=b, b>=c but not a>=c, or (-1, -1, -1)."""
    weak = np.asarray(weak, dtype=bool)
    bad = weak[:, :, None] & weak[None, :, :] & ~weak[:, None, :]
    if not bad.any():
        return (-1, -1, -1)
    a, b, c = np.unravel_index(int(bad.argmax()), bad.shape)
    return (int(a), int(b), int(c))


def _degree_matrix_py(values, out):
    n, m = values.shape
    for i in range(n):
        for k in range(i + 1, n):
            for j in range(m):
                x = values[i, j]
                y = values[k, j]
                if x != y:
                    d = j + 1 if x > y else -(j + 1)
                    out[i, k] = d
                    out[k, i] = -d
                    break
    return out


def _transitivity_violation_py(weak):
    n = weak.shape[0]
    for a in range(n):
        for b in range(n):
            if not weak[a, b]:
                continue
            for c in range(n):
                if weak[b, c] and not weak[a, c]:
                    return (a, b, c)
    return (-1, -1, -1)


try:
    if os.environ.get("LEXCHOICE_DISABLE_JIT", "") not in ("", "0"):
        raise ImportError("jit disabled by LEXCHOICE_DISABLE_JIT")
    from numba import njit

    _degree_matrix_jit = njit(_degree_matrix_py)
    _transitivity_violation_jit = njit(_transitivity_violation_py)
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


if HAS_NUMBA:

    def degree_matrix_numba(values):
        values = np.ascontiguousarray(values, dtype=np.int64)
        n = values.shape[0]
        return _degree_matrix_jit(values, np.zeros((n, n), dtype=np.int64))

    def transitivity_violation_numba(weak):
        a, b, c = _transitivity_violation_jit(np.ascontiguousarray(weak, dtype=np.bool_))
        return (int(a), int(b), int(c))

    degree_matrix = degree_matrix_numba
    transitivity_violation = transitivity_violation_numba
else:
    degree_matrix = degree_matrix_numpy
    transitivity_violation = transitivity_violation_numpy


def fits_int64(rows) -> bool:
    return all(INT64_MIN <= v <= INT64_MAX for r in rows for v in r)
