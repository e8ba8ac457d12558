"""Seeded random directed graphs.

All randomness comes from raw 64-bit outputs of numpy's ``PCG64`` bit
generator (PCG XSL-RR 128/64, seeded through ``SeedSequence(seed)``).  Raw
outputs are mapped to a range ``[0, m)`` with integer ``% m``; no floating
point, no platform RNG, so edge lists are bit-identical everywhere.  The
modulo bias is below ``m / 2**64``.

Models
------
``er``
    Exactly ``l`` distinct edges drawn uniformly without replacement from
    all ordered pairs (loops excluded unless requested).
``sf``
    Sequential copying model.  Each new edge picks its source as follows:
    with probability 1/2 a uniformly random node, otherwise the source of a
    uniformly random existing edge (so a node is chosen in proportion to
    its current out-degree).  The target is chosen the same way from edge
    targets and in-degree.  Duplicate edges and (by default) loops are
    rejected and redrawn.  The result has heavy-tailed in- and out-degree
    distributions.
"""

from __future__ import annotations

import numba
import numpy as np

from .errors import ParameterError
from .graph import DirectedGraph

__all__ = ["erdos_renyi_directed", "scale_free_directed", "generate", "MODELS"]

_DENSE_FRACTION = 0.5
# 0x9E3779B97F4A7C15 as a signed 64-bit value (Fibonacci hashing)
_GOLDEN = -7046029254386353131


def _check(n: int, l: int, seed: int, allow_self_loops: bool) -> int:
    if not 0 <= seed < 2**64:
        raise ParameterError(f"seed must be an unsigned 64-bit integer, got {seed}")
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    total = n * n if allow_self_loops else n * (n - 1)
    if not 0 < l <= total:
        raise ParameterError(f"edge count l={l} outside (0, {total}] for n={n}")
    return total


def _raw(bitgen: np.random.PCG64, size: int) -> np.ndarray:
    return np.asarray(bitgen.random_raw(size), dtype=np.uint64)


def _decode(codes: np.ndarray, n: int, allow_self_loops: bool):
    if allow_self_loops:
        return codes // n, codes % n
    u = codes // (n - 1)
    r = codes % (n - 1)
    return u, r + (r >= u)


def erdos_renyi_directed(
    n: int, l: int, seed: int, allow_self_loops: bool = False
) -> DirectedGraph:
    total = _check(n, l, seed, allow_self_loops)
    bitgen = np.random.PCG64(seed)
    if l > _DENSE_FRACTION * total:
        # random permutation of all pair codes, keep a prefix
        keys = _raw(bitgen, total)
        codes = np.argsort(keys, kind="stable")[:l].astype(np.int64)
    else:
        codes = np.empty(0, dtype=np.int64)
        while codes.size < l:
            need = l - codes.size
            draw = (_raw(bitgen, need + need // 8 + 16) % np.uint64(total)).astype(np.int64)
            codes = np.concatenate([codes, draw])
            _, first = np.unique(codes, return_index=True)
            first.sort()
            codes = codes[first][:l]
    u, v = _decode(codes, n, allow_self_loops)
    return DirectedGraph._trusted(n, u, v, tuple(str(i) for i in range(n)))


@numba.njit(cache=True)
def _copying_model(n, l, allow_loops, raw, src, dst, filled, table):  # pragma: no cover
    mask = table.size - 1
    low = np.uint64(0x7FFFFFFFFFFFFFFF)
    pos = 0
    k = filled
    while k < l and pos + 1 < raw.size:
        a = raw[pos]
        b = raw[pos + 1]
        pos += 2
        if (a >> np.uint64(63)) == 1 and k > 0:
            u = src[np.int64((a & low) % np.uint64(k))]
        else:
            u = np.int64((a & low) % np.uint64(n))
        if (b >> np.uint64(63)) == 1 and k > 0:
            v = dst[np.int64((b & low) % np.uint64(k))]
        else:
            v = np.int64((b & low) % np.uint64(n))
        if u == v and not allow_loops:
            continue
        code = u * n + v
        h = (code * _GOLDEN) & mask
        dup = False
        while table[h] != -1:
            if table[h] == code:
                dup = True
                break
            h = (h + 1) & mask
        if dup:
            continue
        table[h] = code
        src[k] = u
        dst[k] = v
        k += 1
    return k, pos


def scale_free_directed(
    n: int, l: int, seed: int, allow_self_loops: bool = False
) -> DirectedGraph:
    _check(n, l, seed, allow_self_loops)
    bitgen = np.random.PCG64(seed)
    src = np.empty(l, dtype=np.int64)
    dst = np.empty(l, dtype=np.int64)
    cap = 1 << max(4, int(2 * l).bit_length())
    table = np.full(cap, -1, dtype=np.int64)
    filled = 0
    budget = 64 * l + 100_000
    chunk = 2 * (l + 1024)
    while filled < l:
        if budget <= 0:
            raise ParameterError(f"could not place {l} distinct edges on {n} nodes")
        raw = _raw(bitgen, chunk)
        budget -= chunk // 2
        filled, _ = _copying_model(n, l, allow_self_loops, raw, src, dst, filled, table)
    return DirectedGraph._trusted(n, src, dst, tuple(str(i) for i in range(n)))


MODELS = {"er": erdos_renyi_directed, "sf": scale_free_directed}


def generate(
    model: str, n: int, l: int, seed: int, allow_self_loops: bool = False
) -> DirectedGraph:
    try:
        fn = MODELS[model]
    except KeyError:
        raise ParameterError(f"unknown model {model!r}; choose from {sorted(MODELS)}") from None
    return fn(n, l, seed, allow_self_loops)
