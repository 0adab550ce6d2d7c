"""Brute-force oracles, independent of the package.

Everything here works on plain tuples (flat x-block then z-block) and
enumerates vectors directly, so it shares no code with the implementation.
"""

from __future__ import annotations

import itertools
import math

PAULI = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


def pauli(word):
    pairs = [PAULI[c] for c in word]
    return tuple(a for a, _ in pairs) + tuple(b for _, b in pairs)


def form(u, v, p):
    n = len(u) // 2
    return sum(u[i] * v[n + i] - u[n + i] * v[i] for i in range(n)) % p


def weight(v):
    n = len(v) // 2
    return sum(1 for i in range(n) if v[i] or v[n + i])


def span_set(gens, p, length):
    """Every linear combination of ``gens`` (a set of tuples)."""
    out = {(0,) * length}
    for g in gens:
        out = {tuple((a + c * b) % p for a, b in zip(v, g)) for v in out for c in range(p)}
    return out


def log_p(size, p):
    d = round(math.log(size, p))
    assert p**d == size
    return d


def vectors(p, length):
    return itertools.product(range(p), repeat=length)


def vectors_on(support, p, n):
    """All vectors of F_p^{2n} vanishing off ``support`` (0-based)."""
    for vals in itertools.product(range(p), repeat=2 * len(support)):
        v = [0] * (2 * n)
        for j, i in enumerate(support):
            v[i] = vals[j]
            v[n + i] = vals[len(support) + j]
        yield tuple(v)


def commutes(v, gens, p):
    return all(form(v, g, p) == 0 for g in gens)


def brute_distance(gens, p, n, max_weight=None):
    """min wt over S^perp minus S by scanning every vector (or every vector of weight <= max_weight)."""
    s = span_set(gens, p, 2 * n)
    best = None
    if max_weight is None:
        candidates = vectors(p, 2 * n)
    else:
        candidates = (
            v
            for w in range(1, max_weight + 1)
            for t in itertools.combinations(range(n), w)
            for v in vectors_on(t, p, n)
        )
    for v in candidates:
        if any(v) and commutes(v, gens, p) and v not in s:
            w = weight(v)
            if best is None or w < best:
                best = w
    return best


def brute_g(gens, p, n, support):
    s = span_set(gens, p, 2 * n)
    perp = inside = 0
    for v in vectors_on(support, p, n):
        if commutes(v, gens, p):
            perp += 1
            inside += v in s
    return log_p(perp, p) - log_p(inside, p)


def brute_correctable(gens, p, n, support):
    s = span_set(gens, p, 2 * n)
    return all(v in s for v in vectors_on(support, p, n) if commutes(v, gens, p))


def brute_dim(vecs, p, length):
    return log_p(len(span_set(vecs, p, length)), p)


FOUR_TWO_TWO = ["XXXX", "ZZZZ"]
FIVE_ONE_THREE = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
HAMMING = ["0001111", "0110011", "1010101"]
STEANE = [r.replace("1", "X").replace("0", "I") for r in HAMMING] + [
    r.replace("1", "Z").replace("0", "I") for r in HAMMING
]
SHOR = [
    "ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII", "IIIIIIZZI", "IIIIIIIZZ",
    "XXXXXXIII", "IIIXXXXXX",
]
