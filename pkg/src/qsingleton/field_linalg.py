"""Exact linear algebra over a prime field F_p.

Vectors and matrix rows are tuples of ints in ``[0, p)``.  Every echelon
computation goes through :func:`echelon`, which dispatches to one of two
backends:

* ``p == 2`` and the ``auto`` backend: rows are packed into Python ints
  (column ``j`` of an ``m``-column row is bit ``m - 1 - j``) and reduced
  with XOR.
* everything else: int64 numpy arrays with modular row operations.

The generic backend can be forced with :func:`use_backend` so that the two
paths can be compared on the same inputs.
"""

from __future__ import annotations

import contextlib
import functools
import itertools
from collections.abc import Iterable, Iterator, Sequence
from contextvars import ContextVar
from dataclasses import dataclass

import numpy as np

from qsingleton.errors import DimensionMismatch, NotPrime

Row = tuple[int, ...]

MAX_PRIME = 1 << 16
BACKENDS = ("auto", "generic")

_backend: ContextVar[str] = ContextVar("qsingleton_backend", default="auto")


@functools.cache
def check_prime(p: int) -> int:
    """Return ``p`` unchanged if it is a supported prime, else raise :class:`NotPrime`."""
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
        raise NotPrime(f"field characteristic must be an integer, got {p!r}")
    p = int(p)
    if p < 2 or p > MAX_PRIME:
        raise NotPrime(f"p={p} outside the supported range [2, {MAX_PRIME}]")
    f = 2
    while f * f <= p:
        if p % f == 0:
            raise NotPrime(f"p={p} is not prime (divisible by {f})")
        f += 1
    return p


def active_backend() -> str:
    return _backend.get()


@contextlib.contextmanager
def use_backend(name: str) -> Iterator[None]:
    """Temporarily select the linear-algebra backend (``"auto"`` or ``"generic"``)."""
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")
    token = _backend.set(name)
    try:
        yield
    finally:
        _backend.reset(token)


def _packed(p: int) -> bool:
    return p == 2 and _backend.get() == "auto"


# --- bit-packed GF(2) ---------------------------------------------------------


def pack_row(row: Sequence[int]) -> int:
    v = 0
    for x in row:
        v = (v << 1) | (x & 1)
    return v


def unpack_row(v: int, ncols: int) -> Row:
    if ncols == 0:
        return ()
    return tuple(map(int, format(v, f"0{ncols}b")))


def _echelon_gf2(packed: Iterable[int]) -> list[int]:
    """Fully reduced echelon basis of packed rows, leading bit descending."""
    basis: list[int] = []
    for r in packed:
        for b in basis:
            if r ^ b < r:
                r ^= b
        if r:
            top = 1 << (r.bit_length() - 1)
            basis = [b ^ r if b & top else b for b in basis]
            basis.append(r)
    basis.sort(reverse=True)
    return basis


# --- generic F_p ----------------------------------------------------------------


def _echelon_modp(rows: Sequence[Sequence[int]], p: int, ncols: int) -> tuple[list[Row], list[int]]:
    if not rows or ncols == 0:
        return [], []
    a = np.array(rows, dtype=np.int64).reshape(len(rows), ncols) % p
    nrows = a.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = (a[r] * pow(lead, -1, p)) % p
        f = a[:, c].copy()
        f[r] = 0
        a -= np.outer(f, a[r])
        a %= p
        pivots.append(c)
        r += 1
    return [tuple(row) for row in a[:r].tolist()], pivots


def echelon(rows: Sequence[Sequence[int]], p: int, ncols: int) -> tuple[list[Row], list[int]]:
    """Nonzero rows of the canonical RREF of ``rows`` and their pivot columns."""
    if _packed(p):
        basis = _echelon_gf2(pack_row(r) for r in rows)
        return [unpack_row(b, ncols) for b in basis], [ncols - b.bit_length() for b in basis]
    return _echelon_modp(rows, p, ncols)


def _ncols(rows: Sequence[Sequence[int]], ncols: int | None) -> int:
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a {ncols}-column matrix")
    return ncols


def rref(
    rows: Sequence[Sequence[int]], p: int, ncols: int | None = None
) -> tuple[tuple[Row, ...], int, tuple[int, ...]]:
    """Canonical reduced row-echelon form, keeping the input shape.

    Returns ``(matrix, rank, pivot_cols)``; zero rows are moved to the bottom.
    """
    check_prime(p)
    ncols = _ncols(rows, ncols)
    nonzero, pivots = echelon(rows, p, ncols)
    zero = (0,) * ncols
    full = tuple(nonzero) + (zero,) * (len(rows) - len(nonzero))
    return full, len(nonzero), tuple(pivots)


def rank(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> int:
    check_prime(p)
    ncols = _ncols(rows, ncols)
    if _packed(p):
        return len(_echelon_gf2(pack_row(r) for r in rows))
    return len(_echelon_modp(rows, p, ncols)[1])


def nullspace(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> Subspace:
    """The right kernel ``{x : rows . x = 0}`` as a :class:`Subspace` of F_p^ncols."""
    check_prime(p)
    ncols = _ncols(rows, ncols)
    reduced, pivots = echelon(rows, p, ncols)
    pivot_set = set(pivots)
    vectors = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = [0] * ncols
        x[f] = 1
        for row, c in zip(reduced, pivots):
            x[c] = (-row[f]) % p
        vectors.append(tuple(x))
    return Subspace.span(vectors, p, ncols)


def solve_left(rows: Sequence[Sequence[int]], target: Sequence[int], p: int) -> Row | None:
    """Coefficients ``c`` with ``sum_i c[i] * rows[i] == target``, or ``None`` if unsolvable."""
    check_prime(p)
    m = len(rows)
    ncols = len(target)
    _ncols(rows, ncols)
    augmented = [tuple(r) + tuple(int(i == j) for j in range(m)) for i, r in enumerate(rows)]
    reduced, pivots = echelon(augmented, p, ncols + m)
    residual = [x % p for x in target] + [0] * m
    for row, c in zip(reduced, pivots):
        if c >= ncols:
            break
        lam = residual[c]
        if lam:
            residual = [(a - lam * b) % p for a, b in zip(residual, row)]
    if any(residual[:ncols]):
        return None
    return tuple((-x) % p for x in residual[ncols:])


# --- subspaces ------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^ambient_dim held by its canonical RREF basis.

    Build instances with :meth:`span`, :meth:`zero` or :meth:`full`; equal
    subspaces then compare equal field by field.
    """

    p: int
    ambient_dim: int
    basis: tuple[Row, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], p: int, ambient_dim: int) -> Subspace:
        check_prime(p)
        vectors = [tuple(int(x) for x in v) for v in vectors]
        _ncols(vectors, ambient_dim)
        basis, _ = echelon(vectors, p, ambient_dim)
        return cls(p, ambient_dim, tuple(basis))

    @classmethod
    def zero(cls, p: int, ambient_dim: int) -> Subspace:
        return cls(check_prime(p), ambient_dim, ())

    @classmethod
    def full(cls, p: int, ambient_dim: int) -> Subspace:
        eye = tuple(tuple(int(i == j) for j in range(ambient_dim)) for i in range(ambient_dim))
        return cls(check_prime(p), ambient_dim, eye)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @functools.cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    @functools.cached_property
    def _packed_basis(self) -> tuple[int, ...]:
        return tuple(pack_row(r) for r in self.basis)

    def reduce(self, v: Sequence[int]) -> Row:
        """Residual of ``v`` after elimination against the basis; zero iff ``v`` is inside."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        p = self.p
        if _packed(p):
            r = pack_row(v)
            for b in self._packed_basis:
                if r ^ b < r:
                    r ^= b
            return unpack_row(r, self.ambient_dim)
        out = [x % p for x in v]
        for row, c in zip(self.basis, self.pivots):
            lam = out[c]
            if lam:
                out = [(a - lam * b) % p for a, b in zip(out, row)]
        return tuple(out)

    def __contains__(self, v: Sequence[int]) -> bool:
        return contains(self, v)

    def __le__(self, other: Subspace) -> bool:
        return subspace_leq(self, other)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def elements(self) -> Iterator[Row]:
        """Every vector of the subspace (p**dim of them); meant for small cases."""
        p, n = self.p, self.ambient_dim
        for coeffs in itertools.product(range(p), repeat=self.dim):
            v = [0] * n
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [(a + c * b) % p for a, b in zip(v, row)]
            yield tuple(v)


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.p != b.p or a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"incompatible subspaces: F_{a.p}^{a.ambient_dim} vs F_{b.p}^{b.ambient_dim}"
        )


def contains(a: Subspace, v: Sequence[int]) -> bool:
    return not any(a.reduce(v))


def subspace_leq(b: Subspace, a: Subspace) -> bool:
    """True iff ``b`` is a subspace of ``a``."""
    _check_compatible(a, b)
    return all(contains(a, row) for row in b.basis)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return Subspace.span(a.basis + b.basis, a.p, a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection by Zassenhaus: reduce ``[a | a]`` stacked on ``[b | 0]``.

    Rows whose left half vanishes carry a basis of ``a & b`` in their right half.
    """
    _check_compatible(a, b)
    m, p = a.ambient_dim, a.p
    if not a.basis or not b.basis:
        return Subspace.zero(p, m)
    zero = (0,) * m
    block = [row + row for row in a.basis] + [row + zero for row in b.basis]
    reduced, pivots = echelon(block, p, 2 * m)
    right = [row[m:] for row, c in zip(reduced, pivots) if c >= m]
    return Subspace.span(right, p, m)
