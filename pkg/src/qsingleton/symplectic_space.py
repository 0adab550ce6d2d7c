"""The symplectic space V = F_p^n x F_p^n.

Flattened vectors put the whole x block first and then the whole z block,
so the form matrix is ``[[0, I], [-I, 0]]``.  Qubit indices are 1-based in
:class:`QubitSet` and 0-based everywhere else.

Pauli letters (p = 2 only): I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from qsingleton.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    LetterRequiresP2,
)
from qsingleton.field_linalg import Row, Subspace, check_prime, nullspace

LETTERS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_LETTER_OF = {v: k for k, v in LETTERS.items()}


@dataclass(frozen=True)
class PauliVector:
    """An element ``(x, z)`` of V; entries are canonical residues mod ``p``."""

    p: int
    x: Row
    z: Row

    def __post_init__(self) -> None:
        if len(self.x) != len(self.z):
            raise DimensionMismatch(f"x has length {len(self.x)} but z has length {len(self.z)}")
        object.__setattr__(self, "x", tuple(int(a) % self.p for a in self.x))
        object.__setattr__(self, "z", tuple(int(a) % self.p for a in self.z))

    @property
    def n(self) -> int:
        return len(self.x)

    @classmethod
    def zero(cls, p: int, n: int) -> PauliVector:
        return cls(p, (0,) * n, (0,) * n)

    @classmethod
    def from_flat(cls, p: int, flat: Sequence[int]) -> PauliVector:
        if len(flat) % 2:
            raise DimensionMismatch(f"flat vector has odd length {len(flat)}")
        n = len(flat) // 2
        return cls(p, tuple(flat[:n]), tuple(flat[n:]))

    @classmethod
    def from_pauli(cls, text: str, p: int = 2) -> PauliVector:
        if p != 2:
            raise LetterRequiresP2(f"Pauli letters need p = 2, got p = {p}")
        bad = [c for c in text if c not in LETTERS]
        if bad:
            raise ValueError(f"invalid Pauli letter {bad[0]!r} in {text!r}")
        pairs = [LETTERS[c] for c in text]
        return cls(2, tuple(a for a, _ in pairs), tuple(b for _, b in pairs))

    def flat(self) -> Row:
        return self.x + self.z

    def pauli(self) -> str:
        if self.p != 2:
            raise LetterRequiresP2(f"Pauli letters need p = 2, got p = {self.p}")
        return "".join(_LETTER_OF[pair] for pair in zip(self.x, self.z))

    def _check(self, other: PauliVector) -> None:
        if self.p != other.p or self.n != other.n:
            raise DimensionMismatch(
                f"incompatible vectors: (p={self.p}, n={self.n}) vs (p={other.p}, n={other.n})"
            )

    def __add__(self, other: PauliVector) -> PauliVector:
        self._check(other)
        return PauliVector(
            self.p,
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.z, other.z)),
        )

    def __neg__(self) -> PauliVector:
        return PauliVector(self.p, tuple(-a for a in self.x), tuple(-a for a in self.z))

    def __sub__(self, other: PauliVector) -> PauliVector:
        return self + (-other)

    def __rmul__(self, c: int) -> PauliVector:
        return PauliVector(self.p, tuple(c * a for a in self.x), tuple(c * a for a in self.z))

    def __bool__(self) -> bool:
        return any(self.x) or any(self.z)

    def __str__(self) -> str:
        return self.pauli() if self.p == 2 else " ".join(map(str, self.flat()))


@dataclass(frozen=True)
class QubitSet:
    """A subset of ``{1, ..., n}`` with sorted, duplicate-free members."""

    n: int
    members: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        members = tuple(sorted(set(int(i) for i in self.members)))
        for i in members:
            if not 1 <= i <= self.n:
                raise IndexOutOfRange(f"qubit index {i} outside [1, {self.n}]")
        object.__setattr__(self, "members", members)

    @classmethod
    def all(cls, n: int) -> QubitSet:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_zero_based(cls, n: int, indices: Iterable[int]) -> QubitSet:
        return cls(n, tuple(i + 1 for i in indices))

    def zero_based(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self.members)

    def complement(self) -> QubitSet:
        inside = set(self.members)
        return QubitSet(self.n, tuple(i for i in range(1, self.n + 1) if i not in inside))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, i: object) -> bool:
        return i in self.members

    def __or__(self, other: QubitSet) -> QubitSet:
        return QubitSet(self.n, self.members + other.members)

    def __and__(self, other: QubitSet) -> QubitSet:
        return QubitSet(self.n, tuple(set(self.members) & set(other.members)))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def sym_form(u: PauliVector, v: PauliVector) -> int:
    """Sum over qubits of ``u_x v_z - u_z v_x``, reduced mod p."""
    u._check(v)
    total = 0
    for ux, uz, vx, vz in zip(u.x, u.z, v.x, v.z):
        total += ux * vz - uz * vx
    return total % u.p


def sym_form_flat(u: Sequence[int], v: Sequence[int], p: int) -> int:
    n = len(u) // 2
    total = 0
    for i in range(n):
        total += u[i] * v[n + i] - u[n + i] * v[i]
    return total % p


def supp(v: PauliVector) -> QubitSet:
    return QubitSet(v.n, tuple(i + 1 for i, (a, b) in enumerate(zip(v.x, v.z)) if a or b))


def wt(v: PauliVector) -> int:
    return sum(1 for a, b in zip(v.x, v.z) if a or b)


def flat_weight(flat: Sequence[int]) -> int:
    n = len(flat) // 2
    return sum(1 for i in range(n) if flat[i] or flat[n + i])


def support_subspace(c: QubitSet, p: int) -> Subspace:
    """V_C: all vectors vanishing (in both blocks) off ``c``."""
    check_prime(p)
    n = c.n
    idx = c.zero_based()
    unit = list(idx) + [n + i for i in idx]
    basis = tuple(tuple(int(j == u) for j in range(2 * n)) for u in unit)
    return Subspace(p, 2 * n, basis)


def restrict(v: PauliVector, e: QubitSet) -> PauliVector:
    """The restriction map r_E: zero every coordinate outside ``e``."""
    if e.n != v.n:
        raise DimensionMismatch(f"qubit set over n={e.n} applied to a vector with n={v.n}")
    keep = set(e.zero_based())
    return PauliVector(
        v.p,
        tuple(a if i in keep else 0 for i, a in enumerate(v.x)),
        tuple(a if i in keep else 0 for i, a in enumerate(v.z)),
    )


def form_partner(row: Sequence[int], p: int) -> Row:
    """``w`` with ``w . v == sym_form(row, v)`` for every flat ``v``: (x|z) -> (-z|x)."""
    n = len(row) // 2
    return tuple((-a) % p for a in row[n:]) + tuple(row[:n])


def _check_even(s: Subspace) -> int:
    if s.ambient_dim % 2:
        raise DimensionMismatch(f"symplectic ambient dimension must be even, got {s.ambient_dim}")
    return s.ambient_dim // 2


def sym_orth(s: Subspace) -> Subspace:
    """Symplectic complement, as the kernel of the basis times the form matrix."""
    n = _check_even(s)
    return nullspace([form_partner(b, s.p) for b in s.basis], s.p, 2 * n)


def is_isotropic(s: Subspace) -> bool:
    _check_even(s)
    rows = s.basis
    return all(
        sym_form_flat(rows[i], rows[j], s.p) == 0
        for i in range(len(rows))
        for j in range(i + 1, len(rows))
    )


def transvection(u: PauliVector, v: PauliVector) -> PauliVector:
    """T_v(u) = u + <u, v> v, a form-preserving map."""
    return u + sym_form(u, v) * v
