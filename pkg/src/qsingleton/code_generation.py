"""Seeded random stabilizer codes and the catalog of named codes.

Random codes start from S0 = span{Z_1, ..., Z_{n-k}} and push it through a
sequence of symplectic transvections T_v(u) = u + <u, v> v.  Sampling is
fully specified so that any implementation can reproduce a code from its
config:

* PRNG: SplitMix64 seeded with ``seed`` (state advanced by the golden-gamma
  constant before each output).
* Field element: draw 64-bit words until one is below ``2**64 - (2**64 % p)``,
  return it mod ``p``.
* Transvection vector: 2n field elements in flat order (x block, then z
  block); an all-zero draw is discarded and the whole vector redrawn.
* Each round draws one vector and applies it to every current basis row in
  order.  No vectors are drawn when k = n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from qsingleton.errors import InvalidK, UnknownCode
from qsingleton.field_linalg import check_prime
from qsingleton.stabilizer_core import StabilizerCode, make_code
from qsingleton.symplectic_space import PauliVector, transvection

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def field_element(self, p: int) -> int:
        bound = (1 << 64) - ((1 << 64) % p)
        while True:
            x = self.next_u64()
            if x < bound:
                return x % p

    def nonzero_vector(self, p: int, length: int) -> tuple[int, ...]:
        while True:
            v = tuple(self.field_element(p) for _ in range(length))
            if any(v):
                return v


@dataclass(frozen=True)
class GeneratorConfig:
    p: int
    n: int
    k: int
    seed: int = 0
    transvection_rounds: int | None = None

    @property
    def rounds(self) -> int:
        return 5 * self.n if self.transvection_rounds is None else self.transvection_rounds


def random_code(cfg: GeneratorConfig) -> StabilizerCode:
    p, n, k = check_prime(cfg.p), cfg.n, cfg.k
    if not 0 <= k <= n:
        raise InvalidK(f"k={k} must satisfy 0 <= k <= n={n}")
    basis = [PauliVector.from_flat(p, (0,) * n + tuple(int(j == i) for j in range(n))) for i in range(n - k)]
    if basis:
        rng = SplitMix64(cfg.seed)
        for _ in range(cfg.rounds):
            v = PauliVector.from_flat(p, rng.nonzero_vector(p, 2 * n))
            basis = [transvection(u, v) for u in basis]
    return make_code(p, n, basis)


# --- catalog ----------------------------------------------------------------------

FIXTURE_NAMES = ("four_two_two", "five_one_three", "steane", "shor")

_PARAM = re.compile(r"^(trivial_k0|free)\((\d+)\)$")


def trivial_k0(n: int) -> StabilizerCode:
    """S = span{Z_1, ..., Z_n}: k = 0, so S^perp = S."""
    return make_code(2, n, [PauliVector.from_pauli("I" * i + "Z" + "I" * (n - i - 1)) for i in range(n)])


def free(n: int) -> StabilizerCode:
    """The empty stabilizer on n qubits."""
    return make_code(2, n, [])


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise UnknownCode(name)
    return resources.files("qsingleton").joinpath("fixtures", f"{name}.code").read_text(encoding="ascii")


def catalog(name: str) -> StabilizerCode:
    """Look up a named code: one of the fixtures, ``trivial_k0(n)`` or ``free(n)``."""
    from qsingleton.code_io import parse_code

    m = _PARAM.match(name)
    if m:
        builder = trivial_k0 if m.group(1) == "trivial_k0" else free
        return builder(int(m.group(2)))
    return parse_code(fixture_text(name))
