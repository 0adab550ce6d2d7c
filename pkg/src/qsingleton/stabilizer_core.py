"""Stabilizer codes as isotropic subspaces, and the quantities behind the
quantum Singleton bound ``k + 2(d - 1) <= n``.

A code is a prime ``p``, a length ``n`` and an isotropic subspace ``S`` of
F_p^{2n}; ``k = n - dim S``.  Logical operators are the vectors of the
symplectic complement ``S^perp`` that are not in ``S``.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any

from qsingleton.errors import (
    DimensionExceedsN,
    DimensionMismatch,
    DisjointnessViolated,
    NotCleanable,
    NotIsotropic,
    NotLogical,
    ResourceLimit,
)
from qsingleton.field_linalg import (
    Row,
    Subspace,
    check_prime,
    contains,
    nullspace,
    solve_left,
    subspace_intersect,
    subspace_leq,
)
from qsingleton.symplectic_space import (
    PauliVector,
    QubitSet,
    support_subspace,
    sym_form_flat,
    sym_orth,
    wt,
)

PASS, FAIL, VACUOUS = "PASS", "FAIL", "VACUOUS"


@dataclass(frozen=True)
class StabilizerCode:
    p: int
    n: int
    stabilizer: Subspace

    @property
    def k(self) -> int:
        return self.n - self.stabilizer.dim

    @functools.cached_property
    def normalizer(self) -> Subspace:
        """S^perp, the symplectic complement of the stabilizer."""
        return sym_orth(self.stabilizer)

    @property
    def generators(self) -> list[PauliVector]:
        return [PauliVector.from_flat(self.p, row) for row in self.stabilizer.basis]

    def is_logical(self, v: PauliVector) -> bool:
        """True iff ``v`` lies in S^perp but not in S."""
        flat = v.flat()
        return contains(self.normalizer, flat) and not contains(self.stabilizer, flat)

    def __str__(self) -> str:
        return f"[[{self.n},{self.k}]]_{self.p}"


def _as_flat(g: PauliVector | Sequence[int], p: int, n: int) -> Row:
    if isinstance(g, PauliVector):
        if g.p != p or g.n != n:
            raise DimensionMismatch(f"generator over (p={g.p}, n={g.n}) for a code with (p={p}, n={n})")
        return g.flat()
    if len(g) != 2 * n:
        raise DimensionMismatch(f"generator of length {len(g)}, expected {2 * n}")
    return tuple(int(x) % p for x in g)


def make_code(p: int, n: int, generators: Iterable[PauliVector | Sequence[int]] = ()) -> StabilizerCode:
    """Build a code from (possibly dependent) generators.

    Raises :class:`NotIsotropic` naming the first generator pair, by index,
    whose symplectic form is nonzero.
    """
    check_prime(p)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    rows = [_as_flat(g, p, n) for g in generators]
    for i, j in itertools.combinations(range(len(rows)), 2):
        value = sym_form_flat(rows[i], rows[j], p)
        if value:
            raise NotIsotropic((i, j), value)
    s = Subspace.span(rows, p, 2 * n)
    if s.dim > n:
        raise DimensionExceedsN(f"isotropic span of dimension {s.dim} > n = {n}")
    return StabilizerCode(p, n, s)


def logical_space_dim(code: StabilizerCode) -> int:
    """dim(S^perp) - dim(S); equals 2k for every valid code."""
    return code.normalizer.dim - code.stabilizer.dim


# --- distance -------------------------------------------------------------------


@dataclass(frozen=True)
class Distance:
    """Code distance; ``value is None`` means there are no logical operators (k = 0)."""

    value: int | None
    witness: PauliVector | None = None

    @property
    def no_logicals(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "NoLogicals" if self.value is None else str(self.value)


NO_LOGICALS = Distance(None)


def _lift(local: Sequence[int], support: Sequence[int], n: int) -> Row:
    w = len(support)
    v = [0] * (2 * n)
    for j, i in enumerate(support):
        v[i] = local[j]
        v[n + i] = local[w + j]
    return tuple(v)


def logicals_on_support(code: StabilizerCode, support: Sequence[int]) -> Iterator[Row]:
    """Basis vectors of S^perp restricted to V_T that fall outside S.

    ``support`` is 0-based.  Nothing is yielded iff T is a correctable erasure.
    """
    p, n = code.p, code.n
    w = len(support)
    constraints = [
        tuple((-s[n + i]) % p for i in support) + tuple(s[i] for i in support)
        for s in code.stabilizer.basis
    ]
    kernel = nullspace(constraints, p, 2 * w)
    for local in kernel.basis:
        v = _lift(local, support, n)
        if not contains(code.stabilizer, v):
            yield v


def _local_patterns(p: int, w: int) -> list[tuple[tuple[int, int], ...]]:
    pairs = [(a, b) for a in range(p) for b in range(p) if a or b]
    return list(itertools.product(pairs, repeat=w))


def _pattern_hit(code: StabilizerCode, support: Sequence[int], patterns) -> Row | None:
    p, n = code.p, code.n
    gens = code.stabilizer.basis
    for pattern in patterns:
        v = [0] * (2 * n)
        for i, (a, b) in zip(support, pattern):
            v[i] = a
            v[n + i] = b
        if all(sym_form_flat(s, v, p) == 0 for s in gens) and not contains(code.stabilizer, v):
            return tuple(v)
    return None


def distance(
    code: StabilizerCode,
    max_weight: int | None = None,
    budget: int | None = None,
    method: str = "supports",
) -> Distance:
    """Exact minimum weight of S^perp \\ S, searching supports by increasing size.

    ``method="supports"`` decides each candidate support T by one kernel
    computation of S^perp restricted to V_T; ``method="patterns"`` tries all
    (p^2 - 1)^|T| full-support vectors on T.  Both return the first weight with
    a hit, so they agree.  ``budget`` caps the number of supports examined and
    ``max_weight`` the largest weight tried; exhausting either raises
    :class:`ResourceLimit` carrying the proven bound ``d > w``.
    """
    if method not in ("supports", "patterns"):
        raise ValueError(f"unknown distance method {method!r}")
    if code.k == 0:
        return NO_LOGICALS
    n = code.n
    limit = n if max_weight is None else min(max_weight, n)
    examined = 0
    for w in range(1, limit + 1):
        patterns = _local_patterns(code.p, w) if method == "patterns" else None
        for support in itertools.combinations(range(n), w):
            if budget is not None and examined >= budget:
                raise ResourceLimit(w - 1)
            examined += 1
            if method == "patterns":
                hit = _pattern_hit(code, support, patterns)
            else:
                hit = next(logicals_on_support(code, support), None)
            if hit is not None:
                witness = PauliVector.from_flat(code.p, hit)
                if wt(witness) != w:
                    raise AssertionError(f"witness weight {wt(witness)} at search weight {w}")
                return Distance(w, witness)
    if limit < n:
        raise ResourceLimit(limit)
    raise AssertionError("k > 0 but no logical operator found at any weight")


# --- erasures and g(M) ----------------------------------------------------------


@dataclass(frozen=True)
class Correctability:
    correctable: bool
    witness: PauliVector | None = None

    def __bool__(self) -> bool:
        return self.correctable


def _check_set(code: StabilizerCode, m: QubitSet) -> None:
    if m.n != code.n:
        raise DimensionMismatch(f"qubit set over n={m.n} for a code with n={code.n}")


def is_correctable(code: StabilizerCode, e: QubitSet) -> Correctability:
    """Erasure of ``e`` is correctable iff S^perp & V_E <= S; otherwise a witness is returned."""
    _check_set(code, e)
    inside = subspace_intersect(code.normalizer, support_subspace(e, code.p))
    if subspace_leq(inside, code.stabilizer):
        return Correctability(True)
    for row in inside.basis:
        if not contains(code.stabilizer, row):
            return Correctability(False, PauliVector.from_flat(code.p, row))
    raise AssertionError("inclusion failed but every basis row is in S")


def g(code: StabilizerCode, m: QubitSet) -> int:
    """Number of independent logical classes supportable on ``m``."""
    _check_set(code, m)
    vm = support_subspace(m, code.p)
    return subspace_intersect(code.normalizer, vm).dim - subspace_intersect(code.stabilizer, vm).dim


@dataclass(frozen=True)
class Verdict:
    """Outcome of one lemma check: status is PASS, FAIL or VACUOUS."""

    name: str
    status: str
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def __str__(self) -> str:
        extras = " ".join(f"{k}={_fmt(v)}" for k, v in self.detail.items())
        return f"{self.status} {self.name}" + (f" {extras}" if extras else "")


def _fmt(v: Any) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_fmt(x) for x in v) + "]"
    return str(v)


def cleaning_dimensions(code: StabilizerCode, m: QubitSet) -> dict[str, int]:
    """The dimensions in the decomposition S = S_M + S_{M^c} + S_0.

    Also returns the two measured values of dim(S^perp & V_M), dim(S^perp & V_{M^c})
    so they can be compared with ``2|M| - dim S_M - dim S_0`` and its mirror.
    """
    _check_set(code, m)
    mc = m.complement()
    p = code.p
    vm, vmc = support_subspace(m, p), support_subspace(mc, p)
    s_m = subspace_intersect(code.stabilizer, vm).dim
    s_mc = subspace_intersect(code.stabilizer, vmc).dim
    return {
        "dim_S_M": s_m,
        "dim_S_Mc": s_mc,
        "dim_S_0": code.stabilizer.dim - s_m - s_mc,
        "dim_perp_M": subspace_intersect(code.normalizer, vm).dim,
        "dim_perp_Mc": subspace_intersect(code.normalizer, vmc).dim,
    }


def check_cleaning_identity(code: StabilizerCode, m: QubitSet) -> Verdict:
    dims = cleaning_dimensions(code, m)
    g_m = dims["dim_perp_M"] - dims["dim_S_M"]
    g_mc = dims["dim_perp_Mc"] - dims["dim_S_Mc"]
    two_k = 2 * code.k
    ok = (
        g_m + g_mc == two_k
        and dims["dim_perp_M"] == 2 * len(m) - dims["dim_S_M"] - dims["dim_S_0"]
        and dims["dim_perp_Mc"] == 2 * (code.n - len(m)) - dims["dim_S_Mc"] - dims["dim_S_0"]
    )
    detail = {"M": str(m), "g": g_m, "g_c": g_mc, "sum": g_m + g_mc, "2k": two_k, **dims}
    return Verdict("cleaning_identity", PASS if ok else FAIL, detail)


def clean(code: StabilizerCode, logical: PauliVector, m: QubitSet) -> PauliVector:
    """An equivalent representative ``logical - s`` (``s`` in S) vanishing on ``m``.

    Raises :class:`NotLogical` if ``logical`` is outside S^perp, and
    :class:`NotCleanable` if no stabilizer matches it on ``m``; the latter cannot
    happen when ``m`` is correctable.
    """
    _check_set(code, m)
    if logical.p != code.p or logical.n != code.n:
        raise DimensionMismatch("logical operator does not match the code")
    flat = logical.flat()
    if not contains(code.normalizer, flat):
        raise NotLogical(f"{logical} is not in S^perp")
    n = code.n
    cols = list(m.zero_based())
    cols += [n + i for i in cols]
    rows = [tuple(b[c] for c in cols) for b in code.stabilizer.basis]
    target = tuple(flat[c] for c in cols)
    coeffs = solve_left(rows, target, code.p) if rows else (None if any(target) else ())
    if coeffs is None:
        raise NotCleanable(f"no stabilizer agrees with {logical} on {m}")
    s = [0] * (2 * n)
    for c, b in zip(coeffs, code.stabilizer.basis):
        if c:
            s = [x + c * y for x, y in zip(s, b)]
    return logical - PauliVector.from_flat(code.p, s)


def check_two_disjoint(code: StabilizerCode, a: QubitSet, b: QubitSet) -> Verdict:
    """For disjoint correctable A and B, check k <= |C| with C the rest of the qubits.

    Also records g(A^c), which must equal 2k when A is correctable.
    """
    _check_set(code, a)
    _check_set(code, b)
    if len(a & b):
        raise DisjointnessViolated(f"{a} and {b} share qubits {a & b}")
    c_size = code.n - len(a) - len(b)
    ca, cb = is_correctable(code, a), is_correctable(code, b)
    detail: dict[str, Any] = {"A": str(a), "B": str(b), "k": code.k, "C": c_size}
    if not (ca and cb):
        detail["correctable_A"] = ca.correctable
        detail["correctable_B"] = cb.correctable
        return Verdict("two_disjoint", VACUOUS, detail)
    g_ac = g(code, a.complement())
    detail["g_Ac"] = g_ac
    detail["2k"] = 2 * code.k
    ok = code.k <= c_size and g_ac == 2 * code.k
    return Verdict("two_disjoint", PASS if ok else FAIL, detail)


def _sets_up_to(n: int, size: int) -> Iterator[tuple[int, ...]]:
    for w in range(size + 1):
        yield from itertools.combinations(range(n), w)


def check_distance_correctability(
    code: StabilizerCode,
    dist: Distance | None = None,
    max_sets: int = 20000,
    samples: int = 2000,
    seed: int = 0,
) -> Verdict:
    """Every erasure of size <= d - 1 must be correctable.

    Exhaustive when there are at most ``max_sets`` such sets, otherwise a
    seeded random sample of ``samples`` sets.
    """
    if dist is None:
        dist = distance(code)
    if dist.no_logicals:
        return Verdict("distance_correctability", VACUOUS, {"d": "NoLogicals"})
    n, size = code.n, dist.value - 1
    total = sum(math.comb(n, w) for w in range(size + 1))
    if total <= max_sets:
        sets: Iterable[tuple[int, ...]] = _sets_up_to(n, size)
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        sets = (tuple(rng.sample(range(n), rng.randint(0, size))) for _ in range(samples))
        mode = "sampled"
    checked = 0
    for idx in sets:
        e = QubitSet.from_zero_based(n, idx)
        result = is_correctable(code, e)
        checked += 1
        if not result:
            return Verdict(
                "distance_correctability",
                FAIL,
                {"d": dist.value, "E": str(e), "witness": str(result.witness)},
            )
    return Verdict("distance_correctability", PASS, {"d": dist.value, "sets": checked, "mode": mode})


# --- the bound ------------------------------------------------------------------


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    k: int
    distance: Distance
    slack: int | None
    verdicts: dict[str, Verdict]

    @property
    def d(self) -> int | None:
        return self.distance.value

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())


def singleton_sets(n: int, d: int) -> tuple[QubitSet, QubitSet]:
    """A = {1..d-1}, B = {d..2d-2}; when n < 2(d-1), B takes whatever qubits remain."""
    a = tuple(range(1, min(d - 1, n) + 1))
    b = tuple(range(len(a) + 1, min(2 * (d - 1), n) + 1))
    return QubitSet(n, a), QubitSet(n, b)


def check_singleton(
    code: StabilizerCode,
    max_weight: int | None = None,
    budget: int | None = None,
    dist: Distance | None = None,
) -> AnalysisReport:
    """Compute d and check k + 2(d - 1) <= n, with the two-disjoint witness sets."""
    if dist is None:
        dist = distance(code, max_weight=max_weight, budget=budget)
    n, k = code.n, code.k
    if dist.no_logicals:
        verdicts = {"singleton": Verdict("singleton", VACUOUS, {"d": "NoLogicals"})}
        return AnalysisReport(n, k, dist, None, verdicts)
    d = dist.value
    slack = n - k - 2 * (d - 1)
    a, b = singleton_sets(n, d)
    pair = check_two_disjoint(code, a, b)
    detail: dict[str, Any] = {"n": n, "k": k, "d": d, "slack": slack}
    if n < 2 * (d - 1):
        detail["degenerate"] = True
    status = PASS if slack >= 0 and pair.status == PASS else FAIL
    return AnalysisReport(
        n, k, dist, slack, {"two_disjoint": pair, "singleton": Verdict("singleton", status, detail)}
    )


def iter_subsets(n: int) -> Iterator[QubitSet]:
    for mask in range(1 << n):
        yield QubitSet.from_zero_based(n, (i for i in range(n) if mask >> i & 1))


def iter_lemma_checks(
    code: StabilizerCode,
    max_weight: int | None = None,
    budget: int | None = None,
    exhaustive_cap: int = 8,
    random_sets: int = 64,
    seed: int = 0,
) -> Iterator[Verdict]:
    """Run every lemma check on one code, in proof order, yielding as they finish.

    The cleaning identity is checked on all subsets when n <= ``exhaustive_cap``
    and on ``random_sets`` seeded random subsets otherwise.  The distance search
    runs after the first verdict, so a :class:`ResourceLimit` leaves that one
    already delivered.
    """
    n, k = code.n, code.k
    ldim = logical_space_dim(code)
    yield Verdict(
        "logical_dim",
        PASS if ldim == 2 * k and code.stabilizer <= code.normalizer else FAIL,
        {"dim_perp": code.normalizer.dim, "dim_S": code.stabilizer.dim, "2k": 2 * k},
    )
    dist = distance(code, max_weight=max_weight, budget=budget)
    yield check_distance_correctability(code, dist, seed=seed)

    if n <= exhaustive_cap:
        regions: Iterable[QubitSet] = iter_subsets(n)
    else:
        rng = random.Random(seed)
        regions = (
            QubitSet.from_zero_based(n, (i for i in range(n) if rng.random() < 0.5))
            for _ in range(random_sets)
        )
    checked = 0
    failure = None
    for m in regions:
        checked += 1
        v = check_cleaning_identity(code, m)
        if not v.passed:
            failure = v
            break
    yield failure or Verdict("cleaning_identity", PASS, {"regions": checked, "2k": 2 * k})

    report = check_singleton(code, dist=dist)
    if dist.no_logicals:
        empty = QubitSet(n)
        yield check_two_disjoint(code, empty, empty)
    else:
        yield report.verdicts["two_disjoint"]
    yield report.verdicts["singleton"]


def lemma_suite(code: StabilizerCode, **kwargs: Any) -> list[Verdict]:
    return list(iter_lemma_checks(code, **kwargs))


def supportable_on(code: StabilizerCode, logical: PauliVector, m: QubitSet) -> bool:
    """Whether the class of ``logical`` has a representative inside V_M."""
    try:
        clean(code, logical, m.complement())
    except NotCleanable:
        return False
    return True
