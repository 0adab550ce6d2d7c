"""Regenerate src/qsingleton/fixtures/*.code.

Each file's header records (n, k, d) as found by the brute-force oracle in
tests/oracles.py (full scan of F_2^{2n} for n <= 7, weight <= 3 scan for Shor),
and the script refuses to write a file whose oracle values disagree with the
library.

    python scripts/make_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402

from qsingleton.stabilizer_core import distance, make_code  # noqa: E402
from qsingleton.symplectic_space import PauliVector  # noqa: E402

OUT = ROOT / "src" / "qsingleton" / "fixtures"

CODES = {
    "four_two_two": ("[[4,2,2]] error-detecting code", oracles.FOUR_TWO_TWO, None),
    "five_one_three": ("[[5,1,3]] cyclic five-qubit code", oracles.FIVE_ONE_THREE, None),
    "steane": ("Steane [[7,1,3]] code, CSS from the Hamming [7,4] checks", oracles.STEANE, None),
    "shor": ("Shor [[9,1,3]] code", oracles.SHOR, 3),
    "free_3": ("free code on 3 qubits, empty stabilizer", [], None),
    "trivial_k0_3": ("k = 0 code: Z on every qubit", ["ZII", "IZI", "IIZ"], None),
}
NQ = {"free_3": 3}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (title, words, max_weight) in CODES.items():
        n = len(words[0]) if words else NQ[name]
        gens = [oracles.pauli(w) for w in words]
        k = n - oracles.brute_dim(gens, 2, 2 * n)
        d = oracles.brute_distance(gens, 2, n, max_weight)
        code = make_code(2, n, [PauliVector.from_pauli(w) for w in words])
        got = distance(code)
        assert code.k == k and got.value == d, (name, code.k, k, got, d)
        how = "all 4^%d vectors" % n if max_weight is None else f"all vectors of weight <= {max_weight}"
        d_text = "none (k = 0)" if d is None else str(d)
        lines = [
            f"# {title}",
            f"# n={n} k={k} d={d_text}  (brute-force oracle over {how})",
            "p 2",
            f"n {n}",
        ]
        lines += [f"P {w}" for w in words]
        (OUT / f"{name}.code").write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"{name}: n={n} k={k} d={d_text}")


if __name__ == "__main__":
    main()
