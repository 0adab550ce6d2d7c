import random
import re

import pytest

from conftest import FIXTURES
from qsingleton.code_generation import FIXTURE_NAMES, GeneratorConfig, catalog, fixture_text, random_code
from qsingleton.code_io import (
    format_vector,
    parse_code,
    parse_qubit_set,
    parse_vector,
    serialize_code,
)
from qsingleton.errors import (
    CodeFormatError,
    CodeSyntaxError,
    IndexOutOfRange,
    LetterRequiresP2,
    NotIsotropic,
    WrongLength,
)
from qsingleton.stabilizer_core import distance
from qsingleton.symplectic_space import PauliVector


def test_parse_pauli_lines():
    code = parse_code("p 2\nn 4\nP XXXX\nP ZZZZ\n")
    assert code == catalog("four_two_two")


def test_parse_header_only():
    code = parse_code("# nothing\n\np 2\nn 1\n")
    assert code.k == 1 and code.stabilizer.dim == 0


def test_parse_integer_row_f3():
    code = parse_code("p 3\nn 2\ng 1 0 0 2\n")
    (gen,) = code.generators
    assert code.p == 3 and gen.x == (1, 0) and gen.z == (0, 2)
    assert parse_code("p 3\nn 2\ng 2 0 0 1\n") == code  # 2 * (1, 0, 0, 2) = (2, 0, 0, 1)


def test_serialize_examples():
    text = serialize_code(catalog("four_two_two"))
    assert len([ln for ln in text.splitlines() if ln.startswith("g ")]) == 2
    assert "# P XXXX" in text and text.endswith("\n")
    free = serialize_code(catalog("free(4)"))
    assert free == "p 2\nn 4\n"


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_headers_record_parameters(name):
    text = fixture_text(name)
    m = re.search(r"n=(\d+) k=(\d+) d=(\d+)", text)
    code = parse_code(text)
    assert (code.n, code.k, distance(code).value) == tuple(int(x) for x in m.groups())


@pytest.mark.parametrize("name", FIXTURES)
def test_round_trip_fixtures(name):
    code = catalog(name)
    text = serialize_code(code)
    assert parse_code(text) == code
    assert serialize_code(parse_code(text)) == text


def test_round_trip_random():
    rng = random.Random(7)
    for i in range(500):
        p = rng.choice([2, 3, 5, 7])
        n = rng.randint(0, 8)
        code = random_code(GeneratorConfig(p, n, rng.randint(0, n), seed=i))
        text = serialize_code(code, ["random"])
        assert parse_code(text) == code
        assert serialize_code(parse_code(text), ["random"]) == text


@pytest.mark.parametrize(
    "text,error,line",
    [
        ("n 2\np 2\n", CodeSyntaxError, 1),
        ("p 4\nn 2\n", CodeSyntaxError, 1),
        ("p 2\n", CodeSyntaxError, None),
        ("p 2\nn 2\nq XX\n", CodeSyntaxError, 3),
        ("p 2\nn 2\ng 1 0 0\n", WrongLength, 3),
        ("p 2\nn 2\nP XXX\n", WrongLength, 3),
        ("p 2\nn 2\nP XQ\n", CodeSyntaxError, 3),
        ("p 3\nn 2\nP XX\n", LetterRequiresP2, 3),
        ("p 3\nn 1\ng 3 0\n", CodeSyntaxError, 3),
        ("p 2 3\nn 1\n", CodeSyntaxError, 1),
        ("p 2\nn x\n", CodeSyntaxError, 2),
    ],
)
def test_parse_errors(text, error, line):
    with pytest.raises(error) as info:
        parse_code(text)
    if line is not None:
        assert info.value.line == line


def test_parse_error_column():
    with pytest.raises(CodeSyntaxError) as info:
        parse_code("p 2\nn 2\nP XQ\n")
    assert (info.value.line, info.value.column) == (3, 4)


def test_not_isotropic_reports_lines():
    with pytest.raises(NotIsotropic) as info:
        parse_code("p 2\nn 1\n# comment\nP X\n\nP Z\n")
    assert info.value.lines == (4, 6)


def test_single_character_mutations_give_structured_errors():
    alphabet = "pngP XYZI0123456789#\n-a"
    rng = random.Random(3)
    sources = [fixture_text(name) for name in FIXTURE_NAMES] + [serialize_code(catalog("steane"))]
    for _ in range(3000):
        text = rng.choice(sources)
        i = rng.randrange(len(text))
        op = rng.randrange(3)
        ch = rng.choice(alphabet)
        if op == 0:
            mutated = text[:i] + ch + text[i + 1:]
        elif op == 1:
            mutated = text[:i] + text[i + 1:]
        else:
            mutated = text[:i] + ch + text[i:]
        try:
            parse_code(mutated)
        except (CodeFormatError, NotIsotropic):
            pass


def test_parse_qubit_set_examples():
    assert parse_qubit_set("1,3,5", 5).members == (1, 3, 5)
    assert parse_qubit_set("2-4", 5).members == (2, 3, 4)
    assert parse_qubit_set("empty", 5).members == ()
    assert parse_qubit_set("3, 1-2, 3", 5).members == (1, 2, 3)
    with pytest.raises(IndexOutOfRange):
        parse_qubit_set("6", 5)
    with pytest.raises(CodeSyntaxError):
        parse_qubit_set("1;2", 5)
    with pytest.raises(CodeSyntaxError):
        parse_qubit_set("4-2", 5)


def test_vectors():
    v = parse_vector("XZYI", 2, 4)
    assert v == PauliVector.from_pauli("XZYI")
    assert parse_vector("1 0 1 0 0 1 1 0", 2, 4) == v
    assert parse_vector("g 1 0 1 0 0 1 1 0", 2, 4) == v
    assert format_vector(v) == "1 0 1 0 0 1 1 0 (XZYI)"
    assert format_vector(parse_vector("1,2,0,1", 3, 2)) == "1 2 0 1"
    with pytest.raises(LetterRequiresP2):
        parse_vector("XZ", 3, 2)
    with pytest.raises(WrongLength):
        parse_vector("1 0 1", 2, 2)
