"""Problem descriptions: alphabets, atom tables, JSON round trips."""

import json
from pathlib import Path

import pytest

from rexconf.alphabet import EOL, Alphabet
from rexconf.bdd import BooleanVar
from rexconf.errors import InvalidProblem, LetterOutsideAlphabet, UnknownVariable
from rexconf.problem import load_problem, make_problem, problem_from_json

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def test_alphabet_orders_and_indexes_letters():
    a = Alphabet(("b", "a", "c"))
    assert a.effective == ("b", "a", "c")
    assert a.n_effective == 3
    assert [a.index(ch) for ch in "bac"] == [0, 1, 2]
    assert "a" in a and "z" not in a
    assert a.word_indices("cab") == [2, 1, 0]
    with pytest.raises(LetterOutsideAlphabet):
        a.index("z")


def test_alphabet_with_eol_appends_the_sentinel_last():
    a = Alphabet(("a", "b"), eol=True)
    assert a.effective == ("a", "b", EOL)
    assert a.n_effective == 3
    assert a.index(EOL) == 2
    assert EOL in a
    assert EOL not in Alphabet(("a", "b"))


def test_alphabet_validation():
    with pytest.raises(InvalidProblem):
        Alphabet(())
    with pytest.raises(InvalidProblem):
        Alphabet(("a", "a"))
    with pytest.raises(InvalidProblem):
        Alphabet(("ab",))
    with pytest.raises(InvalidProblem):
        Alphabet(("a", EOL))


def test_atoms_are_numbered_per_variable_in_first_occurrence_order():
    problem = make_problem(
        ["x1", "x2"],
        Alphabet(("a", "b", "c", "d")),
        [
            'match(x2, "abc") || match(x1, "a")',
            'match(x2, "abd*") && match(x2, "abc")',
        ],
    )
    assert problem.atoms == (("a",), ("abc", "abd*"))
    assert problem.k(0) == 1 and problem.k(1) == 2
    assert problem.base_ordinal(0) == 0 and problem.base_ordinal(1) == 1
    assert problem.n_bool_vars == 3
    assert problem.atom_ordinals() == {
        ("x1", "a"): 0,
        ("x2", "abc"): 1,
        ("x2", "abd*"): 2,
    }
    assert problem.boolean_vars() == [
        BooleanVar(0, 0, 0),
        BooleanVar(1, 0, 1),
        BooleanVar(1, 1, 2),
    ]


def test_duplicate_atoms_collapse():
    problem = make_problem(
        ["x"],
        Alphabet(("a",)),
        ['match(x, "a") || match(x, "a")', 'match(x, "a")'],
    )
    assert problem.atoms == (("a",),)
    assert problem.n_bool_vars == 1


def test_variables_without_atoms_get_empty_blocks():
    problem = make_problem(
        ["x", "y"], Alphabet(("a",)), ['match(y, "a")']
    )
    assert problem.atoms == ((), ("a",))
    assert problem.k(0) == 0
    assert problem.base_ordinal(1) == 0


def test_var_index():
    problem = make_problem(["x", "y"], Alphabet(("a",)), [])
    assert problem.var_index("y") == 1
    with pytest.raises(UnknownVariable) as err:
        problem.var_index("z")
    assert err.value.name == "z"


def test_problem_validation():
    alphabet = Alphabet(("a",))
    with pytest.raises(InvalidProblem):
        make_problem([], alphabet, [])
    with pytest.raises(InvalidProblem):
        make_problem(["x", "x"], alphabet, [])
    with pytest.raises(InvalidProblem):
        make_problem(["x"], alphabet, ['match(nope, "a")'])


def test_from_json_validation():
    good = {
        "alphabet": ["a", "b"],
        "eol": False,
        "variables": ["x"],
        "constraints": ['match(x, "ab")'],
    }
    problem = problem_from_json(good)
    assert problem.variables == ("x",)
    assert not problem.alphabet.eol

    # eol defaults to disabled.
    no_eol = dict(good)
    del no_eol["eol"]
    assert not problem_from_json(no_eol).alphabet.eol

    bad_cases = [
        "not a dict",
        {},
        {**good, "alphabet": "ab"},
        {**good, "alphabet": ["a", 1]},
        {**good, "eol": "yes"},
        {**good, "variables": "x"},
        {**good, "constraints": [42]},
    ]
    for data in bad_cases:
        with pytest.raises(InvalidProblem):
            problem_from_json(data)


def test_json_round_trip():
    problem = make_problem(
        ["x1", "x2"],
        Alphabet(("a", "b"), eol=True),
        ['match(x1, "a(()|$)") -> match(x2, "b")'],
    )
    again = problem_from_json(problem.to_json())
    assert again == problem
    assert again.to_json() == problem.to_json()


def test_stable_hash_tracks_content():
    base = {
        "alphabet": ["a", "b"],
        "eol": False,
        "variables": ["x"],
        "constraints": ['match(x, "a")'],
    }
    h1 = problem_from_json(base).stable_hash()
    h2 = problem_from_json(json.loads(json.dumps(base))).stable_hash()
    assert h1 == h2
    assert len(h1) == 16 and all(c in "0123456789abcdef" for c in h1)
    other = dict(base, constraints=['match(x, "b")'])
    assert problem_from_json(other).stable_hash() != h1


def test_load_problem(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(
        json.dumps(
            {
                "alphabet": ["a"],
                "eol": False,
                "variables": ["x"],
                "constraints": [],
            }
        ),
        encoding="utf-8",
    )
    assert load_problem(str(path)).variables == ("x",)

    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(InvalidProblem):
        load_problem(str(broken))


def test_fixture_files_load():
    for name in ("worked_example.json", "big_dfa_example.json", "intro_form.json"):
        problem = load_problem(str(FIXTURES / name))
        assert problem.n_vars >= 2


def test_constraint_patterns_are_validated_against_the_alphabet():
    with pytest.raises(LetterOutsideAlphabet):
        make_problem(["x"], Alphabet(("a",)), ['match(x, "b")'])
    with pytest.raises(LetterOutsideAlphabet):
        make_problem(["x"], Alphabet(("a",)), ['match(x, "a$")'])
