import json

import pytest

from klblocks import (
    GradedMatrix,
    LaurentPoly,
    decomposition_matrix,
    graded_cartan_matrix,
    make_block,
    matrix_from_csv,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    matrix_to_table,
    parse_word_label,
    standard_block,
    word_label,
)

ONE = LaurentPoly.one()


def regular_d(a2, hecke_a2):
    return decomposition_matrix(make_block(a2, (-2, -2), (-2, -2)), hecke_a2)


def test_word_labels(a2):
    assert word_label(a2.identity) == "e"
    assert word_label(a2.word_elem((1, 2, 1))) == "1.2.1"
    assert parse_word_label("e") == ()
    assert parse_word_label("") == ()
    assert parse_word_label("1.2") == (1, 2)


def test_single_entry_json_shape(a2):
    m = GradedMatrix((a2.identity,), (a2.identity,), ((ONE,),))
    payload = json.loads(matrix_to_json(m))
    assert payload == {
        "rows": [[]],
        "cols": [[]],
        "entries": [[[{"exp": 0, "coef": 1}]]],
    }


def test_empty_matrix_roundtrip(a2):
    m = GradedMatrix((), (), ())
    payload = json.loads(matrix_to_json(m))
    assert payload == {"rows": [], "cols": [], "entries": []}
    assert matrix_from_json(matrix_to_json(m), a2) == m
    assert matrix_from_csv(matrix_to_csv(m), a2) == m


def test_json_roundtrip(a2, hecke_a2):
    d = regular_d(a2, hecke_a2)
    assert matrix_from_json(matrix_to_json(d), a2) == d


def test_csv_roundtrip(a2, hecke_a2):
    d = regular_d(a2, hecke_a2)
    text = matrix_to_csv(d)
    assert text.splitlines()[0] == "w,e,1,2,1.2,2.1,1.2.1"
    assert matrix_from_csv(text, a2) == d
    c = graded_cartan_matrix(standard_block(a2, (), {1}), hecke_a2)
    assert matrix_from_csv(matrix_to_csv(c), a2) == c


def test_negative_exponents_roundtrip(a2):
    m = GradedMatrix(
        (a2.identity,), (a2.identity,),
        ((LaurentPoly({-2: 3, 1: -1}),),),
    )
    assert matrix_from_json(matrix_to_json(m), a2) == m
    assert matrix_from_csv(matrix_to_csv(m), a2) == m


def test_serialization_deterministic(a2, hecke_a2):
    d = regular_d(a2, hecke_a2)
    assert matrix_to_json(d) == matrix_to_json(d)
    assert matrix_to_csv(d) == matrix_to_csv(d)
    rebuilt = matrix_from_json(matrix_to_json(d), a2)
    assert matrix_to_json(rebuilt) == matrix_to_json(d)


def test_table_rendering(a2, hecke_a2):
    d = regular_d(a2, hecke_a2)
    table = matrix_to_table(d)
    lines = table.splitlines()
    assert lines[0].split() == ["w", "e", "1", "2", "1.2", "2.1", "1.2.1"]
    assert len(lines) == 7


def test_csv_rejects_garbage(a2):
    with pytest.raises(ValueError):
        matrix_from_csv("nonsense", a2)
    with pytest.raises(ValueError):
        matrix_from_csv("w,e\ne,1,2", a2)
