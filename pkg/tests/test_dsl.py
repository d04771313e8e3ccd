import pytest
from hypothesis import given
from hypothesis import strategies as st

from morphic.core import render, same_word
from morphic.corpus import list_entries
from morphic.dsl import canonical, document_from_spec, load_spec, parse_spec, print_spec, to_spec
from morphic.errors import ParseError

from .conftest import morphisms

FIB = """\
# Fibonacci
alphabet: 0 1
rule 0 -> 0 1
rule 1 -> 0
seed: 0
"""


def test_fibonacci():
    doc = parse_spec(FIB)
    assert doc.alphabet == ("0", "1")
    assert doc.rules == {"0": ("0", "1"), "1": ("0",)}
    assert render(to_spec(doc).materialize(8)) == "01001010"


def test_erasing_rule_and_values():
    doc = parse_spec("alphabet: a b\nrule a -> a b a\nrule b ->\nseed: a\nvalues: a=3 b=-1\n")
    assert doc.rules["b"] == ()
    assert doc.values == {"a": 3, "b": -1}


def test_coding():
    text = "alphabet: a b c d\nrule a -> a b\nrule b -> a c\nrule c -> d b\nrule d -> d c\nseed: a\ncoding: a->0 b->0 c->1 d->1\n"
    assert render(to_spec(parse_spec(text)).materialize(16)) == "0001001000011101"


def test_pipeline():
    text = FIB + "patch: 2\nshift: 1\n"
    assert render(to_spec(parse_spec(text)).materialize(6)) == "100101"


def test_generator():
    doc = parse_spec("generator: base-concat k=2\n")
    assert render(to_spec(doc).materialize(17)) == "11011100101110111"


@pytest.mark.parametrize(
    "text, kind, line, column",
    [
        ("alphabet: 0 1\nrule 0 -> 0 2\nrule 1 -> 0\nseed: 0\n", "undeclared letter", 2, 13),
        ("alphabet: 0 1\nrule 0 -> 0 1\nrule 0 -> 1\nrule 1 -> 0\nseed: 0\n", "duplicate rule", 3, 1),
        ("alphabet: 0 1\nrule 0 -> 0 1\nrule 1 -> 0\n", "missing seed", 3, 1),
        ("alphabet: 0 1\nrule 0 -> 0 1\nseed: 0\n", "missing rule", 1, 13),
        ("alphabet: 0 1\nrul 0 -> 1\n", "syntax", 2, 1),
    ],
)
def test_diagnostics(text, kind, line, column):
    with pytest.raises(ParseError) as exc:
        parse_spec(text)
    assert exc.value.kind == kind
    assert exc.value.line == line
    assert exc.value.column == column
    assert str(exc.value).startswith(f"line {line}, column {column}: {kind}")


def test_seed_must_be_declared():
    with pytest.raises(ParseError) as exc:
        parse_spec("alphabet: 0 1\nrule 0 -> 0 1\nrule 1 -> 0\nseed: 7\n")
    assert exc.value.kind == "undeclared letter" and exc.value.line == 4


def test_round_trip():
    doc = parse_spec(FIB)
    assert parse_spec(print_spec(doc)) == doc
    assert canonical(print_spec(doc)) == print_spec(doc)
    assert canonical(FIB) == print_spec(doc)


@given(morphisms(max_letters=4, max_image=4))
def test_round_trip_random(m):
    lines = [f"alphabet: {' '.join(m.source.letters)}"]
    for a in m.source.letters:
        lines.append(f"rule {a} -> {' '.join(m.source.letters[i] for i in m.images[m.source.id(a)].tolist())}")
    lines.append(f"seed: {m.source.letters[0]}")
    doc = parse_spec("\n".join(lines))
    assert doc.morphism == m
    assert parse_spec(print_spec(doc)) == doc


@pytest.mark.parametrize("entry", list_entries(), ids=lambda e: e.key)
def test_corpus_serializes(entry):
    specs = [entry.spec, *entry.alternatives.values()]
    for spec in specs:
        text = print_spec(document_from_spec(spec))
        back = to_spec(parse_spec(text))
        n = 2000
        assert same_word(back.materialize(n), spec.materialize(n))


def test_load_spec(tmp_path):
    p = tmp_path / "fib.spec"
    p.write_text(FIB, encoding="utf-8")
    assert load_spec(str(p)) == parse_spec(FIB)
