"""Expression language: lexer, parser, pretty printer and evaluator."""

import numpy as np
import pytest

from extensor.algebra import Multiform, Multivector
from extensor.expressions import (
    KindError,
    ParseError,
    evaluate,
    format_value,
    parse_expression,
    pretty_print,
)
from extensor.metric import MetricExtensor

DIAG23 = MetricExtensor(2, np.diag([2.0, 3.0]))
G3 = MetricExtensor(3, [[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 2.0]])

# pretty_print must reparse to a structurally identical tree for all of these
ROUND_TRIP_CORPUS = [
    "1",
    "2.5",
    "0.125",
    "e1",
    "e2",
    "d1",
    "d12",
    "e123",
    "I",
    "J",
    "-e1",
    "--e1",
    "-(e1 + e2)",
    "e1 + e2",
    "e1 - e2",
    "e1 + e2 + e3",
    "e1 - e2 - e3",
    "2 * e1",
    "e1 * 2",
    "2 * 3 * e1",
    "e1 ^ e2",
    "e1 ^ e2 ^ e3",
    "d1 ^ d2",
    "e1 . e1",
    "e1 . e2 . e3",
    "d1 . d2",
    "d1 _| e12",
    "e12 |_ d2",
    "e1 _| e12",
    "d1 |_ d12",
    "e1 _| e2 _| e3",
    "rev(e12)",
    "inv(e12)",
    "g(e1)",
    "g(e1 ^ e2)",
    "ginv(d1)",
    "ginv(d1 ^ d2)",
    "pair(d1, e1)",
    "pair(e1, d1)",
    "pair(J, I)",
    "pair(d1 ^ d2, e1 ^ e2)",
    "(e1 + e2) ^ e3",
    "(e1 ^ e2) . (e1 ^ e2)",
    "2 * (e1 + e2)",
    "1 + 2 * 3",
    "rev(g(e1 ^ e2))",
    "ginv(rev(d12))",
    "g(e1) _| d12",
    "e1 ^ e2 + e2 ^ e3",
    "pair(g(e1), e2)",
    "e1 . e1 + e2 . e2",
    "-pair(d1, e1)",
    "I . I",
    "J . J",
    "2.5 * e12 - 0.5 * e12",
]


@pytest.mark.parametrize("text", ROUND_TRIP_CORPUS)
def test_parse_pretty_print_round_trip(text):
    tree = parse_expression(text)
    assert parse_expression(pretty_print(tree)) == tree


def test_unicode_aliases():
    assert parse_expression("e1 ∧ e2") == parse_expression("e1 ^ e2")
    assert parse_expression("d1 ⌟ e12") == parse_expression("d1 _| e12")
    assert parse_expression("e12 ⌞ d2") == parse_expression("e12 |_ d2")
    assert parse_expression("e1 · e1") == parse_expression("e1 . e1")


def test_precedence_shape():
    # + binds loosest, then *, then ., then contractions, then ^
    tree = parse_expression("e1 . e2 ^ e3")
    rendered = pretty_print(tree)
    assert rendered == "(e1 . (e2 ^ e3))"
    tree = parse_expression("2 * e1 . e1")
    assert pretty_print(tree) == "(2.0 * (e1 . e1))"
    tree = parse_expression("d1 _| e1 ^ e2")
    assert pretty_print(tree) == "(d1 _| (e1 ^ e2))"


@pytest.mark.parametrize(
    "text",
    ["e1 +", "(e1", "pair(e1)", "pair(e1 e2)", "e1 $ e2", "^ e1", "pair(, e1)"],
)
def test_parse_errors_carry_positions(text):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.position >= 0


def test_eval_worked_examples():
    assert evaluate(parse_expression("e1 . e1"), DIAG23) == pytest.approx(2.0)
    assert evaluate(parse_expression("pair(J, I)"), DIAG23) == pytest.approx(1.0)
    out = evaluate(parse_expression("ginv(d1)"), DIAG23)
    assert out.allclose(0.5 * Multivector.basis_blade(2, 1), rtol=1e-12)


def test_eval_duality_vs_metric_contraction():
    # mixed kinds: metric-free duality contraction
    out = evaluate(parse_expression("d1 _| e12"), DIAG23)
    assert isinstance(out, Multivector)
    assert out.allclose(Multivector.basis_blade(2, 2))
    # same kind: the metric contracted product
    out = evaluate(parse_expression("e1 _| e12"), DIAG23)
    assert out.allclose(2.0 * Multivector.basis_blade(2, 2), rtol=1e-12)


def test_eval_pseudoscalars():
    assert evaluate(parse_expression("I . I"), DIAG23) == pytest.approx(6.0)
    assert evaluate(parse_expression("J . J"), DIAG23) == pytest.approx(1.0 / 6.0)


def test_eval_scalar_promotion():
    out = evaluate(parse_expression("2 ^ e1"), G3)
    assert out.allclose(2.0 * Multivector.basis_blade(3, 1))
    out = evaluate(parse_expression("1 + 2"), G3)
    assert out == pytest.approx(3.0)


def test_eval_kind_errors():
    for text in [
        "e1 ^ d1",
        "e1 + d1",
        "e1 . d1",
        "e1 * e2",
        "pair(e1, e2)",
        "pair(d1, d2)",
        "g(d1)",
        "ginv(e1)",
    ]:
        with pytest.raises(KindError):
            evaluate(parse_expression(text), DIAG23)


def test_eval_range_errors():
    with pytest.raises(KindError):
        evaluate(parse_expression("e3"), DIAG23)


def test_rev_inv_semantics():
    out = evaluate(parse_expression("rev(e12)"), G3)
    assert out.allclose(-1.0 * Multivector.basis_blade(3, 1, 2))
    out = evaluate(parse_expression("inv(e1)"), G3)
    assert out.allclose(-1.0 * Multivector.basis_blade(3, 1))


def test_format_value_stability():
    assert format_value(2.0) == "2"
    assert format_value(Multivector.zero(2)) == "0"
    x = 0.5 * Multivector.basis_blade(2, 1) + 2.0 * Multivector.basis_blade(2, 1, 2)
    assert format_value(x) == "0.5*e1 + 2*e12"
    phi = Multiform.scalar(2, 1.5)
    assert format_value(phi) == "1.5"
