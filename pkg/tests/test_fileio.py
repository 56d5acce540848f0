from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabbing.balls import Graph, build_ball_instance
from stabbing.errors import ParseError
from stabbing.fileio import (
    parse_graph,
    parse_instance,
    parse_solution,
    serialize_graph,
    serialize_instance,
    serialize_solution,
)
from stabbing.generators import random_digraph, random_rectangle_instance, random_square_instance
from stabbing.geometry import AXIS_DIRECTIONS, Direction, Instance2D, Line, Solution, polygon, square
from stabbing.squares import build_s
from stabbing.svg import render_svg

MINIMAL = "stab2d 1\nk 0\nc 1\ndirections 1\n1 0\nobjects 0\n"


def test_minimal_and_square():
    empty = parse_instance(MINIMAL)
    assert empty.objects == () and empty.k == 0
    text = "stab2d 1\nk 1\nc 1\ndirections 2\n1 0\n0 1\nobjects 1\npoly closed 4 0 0 1 0 1 1 0 1\n"
    one = parse_instance(text)
    assert one.objects == (square(0, 0, 1),)
    assert serialize_instance(one) == text


def test_comments_blank_lines_and_normalisation():
    text = "# header next\nstab2d 1\n\nk 2 # budget\nc 1\ndirections 1\n2/4 0\nobjects 1\npoly open 3 0 0 2/2 0 0 3/6\n"
    inst = parse_instance(text)
    assert inst.directions == (Direction.from_vector(1, 0),)
    assert inst.objects[0] == polygon([(0, 0), (1, 0), (0, F(1, 2))], closed=False)
    assert "1/2 0" in serialize_instance(inst)


@pytest.mark.parametrize(
    "text,line,col,fragment",
    [
        ("stab3d 1\n", 1, 1, "unknown header"),
        ("stab2d 1\nk two\n", 2, 3, "integer"),
        ("stab2d 1\nk 1\nc 1\ndirections 2\n1 0\n2 0\nobjects 0\n", 6, 1, "duplicate direction"),
        ("stab2d 1\nk 1\nc 1\ndirections 1\n1 0\nobjects 2\npoly closed 3 0 0 1 0 0 1\n", 8, 1, "end of input"),
        ("stab2d 1\nk 1\nc 1\ndirections 1\n1 0\nobjects 1\npoly closed 3 0 0 1 0 0\n", 7, 13, "vertices"),
        ("stab2d 1\nk 1\nc 1\ndirections 1\n1 0\nobjects 1\npoly closed 3 0 0 1/0 0 0 1\n", 7, 19, "rational"),
        ("stab2d 1\nk 1\nc 1\ndirections 1\n1 0\nobjects 1\npoly closed 3 0 0 1 1 2 2\n", 7, 1, "zero area"),
        ("stab2d 1\nk 1\nc 1\ndirections 1\n1 0\nobjects 1\npoly closed 4 0 0 2 0 1 1 0 2\n", 7, 1, "convex"),
        ("stab2d 1\nk 1\nc 1\ndirections 1\n1 0\nobjects 0\nextra\n", 7, 1, "trailing"),
        ("stab2d 1\nk 1\nc 1\ndirections 1\n0 0\nobjects 0\n", 5, 1, "nonzero"),
    ],
)
def test_parse_errors_carry_position(text, line, col, fragment):
    with pytest.raises(ParseError, match=fragment) as err:
        parse_instance(text)
    assert (err.value.line, err.value.column) == (line, col)


@pytest.mark.parametrize("seed", range(100))
def test_round_trip_random(seed):
    make = random_square_instance if seed % 2 else random_rectangle_instance
    inst = make(seed)
    text = serialize_instance(inst)
    back = parse_instance(text)
    assert back == inst
    assert serialize_instance(back) == text


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.fractions(-50, 50, max_denominator=97),
            st.fractions(-50, 50, max_denominator=97),
            st.fractions(F(1, 97), 5, max_denominator=97),
        ),
        max_size=6,
    ),
    st.integers(0, 5),
)
def test_round_trip_exact_rationals(boxes, k):
    inst = Instance2D(tuple(square(x, y, s) for x, y, s in boxes), AXIS_DIRECTIONS, k, 3)
    assert parse_instance(serialize_instance(inst)) == inst


def test_construction_round_trip():
    inst, _ = build_s(random_digraph(random.Random(3), 3), 2)
    assert parse_instance(serialize_instance(inst)) == inst


def test_ball_round_trip_is_bit_exact():
    inst = build_ball_instance(Graph(4, frozenset({(1, 2), (2, 3)})), 2)
    back = parse_instance(serialize_instance(inst))
    assert back == inst
    assert serialize_instance(back) == serialize_instance(inst)


def test_ball_parse_errors():
    head = "stabballs 1\ndim 4\nn 4\nk 2\nradius 0.5\nballs 1\n"
    with pytest.raises(ParseError, match="tag"):
        parse_instance(head + "1 0 0 0 scaffold:x:1\n")
    with pytest.raises(ParseError, match="coordinates"):
        parse_instance(head + "1 0 0 scaffold:1:1\n")
    with pytest.raises(ParseError, match="2k"):
        parse_instance("stabballs 1\ndim 5\nn 4\nk 2\n")


def test_solution_round_trip():
    sol = Solution((Line.horizontal(F(1, 2)), Line.vertical(3)))
    assert parse_solution(serialize_solution(sol)) == sol
    assert parse_solution(serialize_solution(None)) is None
    with pytest.raises(ParseError):
        parse_solution("MAYBE\n")


def test_graph_round_trip():
    G = random_digraph(random.Random(0), 4)
    assert parse_graph(serialize_graph(G)) == G
    H = Graph(5, frozenset({(1, 2), (4, 5)}))
    assert parse_graph(serialize_graph(H)) == H
    with pytest.raises(ParseError, match="duplicate"):
        parse_graph("graph 1\nn 4\nedges 2\n1 2\n2 1\n")


def test_svg_examples():
    empty = render_svg(Instance2D((), AXIS_DIRECTIONS, 0))
    assert empty.startswith("<?xml") and "<polygon" not in empty and empty.rstrip().endswith("</svg>")
    inst = Instance2D((square(0, 0, 1),), AXIS_DIRECTIONS, 1)
    pic = render_svg(inst, Solution((Line.horizontal(F(1, 2)),)))
    assert pic.count("<polygon") == 1 and pic.count("<line") == 1
    assert pic == render_svg(inst, Solution((Line.horizontal(F(1, 2)),)))
    slanted = render_svg(inst, Solution((Line(Direction.from_vector(1, 1), 0),)))
    assert slanted.count("<line") == 1
