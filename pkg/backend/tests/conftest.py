"""Shared fixtures for the revolve test suite."""

import math
import random

import pytest

from services.curve import from_graph, make_curve
from services.expression import Binary, Constant, Unary, Variable
from services.geometry_service import make_line

PARABOLA = "t^2-3*t+12"


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def unit_circle():
    return make_curve("cos(t)", "sin(t)", 0.0, 2.0 * math.pi)


@pytest.fixture
def upper_half_circle():
    return make_curve("cos(t)", "sin(t)", 0.0, math.pi)


@pytest.fixture
def diagonal_segment():
    """x = t, y = t on [0, 1]: a cone about the x-axis."""
    return make_curve("t", "t", 0.0, 1.0)


@pytest.fixture
def parabola():
    return from_graph(PARABOLA, 0.0, 3.0)


@pytest.fixture
def x_axis():
    return make_line(0.0, 1.0, 0.0)


@pytest.fixture
def y_axis():
    return make_line(1.0, 0.0, 0.0)


@pytest.fixture
def torus_line():
    """3x + 4y = 25 sits R = 5 away from the origin."""
    return make_line(3.0, 4.0, 25.0)


def random_bounded_expression(rng: random.Random, depth: int):
    """
    Random abs-free expression whose every node stays of order one on [-1, 1].

    Products only combine bounded functions and sums are halved, so finite
    differences with h = 1e-6 stay accurate.
    """
    if depth == 0 or rng.random() < 0.2:
        return Variable() if rng.random() < 0.6 else Constant(round(rng.uniform(-1.0, 1.0), 3))

    def child():
        return random_bounded_expression(rng, depth - 1)

    def bounded():
        return Unary(rng.choice(["sin", "cos", "atan"]), child())

    choice = rng.randrange(9)
    if choice == 0:
        return Binary("mul", Constant(0.5), Binary("add", child(), child()))
    if choice == 1:
        return Binary("mul", Constant(0.5), Binary("sub", child(), child()))
    if choice == 2:
        return Binary("mul", bounded(), bounded())
    if choice == 3:
        return bounded()
    if choice == 4:
        return Unary("exp", Unary("sin", child()))
    if choice == 5:
        return Binary("div", child(), Binary("add", Constant(2.5), Unary("cos", child())))
    if choice == 6:
        return Binary("pow", bounded(), Constant(2.0))
    if choice == 7:
        return Unary("neg", child())
    return Unary("sqrt", Binary("add", Constant(2.0), Unary("sin", child())))


def random_rewritable_expression(rng: random.Random, depth: int):
    """Random expression rich in 0, 1 and constant subtrees for the simplifier."""
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.5:
            return Variable()
        return Constant(rng.choice([0.0, 1.0, 2.0, -1.0, 0.5, round(rng.uniform(-3.0, 3.0), 2)]))
    op = rng.choice(["add", "sub", "mul", "div", "pow", "neg", "sin", "cos", "atan", "exp"])
    if op == "pow":
        return Binary("pow", random_rewritable_expression(rng, depth - 1), Constant(rng.choice([0.0, 1.0, 2.0])))
    if op in ("add", "sub", "mul", "div"):
        return Binary(op, random_rewritable_expression(rng, depth - 1), random_rewritable_expression(rng, depth - 1))
    return Unary(op, random_rewritable_expression(rng, depth - 1))
