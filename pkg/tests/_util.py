"""Shared helpers for the test suite."""

from fractions import Fraction

from bjlevel import Operator, RationalStream, SpaceSpec, operator


def fr(text) -> Fraction:
    return Fraction(text)


def v(text: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(part) for part in text.split(","))


def random_operator(space: SpaceSpec, stream: RationalStream) -> Operator:
    n = space.dim
    while True:
        rows = [[stream.next_fraction() for _ in range(n)] for _ in range(n)]
        if any(any(c != 0 for c in row) for row in rows):
            return operator(rows, space)


def random_operator_battery(space: SpaceSpec, count: int, seed: int) -> list[Operator]:
    stream = RationalStream(seed)
    return [random_operator(space, stream) for _ in range(count)]
