"""Local-state denotation of programs and equality up to bags.

The handler runs state inside and nondeterminism outside, so every branch
of a choice works on its own copy of the state: a program denotes a
function from an initial state to a bag of ``(value, final state)`` pairs.
Results are bags, not lists, because right-distributivity forces choice to
be commutative.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Hashable, Iterable, Iterator
from typing import Any

from backcalc.prog import Choice, Fail, Get, Prog, Put, Ret


class Bag:
    """Immutable multiset: equality ignores order and respects multiplicity."""

    __slots__ = ("_counts",)

    def __init__(self, items: Iterable[Hashable] = ()) -> None:
        self._counts = Counter(items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bag):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __iter__(self) -> Iterator:
        return self._counts.elements()

    def __contains__(self, item: object) -> bool:
        return self._counts[item] > 0

    def __add__(self, other: Bag) -> Bag:
        out = Bag()
        out._counts = self._counts + other._counts
        return out

    def count(self, item: Hashable) -> int:
        return self._counts[item]

    def distinct(self) -> set:
        return set(self._counts)

    def sorted(self) -> list:
        items = list(self)
        try:
            return sorted(items)
        except TypeError:
            return sorted(items, key=repr)

    def __repr__(self) -> str:
        return "Bag([" + ", ".join(repr(x) for x in self.sorted()) + "])"


def outcomes(m: Prog, s0: Any) -> Iterator[tuple[Any, Any]]:
    """Yield ``(value, final state)`` pairs, left branch of each choice first."""
    stack = [(m, s0)]
    pop, push = stack.pop, stack.append
    while stack:
        node, s = pop()
        t = type(node)
        if t is Ret:
            yield (node.value, s)
        elif t is Choice:
            push((node.right, s))
            push((node.left, s))
        elif t is Get:
            push((node.cont(s), s))
        elif t is Put:
            push((node.cont, node.state))
        elif t is not Fail:
            raise TypeError(f"not a program: {node!r}")


def run_local(m: Prog, s0: Any) -> Bag:
    return Bag(outcomes(m, s0))


Runner = Callable[[Prog, Any], Bag]


def bag_equal(x: Bag, y: Bag) -> bool:
    return x == y


def prog_equal(m: Prog, n: Prog, states: Iterable[Any], runner: Runner = run_local) -> bool:
    states = list(states)
    if not states:
        raise ValueError("prog_equal needs at least one initial state")
    return all(bag_equal(runner(m, s), runner(n, s)) for s in states)
