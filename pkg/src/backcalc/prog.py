"""Programs over nondeterminism and state, as finite syntax trees.

A program is built from five constructors (``Ret``, ``Fail``, ``Choice``,
``Get``, ``Put``) and is given meaning only by a handler (see
:mod:`backcalc.handlers`).  ``bind`` grafts a continuation onto every
``Ret`` leaf, so the monad laws hold on the trees themselves.

``Get`` holds a continuation ``State -> Prog``.  It is either an ordinary
Python callable, evaluated lazily by the handler, or a :class:`Table`, a
finite lookup table that can be inspected, printed and shrunk.
"""

from __future__ import annotations

import enum
from collections.abc import Callable, Collection, Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any, Generic, TypeVar

from backcalc.errors import DomainViolation, UnboundedStateDomain

A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")


class Unit(enum.Enum):
    UNIT = 0

    def __repr__(self) -> str:
        return "()"

    __str__ = __repr__


UNIT = Unit.UNIT


class EffectKind(enum.Enum):
    NONDET = "nondet"
    STATE = "state"

    def __repr__(self) -> str:
        return self.name


NONDET = EffectKind.NONDET
STATE = EffectKind.STATE


@dataclass(frozen=True)
class Table:
    """A total function on a finite domain, stored as ``(key, image)`` pairs."""

    pairs: tuple[tuple[Any, Any], ...]
    _lookup: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_lookup", dict(self.pairs))

    @classmethod
    def tabulate(cls, fn: Callable[[Any], Any], domain: Iterable[Any]) -> Table:
        return cls(tuple((k, fn(k)) for k in domain))

    def __call__(self, key: Any) -> Any:
        try:
            return self._lookup[key]
        except (KeyError, TypeError):
            raise DomainViolation(f"{key!r} is outside the table domain") from None

    def keys(self) -> tuple:
        return tuple(k for k, _ in self.pairs)

    def images(self) -> tuple:
        return tuple(v for _, v in self.pairs)

    def map(self, fn: Callable[[Any], Any]) -> Table:
        return Table(tuple((k, fn(v)) for k, v in self.pairs))

    def __repr__(self) -> str:
        return "{" + ", ".join(f"{k!r}: {v!r}" for k, v in self.pairs) + "}"


class Prog(Generic[A]):
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Ret(Prog[A]):
    value: A


@dataclass(frozen=True, slots=True)
class Fail(Prog[A]):
    pass


@dataclass(frozen=True, slots=True)
class Choice(Prog[A]):
    left: Prog[A]
    right: Prog[A]


@dataclass(frozen=True, slots=True)
class Get(Prog[A]):
    cont: Callable[[Any], Prog[A]]


@dataclass(frozen=True, slots=True)
class Put(Prog[A]):
    state: Any
    cont: Prog[A]


FAIL: Fail = Fail()


def ret(a: A) -> Prog[A]:
    return Ret(a)


def fail() -> Prog[Any]:
    return FAIL


def choice(m: Prog[A], n: Prog[A]) -> Prog[A]:
    return Choice(m, n)


def get() -> Prog[Any]:
    return Get(Ret)


def put(s: Any) -> Prog[Unit]:
    return Put(s, Ret(UNIT))


def bind(m: Prog[A], k: Callable[[A], Prog[B]]) -> Prog[B]:
    # type() dispatch: this is the interpreter's hot path
    t = type(m)
    if t is Ret:
        return k(m.value)
    if t is Choice:
        return Choice(bind(m.left, k), bind(m.right, k))
    if t is Fail:
        return m
    if t is Put:
        return Put(m.state, bind(m.cont, k))
    if t is Get:
        cont = m.cont
        if isinstance(cont, Table):
            return Get(cont.map(lambda p: bind(p, k)))
        return Get(lambda s: bind(cont(s), k))
    raise TypeError(f"not a program: {m!r}")


def seq(m: Prog[Any], n: Prog[B]) -> Prog[B]:
    return bind(m, lambda _: n)


def mapv(f: Callable[[A], B], m: Prog[A]) -> Prog[B]:
    return bind(m, lambda a: Ret(f(a)))


def kleisli(
    f: Callable[[A], Prog[B]], g: Callable[[B], Prog[C]]
) -> Callable[[A], Prog[C]]:
    return lambda x: bind(f(x), g)


def _children(m: Prog, states: Collection | None) -> Iterator[Prog]:
    match m:
        case Choice(left, right):
            yield left
            yield right
        case Get(cont) if isinstance(cont, Table):
            yield from cont.images()
        case Get(cont):
            if states is None or not isinstance(states, Collection):
                raise UnboundedStateDomain(
                    "cannot scan a Get continuation without a finite state domain"
                )
            for s in states:
                yield cont(s)
        case Put(_, cont):
            yield cont


def effect_footprint(m: Prog, states: Collection | None = None) -> frozenset[EffectKind]:
    """Effects that occur syntactically in ``m``.

    Continuations stored as tables are scanned over their own keys; other
    continuations are applied to every element of ``states``.
    """
    found: set[EffectKind] = set()
    stack = [m]
    while stack and len(found) < 2:
        node = stack.pop()
        if isinstance(node, (Fail, Choice)):
            found.add(NONDET)
        elif isinstance(node, (Get, Put)):
            found.add(STATE)
        stack.extend(_children(node, states))
    return frozenset(found)


def size(m: Prog, states: Collection | None = None) -> int:
    return 1 + sum(size(c, states) for c in _children(m, states))


def depth(m: Prog, states: Collection | None = None) -> int:
    return 1 + max((depth(c, states) for c in _children(m, states)), default=0)


def render(m: Prog, states: Collection | None = None) -> str:
    """Prefix rendering, e.g. ``(choice (ret 1) (put 2 (get {0: (fail), 1: (ret 1)})))``."""
    match m:
        case Ret(a):
            return f"(ret {a!r})"
        case Fail():
            return "(fail)"
        case Choice(left, right):
            return f"(choice {render(left, states)} {render(right, states)})"
        case Get(cont):
            if isinstance(cont, Table):
                pairs = cont.pairs
            elif states is not None:
                pairs = tuple((s, cont(s)) for s in states)
            else:
                return "(get <fn>)"
            body = ", ".join(f"{k!r}: {render(v, states)}" for k, v in pairs)
            return "(get {" + body + "})"
        case Put(s, cont):
            return f"(put {s!r} {render(cont, states)})"
    raise TypeError(f"not a program: {m!r}")
