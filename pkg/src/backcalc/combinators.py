"""Guards, monadic unfolds and folds, the stateful scan, and the fused solver.

Sequences are tuples throughout so that results can live in bags.

Steps passed to :func:`hylo_m` receive the recursive result *deferred*, as
a zero-argument callable; the steps built here (:func:`scan_step`,
:func:`odot_step`) only :func:`force` it inside their ``get`` continuation,
so a branch rejected by a guard never builds its subtree.  :func:`foldr_m`
passes ordinary programs; :func:`force` accepts both.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any, Union

from backcalc.errors import FuelExhausted, SpecViolation, UnboundedStateDomain
from backcalc.handlers import outcomes
from backcalc.prog import (
    FAIL,
    NONDET,
    UNIT,
    Get,
    Prog,
    Ret,
    bind,
    choice,
    effect_footprint,
    get,
    mapv,
    put,
    ret,
    seq,
)

DEFAULT_FUEL = 256

Deferred = Union[Prog, Callable[[], Prog]]
Step = Callable[[Any, Deferred], Prog]


def force(m: Deferred) -> Prog:
    return m if isinstance(m, Prog) else m()


def null(xs: Sequence) -> bool:
    return len(xs) == 0


def all_ok(ok: Callable[[Any], bool], ys: Sequence) -> bool:
    return all(ok(y) for y in ys)


def guard(b: bool) -> Prog:
    return Ret(UNIT) if b else FAIL


def filt(p: Callable[[Any], bool], x: Any) -> Prog:
    return seq(guard(p(x)), ret(x))


def select(xs: Sequence) -> Prog:
    """Nondeterministically split ``xs`` into one element and the rest."""
    xs = tuple(xs)
    if not xs:
        return FAIL
    x, rest = xs[0], xs[1:]
    return choice(ret((x, rest)), mapv(lambda pair: (pair[0], (x,) + pair[1]), select(rest)))


def unfold_m(
    p: Callable[[Any], bool],
    f: Callable[[Any], Prog],
    y: Any,
    fuel: int = DEFAULT_FUEL,
) -> Prog:
    if p(y):
        return ret(())
    if fuel <= 0:
        raise FuelExhausted(f"unfold did not reach its stop condition; last seed {y!r}")
    return bind(
        f(y),
        lambda xz: mapv(lambda xs: (xz[0],) + xs, unfold_m(p, f, xz[1], fuel - 1)),
    )


def perm(xs: Sequence, fuel: int = DEFAULT_FUEL) -> Prog:
    return unfold_m(null, select, tuple(xs), fuel)


def scanl_plus(oplus: Callable[[Any, Any], Any], st: Any, xs: Sequence) -> tuple:
    """Left-fold results of every non-empty prefix of ``xs``."""
    out = []
    for x in xs:
        st = oplus(st, x)
        out.append(st)
    return tuple(out)


def foldr_m(otimes: Step, e: Prog, xs: Sequence) -> Prog:
    acc = e
    for x in reversed(tuple(xs)):
        acc = otimes(x, acc)
    return acc


def scan_step(oplus: Callable[[Any, Any], Any]) -> Step:
    """The step of :func:`scanl_m`: read the state, advance it, emit it."""

    def step(x: Any, n: Deferred) -> Prog:
        def body(st: Any) -> Prog:
            st2 = oplus(st, x)
            return mapv(lambda ys: (st2,) + ys, seq(put(st2), force(n)))

        return Get(body)

    return step


def scanl_m(oplus: Callable[[Any, Any], Any], st: Any, xs: Sequence) -> Prog:
    return seq(put(st), foldr_m(scan_step(oplus), ret(()), xs))


def protect(n: Prog) -> Prog:
    """Run ``n``, then restore the state it started from."""
    return bind(get(), lambda ini: bind(n, lambda x: seq(put(ini), ret(x))))


def odot_step(
    p: Callable[[Any, Any], bool],
    next_state: Callable[[Any, Any], Any],
    res: Callable[[Any, Any], Any],
) -> Step:
    def step(x: Any, m: Deferred) -> Prog:
        def body(st: Any) -> Prog:
            return bind(
                guard(p(x, st)),
                lambda _: seq(put(next_state(x, st)), mapv(lambda b: res(x, b), force(m))),
            )

        return Get(body)

    return step


def fused_step(ok: Callable[[Any], bool], oplus: Callable[[Any, Any], Any]) -> Step:
    """Check ``ok`` on the advanced state, store it, and prepend ``x``."""
    return odot_step(
        lambda x, st: ok(oplus(st, x)),
        lambda x, st: oplus(st, x),
        lambda x, ys: (x,) + ys,
    )


def hylo_m(
    otimes: Step,
    e: Prog,
    p: Callable[[Any], bool],
    f: Callable[[Any], Prog],
    y: Any,
    fuel: int = DEFAULT_FUEL,
) -> Prog:
    """Unfold seeds with ``f`` and fold with ``otimes`` without an intermediate list.

    Equal to ``bind(unfold_m(p, f, y), lambda xs: foldr_m(otimes, e, xs))``
    provided unfolding terminates and ``otimes`` commutes past the unfold
    (true for :func:`odot_step` steps when ``f`` only uses nondeterminism).
    """
    if p(y):
        return e
    if fuel <= 0:
        raise FuelExhausted(f"unfold did not reach its stop condition; last seed {y!r}")
    return bind(
        f(y),
        lambda xz: otimes(xz[0], lambda: hylo_m(otimes, e, p, f, xz[1], fuel - 1)),
    )


@dataclass(frozen=True)
class SolveSpec:
    """One backtracking problem: seeds unfolded by ``f``, prefixes checked by ``ok``.

    ``f`` must use nondeterminism only.  ``measure``, when given, must
    strictly decrease from every seed to each seed ``f`` produces from it.
    """

    p: Callable[[Any], bool]
    f: Callable[[Any], Prog]
    ok: Callable[[Any], bool]
    oplus: Callable[[Any, Any], Any]
    st0: Any
    z: Any
    measure: Callable[[Any], int] | None = None


def check_spec(spec: SolveSpec, sample: int = 64) -> None:
    """Probe up to ``sample`` reachable seeds for effect and measure violations."""
    queue = deque([spec.z])
    seen = 0
    while queue and seen < sample:
        y = queue.popleft()
        seen += 1
        if spec.p(y):
            continue
        step = spec.f(y)
        try:
            footprint = effect_footprint(step)
        except UnboundedStateDomain:
            footprint = None
        if footprint is None or not footprint <= {NONDET}:
            raise SpecViolation(f"generator step at seed {y!r} uses effects other than nondeterminism")
        for (_, z), _ in outcomes(step, spec.st0):
            if spec.measure is not None and not spec.measure(z) < spec.measure(y):
                raise SpecViolation(f"measure does not decrease from {y!r} to {z!r}")
            queue.append(z)


def solve(spec: SolveSpec, fuel: int = DEFAULT_FUEL, check: bool = True) -> Prog:
    if check:
        check_spec(spec)
    body = hylo_m(fused_step(spec.ok, spec.oplus), ret(()), spec.p, spec.f, spec.z, fuel)
    return protect(seq(put(spec.st0), body))


def generate_and_test(spec: SolveSpec, fuel: int = DEFAULT_FUEL) -> Prog:
    """The unfused form: unfold every candidate, then filter on the scanned states."""
    return bind(
        unfold_m(spec.p, spec.f, spec.z, fuel),
        lambda xs: filt(lambda ys: all_ok(spec.ok, scanl_plus(spec.oplus, spec.st0, ys)), xs),
    )
