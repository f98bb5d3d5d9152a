"""n-queens: the generate-and-test specification and the derived backtracker.

A placement ``xs`` puts the queen of column ``i`` on row ``xs[i]``.  Two
queens share an up diagonal when ``i + xs[i]`` coincide and a down
diagonal when ``i - xs[i]`` coincide.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Literal, NamedTuple

from backcalc.combinators import (
    SolveSpec,
    filt,
    guard,
    null,
    protect,
    select,
    solve,
    unfold_m,
)
from backcalc.errors import EmptyState
from backcalc.handlers import outcomes, run_local
from backcalc.prog import Prog, bind, get, mapv, put, ret, seq

Variant = Literal["naive", "derived"]


class QueensState(NamedTuple):
    """Columns placed so far and the diagonals they occupy, newest first."""

    i: int
    us: tuple[int, ...]
    ds: tuple[int, ...]


EMPTY = QueensState(0, (), ())


def ups(xs: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + x for i, x in enumerate(xs))


def downs(xs: Sequence[int]) -> tuple[int, ...]:
    return tuple(i - x for i, x in enumerate(xs))


def nodup(xs: Sequence) -> bool:
    return len(set(xs)) == len(xs)


def safe(xs: Sequence[int]) -> bool:
    return nodup(ups(xs)) and nodup(downs(xs))


def safe_acc(acc: QueensState, xs: Sequence[int]) -> bool:
    i, us, ds = acc
    us2 = [j + x for j, x in enumerate(xs, start=i)]
    ds2 = [j - x for j, x in enumerate(xs, start=i)]
    return (
        nodup(us2)
        and nodup(ds2)
        and all(u not in us for u in us2)
        and all(d not in ds for d in ds2)
    )


def oplus(st: QueensState, x: int) -> QueensState:
    i, us, ds = st
    return QueensState(i + 1, (i + x,) + us, (i - x,) + ds)


def ok_check(st: QueensState) -> bool:
    """The newest queen's diagonals are not occupied by earlier ones."""
    _, us, ds = st
    if not us or not ds:
        raise EmptyState("ok_check needs at least one placed queen")
    return us[0] not in us[1:] and ds[0] not in ds[1:]


def queens_naive(n: int, gen: Callable[[tuple], Prog] = select) -> Prog:
    return bind(unfold_m(null, gen, tuple(range(n))), lambda xs: filt(safe, xs))


def queens_spec(n: int, gen: Callable[[tuple], Prog] = select) -> SolveSpec:
    return SolveSpec(
        p=null, f=gen, ok=ok_check, oplus=oplus, st0=EMPTY, z=tuple(range(n)), measure=len
    )


def queens_derived(n: int, gen: Callable[[tuple], Prog] = select, check: bool = True) -> Prog:
    return solve(queens_spec(n, gen), check=check)


def queens_body(xs: tuple[int, ...]) -> Prog:
    # the solver with every definition unfolded by hand
    if not xs:
        return ret(())

    def place(pair: tuple[int, tuple[int, ...]]) -> Prog:
        x, ys = pair

        def body(st: QueensState) -> Prog:
            st2 = oplus(st, x)
            return bind(
                guard(ok_check(st2)),
                lambda _: seq(put(st2), mapv(lambda zs: (x,) + zs, queens_body(ys))),
            )

        return bind(get(), body)

    return bind(select(xs), place)


def queens_expanded(n: int) -> Prog:
    return protect(seq(put(EMPTY), queens_body(tuple(range(n)))))


def build(n: int, variant: Variant, gen: Callable[[tuple], Prog] = select) -> Prog:
    if variant == "naive":
        return queens_naive(n, gen)
    if variant == "derived":
        return queens_derived(n, gen, check=gen is select)
    raise ValueError(f"unknown variant {variant!r}")


def solutions(n: int, variant: Variant, s0: object = EMPTY) -> list[tuple[int, ...]]:
    """Placements found by ``variant``, sorted lexicographically."""
    return sorted(v for v, _ in run_local(build(n, variant), s0))


def expansion_count(n: int, variant: Variant) -> int:
    """Number of (element, rest) splits the selector produces while solving.

    Every split is one candidate extension of a partial placement; the
    derived solver only splits lists for partial placements that passed
    the diagonal check.
    """
    count = 0

    def counted(xs: tuple) -> Prog:
        nonlocal count
        count += len(xs)
        return select(xs)

    for _ in outcomes(build(n, variant, counted), EMPTY):
        pass
    return count
