import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from backcalc.combinators import (
    SolveSpec,
    all_ok,
    filt,
    foldr_m,
    force,
    fused_step,
    generate_and_test,
    guard,
    hylo_m,
    null,
    odot_step,
    perm,
    protect,
    scan_step,
    scanl_m,
    scanl_plus,
    select,
    solve,
    unfold_m,
)
from backcalc.errors import FuelExhausted, SpecViolation
from backcalc.handlers import Bag, prog_equal, run_local
from backcalc.laws import FULL, ONLY_NONDET, FuzzConfig, gen_kont, gen_prog
from backcalc.prog import NONDET, UNIT, bind, choice, effect_footprint, fail, get, mapv, put, ret, seq
from backcalc.queens import EMPTY, QueensState, ok_check, oplus

STATES = (0, 1, 2, 3)
CFG = FuzzConfig()


def values(m, s0=0):
    return Bag(v for v, _ in run_local(m, s0))


def test_guard_and_filt():
    assert guard(True) == ret(UNIT)
    assert guard(False) == fail()
    for p, q in itertools.product((True, False), repeat=2):
        assert prog_equal(guard(p and q), seq(guard(p), guard(q)), STATES)
    assert prog_equal(filt(lambda x: x % 2 == 0, 4), ret(4), STATES)
    assert prog_equal(filt(lambda x: x % 2 == 0, 3), fail(), STATES)


def test_select():
    assert select([]) == fail()
    assert run_local(select([1, 2, 3]), 0) == Bag(
        [((1, (2, 3)), 0), ((2, (1, 3)), 0), ((3, (1, 2)), 0)]
    )
    assert run_local(select([7]), 5) == Bag([((7, ()), 5)])


@given(st.lists(st.integers(0, 9), max_size=6))
def test_select_yields_one_split_per_position(xs):
    oracle = Bag((xs[i], tuple(xs[:i] + xs[i + 1 :])) for i in range(len(xs)))
    assert values(select(xs)) == oracle


def test_unfold_and_perm():
    assert unfold_m(null, select, ()) == ret(())
    assert run_local(perm([1, 2]), 0) == Bag([((1, 2), 0), ((2, 1), 0)])
    assert run_local(perm([]), 0) == Bag([((), 0)])
    assert effect_footprint(perm([1, 2, 3])) == {NONDET}


@pytest.mark.parametrize("n", range(6))
def test_perm_matches_itertools(n):
    got = values(perm(range(n)))
    assert len(got) == math.factorial(n)
    assert got == Bag(itertools.permutations(range(n)))


def test_unfold_out_of_fuel():
    # the seed never shrinks
    with pytest.raises(FuelExhausted):
        unfold_m(lambda y: False, lambda y: ret((y, y)), 0, fuel=10)


def test_scanl_plus():
    add = lambda s, a: s + a  # noqa: E731
    assert scanl_plus(add, 0, []) == ()
    assert scanl_plus(add, 0, [1, 2, 3]) == (1, 3, 6)
    assert scanl_plus(oplus, EMPTY, [3, 5]) == (
        QueensState(1, (3,), (-3,)),
        QueensState(2, (6, 3), (-4, -3)),
    )


@given(st.lists(st.integers(-5, 5), max_size=8), st.integers(-5, 5))
def test_scanl_plus_is_tail_of_accumulate(xs, s0):
    oracle = tuple(itertools.accumulate(xs, lambda s, a: 2 * s - a, initial=s0))[1:]
    assert scanl_plus(lambda s, a: 2 * s - a, s0, xs) == oracle


def test_foldr_m():
    step = scan_step(lambda s, a: s + a)
    assert foldr_m(step, ret(()), []) == ret(())
    for s in STATES:
        assert run_local(foldr_m(step, ret(()), [2]), s) == run_local(step(2, ret(())), s)
    assert prog_equal(scanl_m(lambda s, a: s + a, 4, [1]), seq(put(4), foldr_m(step, ret(()), [1])), STATES)


def test_scanl_m():
    add = lambda s, a: s + a  # noqa: E731
    assert run_local(scanl_m(add, 0, []), 9) == Bag([((), 0)])
    assert run_local(scanl_m(add, 0, [1, 2]), 9) == Bag([((1, 3), 3)])


@pytest.mark.parametrize("xs", [(), (1,), (3, 1, 2), (2, 2, 0, 3, 1)])
def test_protect_scanl_m_is_pure_scan(xs):
    op = lambda s, a: (2 * s + a) % 7  # noqa: E731
    assert prog_equal(ret(scanl_plus(op, 1, xs)), protect(scanl_m(op, 1, xs)), STATES)


def test_protect():
    assert prog_equal(protect(ret(4)), ret(4), STATES)
    assert run_local(protect(seq(put(5), get())), 0) == Bag([(5, 0)])


@given(st.integers(0, 2**32), st.sampled_from(STATES))
def test_protect_restores_state_on_every_branch(seed, s0):
    m = gen_prog(CFG, FULL, random.Random(seed))
    assert all(s == s0 for _, s in run_local(protect(m), s0))


def test_odot_step():
    never = odot_step(lambda x, s: False, lambda x, s: s, lambda x, b: b)
    assert run_local(never(1, ret(())), 0) == Bag()
    step = fused_step(ok_check, oplus)
    assert run_local(step(3, ret(())), EMPTY) == Bag([((3,), QueensState(1, (3,), (-3,)))])


def test_odot_step_forces_deferred_body_only_after_guard():
    forced = []

    def body():
        forced.append(True)
        return ret(())

    reject = fused_step(lambda s: False, lambda s, a: s + a)
    run_local(reject(1, body), 0)
    assert forced == []
    accept = fused_step(lambda s: True, lambda s, a: s + a)
    run_local(accept(1, body), 0)
    assert forced == [True]


@given(st.integers(0, 2**32), st.integers(0, 2**32), st.sampled_from((0, 1, 2, 3)))
def test_odot_commutes_past_nondeterminism(sn, sk, x):
    n = gen_prog(CFG, ONLY_NONDET, random.Random(sn))
    k = gen_kont(CFG, FULL, random.Random(sk))
    step = odot_step(lambda x, s: (x + s) % 3 != 0, lambda x, s: (x * s + 1) % 4, lambda x, b: (x + b) % 4)
    assert prog_equal(bind(n, lambda y: step(x, k(y))), step(x, bind(n, k)), STATES)


def test_force():
    assert force(ret(1)) == ret(1)
    assert force(lambda: ret(2)) == ret(2)


def test_hylo_stop_clause():
    step = fused_step(ok_check, oplus)
    e = ret(())
    assert hylo_m(step, e, null, select, ()) is e


def _unfused(step, xs):
    return bind(unfold_m(null, select, xs), lambda ys: foldr_m(step, ret(()), ys))


@pytest.mark.parametrize("n", range(7))
def test_hylo_equals_unfused_pipeline(n):
    step = fused_step(ok_check, oplus)
    xs = tuple(range(n))
    for s0 in (EMPTY, QueensState(1, (2,), (-2,))):
        assert run_local(hylo_m(step, ret(()), null, select, xs), s0) == run_local(_unfused(step, xs), s0)


def test_hylo_out_of_fuel():
    step = fused_step(lambda s: True, lambda s, a: s)
    prog = hylo_m(step, ret(()), lambda y: False, lambda y: ret((y, y)), 0, fuel=5)
    with pytest.raises(FuelExhausted):
        run_local(prog, 0)


def _brute_queens(n):
    return sorted(
        p
        for p in itertools.permutations(range(n))
        if all(abs(p[i] - p[j]) != j - i for i in range(n) for j in range(i + 1, n))
    )


def test_solve_queens_four():
    spec = SolveSpec(null, select, ok_check, oplus, EMPTY, tuple(range(4)), measure=len)
    got = run_local(solve(spec), EMPTY)
    assert sorted(v for v, _ in got) == _brute_queens(4) == [(1, 3, 0, 2), (2, 0, 3, 1)]
    assert all(s == EMPTY for _, s in got)


def test_solve_degenerate_seed():
    spec = SolveSpec(null, select, ok_check, oplus, EMPTY, ())
    assert run_local(solve(spec), 7) == Bag([((), 7)])


@given(st.lists(st.integers(0, 3), max_size=4), st.sampled_from(STATES), st.integers(0, 127))
def test_solve_equals_generate_and_test(z, st0, mask):
    ok = lambda s: bool(mask >> (s % 7) & 1)  # noqa: E731
    spec = SolveSpec(null, select, ok, lambda s, a: (2 * s + a) % 7, st0, tuple(z), measure=len)
    assert prog_equal(solve(spec), generate_and_test(spec), STATES)


def test_solve_rejects_stateful_generator():
    def stateful(xs):
        return seq(put(0), select(xs))

    spec = SolveSpec(null, stateful, lambda s: True, lambda s, a: s, 0, (1, 2))
    with pytest.raises(SpecViolation):
        solve(spec)


def test_solve_rejects_non_decreasing_measure():
    spec = SolveSpec(null, lambda xs: ret((xs[0], xs)), lambda s: True, lambda s, a: s, 0, (1,), measure=len)
    with pytest.raises(SpecViolation):
        solve(spec)


def test_all_ok():
    assert all_ok(lambda s: s > 0, [])
    assert not all_ok(lambda s: s > 0, [1, 0])


def test_filtered_scan_equals_fused_fold_by_hand():
    op = lambda s, a: s + a  # noqa: E731
    ok = lambda s: s < 5  # noqa: E731
    for xs in [(), (1,), (2, 2), (3, 3), (1, 1, 1, 1)]:
        lhs = bind(foldr_m(scan_step(op), ret(()), xs), lambda ys: seq(guard(all_ok(ok, ys)), ret(xs)))
        rhs = foldr_m(fused_step(ok, op), ret(()), xs)
        assert prog_equal(lhs, rhs, STATES)


def test_choice_distributes_through_mapv():
    m = choice(ret(1), seq(put(2), ret(3)))
    assert prog_equal(mapv(lambda x: x * 2, m), choice(ret(2), seq(put(2), ret(6))), STATES)
