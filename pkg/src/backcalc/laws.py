"""Random programs and the executable law catalogue.

Every law is a builder ``(cfg, rng) -> LawCase``.  A case holds an
environment of generated values, tabulated functions and programs, plus
two program builders over that environment; the law holds on the case
when both sides denote equal bags from every initial state.

Functions are always generated as :class:`~backcalc.prog.Table` values so
counterexamples print as data and can be shrunk.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any

from backcalc.combinators import (
    SolveSpec,
    all_ok,
    filt,
    foldr_m,
    fused_step,
    generate_and_test,
    guard,
    hylo_m,
    null,
    odot_step,
    protect,
    scan_step,
    scanl_m,
    scanl_plus,
    select,
    solve,
    unfold_m,
)
from backcalc.errors import UnknownLaw
from backcalc.handlers import Bag, Runner, run_local
from backcalc.prog import (
    FAIL,
    NONDET,
    STATE,
    UNIT,
    Choice,
    EffectKind,
    Fail,
    Get,
    Prog,
    Put,
    Ret,
    Table,
    bind,
    choice,
    depth,
    effect_footprint,
    fail,
    get,
    mapv,
    put,
    render,
    ret,
    seq,
)
from backcalc.queens import EMPTY, QueensState, ok_check, oplus as queens_oplus

FULL = frozenset({NONDET, STATE})
ONLY_NONDET = frozenset({NONDET})
ONLY_STATE = frozenset({STATE})


@dataclass(frozen=True)
class FuzzConfig:
    value_domain: tuple = (0, 1, 2, 3)
    state_domain: tuple = (0, 1, 2, 3)
    max_depth: int = 4
    cases: int = 500
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.value_domain or not self.state_domain:
            raise ValueError("value and state domains must be nonempty")
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")
        if self.cases < 0:
            raise ValueError("cases must be nonnegative")

    @property
    def domain(self) -> tuple:
        """Everything a generated program can return: values and read states."""
        return tuple(dict.fromkeys(self.value_domain + self.state_domain))


@dataclass(frozen=True)
class Named:
    """A plain function with a printable name."""

    name: str
    fn: Callable = field(compare=False)

    def __call__(self, *args: Any) -> Any:
        return self.fn(*args)

    def __repr__(self) -> str:
        return self.name


# generators


def gen_prog(
    cfg: FuzzConfig,
    footprint: Iterable[EffectKind],
    rng: random.Random,
    max_depth: int | None = None,
) -> Prog:
    footprint = frozenset(footprint)
    d = cfg.max_depth if max_depth is None else max_depth
    leaves = ["ret", "ret", "ret"] + (["fail"] if NONDET in footprint else [])
    nodes = (["choice", "choice"] if NONDET in footprint else []) + (
        ["get", "put"] if STATE in footprint else []
    )
    kind = rng.choice(leaves + nodes if d > 1 else leaves)
    if kind == "ret":
        return Ret(rng.choice(cfg.value_domain))
    if kind == "fail":
        return FAIL
    if kind == "choice":
        return Choice(gen_prog(cfg, footprint, rng, d - 1), gen_prog(cfg, footprint, rng, d - 1))
    if kind == "get":
        return Get(Table.tabulate(lambda _: gen_prog(cfg, footprint, rng, d - 1), cfg.state_domain))
    return Put(rng.choice(cfg.state_domain), gen_prog(cfg, footprint, rng, d - 1))


def gen_kont(
    cfg: FuzzConfig,
    footprint: Iterable[EffectKind],
    rng: random.Random,
    max_depth: int | None = None,
) -> Table:
    """A continuation tabulated over everything a generated program can return."""
    return Table.tabulate(lambda _: gen_prog(cfg, footprint, rng, max_depth), cfg.domain)


def gen_kont2(cfg: FuzzConfig, footprint: Iterable[EffectKind], rng: random.Random) -> Table:
    keys = [(a, b) for a in cfg.domain for b in cfg.domain]
    return Table.tabulate(lambda _: gen_prog(cfg, footprint, rng), keys)


def gen_fun(cfg: FuzzConfig, rng: random.Random, codomain: tuple | None = None) -> Table:
    codomain = codomain or cfg.value_domain
    return Table.tabulate(lambda _: rng.choice(codomain), cfg.domain)


def gen_fun2(cfg: FuzzConfig, rng: random.Random, codomain: tuple) -> Table:
    keys = [(a, b) for a in cfg.domain for b in cfg.domain]
    return Table.tabulate(lambda _: rng.choice(codomain), keys)


OPLUS_POOL = (
    Named("add", lambda s, a: s + a),
    Named("max", lambda s, a: max(s, a)),
    Named("affine7", lambda s, a: (2 * s + a) % 7),
)


def gen_oplus(rng: random.Random) -> Named:
    return rng.choice(OPLUS_POOL)


def gen_ok(rng: random.Random) -> Named:
    mask = tuple(rng.random() < 0.8 for _ in range(7))
    bits = "".join("1" if b else "0" for b in mask)
    return Named(f"ok<{bits} mod 7>", lambda s: mask[s % 7])


def gen_list(cfg: FuzzConfig, rng: random.Random, max_len: int) -> tuple:
    return tuple(rng.choice(cfg.value_domain) for _ in range(rng.randint(0, max_len)))


# catalogue


@dataclass
class LawCase:
    law_id: str
    env: dict[str, Any]
    lhs: Callable[[dict], Prog]
    rhs: Callable[[dict], Prog]
    states: tuple | None = None


@dataclass(frozen=True)
class LawSpec:
    law_id: str
    statement: str
    build: Callable[[FuzzConfig, random.Random], LawCase]
    note: str | None = None


CATALOGUE: dict[str, LawSpec] = {}


def law(law_id: str, statement: str, note: str | None = None):
    def register(build):
        CATALOGUE[law_id] = LawSpec(law_id, statement, build, note)
        return build

    return register


def _case(law_id, env, lhs, rhs, states=None) -> LawCase:
    return LawCase(law_id, env, lhs, rhs, states)


@law("eq01", "ret x >>= f = f x")
def _eq01(cfg, rng):
    env = {"x": rng.choice(cfg.value_domain), "f": gen_kont(cfg, FULL, rng)}
    return _case("eq01", env, lambda e: bind(ret(e["x"]), e["f"]), lambda e: e["f"](e["x"]))


@law("eq02", "m >>= ret = m")
def _eq02(cfg, rng):
    env = {"m": gen_prog(cfg, FULL, rng)}
    return _case("eq02", env, lambda e: bind(e["m"], ret), lambda e: e["m"])


@law("eq03", "(m >>= f) >>= g = m >>= (x -> f x >>= g)")
def _eq03(cfg, rng):
    env = {"m": gen_prog(cfg, FULL, rng), "f": gen_kont(cfg, FULL, rng), "g": gen_kont(cfg, FULL, rng)}
    return _case(
        "eq03",
        env,
        lambda e: bind(bind(e["m"], e["f"]), e["g"]),
        lambda e: bind(e["m"], lambda x: bind(e["f"](x), e["g"])),
    )


@law("eq04", "(f . g) <$> m = f <$> (g <$> m)")
def _eq04(cfg, rng):
    env = {"f": gen_fun(cfg, rng), "g": gen_fun(cfg, rng), "m": gen_prog(cfg, FULL, rng)}
    return _case(
        "eq04",
        env,
        lambda e: mapv(lambda a: e["f"](e["g"](a)), e["m"]),
        lambda e: mapv(e["f"], mapv(e["g"], e["m"])),
    )


@law("eq05", "(f <$> m) >>= g = m >>= (g . f)")
def _eq05(cfg, rng):
    env = {"f": gen_fun(cfg, rng), "g": gen_kont(cfg, FULL, rng), "m": gen_prog(cfg, FULL, rng)}
    return _case(
        "eq05",
        env,
        lambda e: bind(mapv(e["f"], e["m"]), e["g"]),
        lambda e: bind(e["m"], lambda a: e["g"](e["f"](a))),
    )


@law("eq06", "f <$> (m >>= k) = m >>= (x -> f <$> k x)")
def _eq06(cfg, rng):
    env = {"f": gen_fun(cfg, rng), "k": gen_kont(cfg, FULL, rng), "m": gen_prog(cfg, FULL, rng)}
    return _case(
        "eq06",
        env,
        lambda e: mapv(e["f"], bind(e["m"], e["k"])),
        lambda e: bind(e["m"], lambda x: mapv(e["f"], e["k"](x))),
    )


@law("eq07", "(m [] n) [] k = m [] (n [] k)")
def _eq07(cfg, rng):
    env = {name: gen_prog(cfg, FULL, rng) for name in ("m", "n", "k")}
    return _case(
        "eq07",
        env,
        lambda e: choice(choice(e["m"], e["n"]), e["k"]),
        lambda e: choice(e["m"], choice(e["n"], e["k"])),
    )


@law("eq08", "fail [] m = m = m [] fail")
def _eq08(cfg, rng):
    env = {"side": rng.choice(("left", "right")), "m": gen_prog(cfg, FULL, rng)}

    def lhs(e):
        return choice(fail(), e["m"]) if e["side"] == "left" else choice(e["m"], fail())

    return _case("eq08", env, lhs, lambda e: e["m"])


@law("eq09", "(m1 [] m2) >>= f = (m1 >>= f) [] (m2 >>= f)")
def _eq09(cfg, rng):
    env = {"m1": gen_prog(cfg, FULL, rng), "m2": gen_prog(cfg, FULL, rng), "f": gen_kont(cfg, FULL, rng)}
    return _case(
        "eq09",
        env,
        lambda e: bind(choice(e["m1"], e["m2"]), e["f"]),
        lambda e: choice(bind(e["m1"], e["f"]), bind(e["m2"], e["f"])),
    )


@law("eq10", "fail >>= f = fail")
def _eq10(cfg, rng):
    env = {"f": gen_kont(cfg, FULL, rng)}
    return _case("eq10", env, lambda e: bind(fail(), e["f"]), lambda e: fail())


@law("eq11", "guard (p && q) = guard p >> guard q")
def _eq11(cfg, rng):
    env = {"p": rng.random() < 0.5, "q": rng.random() < 0.5}
    return _case(
        "eq11",
        env,
        lambda e: guard(e["p"] and e["q"]),
        lambda e: seq(guard(e["p"]), guard(e["q"])),
    )


@law("eq12", "guard p >> (f <$> m) = f <$> (guard p >> m)")
def _eq12(cfg, rng):
    env = {"p": rng.random() < 0.5, "f": gen_fun(cfg, rng), "m": gen_prog(cfg, FULL, rng)}
    return _case(
        "eq12",
        env,
        lambda e: seq(guard(e["p"]), mapv(e["f"], e["m"])),
        lambda e: mapv(e["f"], seq(guard(e["p"]), e["m"])),
    )


@law("eq13", "guard p >> m = m >>= (x -> guard p >> ret x)")
def _eq13(cfg, rng):
    env = {"p": rng.random() < 0.5, "m": gen_prog(cfg, FULL, rng)}
    return _case(
        "eq13",
        env,
        lambda e: seq(guard(e["p"]), e["m"]),
        lambda e: bind(e["m"], lambda x: seq(guard(e["p"]), ret(x))),
    )


@law("eq14", "put s >> put s' = put s'")
def _eq14(cfg, rng):
    env = {"s": rng.choice(cfg.state_domain), "s2": rng.choice(cfg.state_domain)}
    return _case("eq14", env, lambda e: seq(put(e["s"]), put(e["s2"])), lambda e: put(e["s2"]))


@law("eq15", "put s >> get = put s >> ret s")
def _eq15(cfg, rng):
    env = {"s": rng.choice(cfg.state_domain)}
    return _case("eq15", env, lambda e: seq(put(e["s"]), get()), lambda e: seq(put(e["s"]), ret(e["s"])))


@law("eq16", "get >>= put = ret ()")
def _eq16(cfg, rng):
    return _case("eq16", {}, lambda e: bind(get(), put), lambda e: ret(UNIT))


@law("eq17", "get >>= (s -> get >>= k s) = get >>= (s -> k s s)")
def _eq17(cfg, rng):
    env = {"k": gen_kont2(cfg, FULL, rng)}
    return _case(
        "eq17",
        env,
        lambda e: bind(get(), lambda s: bind(get(), lambda s2: e["k"]((s, s2)))),
        lambda e: bind(get(), lambda s: e["k"]((s, s))),
    )


@law("eq18", "m >>= (x -> f1 x [] f2 x) = (m >>= f1) [] (m >>= f2)")
def _eq18(cfg, rng):
    env = {"m": gen_prog(cfg, FULL, rng), "f1": gen_kont(cfg, FULL, rng), "f2": gen_kont(cfg, FULL, rng)}
    return _case(
        "eq18",
        env,
        lambda e: bind(e["m"], lambda x: choice(e["f1"](x), e["f2"](x))),
        lambda e: choice(bind(e["m"], e["f1"]), bind(e["m"], e["f2"])),
    )


@law("eq19", "m >> fail = fail")
def _eq19(cfg, rng):
    env = {"m": gen_prog(cfg, FULL, rng)}
    return _case("eq19", env, lambda e: seq(e["m"], fail()), lambda e: fail())


@law("thm1", "ret (scanl+ op st xs) = protect (scanlM op st xs)")
def _thm1(cfg, rng):
    env = {"op": gen_oplus(rng), "st": rng.choice(cfg.state_domain), "xs": gen_list(cfg, rng, 5)}
    return _case(
        "thm1",
        env,
        lambda e: ret(scanl_plus(e["op"], e["st"], e["xs"])),
        lambda e: protect(scanl_m(e["op"], e["st"], e["xs"])),
    )


def _commute_env(cfg, rng):
    return {
        "m": gen_prog(cfg, ONLY_NONDET, rng),
        "n": gen_prog(cfg, ONLY_STATE, rng),
        "f": gen_kont2(cfg, FULL, rng),
    }


@law("eq20", "m >>= (x -> n >>= (y -> f x y)) = n >>= (y -> m >>= (x -> f x y)), m nondet-only, n state-only")
def _eq20(cfg, rng):
    return _case(
        "eq20",
        _commute_env(cfg, rng),
        lambda e: bind(e["m"], lambda x: bind(e["n"], lambda y: e["f"]((x, y)))),
        lambda e: bind(e["n"], lambda y: bind(e["m"], lambda x: e["f"]((x, y)))),
    )


@law(
    "thm2",
    "nondeterminism commutes with state: n >>= (x -> m >>= (y -> f x y)) = m >>= (y -> n >>= (x -> f x y))",
    note="only two effects exist here, so the partner effect is instantiated as state alone",
)
def _thm2(cfg, rng):
    return _case(
        "thm2",
        _commute_env(cfg, rng),
        lambda e: bind(e["n"], lambda x: bind(e["m"], lambda y: e["f"]((x, y)))),
        lambda e: bind(e["m"], lambda y: bind(e["n"], lambda x: e["f"]((x, y)))),
    )


@law("thm3", "foldr scan-step (ret []) xs >>= (guard . all ok) >> ret xs = foldr fused-step (ret []) xs")
def _thm3(cfg, rng):
    env = {"op": gen_oplus(rng), "ok": gen_ok(rng), "xs": gen_list(cfg, rng, 5)}
    return _case(
        "thm3",
        env,
        lambda e: bind(
            foldr_m(scan_step(e["op"]), ret(()), e["xs"]),
            lambda ys: seq(guard(all_ok(e["ok"], ys)), ret(e["xs"])),
        ),
        lambda e: foldr_m(fused_step(e["ok"], e["op"]), ret(()), e["xs"]),
    )


@law("cor4", "filt (all ok . scanl+ op st) xs = protect (put st >> foldr fused-step (ret []) xs)")
def _cor4(cfg, rng):
    env = {
        "op": gen_oplus(rng),
        "ok": gen_ok(rng),
        "st": rng.choice(cfg.state_domain),
        "xs": gen_list(cfg, rng, 5),
    }
    return _case(
        "cor4",
        env,
        lambda e: filt(lambda ys: all_ok(e["ok"], scanl_plus(e["op"], e["st"], ys)), e["xs"]),
        lambda e: protect(seq(put(e["st"]), foldr_m(fused_step(e["ok"], e["op"]), ret(()), e["xs"]))),
    )


@law("lemma6", "n >>= ((x (.)) . k) = x (.) (n >>= k), n nondet-only")
def _lemma6(cfg, rng):
    env = {
        "n": gen_prog(cfg, ONLY_NONDET, rng),
        "k": gen_kont(cfg, FULL, rng),
        "x": rng.choice(cfg.value_domain),
        "p": gen_fun2(cfg, rng, (True, True, False)),
        "next": gen_fun2(cfg, rng, cfg.state_domain),
        "res": gen_fun2(cfg, rng, cfg.value_domain),
    }

    def step(e):
        return odot_step(lambda x, s: e["p"]((x, s)), lambda x, s: e["next"]((x, s)), lambda x, b: e["res"]((x, b)))

    return _case(
        "lemma6",
        env,
        lambda e: bind(e["n"], lambda y: step(e)(e["x"], e["k"](y))),
        lambda e: step(e)(e["x"], bind(e["n"], e["k"])),
    )


QUEENS_STATES = (
    EMPTY,
    QueensState(1, (1,), (-1,)),
    QueensState(2, (3, 1), (-1, -1)),
)

QUEENS_STEP = fused_step(ok_check, queens_oplus)


def queens_hylo(xs: tuple) -> Prog:
    return hylo_m(QUEENS_STEP, ret(()), null, select, xs)


def queens_unfused(xs: tuple) -> Prog:
    return bind(unfold_m(null, select, xs), lambda ys: foldr_m(QUEENS_STEP, ret(()), ys))


@law("thm5_queens_shape", "hyloM step (ret []) null select = unfoldM null select >=> foldr step (ret [])")
def _thm5(cfg, rng):
    xs = tuple(rng.sample(range(6), rng.randint(0, 6)))
    return _case(
        "thm5_queens_shape",
        {"xs": xs},
        lambda e: queens_hylo(e["xs"]),
        lambda e: queens_unfused(e["xs"]),
        QUEENS_STATES,
    )


@law("cor7", "unfoldM p f z >>= filt (all ok . scanl+ op st) = solve p f ok op st z")
def _cor7(cfg, rng):
    env = {
        "op": gen_oplus(rng),
        "ok": gen_ok(rng),
        "st": rng.choice(cfg.state_domain),
        "z": gen_list(cfg, rng, 5),
    }

    def spec(e):
        return SolveSpec(p=null, f=select, ok=e["ok"], oplus=e["op"], st0=e["st"], z=e["z"], measure=len)

    return _case("cor7", env, lambda e: generate_and_test(spec(e)), lambda e: solve(spec(e)))


LAW_IDS: tuple[str, ...] = tuple(f"eq{i:02d}" for i in range(1, 21)) + (
    "thm1",
    "thm2",
    "thm3",
    "cor4",
    "lemma6",
    "thm5_queens_shape",
    "cor7",
)
assert set(LAW_IDS) == set(CATALOGUE)


# running and shrinking


@dataclass
class Counterexample:
    env: dict[str, Any]
    state: Any
    lhs: Bag
    rhs: Bag

    def depth(self) -> int:
        return max((depth(p) for _, _, p in _env_progs(self.env)), default=0)

    def lines(self) -> list[str]:
        out = [f"  {name} = {_show(value)}" for name, value in self.env.items()]
        out.append(f"  initial state = {self.state!r}")
        out.append(f"  lhs = {self.lhs!r}")
        out.append(f"  rhs = {self.rhs!r}")
        return out

    def to_json(self) -> dict:
        return {
            "env": {name: _show(value) for name, value in self.env.items()},
            "state": repr(self.state),
            "lhs": repr(self.lhs),
            "rhs": repr(self.rhs),
        }


@dataclass
class LawReport:
    law_id: str
    cases_run: int
    failures: list[Counterexample] = field(default_factory=list)
    failed_cases: int = 0
    note: str | None = None

    @property
    def passed(self) -> bool:
        return not self.failures


def _show(value: Any) -> str:
    if isinstance(value, Prog):
        return render(value)
    if isinstance(value, Table):
        return "{" + ", ".join(f"{k!r}: {_show(v)}" for k, v in value.pairs) + "}"
    return repr(value)


def case_rng(seed: int, law_id: str, index: int) -> random.Random:
    return random.Random(f"{seed}/{law_id}/{index}")


def find_failure(case: LawCase, states: Iterable[Any], runner: Runner = run_local) -> Counterexample | None:
    for s in states:
        left = runner(case.lhs(case.env), s)
        right = runner(case.rhs(case.env), s)
        if left != right:
            return Counterexample(dict(case.env), s, left, right)
    return None


def _env_progs(env: dict[str, Any]) -> Iterator[tuple[str, Any, Prog]]:
    """Programs in the environment, bare or as table images: (name, key or None, prog)."""
    for name, value in env.items():
        if isinstance(value, Prog):
            yield name, None, value
        elif isinstance(value, Table):
            for k, v in value.pairs:
                if isinstance(v, Prog):
                    yield name, k, v


def _positions(m: Prog, path: tuple = ()) -> Iterator[tuple[tuple, Prog]]:
    yield path, m
    match m:
        case Choice(left, right):
            yield from _positions(left, path + ("l",))
            yield from _positions(right, path + ("r",))
        case Get(cont) if isinstance(cont, Table):
            for k, v in cont.pairs:
                yield from _positions(v, path + (("g", k),))
        case Put(_, cont):
            yield from _positions(cont, path + ("p",))


def _subprograms(m: Prog) -> list[Prog]:
    match m:
        case Choice(left, right):
            return [left, right]
        case Get(cont) if isinstance(cont, Table):
            return list(cont.images())
        case Put(_, cont):
            return [cont]
    return []


def _replace(m: Prog, path: tuple, new: Prog) -> Prog:
    if not path:
        return new
    step, rest = path[0], path[1:]
    match m:
        case Choice(left, right) if step == "l":
            return Choice(_replace(left, rest, new), right)
        case Choice(left, right):
            return Choice(left, _replace(right, rest, new))
        case Get(cont):
            key = step[1]
            return Get(Table(tuple((k, _replace(v, rest, new) if k == key else v) for k, v in cont.pairs)))
        case Put(s, cont):
            return Put(s, _replace(cont, rest, new))
    raise ValueError(f"bad path {path!r}")


def _with(env: dict, name: str, key: Any, prog: Prog) -> dict:
    out = dict(env)
    if key is None:
        out[name] = prog
    else:
        table = env[name]
        out[name] = Table(tuple((k, prog if k == key else v) for k, v in table.pairs))
    return out


def shrink(
    case: LawCase,
    failure: Counterexample,
    cfg: FuzzConfig,
    states: tuple,
    runner: Runner = run_local,
) -> Counterexample:
    """Replace subtrees by leaves, or by one of their own children, while the law still fails.

    ``Fail`` is only tried inside programs that already use nondeterminism,
    so a shrunk environment still meets the law's footprint restrictions.
    """
    env = dict(case.env)
    allow_fail = {(n, k): NONDET in effect_footprint(p) for n, k, p in _env_progs(env)}
    best = failure
    improved = True
    while improved:
        improved = False
        for name, key, prog in list(_env_progs(env)):
            leaves = [Ret(v) for v in cfg.domain]
            if allow_fail.get((name, key)):
                leaves.insert(0, FAIL)
            for path, sub in _positions(prog):
                if isinstance(sub, (Ret, Fail)):
                    continue
                for smaller in leaves + _subprograms(sub):
                    trial_env = _with(env, name, key, _replace(prog, path, smaller))
                    trial = LawCase(case.law_id, trial_env, case.lhs, case.rhs, case.states)
                    found = find_failure(trial, states, runner)
                    if found is not None:
                        env, best, improved = trial_env, found, True
                        break
                if improved:
                    break
            if improved:
                break
    return best


def run_law(
    law_id: str,
    cfg: FuzzConfig,
    runner: Runner = run_local,
    keep: int = 3,
) -> LawReport:
    try:
        spec = CATALOGUE[law_id]
    except KeyError:
        raise UnknownLaw(law_id) from None
    report = LawReport(law_id, 0, note=spec.note)
    for i in range(cfg.cases):
        case = spec.build(cfg, case_rng(cfg.seed, law_id, i))
        states = case.states if case.states is not None else cfg.state_domain
        report.cases_run += 1
        found = find_failure(case, states, runner)
        if found is None:
            continue
        report.failed_cases += 1
        if len(report.failures) < keep:
            report.failures.append(shrink(case, found, cfg, states, runner))
    return report


def run_suite(
    cfg: FuzzConfig,
    law_ids: Iterable[str] | None = None,
    runner: Runner = run_local,
) -> list[LawReport]:
    ids = LAW_IDS if law_ids is None else tuple(law_ids)
    unknown = [i for i in ids if i not in CATALOGUE]
    if unknown:
        raise UnknownLaw(", ".join(unknown))
    ordered = [i for i in LAW_IDS if i in set(ids)]
    return [run_law(i, cfg, runner) for i in ordered]
