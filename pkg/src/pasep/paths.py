"""Weighted Motzkin and Dyck path machinery.

Three layers live here:

* Laguerre histories: Motzkin paths whose steps carry labels (delta, i)
  with delta in {0,1} and i bounded by the starting height h
  (up: delta=1, i<=h;  level: delta=1, i<=h or delta=0, i<=h-1;
  down: delta=0, i<=h-1).  The step weight is y^delta q^i.  A step of
  weight y q^h is called type 1, one of weight q^(h-1) type 2.

* The transfer-matrix path families P, R, R*, B, B*.  Steps are pairs
  (direction, tag) where the tag names one symbolic weight alternative;
  the actual polynomial weight is resolved lazily from the tag and the
  starting height.  Keeping the tag rather than the polynomial as the
  identity of a step matters: an up step of weight 1 - q^(h+1) in the
  starred families is split into h+1 distinct steps q^i - q^(i+1).

      family P   up: q^i - q^(i+1), i<=h     level: 1+y  or (at+y*bt)q^h
                 down: y  or  -y*at*bt*q^(h-1)
      family R   up: 1 or -q^(h+1)           level: 1+y  or  q^h
                 down: y          (exactly n q-power level steps)
      family B   up: 1 or -q^(h+1)           level: (at+y*bt)q^h
                 down: -y*at*bt*q^(h-1)
      starred    as R / B but with the split up steps of P

  where at = (1-q)a - 1 and bt = (1-q)b - 1.

* Plain Dyck paths with returns/peaks statistics, Fine paths, and the
  q=0 Dyck-pair evaluation of the partition function.

Weighted sums are computed by height-indexed dynamic programming; explicit
enumeration is reserved for the bijection tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .polyring import (
    ALPHA_TILDE,
    BETA_TILDE,
    MPoly,
    ONE,
    Q,
    Y,
    ZERO,
    exact_div_pow_one_minus_q,
    exact_div_var,
    monomial,
)

UP, LEVEL, DOWN = "U", "L", "D"
_DH = {UP: 1, LEVEL: 0, DOWN: -1}


class MalformedPath(ValueError):
    """Input sequence is not a path of the required kind."""


class LengthMismatch(ValueError):
    """Pair of paths has incompatible lengths."""


# ---------------------------------------------------------------------------
# Laguerre histories
# ---------------------------------------------------------------------------

LaguerreStep = tuple[str, int, int]  # (direction, delta, i)


def is_valid_history(steps: tuple[LaguerreStep, ...]) -> bool:
    h = 0
    for d, delta, i in steps:
        if d == UP:
            if not (delta == 1 and 0 <= i <= h):
                return False
        elif d == LEVEL:
            if delta == 1:
                if not 0 <= i <= h:
                    return False
            elif not 0 <= i <= h - 1:
                return False
        elif d == DOWN:
            if not (delta == 0 and 0 <= i <= h - 1):
                return False
        else:
            return False
        h += _DH[d]
        if h < 0:
            return False
    return h == 0


def enumerate_laguerre(n: int) -> Iterator[tuple[LaguerreStep, ...]]:
    """Every Laguerre history of n steps, by height-bounded backtracking."""
    steps: list[LaguerreStep] = []

    def rec(h: int, remaining: int):
        if remaining == 0:
            if h == 0:
                yield tuple(steps)
            return
        if h > remaining:
            return
        if h + 1 <= remaining - 1:
            for i in range(h + 1):
                steps.append((UP, 1, i))
                yield from rec(h + 1, remaining - 1)
                steps.pop()
        for i in range(h + 1):
            steps.append((LEVEL, 1, i))
            yield from rec(h, remaining - 1)
            steps.pop()
        for i in range(h):
            steps.append((LEVEL, 0, i))
            yield from rec(h, remaining - 1)
            steps.pop()
        if h >= 1:
            for i in range(h):
                steps.append((DOWN, 0, i))
                yield from rec(h - 1, remaining - 1)
                steps.pop()

    yield from rec(0, n)


def history_weight(steps: tuple[LaguerreStep, ...]) -> MPoly:
    """Product over steps of y^delta q^i."""
    ey = sum(delta for _, delta, _ in steps)
    eq = sum(i for _, _, i in steps)
    return monomial(1, ey=ey, eq=eq)


def history_type_flags(steps: tuple[LaguerreStep, ...]) -> list[tuple[bool, bool]]:
    """(type1, type2) per step: weight y q^h resp. q^(h-1) at starting height h."""
    out = []
    h = 0
    for d, delta, i in steps:
        out.append((delta == 1 and i == h, delta == 0 and i == h - 1))
        h += _DH[d]
    return out


def history_json(steps: tuple[LaguerreStep, ...]) -> dict:
    return {
        "steps": [
            {"d": d, "w": (f"yq^{i}" if delta else f"q^{i}")} for d, delta, i in steps
        ]
    }


@lru_cache(maxsize=None)
def zn_histories(N: int) -> MPoly:
    """Partition function from Laguerre histories of N+1 steps.

    y * Z(N) is the sum over histories of
    a^(type 2 steps right of every type 1 step) * b^(type 1 steps - 1) * weight;
    every nonempty history opens with a type 1 step, so the -1 is safe.
    """
    acc: dict[tuple[int, int, int, int], int] = {}
    for steps in enumerate_laguerre(N + 1):
        flags = history_type_flags(steps)
        type1_positions = [k for k, (t1, _) in enumerate(flags) if t1]
        last1 = type1_positions[-1]
        late2 = sum(1 for k, (_, t2) in enumerate(flags) if t2 and k > last1)
        ey = sum(delta for _, delta, _ in steps)
        eq = sum(i for _, _, i in steps)
        key = (ey, eq, late2, len(type1_positions) - 1)
        acc[key] = acc.get(key, 0) + 1
    return exact_div_var(MPoly(acc), "y", 1)


# ---------------------------------------------------------------------------
# The transfer-matrix families P, R, R*, B, B*
# ---------------------------------------------------------------------------

Step = tuple[str, tuple]  # (direction, weight tag)


def step_weight(d: str, tag: tuple, h: int) -> MPoly:
    """Resolve a symbolic step tag at starting height h to its polynomial."""
    kind = tag[0]
    if kind == "frac":
        i = tag[1]
        return monomial(1, eq=i) - monomial(1, eq=i + 1)
    if kind == "one":
        return ONE
    if kind == "negq":
        return -monomial(1, eq=h + 1)
    if kind == "oney":
        return ONE + Y
    if kind == "qpow":
        return monomial(1, eq=h)
    if kind == "ab":
        return (ALPHA_TILDE + Y * BETA_TILDE) * monomial(1, eq=h)
    if kind == "y":
        return Y
    if kind == "negab":
        return -(Y * ALPHA_TILDE * BETA_TILDE) * monomial(1, eq=h - 1)
    raise ValueError(f"unknown step tag {tag!r}")


def step_weight_string(d: str, tag: tuple, h: int) -> str:
    kind = tag[0]
    if kind == "frac":
        return f"q^{tag[1]}-q^{tag[1] + 1}"
    if kind == "one":
        return "1"
    if kind == "negq":
        return f"-q^{h + 1}"
    if kind == "oney":
        return "1+y"
    if kind == "qpow":
        return f"q^{h}"
    if kind == "ab":
        return f"(at+y*bt)q^{h}"
    if kind == "y":
        return "y"
    if kind == "negab":
        return f"-y*at*bt*q^{h - 1}"
    raise ValueError(f"unknown step tag {tag!r}")


def path_weight(steps: tuple[Step, ...]) -> MPoly:
    w = ONE
    h = 0
    for d, tag in steps:
        w = w * step_weight(d, tag, h)
        h += _DH[d]
    return w


def path_json(steps: tuple[Step, ...]) -> dict:
    out = []
    h = 0
    for d, tag in steps:
        out.append({"d": d, "w": step_weight_string(d, tag, h)})
        h += _DH[d]
    return {"steps": out}


def _family_options(family: str, d: str, h: int) -> list[tuple]:
    """Admissible weight tags for a step of direction d at starting height h."""
    split_up = family in ("P", "R*", "B*")
    if d == UP:
        if split_up:
            return [("frac", i) for i in range(h + 1)]
        return [("one",), ("negq",)]
    if d == LEVEL:
        if family == "P":
            return [("oney",), ("ab",)]
        if family in ("R", "R*"):
            return [("oney",), ("qpow",)]
        return [("ab",)]
    if family == "P":
        return [("y",), ("negab",)]
    if family in ("R", "R*"):
        return [("y",)]
    return [("negab",)]


def is_valid_family_path(steps: tuple[Step, ...], family: str, q_levels: int | None = None) -> bool:
    h = 0
    count = 0
    for d, tag in steps:
        if d not in _DH or tag not in _family_options(family, d, h):
            return False
        if d == LEVEL and tag[0] == "qpow":
            count += 1
        h += _DH[d]
        if h < 0:
            return False
    if h != 0:
        return False
    return q_levels is None or count == q_levels


def _enumerate_family(length: int, family: str, q_levels: int | None = None) -> Iterator[tuple[Step, ...]]:
    steps: list[Step] = []

    def rec(h: int, remaining: int, count: int):
        if remaining == 0:
            if h == 0 and (q_levels is None or count == q_levels):
                yield tuple(steps)
            return
        if h > remaining:
            return
        for d in (UP, LEVEL, DOWN):
            if d == UP and h + 1 > remaining - 1:
                continue
            if d == DOWN and h == 0:
                continue
            for tag in _family_options(family, d, h):
                nc = count + (1 if d == LEVEL and tag[0] == "qpow" else 0)
                if q_levels is not None and nc > q_levels:
                    continue
                steps.append((d, tag))
                yield from rec(h + _DH[d], remaining - 1, nc)
                steps.pop()

    yield from rec(0, length, 0)


def enumerate_PN(N: int) -> Iterator[tuple[Step, ...]]:
    """Family P paths of length N, one object per discrete weight choice."""
    return _enumerate_family(N, "P")


def enumerate_R_star(N: int, n: int) -> Iterator[tuple[Step, ...]]:
    return _enumerate_family(N, "R*", q_levels=n)


def enumerate_B_star(n: int) -> Iterator[tuple[Step, ...]]:
    return _enumerate_family(n, "B*")


def enumerate_R(N: int, n: int) -> Iterator[tuple[Step, ...]]:
    return _enumerate_family(N, "R", q_levels=n)


def enumerate_B(n: int) -> Iterator[tuple[Step, ...]]:
    return _enumerate_family(n, "B")


# Weighted sums by dynamic programming.  The split up-step alternatives of a
# starred family sum to 1 - q^(h+1), so starred and unstarred sums coincide
# and the DP can use the summed weight per (direction, height).


def _up_weight(h: int) -> MPoly:
    return ONE - monomial(1, eq=h + 1)


@lru_cache(maxsize=None)
def sum_R(N: int, n: int) -> MPoly:
    """Sum of weights over the R (equivalently R*) family."""
    if not 0 <= n <= N:
        raise ValueError("need 0 <= n <= N")
    # state: (height, q-power level steps so far) -> accumulated weight
    cur: dict[tuple[int, int], MPoly] = {(0, 0): ONE}
    for _ in range(N):
        nxt: dict[tuple[int, int], MPoly] = {}

        def put(key, val):
            nxt[key] = nxt.get(key, ZERO) + val

        for (h, c), w in cur.items():
            put((h + 1, c), w * _up_weight(h))
            put((h, c), w * (ONE + Y))
            if c < n:
                put((h, c + 1), w * monomial(1, eq=h))
            if h > 0:
                put((h - 1, c), w * Y)
        cur = nxt
    return cur.get((0, n), ZERO)


@lru_cache(maxsize=None)
def sum_B(n: int) -> MPoly:
    """Sum of weights over the B (equivalently B*) family."""
    level = ALPHA_TILDE + Y * BETA_TILDE
    down = -(Y * ALPHA_TILDE * BETA_TILDE)
    cur: dict[int, MPoly] = {0: ONE}
    for _ in range(n):
        nxt: dict[int, MPoly] = {}

        def put(h, val):
            nxt[h] = nxt.get(h, ZERO) + val

        for h, w in cur.items():
            put(h + 1, w * _up_weight(h))
            put(h, w * level * monomial(1, eq=h))
            if h > 0:
                put(h - 1, w * down * monomial(1, eq=h - 1))
        cur = nxt
    return cur.get(0, ZERO)


@lru_cache(maxsize=None)
def zn_paths(N: int) -> MPoly:
    """Partition function as the family-P weighted sum divided by (1-q)^N."""
    level = (ONE + Y) + (ALPHA_TILDE + Y * BETA_TILDE) * Q**0
    cur: dict[int, MPoly] = {0: ONE}
    for _ in range(N):
        nxt: dict[int, MPoly] = {}

        def put(h, val):
            nxt[h] = nxt.get(h, ZERO) + val

        for h, w in cur.items():
            put(h + 1, w * _up_weight(h))
            put(h, w * ((ONE + Y) + (ALPHA_TILDE + Y * BETA_TILDE) * monomial(1, eq=h)))
            if h > 0:
                put(h - 1, w * (Y - Y * ALPHA_TILDE * BETA_TILDE * monomial(1, eq=h - 1)))
        cur = nxt
    return exact_div_pow_one_minus_q(cur.get(0, ZERO), N)


def enumerate_core(length: int, n_levels: int) -> Iterator[tuple[Step, ...]]:
    """Core paths: length steps, exactly n_levels level steps, and no peak
    whose up step carries weight 1.

    Weights: up at height h is 1 or -q^(h+1), level at h is q^h, down is y
    (the down steps carry the y-bookkeeping of the family-R paths they are
    split off from).
    """
    steps: list[Step] = []

    def rec(h: int, remaining: int, count: int):
        if remaining == 0:
            if h == 0 and count == n_levels:
                yield tuple(steps)
            return
        if h > remaining or count > n_levels:
            return
        for tag in (("one",), ("negq",)):
            if h + 1 <= remaining - 1:
                steps.append((UP, tag))
                yield from rec(h + 1, remaining - 1, count)
                steps.pop()
        steps.append((LEVEL, ("qpow",)))
        yield from rec(h, remaining - 1, count + 1)
        steps.pop()
        if h > 0 and not (steps and steps[-1] == (UP, ("one",))):
            steps.append((DOWN, ("y",)))
            yield from rec(h - 1, remaining - 1, count)
            steps.pop()

    yield from rec(0, length, 0)


def core_sum(length: int, n_levels: int) -> MPoly:
    """Weighted sum over the core family; closes to
    (-y)^i q^(i(i+1)/2) [n+i, i]_q for length n + 2i."""
    total = ZERO
    for p in enumerate_core(length, n_levels):
        total = total + path_weight(p)
    return total


def count_family(length: int, family: str, q_levels: int | None = None) -> int:
    """Unweighted cardinality (each discrete weight alternative counted once)."""
    cur: dict[tuple[int, int], int] = {(0, 0): 1}
    for _ in range(length):
        nxt: dict[tuple[int, int], int] = {}
        for (h, c), m in cur.items():
            for d in (UP, LEVEL, DOWN):
                if d == DOWN and h == 0:
                    continue
                for tag in _family_options(family, d, h):
                    nc = c + (1 if d == LEVEL and tag[0] == "qpow" else 0)
                    if q_levels is not None and nc > q_levels:
                        continue
                    key = (h + _DH[d], nc)
                    nxt[key] = nxt.get(key, 0) + m
        cur = nxt
    return sum(m for (h, c), m in cur.items() if h == 0 and (q_levels is None or c == q_levels))


# ---------------------------------------------------------------------------
# J-fraction moments
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MomentRecurrence:
    """Three-term recurrence data: level weights b(h), down weights lam(h).

    The N-th moment of the orthogonal sequence with recurrence
    x P_n = P_(n+1) + b_n P_n + lam_n P_(n-1) is the weighted Motzkin sum
    with level weight b(h) and, pairing each up step with its down step,
    a factor lam(h) on every down step starting at height h.
    """

    b: Callable[[int], MPoly]
    lam: Callable[[int], MPoly]


def jfraction_moment(rec: MomentRecurrence, N: int) -> MPoly:
    cur: dict[int, MPoly] = {0: ONE}
    for _ in range(N):
        nxt: dict[int, MPoly] = {}

        def put(h, val):
            if val:
                nxt[h] = nxt.get(h, ZERO) + val

        for h, w in cur.items():
            put(h + 1, w)
            put(h, w * rec.b(h))
            if h > 0:
                put(h - 1, w * rec.lam(h))
        cur = nxt
    return cur.get(0, ZERO)


# ---------------------------------------------------------------------------
# Dyck paths, Fine paths, and the q = 0 pair formula
# ---------------------------------------------------------------------------


def _check_dyck(steps) -> tuple[str, ...]:
    steps = tuple(steps)
    h = 0
    for s in steps:
        if s == UP:
            h += 1
        elif s == DOWN:
            h -= 1
        else:
            raise MalformedPath(f"bad Dyck step {s!r}")
        if h < 0:
            raise MalformedPath("path dips below the axis")
    if h != 0:
        raise MalformedPath("path does not return to height 0")
    return steps


def returns(steps) -> int:
    """Number of returns to height 0 of a Dyck path."""
    steps = _check_dyck(steps)
    h = 0
    ret = 0
    for s in steps:
        h += 1 if s == UP else -1
        if h == 0:
            ret += 1
    return ret


def peaks(steps) -> int:
    """Number of up-down factors of a Dyck path."""
    steps = _check_dyck(steps)
    return sum(1 for i in range(len(steps) - 1) if steps[i] == UP and steps[i + 1] == DOWN)


def enumerate_dyck(n: int) -> Iterator[tuple[str, ...]]:
    """All Dyck paths with 2n steps."""
    steps: list[str] = []

    def rec(h: int, remaining: int):
        if remaining == 0:
            yield tuple(steps)
            return
        if h + 1 <= remaining - 1:
            steps.append(UP)
            yield from rec(h + 1, remaining - 1)
            steps.pop()
        if h > 0:
            steps.append(DOWN)
            yield from rec(h - 1, remaining - 1)
            steps.pop()

    yield from rec(0, 2 * n)


def is_fine(steps: tuple[str, ...]) -> bool:
    """No peak whose up step starts at height 0 (no Dyck factor split there)."""
    h = 0
    for i, s in enumerate(steps):
        if s == UP and h == 0 and i + 1 < len(steps) and steps[i + 1] == DOWN:
            return False
        h += 1 if s == UP else -1
    return True


@lru_cache(maxsize=None)
def fine_poly_paths(n: int) -> MPoly:
    """F_n(y): peak distribution over Fine paths of length 2n."""
    acc: dict[tuple[int, int, int, int], int] = {}
    for d in enumerate_dyck(n):
        if is_fine(d):
            k = peaks(d)
            key = (k, 0, 0, 0)
            acc[key] = acc.get(key, 0) + 1
    return MPoly(acc)


@lru_cache(maxsize=None)
def _returns_gf(m: int) -> dict[int, int]:
    # number of Dyck paths of length 2m with a given returns count
    out: dict[int, int] = {}
    for d in enumerate_dyck(m):
        r = returns(d)
        out[r] = out.get(r, 0) + 1
    return out


@lru_cache(maxsize=None)
def dyck_pair_sum_q0(N: int) -> MPoly:
    """Sum of b^ret(D1) a^ret(D2) over Dyck pairs with lengths adding to 2N.

    Equals the partition function at y = 1, q = 0.
    """
    acc = ZERO
    for k in range(N + 1):
        g1 = _returns_gf(k)
        g2 = _returns_gf(N - k)
        part: dict[tuple[int, int, int, int], int] = {}
        for r1, c1 in g1.items():
            for r2, c2 in g2.items():
                key = (0, 0, r2, r1)
                part[key] = part.get(key, 0) + c1 * c2
        acc = acc + MPoly(part)
    return acc
