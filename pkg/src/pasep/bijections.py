"""Bijections between permutations, Laguerre histories, and path pairs.

Two classical insertion bijections are implemented with explicit inverses:

* foata_zeilberger: the i-th step of the history records whether i is a
  cycle valley, cycle peak or neither, with weight y^delta q^j where
  delta = 1 iff i <= sigma(i) and j counts nestings of the arrow at i
  among the open arrows.  Total weight y^wex q^cr.

  Inverse: scan i = 1..n keeping the open upper arrows ordered by their
  future landing value and the open lower landing slots ordered by
  position.  An up step inserts a new arrow at index j and opens a slot at
  i.  A level step with delta=1 and j=0 is a fixed point; with j>0 it
  closes the front arrow (the one landing at i) and reinserts at j-1.  A
  level step with delta=0 or a down step lands its outgoing lower arrow on
  the open slot with exactly j open slots above it; a down step also closes
  the front upper arrow.

* francon_viennot: the k-th step records the local shape of the position
  of the value k (valley, peak, double ascent, double descent, with the
  conventions sigma(0) = 0 and sigma(n+1) = n+1), with weight y^delta q^i
  where delta = 1 iff that position is an ascent and i is the number of
  31-2 patterns whose "2" sits there.  Total weight y^asc q^(31-2).

  Inverse: grow a word over values and gap slots.  Reading the k-th step,
  value k replaces the slot with index i from the left by "slot k slot"
  (up), "k" (down), "k slot" (level, delta=1) or "slot k" (level, delta=0);
  the final leftover slot sits at the right end and is dropped.

The third bijection combines a length-N path of family R* with n q-power
level steps and a length-n path of family B* into a path of family P
(combine_paths), by letting the j-th step of the B* path ride on the j-th
q-power level step of the R* path.  The inverse (decompose_path) reads the
P path right to left and redistributes each step by a six-case rule table,
tracking the suffix starting heights h' and h'' with h = h' + h''.

The q = 0 reduction maps bicolor Motzkin paths (two level kinds, no second
kind at height 0) to pairs of Dyck paths through step doubling and the
unique factorization D = D1 up D2 down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .paths import DOWN, LEVEL, UP, LaguerreStep, LengthMismatch, Step, _DH
from .perms import Perm, inverse


# ---------------------------------------------------------------------------
# Foata-Zeilberger
# ---------------------------------------------------------------------------


def foata_zeilberger(sigma: Perm) -> tuple[LaguerreStep, ...]:
    n = len(sigma)
    inv = inverse(sigma)
    steps: list[LaguerreStep] = []
    for i in range(1, n + 1):
        si = sigma[i - 1]
        pre = inv[i - 1]
        if pre > i and si > i:
            d = UP
        elif pre < i and si < i:
            d = DOWN
        else:
            d = LEVEL
        if i <= si:
            j = sum(1 for k in range(1, i) if i <= sigma[k - 1] < si)
            steps.append((d, 1, j))
        else:
            j = sum(1 for k in range(i + 1, n + 1) if si < sigma[k - 1] < i)
            steps.append((d, 0, j))
    return tuple(steps)


def foata_zeilberger_inverse(history: tuple[LaguerreStep, ...]) -> Perm:
    n = len(history)
    sigma = [0] * n
    open_upper: list[int] = []  # departure positions, ascending by landing value
    open_slots: list[int] = []  # positions awaiting a lower arrow, ascending
    for i, (d, delta, j) in enumerate(history, start=1):
        if d == UP:
            open_upper.insert(j, i)
            open_slots.append(i)
        elif d == LEVEL and delta == 1:
            if j == 0:
                sigma[i - 1] = i
            else:
                k = open_upper.pop(0)
                sigma[k - 1] = i
                open_upper.insert(j - 1, i)
        elif d == LEVEL:
            m = open_slots.pop(len(open_slots) - 1 - j)
            sigma[i - 1] = m
            open_slots.append(i)
        else:
            k = open_upper.pop(0)
            sigma[k - 1] = i
            m = open_slots.pop(len(open_slots) - 1 - j)
            sigma[i - 1] = m
    return tuple(sigma)


@dataclass(frozen=True)
class FZStepInfo:
    lr_max: bool
    rl_min: bool
    fixed_point: bool
    type1: bool
    type2: bool


def fz_step_types(sigma: Perm) -> list[FZStepInfo]:
    """Per-index report backing the left-to-right-maximum and
    right-to-left-minimum characterizations of type 1 / type 2 steps."""
    n = len(sigma)
    steps = foata_zeilberger(sigma)
    out = []
    h = 0
    running_max = 0
    suffix_min = [0] * (n + 2)
    suffix_min[n + 1] = n + 1
    for i in range(n, 0, -1):
        suffix_min[i] = min(sigma[i - 1], suffix_min[i + 1])
    for i in range(1, n + 1):
        d, delta, j = steps[i - 1]
        running_max = max(running_max, sigma[i - 1])
        out.append(
            FZStepInfo(
                lr_max=sigma[i - 1] == running_max,
                rl_min=sigma[i - 1] == suffix_min[i],
                fixed_point=sigma[i - 1] == i,
                type1=delta == 1 and j == h,
                type2=delta == 0 and j == h - 1,
            )
        )
        h += _DH[d]
    return out


# ---------------------------------------------------------------------------
# Francon-Viennot
# ---------------------------------------------------------------------------


def francon_viennot(sigma: Perm) -> tuple[LaguerreStep, ...]:
    n = len(sigma)
    inv = inverse(sigma)
    steps: list[LaguerreStep] = []
    for k in range(1, n + 1):
        j = inv[k - 1]
        left = sigma[j - 2] if j >= 2 else 0
        right = sigma[j] if j <= n - 1 else n + 1
        if left > k < right:
            d = UP
        elif left < k > right:
            d = DOWN
        else:
            d = LEVEL
        delta = 1 if k < right else 0
        i31 = sum(1 for i in range(1, j - 1) if sigma[i] < k < sigma[i - 1])
        steps.append((d, delta, i31))
    return tuple(steps)


_SLOT = 0


def francon_viennot_inverse(history: tuple[LaguerreStep, ...]) -> Perm:
    word: list[int] = [_SLOT]
    for k, (d, delta, i) in enumerate(history, start=1):
        pos = -1
        seen = -1
        for idx, x in enumerate(word):
            if x == _SLOT:
                seen += 1
                if seen == i:
                    pos = idx
                    break
        if pos < 0:
            raise ValueError("slot index out of range; invalid history")
        if d == UP:
            word[pos : pos + 1] = [_SLOT, k, _SLOT]
        elif d == DOWN:
            word[pos : pos + 1] = [k]
        elif delta == 1:
            word[pos : pos + 1] = [k, _SLOT]
        else:
            word[pos : pos + 1] = [_SLOT, k]
    if word[-1] != _SLOT or _SLOT in word[:-1]:
        raise ValueError("leftover slot misplaced; invalid history")
    return tuple(word[:-1])


@dataclass(frozen=True)
class FVStepInfo:
    rl_min: bool  # the position of value i is a right-to-left minimum
    rl_max: bool
    type1: bool
    type2: bool
    type1_all_left: bool  # every type 1 step lies strictly left of step i


def fv_step_types(sigma: Perm) -> list[FVStepInfo]:
    n = len(sigma)
    inv = inverse(sigma)
    steps = francon_viennot(sigma)
    flags = []
    h = 0
    for d, delta, i in steps:
        flags.append((delta == 1 and i == h, delta == 0 and i == h - 1))
        h += _DH[d]
    suffix_min = [0] * (n + 2)
    suffix_max = [0] * (n + 2)
    suffix_min[n + 1] = n + 1
    suffix_max[n + 1] = 0
    for p in range(n, 0, -1):
        suffix_min[p] = min(sigma[p - 1], suffix_min[p + 1])
        suffix_max[p] = max(sigma[p - 1], suffix_max[p + 1])
    last_type1 = max((k for k, (t1, _) in enumerate(flags) if t1), default=-1)
    out = []
    for i in range(1, n + 1):
        p = inv[i - 1]
        t1, t2 = flags[i - 1]
        out.append(
            FVStepInfo(
                rl_min=sigma[p - 1] == suffix_min[p],
                rl_max=sigma[p - 1] == suffix_max[p],
                type1=t1,
                type2=t2,
                type1_all_left=last_type1 < i - 1,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Combining R* and B* paths into P paths
# ---------------------------------------------------------------------------


def combine_paths(h1: tuple[Step, ...], h2: tuple[Step, ...]) -> tuple[Step, ...]:
    """Ride the j-th B* step on the j-th q-power level step of the R* path.

    The combined step keeps the R* step unless that step is a q-power
    level, in which case it takes the direction of the next B* step and the
    product weight; the product is again a single admissible tag because
    q^h' * (q^i - q^(i+1)) = q^(h'+i) - q^(h'+i+1).
    """
    q_level_count = sum(1 for d, tag in h1 if d == LEVEL and tag[0] == "qpow")
    if q_level_count != len(h2):
        raise LengthMismatch(
            f"B* path length {len(h2)} != {q_level_count} q-power level steps"
        )
    out: list[Step] = []
    h1h = 0
    j = 0
    for d1, t1 in h1:
        if d1 == LEVEL and t1[0] == "qpow":
            d2, t2 = h2[j]
            j += 1
            if d2 == UP:
                out.append((UP, ("frac", h1h + t2[1])))
            elif d2 == LEVEL:
                out.append((LEVEL, ("ab",)))
            else:
                out.append((DOWN, ("negab",)))
        else:
            out.append((d1, t1))
        h1h += _DH[d1]
    return tuple(out)


def decompose_scan(p_steps: tuple[Step, ...]) -> tuple[tuple[Step, ...], tuple[Step, ...], int, int]:
    """Right-to-left rule-table scan, valid on Motzkin suffixes too.

    Returns (h1, h2, h1_start, h2_start).  Reading a step prepends to both
    partial suffixes per the rule table; the height bookkeeping
    h = h' + h'' between the three suffix starting heights is asserted at
    every intermediate stage.
    """
    h1_rev: list[Step] = []
    h2_rev: list[Step] = []
    h1h = 0
    h2h = 0
    ph = 0
    for d, tag in reversed(p_steps):
        if d == DOWN and tag[0] == "negab":
            h1_rev.append((LEVEL, ("qpow",)))
            h2_rev.append((DOWN, ("negab",)))
            h2h += 1
        elif d == DOWN and tag[0] == "y":
            h1_rev.append((DOWN, ("y",)))
            h1h += 1
        elif d == LEVEL and tag[0] == "oney":
            h1_rev.append((LEVEL, ("oney",)))
        elif d == LEVEL and tag[0] == "ab":
            h1_rev.append((LEVEL, ("qpow",)))
            h2_rev.append((LEVEL, ("ab",)))
        elif d == UP and tag[0] == "frac":
            i = tag[1]
            if i < h1h:
                h1_rev.append((UP, ("frac", i)))
                h1h -= 1
            else:
                h1_rev.append((LEVEL, ("qpow",)))
                h2_rev.append((UP, ("frac", i - h1h)))
                h2h -= 1
        else:
            raise ValueError(f"step {(d, tag)!r} is not admissible in family P")
        ph -= _DH[d]
        assert ph == h1h + h2h, "height bookkeeping h = h' + h'' violated"
    return tuple(reversed(h1_rev)), tuple(reversed(h2_rev)), h1h, h2h


def decompose_path(p_steps: tuple[Step, ...]) -> tuple[tuple[Step, ...], tuple[Step, ...]]:
    """Inverse of combine_paths on closed family-P paths."""
    h1, h2, h1h, h2h = decompose_scan(p_steps)
    if h1h != 0 or h2h != 0:
        raise ValueError("decomposition of a closed path left open suffixes")
    return h1, h2


# ---------------------------------------------------------------------------
# Bicolor Motzkin paths and the q = 0 Dyck pair reduction
# ---------------------------------------------------------------------------

L2 = "L2"  # second horizontal kind, forbidden at height 0
_BDH = {UP: 1, LEVEL: 0, L2: 0, DOWN: -1}


def is_valid_bicolor(steps: tuple[str, ...]) -> bool:
    h = 0
    for s in steps:
        if s not in _BDH:
            return False
        if s == L2 and h == 0:
            return False
        h += _BDH[s]
        if h < 0:
            return False
    return h == 0


def enumerate_bicolor(n: int) -> Iterator[tuple[str, ...]]:
    steps: list[str] = []

    def rec(h: int, remaining: int):
        if remaining == 0:
            if h == 0:
                yield tuple(steps)
            return
        if h > remaining:
            return
        for s in (UP, LEVEL, L2, DOWN):
            if s == L2 and h == 0:
                continue
            if s == DOWN and h == 0:
                continue
            if s == UP and h + 1 > remaining - 1:
                continue
            steps.append(s)
            yield from rec(h + _BDH[s], remaining - 1)
            steps.pop()

    yield from rec(0, n)


_DOUBLING = {UP: (UP, UP), LEVEL: (UP, DOWN), L2: (DOWN, UP), DOWN: (DOWN, DOWN)}


def bicolor_to_dyck_pair(steps: tuple[str, ...]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Step doubling followed by the last-arch factorization D = D1 up D2 down.

    A bicolor path of length m maps to a Dyck path of length 2m whose first
    and last steps are forced, so the two returned Dyck paths have lengths
    summing to 2m - 2.  The empty path maps to the empty pair.
    """
    if not steps:
        return ((), ())
    if not is_valid_bicolor(steps):
        raise ValueError("not a valid bicolor Motzkin path")
    d: list[str] = []
    for s in steps:
        d.extend(_DOUBLING[s])
    h = 0
    last_zero = 0
    for idx, s in enumerate(d[:-1]):
        h += 1 if s == UP else -1
        if h == 0:
            last_zero = idx + 1
    d1 = tuple(d[:last_zero])
    assert d[last_zero] == UP and d[-1] == DOWN
    d2 = tuple(d[last_zero + 1 : -1])
    return d1, d2


def bicolor_mark_counts(steps: tuple[str, ...]) -> tuple[int, int]:
    """(#up-or-L1 steps at height 0, #down-or-L2 steps at height 1 right of those).

    These are the boundary-weight marks carried through the q = 0 reduction;
    the first count equals ret(D1) + 1 and the second ret(D2).
    """
    h = 0
    beta_positions = []
    candidates = []
    for idx, s in enumerate(steps):
        if h == 0 and s in (UP, LEVEL):
            beta_positions.append(idx)
        if h == 1 and s in (DOWN, L2):
            candidates.append(idx)
        h += _BDH[s]
    last_beta = beta_positions[-1] if beta_positions else -1
    return len(beta_positions), sum(1 for idx in candidates if idx > last_beta)
