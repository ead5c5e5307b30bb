"""The (k)-composition calculus: joining maps along handles.

Joining maps D, D' along same-kind handles (a, b) and (a', b') turns the
four fixed points of x into the new 2-cycles (a, a') and (b, b'); y and
the reflection are untouched.  The effect on the cycles of w is a pure
successor swap at the four points -- merge_law_check verifies the
resulting concatenations and insertions case by case.

Composition expressions use the published chain notation: "L(2)M" joins
L and M along their (2)-handles, "4G" abbreviates a chain of four copies
of G joined by (1)-handles, and chains associate to the left.  At each
join both sides use their free handle of the required kind with the
largest minimum point; with that convention the chain recipes reproduce
the published cycle data exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .atlas import BASIC_MAP_IDS, basic_map
from .maps import HurwitzMap, MapError
from .perm import Permutation

__all__ = [
    "CompositionError",
    "k_compose",
    "self_join",
    "CompositionExpr",
    "Leaf",
    "Join",
    "parse_expr",
    "eval_expr",
    "pick_handle",
    "MergeVerdict",
    "merge_law_check",
]


class CompositionError(MapError):
    """A join cannot be performed as requested."""


def _shifted(p, offset, total):
    arr = np.arange(total, dtype=np.int64)
    arr[offset : offset + p.degree] = p.array + offset
    return Permutation._trusted(arr)


def _extended(p, total):
    arr = np.arange(total, dtype=np.int64)
    arr[: p.degree] = p.array
    return Permutation._trusted(arr)


def _check_handle(m, h):
    if h not in m.find_handles(h.k):
        raise CompositionError(f"handle {h} does not belong to the map")
    if not h.mirror_paired:
        # Only the map with overlapping handles has such pairs; the
        # composed reflection (the union of the two) would violate its
        # defining relations there.
        raise CompositionError(
            f"handle {h} is not reflection-paired; the joined map would "
            "have no inherited reflection"
        )


def k_compose(d1, h1, d2, h2):
    """Join d1 and d2 along handles of the same kind.

    The result lives on the disjoint union: d1's points keep their labels
    and d2's are shifted up by d1's degree.
    """
    if h1.k != h2.k:
        raise CompositionError(f"handle kinds differ: ({h1.k}) vs ({h2.k})")
    _check_handle(d1, h1)
    _check_handle(d2, h2)
    n = d1.n + d2.n
    x = _extended(d1.x, n) * _shifted(d2.x, d1.n, n)
    y = _extended(d1.y, n) * _shifted(d2.y, d1.n, n)
    t = _extended(d1.t, n) * _shifted(d2.t, d1.n, n)
    xa = np.array(x.array)
    a2, b2 = h2.a + d1.n, h2.b + d1.n
    xa[h1.a], xa[a2] = a2, h1.a
    xa[h1.b], xa[b2] = b2, h1.b
    return HurwitzMap(n, Permutation._trusted(xa), y, t)


def self_join(d, h1, h2):
    """Join a map to itself along two disjoint same-kind handles.

    Degree is unchanged, the fixed point vector drops by (4, 0, 0) and
    the genus rises by exactly one.
    """
    if h1.k != h2.k:
        raise CompositionError(f"handle kinds differ: ({h1.k}) vs ({h2.k})")
    if set(h1.points) & set(h2.points):
        raise CompositionError(f"handles {h1} and {h2} are not disjoint")
    _check_handle(d, h1)
    _check_handle(d, h2)
    xa = np.array(d.x.array)
    xa[h1.a], xa[h2.a] = h2.a, h1.a
    xa[h1.b], xa[h2.b] = h2.b, h1.b
    before = d.genus()
    out = HurwitzMap(d.n, Permutation._trusted(xa), d.y, d.t)
    if out.genus() != before + 1:
        raise CompositionError("self-join did not raise the genus by one")
    return out


# -- canonical handle choice ---------------------------------------------


def pick_handle(m, k):
    """The free (k)-handle used by chain evaluation: largest minimum point.

    Taking the most recently created component's handle first is what
    makes the published chain recipes come out with the published cycle
    data; find_handles still enumerates ascending.
    """
    handles = m.find_handles(k)
    if not handles:
        raise CompositionError(f"no free ({k})-handle available")
    return handles[-1]


def join(d1, k, d2):
    """k_compose with the canonical handle choice on both sides."""
    return k_compose(d1, pick_handle(d1, k), d2, pick_handle(d2, k))


# -- expression trees ------------------------------------------------------


class CompositionExpr:
    pass


@dataclass(frozen=True)
class Leaf(CompositionExpr):
    map_id: str


@dataclass(frozen=True)
class Join(CompositionExpr):
    left: CompositionExpr
    k: int
    right: CompositionExpr


def parse_expr(text):
    """Parse chain notation: expr := term (join term)*, join := '(' [123] ')',
    term := [A-N] | integer [A-N].  "mG" is the left chain of m copies of
    G joined by (1)-handles; chains associate left."""
    tokens = _tokenize(text)
    pos = 0

    def take_term():
        nonlocal pos
        if pos >= len(tokens):
            raise CompositionError(f"expected a map name at end of {text!r}")
        kind, val = tokens[pos]
        if kind == "int":
            count = val
            pos += 1
            if pos >= len(tokens) or tokens[pos][0] != "map":
                raise CompositionError(f"expected a map name after {count} in {text!r}")
            mid = tokens[pos][1]
            pos += 1
            if count < 1:
                raise CompositionError("repeat count must be >= 1")
            node = Leaf(mid)
            for _ in range(count - 1):
                node = Join(node, 1, Leaf(mid))
            return node
        if kind == "map":
            pos += 1
            return Leaf(val)
        raise CompositionError(f"unexpected token {val!r} at position {pos} in {text!r}")

    node = take_term()
    while pos < len(tokens):
        kind, val = tokens[pos]
        if kind != "join":
            raise CompositionError(f"expected (k) join at token {pos} in {text!r}")
        pos += 1
        rhs = take_term()
        node = Join(node, val, rhs)
    return node


def _tokenize(text):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "(":
            j = text.find(")", i)
            if j < 0:
                raise CompositionError(f"unclosed '(' at position {i} in {text!r}")
            inner = text[i + 1 : j].strip()
            if inner not in ("1", "2", "3"):
                raise CompositionError(f"join kind must be 1, 2 or 3, got {inner!r}")
            out.append(("join", int(inner)))
            i = j + 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j])))
            i = j
        elif ch in BASIC_MAP_IDS:
            out.append(("map", ch))
            i += 1
        else:
            raise CompositionError(f"bad character {ch!r} at position {i} in {text!r}")
    return out


def eval_expr(expr):
    """Evaluate a chain expression (or its text) to a map."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    if isinstance(expr, Leaf):
        return basic_map(expr.map_id)
    if isinstance(expr, Join):
        return join(eval_expr(expr.left), expr.k, eval_expr(expr.right))
    raise TypeError(f"not a composition expression: {expr!r}")


# -- merge law verification -----------------------------------------------


@dataclass
class MergeVerdict:
    """Outcome of checking a join against the cycle merge laws."""

    case: str          # "concat" | "insert_left" | "insert_right" | "cross"
    ok: bool
    details: list

    def __bool__(self):
        return self.ok


def merge_law_check(d1, h1, d2, h2, result):
    """Verify that result's w-cycles relate to d1's and d2's exactly per
    the merge case analysis.

    At the four joined points the successor rule is a pure swap:

        a -> a'w',   a' -> aw,   b -> b'w',   b' -> bw

    and every other point keeps its old successor.  Which partition that
    produces depends on whether a, b share a cycle of w in d1 and whether
    a', b' do in d2: no sharing concatenates c_a c_a' and c_b c_b'; one
    side sharing inserts the other side's two cycles; both sides sharing
    crosses into c_a c_b' and c_b c_a'.
    """
    details = []
    ok = True
    off = d1.n
    w1, w2, wr = d1.w, d2.w, result.w

    same1 = d1.w_cycles.index_of[h1.a] == d1.w_cycles.index_of[h1.b]
    same2 = d2.w_cycles.index_of[h2.a] == d2.w_cycles.index_of[h2.b]
    if not same1 and not same2:
        case = "concat"
    elif same1 and not same2:
        case = "insert_left"
    elif same2 and not same1:
        case = "insert_right"
    else:
        case = "cross"

    swaps = {
        h1.a: w2[h2.a] + off,
        h2.a + off: w1[h1.a],
        h1.b: w2[h2.b] + off,
        h2.b + off: w1[h1.b],
    }
    for pt in range(result.n):
        expected = swaps.get(
            pt, w1[pt] if pt < off else w2[pt - off] + off
        )
        if wr[pt] != expected:
            ok = False
            details.append(f"successor of {pt}: got {wr[pt]}, expected {expected}")

    # predicted partition of the affected cycles
    ca = frozenset(d1.w_cycles.cycle_of(h1.a))
    cb = frozenset(d1.w_cycles.cycle_of(h1.b))
    ca2 = frozenset(p + off for p in d2.w_cycles.cycle_of(h2.a))
    cb2 = frozenset(p + off for p in d2.w_cycles.cycle_of(h2.b))
    got = {
        frozenset(result.w_cycles.cycle_of(pt))
        for pt in (h1.a, h1.b, h2.a + off, h2.b + off)
    }
    if case == "cross":
        # ca == cb and ca2 == cb2 split crosswise into two cycles: one
        # holding a with b', the other b with a'.
        cyc_a = frozenset(result.w_cycles.cycle_of(h1.a))
        cyc_b = frozenset(result.w_cycles.cycle_of(h1.b))
        cross_ok = (
            cyc_a != cyc_b
            and (cyc_a | cyc_b) == (ca | ca2)
            and not (cyc_a & cyc_b)
            and h2.b + off in cyc_a
            and h2.a + off in cyc_b
        )
        if not cross_ok:
            ok = False
            details.append("cross case: the shared cycles did not split crosswise")
    else:
        if case == "concat":
            predicted = {ca | ca2, cb | cb2}
        else:
            predicted = {ca | cb | ca2 | cb2}
        if got != predicted:
            ok = False
            details.append(
                f"merged cycle partition mismatch: got sizes "
                f"{sorted(len(s) for s in got)}, predicted {sorted(len(s) for s in predicted)}"
            )

    untouched = [
        frozenset(c) for c in d1.w_cycles if not ({h1.a, h1.b} & set(c))
    ] + [
        frozenset(p + off for p in c)
        for c in d2.w_cycles
        if not ({h2.a, h2.b} & set(c))
    ]
    result_cycles = {frozenset(c) for c in result.w_cycles}
    for c in untouched:
        if c not in result_cycles:
            ok = False
            details.append(f"untouched cycle of length {len(c)} was disturbed")

    return MergeVerdict(case, ok, details)
