"""Recipes that assemble pairs of same-degree maps with distinct fixed
point vectors, one per residue class mod 14.

The ingredients: a stock chain U_s of degree 14s built from copies of G
(plus one A or E when s is not divisible by 3); fourteen chain maps V_r
of degree d_r = r mod 14, each carrying a useful cycle of prime length
p_r and a designated free (1)-handle whose points lie in w-cycles of
lengths 1 and l_r; and the two markers X_1 = 4G+3A and X_2 = L(2)M of
degree 210 whose fixed point vectors (6,6,0) and (2,0,7) differ in every
coordinate.  A plan selects a residue class, a stock parameter and a
variant; build_pair assembles W_i = W(1)X_i and verifies that the
certifying prime's cycle is present, useful and coprime to every other
cycle length.

Variants: the eight residues whose p_r survives next to the 70-cycle
created by attaching X_2 build directly ("standard"); four residues swap
V_r for V_{r+7 mod 14} and restore the degree with a copy of C
("shifted"); r = 1 swaps in V_5 and adds a copy of M; r = 8 swaps in
V_12 and chains an extra M through the (2)-handles, merging the 47-cycle
into one of prime length 83.  "small_n" drops the stock entirely
(degree d_r + 210), which fails exactly for r in {4, 6, 10} where
l_r + 57 is divisible by p_r; "s3_shortcut" runs the shifted and r = 1
recipes with the minimal stock.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .atlas import basic_map
from .compose import eval_expr, join, pick_handle
from .maps import MapError

__all__ = [
    "PlanError",
    "ConstructionPlan",
    "MapPair",
    "CHAIN_RECIPES",
    "stock_U",
    "v_map",
    "designated_handle",
    "x_map",
    "build_pair",
    "small_case",
    "minimal_plan",
    "all_minimal_plans",
    "SMALL_CASE_DEGREES",
    "S3_SHORTCUT_DEGREES",
    "MINIMAL_DEGREES",
]


class PlanError(ValueError):
    """Invalid construction plan parameters."""


# Chain expression, degree d_r, w-cycle data split as the designated
# (1, l_r) pair plus the rest, certifying prime p_r, and l'_r = l_r + 13.
CHAIN_RECIPES = {
    0: ("H", 42, (1, 10), (3, 11, 17), 17, 23),
    1: ("B(3)H", 57, (1, 10), (3, 5, 14, 24), 5, 23),
    2: ("F(2)E(1)G(1)H", 142, (1, 13), (2, 2, 3, 11, 17, 22, 23, 24, 24), 17, 26),
    3: ("E(2)I(2)F", 115, (1, 9), (4, 10, 17, 22, 22, 30), 17, 22),
    4: ("J(1)K", 144, (1, 11), (2, 5, 10, 16, 17, 22, 60), 17, 24),
    5: ("C(3)N(1)E(2)F", 187, (1, 17), (2, 8, 18, 20, 24, 24, 30, 43), 43, 30),
    6: ("B(3)C(1)G(1)M(2)F", 216, (1, 13), (2, 2, 5, 8, 11, 12, 14, 24, 26, 34, 64), 5, 26),
    7: ("C(1)E(2)E", 77, (1, 9), (2, 4, 8, 17, 18, 18), 17, 22),
    8: ("B(3)C", 36, (1, 11), (5, 8, 11), 5, 24),
    9: ("C(3)H(1)J", 135, (1, 11), (1, 2, 3, 8, 10, 16, 19, 21, 21, 22), 19, 24),
    10: ("B(3)C(1)G(1)E(2)F", 136, (1, 13), (2, 2, 5, 8, 11, 22, 24, 24, 24), 5, 26),
    11: ("C(1)J(1)J", 165, (1, 11), (2, 2, 4, 8, 10, 10, 16, 16, 19, 22, 22, 22), 19, 24),
    12: ("J(1)M", 180, (1, 11), (2, 10, 12, 14, 16, 19, 22, 26, 47), 47, 24),
    13: ("F(2)I(2)M", 195, (1, 51), (4, 10, 12, 14, 23, 26, 26, 28), 23, 64),
}

STANDARD_RS = frozenset({0, 2, 3, 4, 5, 7, 12, 13})
SHIFTED_RS = frozenset({6, 9, 10, 11})
SHIFT_TARGET = {6: 13, 9: 2, 10: 3, 11: 4}
SMALL_EXCLUDED = frozenset({4, 6, 10})

VARIANTS = ("standard", "shifted", "r1_special", "r8_special", "small_n", "s3_shortcut")

# Published minimal degrees per residue class.
MINIMAL_DEGREES = {
    0: 294, 1: 589, 2: 394, 3: 367, 4: 396, 5: 439, 6: 510,
    7: 329, 8: 540, 9: 457, 10: 430, 11: 459, 12: 432, 13: 447,
}
SMALL_CASE_DEGREES = {
    0: 252, 1: 267, 2: 352, 3: 325, 5: 397, 7: 287, 8: 246,
    9: 345, 11: 375, 12: 390, 13: 405,
}
S3_SHORTCUT_DEGREES = {1: 547, 6: 468, 9: 415, 10: 388, 11: 417}


@dataclass(frozen=True)
class ConstructionPlan:
    r: int
    s: int = 3
    variant: str = None  # default picked from r

    def __post_init__(self):
        if not 0 <= self.r <= 13:
            raise PlanError(f"r must be 0..13, got {self.r}")
        if self.variant is None:
            object.__setattr__(self, "variant", default_variant(self.r))
        if self.variant not in VARIANTS:
            raise PlanError(f"unknown variant {self.variant!r}")
        v = self.variant
        if v == "standard" and self.r not in STANDARD_RS:
            raise PlanError(
                f"standard recipe is only valid for r in {sorted(STANDARD_RS)}: "
                f"attaching the second marker creates a cycle length sharing "
                f"a factor with p_{self.r}"
            )
        if v == "shifted" and self.r not in SHIFTED_RS:
            raise PlanError(f"shifted recipe is only for r in {sorted(SHIFTED_RS)}")
        if v == "r1_special" and self.r != 1:
            raise PlanError("r1_special requires r = 1")
        if v == "r8_special" and self.r != 8:
            raise PlanError("r8_special requires r = 8")
        if v == "small_n" and self.r in SMALL_EXCLUDED:
            raise PlanError(
                f"no small case for r = {self.r}: l_r + 57 = "
                f"{CHAIN_RECIPES[self.r][2][1] + 57} is divisible by p_r = {CHAIN_RECIPES[self.r][4]}"
            )
        if v == "s3_shortcut" and self.r not in (SHIFTED_RS | {1}):
            raise PlanError("s3_shortcut applies to r in {1, 6, 9, 10, 11}")
        if v not in ("small_n",) and self.s < 3:
            raise PlanError(f"stock parameter s must be >= 3, got {self.s}")

    @property
    def s_star(self):
        """Effective stock parameter after the extra-G bump.

        The shifted and r = 1 recipes need three free (1)-handles in the
        stock; for s in {3, 4, 5} they add a whole copy of G (s + 3),
        which is what yields the published minimal degrees.  The
        s3_shortcut keeps s* = 3: with the minimal stock the single copy
        of G has exactly the three handles needed.
        """
        if self.variant in ("shifted", "r1_special"):
            return self.s + 3 if self.s in (3, 4, 5) else self.s
        if self.variant == "s3_shortcut":
            return 3
        return self.s

    @property
    def degree(self):
        r, v = self.r, self.variant
        if v == "standard":
            return 14 * self.s + CHAIN_RECIPES[r][1] + 210
        if v == "shifted":
            return 21 + 14 * self.s_star + CHAIN_RECIPES[SHIFT_TARGET[r]][1] + 210
        if v == "r1_special":
            return 14 * self.s_star + CHAIN_RECIPES[5][1] + 108 + 210
        if v == "r8_special":
            return 14 * self.s + CHAIN_RECIPES[12][1] + 108 + 210
        if v == "small_n":
            return CHAIN_RECIPES[r][1] + 210
        if v == "s3_shortcut":
            if r == 1:
                return 42 + CHAIN_RECIPES[5][1] + 108 + 210
            return 21 + 42 + CHAIN_RECIPES[SHIFT_TARGET[r]][1] + 210
        raise AssertionError(v)

    @property
    def stock_range(self):
        """Label range occupied by the stock chain in the assembled maps."""
        v = self.variant
        if v == "standard" or v == "r8_special":
            return (0, 14 * self.s)
        if v in ("shifted",) or (v == "s3_shortcut" and self.r != 1):
            return (21, 21 + 14 * self.s_star)
        if v in ("r1_special",) or (v == "s3_shortcut" and self.r == 1):
            return (0, 14 * self.s_star)
        return (0, 0)  # small_n has no stock

    @property
    def prime(self):
        r, v = self.r, self.variant
        if v in ("standard", "small_n"):
            return CHAIN_RECIPES[r][4]
        if v in ("shifted",):
            return CHAIN_RECIPES[SHIFT_TARGET[r]][4]
        if v in ("r1_special",):
            return CHAIN_RECIPES[5][4]
        if v == "r8_special":
            return 83
        if v == "s3_shortcut":
            return CHAIN_RECIPES[5][4] if r == 1 else CHAIN_RECIPES[SHIFT_TARGET[r]][4]
        raise AssertionError(v)


def default_variant(r):
    if r in STANDARD_RS:
        return "standard"
    if r in SHIFTED_RS:
        return "shifted"
    return "r1_special" if r == 1 else "r8_special"


def minimal_plan(r):
    """The plan realizing the published minimal degree for class r."""
    return ConstructionPlan(r, 3, default_variant(r))


def all_minimal_plans():
    return [minimal_plan(r) for r in range(14)]


@dataclass(frozen=True)
class MapPair:
    """Two maps of equal degree with fixed point vectors differing in all
    three coordinates."""

    w1: object
    w2: object
    plan: ConstructionPlan = None
    prime: int = None

    def __post_init__(self):
        if self.w1.n != self.w2.n:
            raise PlanError("pair members must have equal degree")
        d = self.w1.fixed_point_vector() - self.w2.fixed_point_vector()
        if 0 in d.as_tuple():
            raise PlanError(
                f"fixed point vectors must differ in all coordinates, difference {d.as_tuple()}"
            )

    @property
    def degree(self):
        return self.w1.n


# -- ingredients ------------------------------------------------------------


@lru_cache(maxsize=None)
def stock_U(s):
    """Chain of floor(s/3) copies of G, plus an A (s = 1 mod 3) or an E
    (s = 2 mod 3), all joined by (1)-handles; degree 14s."""
    if s < 3:
        raise PlanError(f"stock parameter must be >= 3, got {s}")
    out = basic_map("G")
    for _ in range(s // 3 - 1):
        out = join(out, 1, basic_map("G"))
    if s % 3 == 1:
        out = join(out, 1, basic_map("A"))
    elif s % 3 == 2:
        out = join(out, 1, basic_map("E"))
    assert out.n == 14 * s
    return out


@lru_cache(maxsize=None)
def v_map(r):
    """The chain map V_r, checked against its published cycle data."""
    expr, d_r, pre, post, p_r, lp = CHAIN_RECIPES[r]
    m = eval_expr(expr)
    if m.n != d_r:
        raise MapError(f"V_{r} degree {m.n} != published {d_r}")
    expect = tuple(sorted(pre + post))
    if tuple(m.w_cycles.lengths()) != expect:
        raise MapError(
            f"V_{r} w-cycles {m.w_cycles.lengths()} != published {expect}"
        )
    h = designated_handle(m)
    la = len(m.w_cycles.cycle_of(h.a))
    lb = len(m.w_cycles.cycle_of(h.b))
    if (la, lb) != pre:
        raise MapError(
            f"V_{r} designated handle sits in cycles ({la}, {lb}), published {pre}"
        )
    return m


def designated_handle(m):
    """The free (1)-handle a chain map exposes for the next join: the
    canonical (largest minimum point) choice."""
    return pick_handle(m, 1)


@lru_cache(maxsize=None)
def x_map(i):
    """The degree-210 markers: X_1 = 4G+3A, X_2 = L(2)M."""
    if i == 1:
        m = eval_expr("4G(1)A(1)A(1)A")
        assert m.fixed_point_vector().as_tuple() == (6, 6, 0)
        assert len(m.find_handles(1)) == 3
    elif i == 2:
        m = eval_expr("L(2)M")
        assert m.fixed_point_vector().as_tuple() == (2, 0, 7)
        assert len(m.find_handles(1)) == 1
    else:
        raise ValueError("marker index must be 1 or 2")
    assert m.n == 210
    return m


# -- pair assembly -----------------------------------------------------------


def _check_prime_cycle(m, p, label):
    """The certifying prime must divide exactly one cycle length, that
    cycle must have length exactly p, be useful, and satisfy p <= n-3."""
    lengths = list(m.w_cycles.lengths())
    divisible = [l for l in lengths if l % p == 0]
    if divisible != [p]:
        raise PlanError(
            f"{label}: certifying prime {p} divides cycle lengths {divisible}, "
            f"need exactly one cycle of length {p}"
        )
    if p > m.n - 3:
        raise PlanError(f"{label}: prime {p} exceeds n-3 = {m.n - 3}")
    if p not in [len(c) for c in m.useful_cycles()]:
        raise PlanError(f"{label}: the {p}-cycle is not useful")


def build_pair(plan):
    """Assemble the pair of maps for a plan and validate it."""
    r, v = plan.r, plan.variant
    if v == "standard":
        w = join(stock_U(plan.s), 1, v_map(r))
    elif v in ("shifted", "s3_shortcut") and r != 1:
        w = join(basic_map("C"), 1, stock_U(plan.s_star))
        w = join(w, 1, v_map(SHIFT_TARGET[r]))
    elif v in ("r1_special",) or (v == "s3_shortcut" and r == 1):
        w = join(stock_U(plan.s_star), 1, v_map(5))
        w = join(w, 1, basic_map("M"))
    elif v == "r8_special":
        w = join(stock_U(plan.s), 1, v_map(12))
    elif v == "small_n":
        w = v_map(r)
    else:
        raise AssertionError(v)
    w1 = join(w, 1, x_map(1))
    w2 = join(w, 1, x_map(2))
    if v == "r8_special":
        # Chain an extra copy of M onto each member through the
        # (2)-handles, merging the useful 47-cycle with a 36-cycle into
        # one of prime length 47 + 36 = 83.
        w1 = join(w1, 2, basic_map("M"))
        w2 = join(w2, 2, basic_map("M"))
    pair = MapPair(w1, w2, plan=plan, prime=plan.prime)
    for which, m in (("W_1", pair.w1), ("W_2", pair.w2)):
        _check_prime_cycle(m, plan.prime, which)
    if pair.degree != plan.degree:
        raise PlanError(f"assembled degree {pair.degree} != planned {plan.degree}")
    return pair


def small_case(r):
    """The stockless pair of degree d_r + 210; rejects r in {4, 6, 10}."""
    return build_pair(ConstructionPlan(r, 3, "small_n"))
