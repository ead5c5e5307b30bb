"""Structure-constant counting from character tables, with an
element-enumeration oracle for small permutation groups.

The count n(X, Y, Z) of solutions of xyz = 1 with x, y, z in prescribed
conjugacy classes comes from the classical character formula

    (|X| |Y| |Z| / |G|) * sum over irreducibles of chi(x)chi(y)chi(z)/chi(1),

evaluated exactly in rational arithmetic when the needed values are
rational and in floats (against a declared tolerance) otherwise.  Tables
ship as data files; the parser validates the class equation, the table
shape and row orthogonality at load.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .perm import parse_cycles

__all__ = [
    "TableError",
    "CharacterTable",
    "load_table",
    "bundled_table",
    "BUNDLED_TABLES",
    "frobenius_count",
    "brute_count",
    "class_sum_coefficient",
    "enumerate_group",
    "conjugacy_classes",
]

TABLE_FORMAT_VERSION = "beauville-table v1"
INTEGRALITY_TOL = 1e-6
ORTHOGONALITY_TOL = 1e-9

BUNDLED_TABLES = ("s3", "s4", "a4", "a5", "l2_13")


class TableError(ValueError):
    """Malformed or inconsistent character table data."""


@dataclass(frozen=True)
class ClassInfo:
    name: str
    size: int
    rep_order: int
    inverse: str
    rep: str = ""  # optional cycle notation of a representative


class CharacterTable:
    """Class data plus the matrix of irreducible character values.

    Values are stored as (Fraction, Fraction) pairs when exactly
    rational, else as complex floats; mixed rows are allowed.
    """

    def __init__(self, group_name, order, classes, characters):
        self.group_name = group_name
        self.order = order
        self.classes = list(classes)
        self.characters = [list(row) for row in characters]
        self.index = {c.name: i for i, c in enumerate(self.classes)}
        self._validate()

    def _validate(self):
        if sum(c.size for c in self.classes) != self.order:
            raise TableError("class sizes do not sum to the group order")
        if len(self.characters) != len(self.classes):
            raise TableError(
                f"{len(self.characters)} characters for {len(self.classes)} classes"
            )
        for row in self.characters:
            if len(row) != len(self.classes):
                raise TableError("character row length mismatch")
        for c in self.classes:
            if c.inverse not in self.index:
                raise TableError(f"inverse class {c.inverse!r} of {c.name!r} unknown")
        # row orthogonality: sum |C| chi(C) conj(psi(C)) = |G| [chi == psi]
        for i, chi in enumerate(self.characters):
            for j, psi in enumerate(self.characters):
                total = 0j
                for c, a, b in zip(self.classes, chi, psi):
                    total += c.size * _to_complex(a) * _to_complex(b).conjugate()
                want = self.order if i == j else 0
                if abs(total - want) > ORTHOGONALITY_TOL * self.order:
                    raise TableError(
                        f"row orthogonality fails for characters {i}, {j}: {total}"
                    )

    def degree(self, row):
        return self.characters[row][self.index[_identity_class(self)]]

    def class_named(self, name):
        try:
            return self.classes[self.index[name]]
        except KeyError:
            raise TableError(f"unknown class {name!r}") from None

    def representatives(self, degree=None):
        """Permutation representatives, when the table carries them."""
        out = {}
        for c in self.classes:
            if c.rep:
                out[c.name] = parse_cycles(c.rep, degree=degree)
        return out


def _identity_class(table):
    for c in table.classes:
        if c.size == 1 and c.rep_order == 1:
            return c.name
    raise TableError("no identity class")


def _to_complex(v):
    if isinstance(v, tuple):
        return complex(float(v[0]), float(v[1]))
    return complex(v)


def _all_rational(values):
    return all(isinstance(v, tuple) for v in values)


def _cmul(a, b):
    """Exact complex product of (re, im) Fraction pairs."""
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


# -- file format ---------------------------------------------------------------


def parse_value(tok):
    """Parse `a/b`, `a/b+c/d i`, or decimal forms of a character value."""
    tok = tok.strip()
    if tok.endswith("i"):
        body = tok[:-1]
        # split real and imaginary at the last +/- not at position 0
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "eE/":
                re_part, im_part = body[:pos], body[pos:]
                break
        else:
            re_part, im_part = "0", body
        if im_part in ("+", "-"):
            im_part += "1"
        re_v = _parse_real(re_part)
        im_v = _parse_real(im_part)
        if isinstance(re_v, Fraction) and isinstance(im_v, Fraction):
            return (re_v, im_v)
        return complex(float(re_v), float(im_v))
    v = _parse_real(tok)
    return (v, Fraction(0)) if isinstance(v, Fraction) else complex(v, 0.0)


def _parse_real(tok):
    tok = tok.strip()
    if not tok:
        raise TableError("empty value")
    if "." in tok or "e" in tok.lower():
        return float(tok)
    if "/" in tok:
        num, den = tok.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(tok))


def parse_table(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != TABLE_FORMAT_VERSION:
        raise TableError(f"expected header {TABLE_FORMAT_VERSION!r}")
    group_name = None
    order = None
    classes = []
    characters = []
    for ln in lines[1:]:
        key, _, rest = ln.partition(" ")
        if key == "group":
            group_name = rest.strip()
        elif key == "order":
            order = int(rest)
        elif key == "class":
            parts = rest.split()
            if len(parts) not in (4, 5):
                raise TableError(f"bad class line: {ln!r}")
            name, size, rep_order, inverse = parts[:4]
            rep = parts[4] if len(parts) == 5 else ""
            classes.append(ClassInfo(name, int(size), int(rep_order), inverse, rep))
        elif key == "char":
            characters.append([parse_value(tok) for tok in rest.split()])
        else:
            raise TableError(f"unknown line {ln!r}")
    if group_name is None or order is None:
        raise TableError("missing group or order header")
    return CharacterTable(group_name, order, classes, characters)


def load_table(path):
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read())


def bundled_table(name):
    if name not in BUNDLED_TABLES:
        raise TableError(f"no bundled table {name!r}; have {BUNDLED_TABLES}")
    text = resources.files("beauville").joinpath(f"data/{name}.tbl").read_text()
    return parse_table(text)


# -- the counting formula -------------------------------------------------------


def frobenius_count(table, x_name, y_name, z_name):
    """The number of solutions of xyz = 1 in the three named classes.

    Rounded to the nearest integer; a pre-rounding deviation beyond the
    tolerance signals a bad table and raises.
    """
    cx = table.class_named(x_name)
    cy = table.class_named(y_name)
    cz = table.class_named(z_name)
    ix, iy, iz = (table.index[c.name] for c in (cx, cy, cz))
    id_idx = table.index[_identity_class(table)]

    exact = (Fraction(0), Fraction(0))
    approx = 0j
    all_exact = True
    for row in table.characters:
        vx, vy, vz, deg = row[ix], row[iy], row[iz], row[id_idx]
        if _all_rational((vx, vy, vz, deg)):
            num = _cmul(_cmul(vx, vy), vz)
            # degrees are rational reals
            term = (num[0] / deg[0], num[1] / deg[0])
            exact = (exact[0] + term[0], exact[1] + term[1])
            approx += complex(float(term[0]), float(term[1]))
        else:
            all_exact = False
            approx += (
                _to_complex(vx) * _to_complex(vy) * _to_complex(vz) / _to_complex(deg)
            )
    scale = Fraction(cx.size * cy.size * cz.size, table.order)
    if all_exact:
        if exact[1] != 0:
            raise TableError(f"count has a residual imaginary part {exact[1]}")
        value = scale * exact[0]
        if value.denominator != 1:
            raise TableError(f"non-integral count {value} from an exact table")
        return int(value)
    value = float(scale) * approx
    if abs(value.imag) > INTEGRALITY_TOL or abs(value.real - round(value.real)) > INTEGRALITY_TOL:
        raise TableError(
            f"count {value} deviates from an integer beyond {INTEGRALITY_TOL}"
        )
    return int(round(value.real))


def class_sum_coefficient(table, x_name, y_name, z_name):
    """Coefficient of the z class sum in the product of the x and y class
    sums: n(X, Y, Z^-1) / |Z|."""
    cz = table.class_named(z_name)
    return Fraction(frobenius_count(table, x_name, y_name, cz.inverse), cz.size)


# -- enumeration oracle ---------------------------------------------------------


def enumerate_group(gens, cap=10_000):
    """All elements of <gens> as Permutations, breadth-first; raises if the
    order exceeds the cap."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].degree
    from .perm import identity

    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in seen:
                    if len(seen) >= cap:
                        raise ValueError(f"group order exceeds the cap {cap}")
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen, key=lambda p: p.images)


def conjugacy_classes(elements, gens):
    """Partition of the elements into conjugacy classes (orbit closure
    under conjugation by the generators); classes sorted by (rep order,
    size, min element)."""
    element_set = set(elements)
    unseen = set(elements)
    classes = []
    while unseen:
        rep = min(unseen, key=lambda p: p.images)
        orbit = {rep}
        frontier = [rep]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = p.conjugate_by(g)
                    if q not in orbit:
                        orbit.add(q)
                        nxt.append(q)
            frontier = nxt
        if not orbit <= element_set:
            raise ValueError("conjugation left the element set")
        unseen -= orbit
        classes.append(sorted(orbit, key=lambda p: p.images))
    classes.sort(key=lambda cl: (cl[0].order(), len(cl), cl[0].images))
    return classes


def brute_count(gens, x_rep, y_rep, z_rep, cap=10_000):
    """Count ordered triples (x, y, z) with xyz = 1 and each factor
    conjugate (inside <gens>) to the given representative."""
    elements = enumerate_group(gens, cap=cap)
    classes = conjugacy_classes(elements, list(gens))
    class_of = {}
    for idx, cl in enumerate(classes):
        for p in cl:
            class_of[p] = idx
    try:
        cx = class_of[x_rep]
        cy = class_of[y_rep]
        cz = class_of[z_rep]
    except KeyError as exc:
        raise ValueError(f"representative {exc} is not in the group") from None
    count = 0
    xs = classes[cx]
    ys = classes[cy]
    for x in xs:
        for y in ys:
            z = (x * y).inverse()
            if class_of[z] == cz:
                count += 1
    return count
