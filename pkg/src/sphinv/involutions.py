"""Involution classes of Isom+(S^3/G), table-driven.

For each free-acting group the matching block (general case or a small-index
case) lists one row per conjugacy class of involutions: the class label, a
lift recipe, and the index-2 extension it generates. Lifts were chosen so
that extending the realized group by the lift reproduces the listed
extension; the verification suite re-derives every row element-wise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactmath import UnitQuaternion
from .groupspec import GroupSpec, odd_s_representative
from .quintuple import PairGroup, StructuralError, identify_family, kind_of_set
from .s3groups import alpha, beta


# -- lift atoms ---------------------------------------------------------------


def eval_atom(atom, M: int) -> UnitQuaternion:
    kind = atom[0]
    if kind == "one":
        return UnitQuaternion.identity(M)
    if kind == "minus_one":
        return -UnitQuaternion.identity(M)
    if kind == "i":
        return UnitQuaternion.from_root(1, 4, M)
    if kind == "j":
        return UnitQuaternion.j(M)
    if kind == "root":
        return UnitQuaternion.from_root(atom[1], atom[2], M)
    if kind == "rootj":
        return UnitQuaternion.from_root(atom[1], atom[2], M) * UnitQuaternion.j(M)
    if kind == "beta":
        return beta(M)
    if kind == "alpha2":
        a = alpha(M)
        return a * a
    raise ValueError(f"unknown lift atom {atom!r}")


def atom_str(atom) -> str:
    kind = atom[0]
    if kind == "root":
        return f"e^(2pi.i.{atom[1]}/{atom[2]})"
    if kind == "rootj":
        return f"e^(2pi.i.{atom[1]}/{atom[2]})j"
    if kind == "alpha2":
        return "alpha^2"
    if kind == "minus_one":
        return "-1"
    return kind


# -- collapsed Du Val shapes --------------------------------------------------


def normalize_extension(spec: GroupSpec) -> GroupSpec:
    """Rename shapes whose D*_4 factor collapses to a conjugate C_4 form."""
    fam, m, n = spec.family, spec.m, spec.n
    if fam == "2" and n == 1:
        return GroupSpec("1", m, 2, 1, 1)
    if fam == "2bis" and m == 1:
        return GroupSpec("1", 2, n, 1, 1)
    if fam == "4" and n == 1:
        return GroupSpec("3", m, 2)
    if fam == "4bis" and m == 1:
        return GroupSpec("3bis", 2, n)
    if fam == "10" and m == 1 and n == 1:
        return GroupSpec("1", 2, 2, 1, 1)
    if fam == "10" and m == 1:
        return GroupSpec("2", 2, n)
    if fam == "10" and n == 1:
        return GroupSpec("2bis", m, 2)
    if fam == "13" and m == 1:
        return GroupSpec("11", 2, n, 1, 1)
    if fam == "13bis" and n == 1:
        return GroupSpec("11", m, 2, 1, 1)
    if fam == "14" and m == 1:
        return GroupSpec("5", 2)
    if fam == "15" and m == 1:
        return GroupSpec("7", 2)
    if fam == "19" and m == 1:
        return GroupSpec("9", 2)
    if fam == "16" and m == 1:
        return GroupSpec("8", 1)
    if fam == "34" and n == 1:
        return GroupSpec("1p", m, 1, 4, 1)
    if fam == "34bis" and m == 1:
        return GroupSpec("1p", 1, n, 4, 1)
    return spec.canonical()


# -- isometry labels and involution representatives ---------------------------

_A = "atom"


def label_str(label) -> str:
    if label[0] == _A:
        return label[1]
    op = " x " if label[0] == "x" else " ~x "
    return label_str(label[1]) + op + label_str(label[2])


_ATOM_DATA = {
    # name -> (involution class reps, Rac class reps, neg map, has central -1)
    "Z2": (("[1]",), (), {}, False),
    "D6": (("s",), (), {}, False),
    "S1": (("-1",), ("i",), {"-1": None}, True),
    "O(2)": (("-1", "c"), ("i",), {"-1": None, "c": "c"}, True),
    "O(2)*": (("-1",), ("i", "j"), {"-1": None}, True),
    "S3": (("-1",), ("i",), {"-1": None}, True),
    "SO(3)": (("R_pi",), (), {}, False),
    "SO(4)": (("T(0,pi)", "T(pi,0)", "T(pi,pi)"), (), {}, False),
    "PSO(4)": (
        ("[T(0,pi)]", "[T(pi,0)]", "[T(pi/2,-pi/2)]", "[T(pi/2,pi/2)]"),
        (),
        {},
        False,
    ),
    "Dih(S1xS1)": (
        ("((-1,-1),0)", "((-1,1),0)", "((1,-1),0)", "((1,1),1)"),
        (),
        {},
        False,
    ),
}


def involution_reps(label) -> list[str]:
    """A complete set of representatives of the involution conjugacy classes."""
    if label[0] == _A:
        name = label[1]
        if name not in _ATOM_DATA:
            raise StructuralError(f"no involution data for group {name}")
        return list(_ATOM_DATA[name][0])
    op, left, right = label
    if left[0] != _A or right[0] != _A:
        raise StructuralError("nested products are not supported")
    a_inv, a_rac, a_neg, a_ctr = _ATOM_DATA[left[1]]
    b_inv, b_rac, b_neg, b_ctr = _ATOM_DATA[right[1]]
    if op == "x":
        out = [f"({a},{b})" for a in a_inv for b in b_inv]
        out += [f"(1,{b})" for b in b_inv]
        out += [f"({a},1)" for a in a_inv]
        return out
    if op != "~x":
        raise StructuralError(f"unknown product {op}")
    if not (a_ctr and b_ctr):
        raise StructuralError("central product factors must have central -1")

    def neg(rep, neg_map):
        if rep == "1":
            return "-1"
        image = neg_map[rep]
        return "1" if image is None else image

    pairs = [(a, b) for a in a_inv + ("1",) for b in b_inv + ("1",)]
    pairs.remove(("1", "1"))
    pairs.remove(("-1", "-1"))
    canon = {p: p for p in pairs}

    def find(p):
        while canon[p] != p:
            p = canon[p]
        return p

    for p in pairs:
        q = (neg(p[0], a_neg), neg(p[1], b_neg))
        if q in canon:
            rp, rq = find(p), find(q)
            if rp != rq:
                canon[rq] = rp
    classes: dict[tuple, list] = {}
    for p in pairs:
        classes.setdefault(find(p), []).append(p)
    out = []
    for members in classes.values():
        members.sort(key=lambda t: (sum(x == "-1" for x in t), t))
        out.append(f"({members[0][0]},{members[0][1]})")
    out += [f"({a},{b})" for a in a_rac for b in b_rac]
    return out


# -- block encoding -----------------------------------------------------------


@dataclass(frozen=True)
class Row:
    label: str
    symbol: str  # symbolic extension shape, for table output
    ext: object  # callable (m, n, r, s) -> GroupSpec
    lift: object  # callable (m, n, r, s) -> (atom, atom)
    free: str  # printed cell: "Y" | "N" | condition | "cf" (chain-decided)
    hyper: str


@dataclass(frozen=True)
class Block:
    key: str
    table: int  # 7 (general) or 8 (small indices)
    parent_symbol: str
    isometry: object
    rows: tuple[Row, ...]
    sampler: object  # callable () -> iterator of candidate parent GroupSpecs


@dataclass(frozen=True)
class ClassData:
    label: str
    extension_spec: GroupSpec
    lift_atoms: tuple
    printed_free: str
    printed_hyperelliptic: str

    def lift(self, M: int) -> tuple[UnitQuaternion, UnitQuaternion]:
        return eval_atom(self.lift_atoms[0], M), eval_atom(self.lift_atoms[1], M)


def _spec(fam, m=1, n=1, r=1, s=1):
    return GroupSpec(fam, m, n, r, s)


_BLOCKS: list[Block] = []


def _add(key, table, parent_symbol, isometry, rows, sampler):
    _BLOCKS.append(Block(key, table, parent_symbol, isometry, tuple(rows), sampler))


# ---- Table 7 (general cases) ----


def _f1_ext2(m, n, r, s):
    if r % 2 == 0:
        return _spec("1", 2 * m, 2 * n, r // 2, s % (r // 2))
    return _spec("1", 2 * m, n, r, (r + s) // 2)


def _f1_ext3(m, n, r, s):
    if r % 2 == 0:
        return _spec("1", m, n, 2 * r, r + s)
    return _spec("1", m, 2 * n, r, (2 * s) % r)


_add(
    "1-general", 7, "(C_2mr/C_2m,C_2nr/C_2n)_s (1)", (_A, "Dih(S1xS1)"),
    [
        Row("((-1,1),0)", "(C_4mr/C_2m,C_4nr/C_2n)_s (1)",
            lambda m, n, r, s: _spec("1", m, n, 2 * r, s),
            lambda m, n, r, s: (("root", 1, 4 * m * r), ("root", s, 4 * n * r)),
            "cf", "N"),
        Row("((1,-1),0)", "Family 1, depends on parity of r",
            _f1_ext2,
            lambda m, n, r, s: (("root", 1, 4 * m), ("root", s + 1, 4 * n)),
            "cf", "N"),
        Row("((-1,-1),0)", "Family 1, depends on parity of r",
            _f1_ext3,
            lambda m, n, r, s: (("root", 1 + r, 4 * m * r),
                                ("root", r * s + r + s, 4 * n * r)),
            "cf", "N"),
        Row("((1,1),1)", "(D*_4mr/C_2m,D*_4nr/C_2n)_s (11)",
            lambda m, n, r, s: _spec("11", m, n, r, s),
            lambda m, n, r, s: (("j",), ("j",)),
            "N", "Y"),
    ],
    lambda: (
        _spec("1", m, n, r, s)
        for r in (3, 4, 5, 6, 7, 8, 9)
        for m in (1, 2, 3, 4, 5)
        for n in (1, 2, 3, 4, 5)
        for s in range(1, r // 2 + 1)
        if gcd(s, r) == 1
    ),
)

_add(
    "1'-general", 7, "(C_mr/C_m,C_nr/C_n)_s (1')", (_A, "Dih(S1xS1)"),
    [
        Row("((-1,1),0)", "(C_2mr/C_m,C_2nr/C_n)_s (1')",
            lambda m, n, r, s: _spec("1p", m, n, 2 * r, s),
            lambda m, n, r, s: (("root", 1, 2 * m * r), ("root", s, 2 * n * r)),
            "cf", "N"),
        Row("((1,-1),0)", "(C_mr/C_2m,C_nr/C_2n)_s%(r/2) (1)",
            lambda m, n, r, s: _spec("1", m, n, r // 2, s % (r // 2)),
            lambda m, n, r, s: (("root", 1, 2 * m), ("root", s + 1, 2 * n)),
            "cf", "N"),
        Row("((-1,-1),0)", "(C_2mr/C_m,C_2nr/C_n)_s+r (1')",
            lambda m, n, r, s: _spec("1p", m, n, 2 * r, s + r),
            lambda m, n, r, s: (("root", 1 + r, 2 * m * r),
                                ("root", r * s + r + s, 2 * n * r)),
            "cf", "N"),
        Row("((1,1),1)", "(D*_2mr/C_m,D*_2nr/C_n)_s (11')",
            lambda m, n, r, s: _spec("11p", m, n, r, s),
            lambda m, n, r, s: (("j",), ("j",)),
            "N", "Y"),
    ],
    lambda: (
        _spec("1p", m, n, r, s)
        for r in (4, 6, 8, 10)
        for m in (1, 3, 5, 7)
        for n in (1, 3, 5, 7)
        for s in range(1, r // 2 + 1)
        if gcd(s, r) == 1
    ),
)

_add(
    "2-general", 7, "(C_2m/C_2m,D*_4n/D*_4n) (2)", ("x", (_A, "O(2)"), (_A, "Z2")),
    [
        Row("(1,[1])", "(C_2m/C_2m,D*_8n/D*_8n) (2)",
            lambda m, n, r, s: _spec("2", m, 2 * n),
            lambda m, n, r, s: (("one",), ("root", 1, 4 * n)),
            "Y", "N"),
        Row("(-1,0)", "(C_4m/C_4m,D*_4n/D*_4n) (2)",
            lambda m, n, r, s: _spec("2", 2 * m, n),
            lambda m, n, r, s: (("root", 1, 4 * m), ("one",)),
            "N", "N"),
        Row("(c,0)", "(D*_4m/D*_4m,D*_4n/D*_4n) (10)",
            lambda m, n, r, s: _spec("10", m, n),
            lambda m, n, r, s: (("j",), ("one",)),
            "N", "n even"),
        Row("(-1,[1])", "(C_4m/C_2m,D*_8n/D*_4n) (4)",
            lambda m, n, r, s: _spec("4", m, n),
            lambda m, n, r, s: (("root", 1, 4 * m), ("root", 1, 4 * n)),
            "N", "N"),
        Row("(c,[1])", "(D*_4m/C_2m,D*_8n/D*_4n) (13bis)",
            lambda m, n, r, s: _spec("13bis", m, n),
            lambda m, n, r, s: (("j",), ("root", 1, 4 * n)),
            "N", "n odd"),
    ],
    lambda: (_spec("2", m, n) for m in (3, 5, 7, 9, 11) for n in (3, 4, 5, 6)),
)

_add(
    "3-general", 7, "(C_4m/C_2m,D*_4n/C_2n) (3)", ("x", (_A, "O(2)"), (_A, "Z2")),
    [
        Row("(1,[1])", "(C_4m/C_2m,D*_8n/C_4n) (3)",
            lambda m, n, r, s: _spec("3", m, 2 * n),
            lambda m, n, r, s: (("one",), ("root", 1, 4 * n)),
            "N", "N"),
        Row("(-1,0)", "(C_4m/C_4m,D*_4n/D*_4n) (2)",
            lambda m, n, r, s: _spec("2", 2 * m, n),
            lambda m, n, r, s: (("one",), ("j",)),
            "N", "N"),
        Row("(c,0)", "(D*_8m/D*_4m,D*_4n/C_2n) (13)",
            lambda m, n, r, s: _spec("13", m, n),
            lambda m, n, r, s: (("j",), ("one",)),
            "N", "N"),
        Row("(-1,[1])", "(C_4m/C_2m,D*_8n/D*_4n) (4)",
            lambda m, n, r, s: _spec("4", m, n),
            lambda m, n, r, s: (("root", 1, 4 * m), ("root", 1, 4 * n)),
            "N", "N"),
        Row("(c,[1])", "(D*_8m/C_2m,D*_8n/C_2n) (11)",
            lambda m, n, r, s: _spec("11", m, n, 2, 1),
            lambda m, n, r, s: (("j",), ("root", 1, 4 * n)),
            "N", "Y"),
    ],
    lambda: (
        _spec("3", m, n)
        for m in (2, 4, 6, 8)
        for n in (3, 4, 5, 7, 9)
        if gcd(m, n) == 1
    ),
)

_add(
    "5-general", 7, "(C_2m/C_2m,T*/T*) (5)", ("x", (_A, "O(2)"), (_A, "Z2")),
    [
        Row("(1,[1])", "(C_2m/C_2m,O*/O*) (7)",
            lambda m, n, r, s: _spec("7", m),
            lambda m, n, r, s: (("one",), ("beta",)),
            "Y", "N"),
        Row("(-1,0)", "(C_4m/C_4m,T*/T*) (5)",
            lambda m, n, r, s: _spec("5", 2 * m),
            lambda m, n, r, s: (("root", 1, 4 * m), ("one",)),
            "N", "N"),
        Row("(c,0)", "(D*_4m/D*_4m,T*/T*) (14)",
            lambda m, n, r, s: _spec("14", m),
            lambda m, n, r, s: (("j",), ("one",)),
            "N", "N"),
        Row("(-1,[1])", "(C_4m/C_2m,O*/T*) (8)",
            lambda m, n, r, s: _spec("8", m),
            lambda m, n, r, s: (("root", 1, 4 * m), ("beta",)),
            "N", "N"),
        Row("(c,[1])", "(D*_4m/C_2m,O*/T*) (16)",
            lambda m, n, r, s: _spec("16", m),
            lambda m, n, r, s: (("j",), ("beta",)),
            "N", "Y"),
    ],
    lambda: (_spec("5", m) for m in (5, 7, 11, 13, 17, 19)),
)

_add(
    "6-general", 7, "(C_6m/C_2m,T*/D*_8) (6)", (_A, "O(2)"),
    [
        Row("-1", "(C_12m/C_4m,T*/D*_8) (6)",
            lambda m, n, r, s: _spec("6", 2 * m),
            lambda m, n, r, s: (("root", 1, 12 * m), ("alpha2",)),
            "N", "N"),
        Row("c", "(D*_12m/C_2m,O*/D*_8) (18)",
            lambda m, n, r, s: _spec("18", m),
            lambda m, n, r, s: (("j",), ("beta",)),
            "N", "Y"),
    ],
    lambda: (_spec("6", m) for m in (3, 9, 15, 21)),
)

_add(
    "7-general", 7, "(C_2m/C_2m,O*/O*) (7)", (_A, "O(2)"),
    [
        Row("-1", "(C_4m/C_4m,O*/O*) (7)",
            lambda m, n, r, s: _spec("7", 2 * m),
            lambda m, n, r, s: (("root", 1, 4 * m), ("one",)),
            "N", "N"),
        Row("c", "(D*_4m/D*_4m,O*/O*) (15)",
            lambda m, n, r, s: _spec("15", m),
            lambda m, n, r, s: (("j",), ("one",)),
            "N", "Y"),
    ],
    lambda: (_spec("7", m) for m in (5, 7, 11, 13)),
)

_add(
    "9-general", 7, "(C_2m/C_2m,I*/I*) (9)", (_A, "O(2)"),
    [
        Row("-1", "(C_4m/C_4m,I*/I*) (9)",
            lambda m, n, r, s: _spec("9", 2 * m),
            lambda m, n, r, s: (("root", 1, 4 * m), ("one",)),
            "N", "N"),
        Row("c", "(D*_4m/D*_4m,I*/I*) (19)",
            lambda m, n, r, s: _spec("19", m),
            lambda m, n, r, s: (("j",), ("one",)),
            "N", "Y"),
    ],
    lambda: (_spec("9", m) for m in (7, 11, 13, 17)),
)

# ---- Table 8 (small indices) ----

_add(
    "1-r1", 8, "(C_2m/C_2m,C_2n/C_2n) (1)", ("x", (_A, "O(2)"), (_A, "O(2)")),
    [
        Row("(-1,1)", "(C_4m/C_4m,C_2n/C_2n) (1)",
            lambda m, n, r, s: _spec("1", 2 * m, n, 1, 1),
            lambda m, n, r, s: (("root", 1, 4 * m), ("one",)),
            "n odd", "N"),
        Row("(c,1)", "(D*_4m/D*_4m,C_2n/C_2n) (2bis)",
            lambda m, n, r, s: _spec("2bis", m, n),
            lambda m, n, r, s: (("j",), ("one",)),
            "n odd", "N"),
        Row("(-1,-1)", "(C_4m/C_2m,C_4n/C_2n) (1)",
            lambda m, n, r, s: _spec("1", m, n, 2, 1),
            lambda m, n, r, s: (("root", 1, 4 * m), ("root", 1, 4 * n)),
            "mn even", "N"),
        Row("(c,c)", "(D*_4m/C_2m,D*_4n/C_2n) (11)",
            lambda m, n, r, s: _spec("11", m, n, 1, 1),
            lambda m, n, r, s: (("j",), ("j",)),
            "N", "Y"),
        Row("(-1,c)", "(C_4m/C_2m,D*_4n/C_2n) (3)",
            lambda m, n, r, s: _spec("3", m, n),
            lambda m, n, r, s: (("root", 1, 4 * m), ("j",)),
            "m even", "N"),
        Row("(1,-1)", "(C_2m/C_2m,C_4n/C_4n) (1)",
            lambda m, n, r, s: _spec("1", m, 2 * n, 1, 1),
            lambda m, n, r, s: (("one",), ("root", 1, 4 * n)),
            "m odd", "N"),
        Row("(1,c)", "(C_2m/C_2m,D*_4n/D*_4n) (2)",
            lambda m, n, r, s: _spec("2", m, n),
            lambda m, n, r, s: (("one",), ("j",)),
            "m odd", "N"),
        Row("(c,-1)", "(D*_4m/C_2m,C_4n/C_2n) (3bis)",
            lambda m, n, r, s: _spec("3bis", m, n),
            lambda m, n, r, s: (("j",), ("root", 1, 4 * n)),
            "n even", "N"),
    ],
    lambda: (
        _spec("1", m, n, 1, 1)
        for m in (2, 3, 4, 5, 7)
        for n in (2, 3, 4, 5, 8)
        if gcd(m, n) == 1
    ),
)

_add(
    "1-r1-m1", 8, "(C_2/C_2,C_2n/C_2n) (1)", ("x", (_A, "SO(3)"), (_A, "O(2)")),
    [
        Row("(R_pi,1)", "(C_4/C_4,C_2n/C_2n) (1)",
            lambda m, n, r, s: _spec("1", 2, n, 1, 1),
            lambda m, n, r, s: (("i",), ("one",)),
            "n odd", "N"),
        Row("(1,-1)", "(C_2/C_2,C_4n/C_4n) (1)",
            lambda m, n, r, s: _spec("1", 1, 2 * n, 1, 1),
            lambda m, n, r, s: (("one",), ("root", 1, 4 * n)),
            "Y", "N"),
        Row("(1,c)", "(C_2/C_2,D*_4n/D*_4n) (2)",
            lambda m, n, r, s: _spec("2", 1, n),
            lambda m, n, r, s: (("one",), ("j",)),
            "Y", "N"),
        Row("(R_pi,-1)", "(C_4/C_2,C_4n/C_2n) (1)",
            lambda m, n, r, s: _spec("1", 1, n, 2, 1),
            lambda m, n, r, s: (("i",), ("root", 1, 4 * n)),
            "n even", "N"),
        Row("(R_pi,c)", "(C_4/C_2,D*_4n/C_2n) (3)",
            lambda m, n, r, s: _spec("3", 1, n),
            lambda m, n, r, s: (("i",), ("j",)),
            "N", "Y"),
    ],
    lambda: (_spec("1", 1, n, 1, 1) for n in (2, 3, 4, 5, 6, 7)),
)

_add(
    "1-r1-n1", 8, "(C_2m/C_2m,C_2/C_2) (1)", ("x", (_A, "O(2)"), (_A, "SO(3)")),
    [
        Row("(1,R_pi)", "(C_2m/C_2m,C_4/C_4) (1)",
            lambda m, n, r, s: _spec("1", m, 2, 1, 1),
            lambda m, n, r, s: (("one",), ("i",)),
            "m odd", "N"),
        Row("(-1,1)", "(C_4m/C_4m,C_2/C_2) (1)",
            lambda m, n, r, s: _spec("1", 2 * m, 1, 1, 1),
            lambda m, n, r, s: (("root", 1, 4 * m), ("one",)),
            "Y", "N"),
        Row("(c,1)", "(D*_4m/D*_4m,C_2/C_2) (2bis)",
            lambda m, n, r, s: _spec("2bis", m, 1),
            lambda m, n, r, s: (("j",), ("one",)),
            "Y", "N"),
        Row("(-1,R_pi)", "(C_4m/C_2m,C_4/C_2) (1)",
            lambda m, n, r, s: _spec("1", m, 1, 2, 1),
            lambda m, n, r, s: (("root", 1, 4 * m), ("i",)),
            "m even", "N"),
        Row("(c,R_pi)", "(D*_4m/C_2m,C_4/C_2) (3bis)",
            lambda m, n, r, s: _spec("3bis", m, 1),
            lambda m, n, r, s: (("j",), ("i",)),
            "N", "Y"),
    ],
    lambda: (_spec("1", m, 1, 1, 1) for m in (2, 3, 4, 5, 6, 7)),
)

_add(
    "1-r1-trivial", 8, "(C_2/C_2,C_2/C_2) (1)", (_A, "PSO(4)"),
    [
        Row("[T(0,pi)]", "(C_4/C_2,C_4/C_2) (1)",
            lambda m, n, r, s: _spec("1", 1, 1, 2, 1),
            lambda m, n, r, s: (("i",), ("i",)),
            "N", "Y"),
        Row("[T(pi/2,pi/2)]", "(C_4/C_4,C_2/C_2) (1)",
            lambda m, n, r, s: _spec("1", 2, 1, 1, 1),
            lambda m, n, r, s: (("i",), ("one",)),
            "Y", "N"),
        Row("[T(pi/2,-pi/2)]", "(C_2/C_2,C_4/C_4) (1)",
            lambda m, n, r, s: _spec("1", 1, 2, 1, 1),
            lambda m, n, r, s: (("one",), ("i",)),
            "Y", "N"),
    ],
    lambda: iter([_spec("1", 1, 1, 1, 1)]),
)

_add(
    "1-r2", 8, "(C_4m/C_2m,C_4n/C_2n) (1)", ("~x", (_A, "O(2)"), (_A, "O(2)")),
    [
        Row("(-1,1)", "(C_4m/C_4m,C_4n/C_4n) (1)",
            lambda m, n, r, s: _spec("1", 2 * m, 2 * n, 1, 1),
            lambda m, n, r, s: (("root", 1, 4 * m), ("one",)),
            "N", "N"),
        Row("(c,1)", "(D*_8m/D*_4m,C_4n/C_2n) (4bis)",
            lambda m, n, r, s: _spec("4bis", m, n),
            lambda m, n, r, s: (("j",), ("one",)),
            "N", "N"),
        Row("(c,c)", "(D*_8m/C_2m,D*_8n/C_2n) (11)",
            lambda m, n, r, s: _spec("11", m, n, 2, 1),
            lambda m, n, r, s: (("j",), ("j",)),
            "N", "Y"),
        Row("(i,i)", "(C_8m/C_2m,C_8n/C_2n) (1)",
            lambda m, n, r, s: _spec("1", m, n, 4, 1),
            lambda m, n, r, s: (("root", 1, 8 * m), ("root", 1, 8 * n)),
            "Y", "N"),
        Row("(1,c)", "(C_4m/C_2m,D*_8n/D*_4n) (4)",
            lambda m, n, r, s: _spec("4", m, n),
            lambda m, n, r, s: (("root", 1, 4 * m), ("rootj", 1, 4 * n)),
            "N", "N"),
    ],
    lambda: (
        _spec("1", m, n, 2, 1)
        for m in (1, 2, 3, 4, 5)
        for n in (1, 2, 3, 4, 5)
        if gcd(m, n) == 1 and (m * n) % 2 == 0
    ),
)

_add(
    "1'-r2", 8, "(C_2m/C_m,C_2n/C_n) (1')", ("~x", (_A, "O(2)*"), (_A, "O(2)*")),
    [
        Row("(1,-1)", "(C_2m/C_2m,C_2n/C_2n) (1)",
            lambda m, n, r, s: _spec("1", m, n, 1, 1),
            lambda m, n, r, s: (("minus_one",), ("one",)),
            "Y", "N"),
        Row("(i,i)", "(C_4m/C_m,C_4n/C_n) (1')",
            lambda m, n, r, s: _spec("1p", m, n, 4, 1),
            lambda m, n, r, s: (("root", 1, 4 * m), ("root", 1, 4 * n)),
            "N", "N"),
        Row("(j,j)", "(D*_4m/C_m,D*_4n/C_n) (11')",
            lambda m, n, r, s: _spec("11p", m, n, 2, 1),
            lambda m, n, r, s: (("j",), ("j",)),
            "N", "Y"),
        Row("(i,j)", "(C_4m/C_m,D*_4n/C_n) (34)",
            lambda m, n, r, s: _spec("34", m, n),
            lambda m, n, r, s: (("root", 1, 4 * m), ("j",)),
            "N", "N"),
        Row("(j,i)", "(D*_4m/C_m,C_4n/C_n) (34bis)",
            lambda m, n, r, s: _spec("34bis", m, n),
            lambda m, n, r, s: (("j",), ("root", 1, 4 * n)),
            "N", "N"),
    ],
    lambda: (
        _spec("1p", m, n, 2, 1)
        for m in (3, 5, 7, 9)
        for n in (3, 5, 7, 11)
        if gcd(m, n) == 1
    ),
)

_add(
    "1'-r2-m1", 8, "(C_2/C_1,C_2n/C_n) (1')", ("~x", (_A, "S3"), (_A, "O(2)*")),
    [
        Row("(1,-1)", "(C_2/C_2,C_2n/C_2n) (1)",
            lambda m, n, r, s: _spec("1", 1, n, 1, 1),
            lambda m, n, r, s: (("minus_one",), ("one",)),
            "Y", "N"),
        Row("(i,i)", "(C_4/C_1,C_4n/C_n) (1')",
            lambda m, n, r, s: _spec("1p", 1, n, 4, 1),
            lambda m, n, r, s: (("i",), ("root", 1, 4 * n)),
            "N", "N"),
        Row("(i,j)", "(C_4/C_1,D*_4n/C_n) (34)",
            lambda m, n, r, s: _spec("34", 1, n),
            lambda m, n, r, s: (("i",), ("j",)),
            "N", "Y"),
    ],
    lambda: (_spec("1p", 1, n, 2, 1) for n in (3, 5, 7, 9, 11)),
)

_add(
    "1'-r2-n1", 8, "(C_2m/C_m,C_2/C_1) (1')", ("~x", (_A, "O(2)*"), (_A, "S3")),
    [
        Row("(-1,1)", "(C_2m/C_2m,C_2/C_2) (1)",
            lambda m, n, r, s: _spec("1", m, 1, 1, 1),
            lambda m, n, r, s: (("one",), ("minus_one",)),
            "Y", "N"),
        Row("(i,i)", "(C_4m/C_m,C_4/C_1) (1')",
            lambda m, n, r, s: _spec("1p", m, 1, 4, 1),
            lambda m, n, r, s: (("root", 1, 4 * m), ("i",)),
            "N", "N"),
        Row("(j,i)", "(D*_4m/C_m,C_4/C_1) (34bis)",
            lambda m, n, r, s: _spec("34bis", m, 1),
            lambda m, n, r, s: (("j",), ("i",)),
            "N", "Y"),
    ],
    lambda: (_spec("1p", m, 1, 2, 1) for m in (3, 5, 7, 9, 11)),
)

_add(
    "1'-r2-trivial", 8, "(C_2/C_1,C_2/C_1) (1')", (_A, "SO(4)"),
    [
        Row("T(0,pi)", "(C_4/C_1,C_4/C_1)_1 (1')",
            lambda m, n, r, s: _spec("1p", 1, 1, 4, 1),
            lambda m, n, r, s: (("i",), ("i",)),
            "N", "Y"),
        Row("T(pi,pi)", "(C_2/C_2,C_2/C_2) (1)",
            lambda m, n, r, s: _spec("1", 1, 1, 1, 1),
            lambda m, n, r, s: (("minus_one",), ("one",)),
            "Y", "N"),
    ],
    lambda: iter([_spec("1p", 1, 1, 2, 1)]),
)

_add(
    "2-m1", 8, "(C_2/C_2,D*_4n/D*_4n) (2)", ("x", (_A, "SO(3)"), (_A, "Z2")),
    [
        Row("(R_pi,0)", "(C_4/C_4,D*_4n/D*_4n) (2)",
            lambda m, n, r, s: _spec("2", 2, n),
            lambda m, n, r, s: (("i",), ("one",)),
            "N", "n even"),
        Row("(I_3,1)", "(C_2/C_2,D*_8n/D*_8n) (2)",
            lambda m, n, r, s: _spec("2", 1, 2 * n),
            lambda m, n, r, s: (("one",), ("root", 1, 4 * n)),
            "Y", "N"),
        Row("(R_pi,1)", "(C_4/C_2,D*_8n/D*_4n) (4)",
            lambda m, n, r, s: _spec("4", 1, n),
            lambda m, n, r, s: (("i",), ("root", 1, 4 * n)),
            "N", "n odd"),
    ],
    lambda: (_spec("2", 1, n) for n in (3, 4, 5, 6, 7, 8)),
)

_add(
    "2-n2", 8, "(C_2m/C_2m,D*_8/D*_8) (2)", ("x", (_A, "O(2)"), (_A, "D6")),
    [
        Row("(-1,1)", "(C_4m/C_4m,D*_8/D*_8) (2)",
            lambda m, n, r, s: _spec("2", 2 * m, 2),
            lambda m, n, r, s: (("root", 1, 4 * m), ("one",)),
            "N", "N"),
        Row("(c,1)", "(D*_4m/D*_4m,D*_8/D*_8) (10)",
            lambda m, n, r, s: _spec("10", m, 2),
            lambda m, n, r, s: (("j",), ("one",)),
            "N", "Y"),
        Row("(1,s)", "(C_2m/C_2m,D*_16/D*_16) (2)",
            lambda m, n, r, s: _spec("2", m, 4),
            lambda m, n, r, s: (("one",), ("root", 1, 8)),
            "Y", "N"),
        Row("(-1,s)", "(C_4m/C_2m,D*_16/D*_8) (4)",
            lambda m, n, r, s: _spec("4", m, 2),
            lambda m, n, r, s: (("root", 1, 4 * m), ("root", 1, 8)),
            "N", "N"),
        Row("(c,s)", "(D*_4m/C_2m,D*_16/D*_8) (13bis)",
            lambda m, n, r, s: _spec("13bis", m, 2),
            lambda m, n, r, s: (("j",), ("root", 1, 8)),
            "N", "N"),
    ],
    lambda: (_spec("2", m, 2) for m in (3, 5, 7, 9)),
)

_add(
    "2-m1-n2", 8, "(C_2/C_2,D*_8/D*_8) (2)", ("x", (_A, "SO(3)"), (_A, "D6")),
    [
        Row("(R_pi,1)", "(C_4/C_4,D*_8/D*_8) (2)",
            lambda m, n, r, s: _spec("2", 2, 2),
            lambda m, n, r, s: (("i",), ("one",)),
            "N", "Y"),
        Row("(1,s)", "(C_2/C_2,D*_16/D*_16) (2)",
            lambda m, n, r, s: _spec("2", 1, 4),
            lambda m, n, r, s: (("one",), ("root", 1, 8)),
            "Y", "N"),
        Row("(R_pi,s)", "(C_4/C_2,D*_16/D*_8) (4)",
            lambda m, n, r, s: _spec("4", 1, 2),
            lambda m, n, r, s: (("i",), ("root", 1, 8)),
            "N", "N"),
    ],
    lambda: iter([_spec("2", 1, 2)]),
)

_add(
    "5-m1", 8, "(C_2/C_2,T*/T*) (5)", ("x", (_A, "SO(3)"), (_A, "Z2")),
    [
        Row("(R_pi,0)", "(C_4/C_4,T*/T*) (5)",
            lambda m, n, r, s: _spec("5", 2),
            lambda m, n, r, s: (("i",), ("one",)),
            "N", "N"),
        Row("(I_3,1)", "(C_2/C_2,O*/O*) (7)",
            lambda m, n, r, s: _spec("7", 1),
            lambda m, n, r, s: (("one",), ("beta",)),
            "Y", "N"),
        Row("(R_pi,1)", "(C_4/C_2,O*/T*) (8)",
            lambda m, n, r, s: _spec("8", 1),
            lambda m, n, r, s: (("i",), ("beta",)),
            "N", "Y"),
    ],
    lambda: iter([_spec("5", 1)]),
)

_add(
    "7-m1", 8, "(C_2/C_2,O*/O*) (7)", (_A, "SO(3)"),
    [
        Row("R_pi", "(C_4/C_4,O*/O*) (7)",
            lambda m, n, r, s: _spec("7", 2),
            lambda m, n, r, s: (("i",), ("one",)),
            "N", "Y"),
    ],
    lambda: iter([_spec("7", 1)]),
)

_add(
    "9-m1", 8, "(C_2/C_2,I*/I*) (9)", (_A, "SO(3)"),
    [
        Row("R_pi", "(C_4/C_4,I*/I*) (9)",
            lambda m, n, r, s: _spec("9", 2),
            lambda m, n, r, s: (("i",), ("one",)),
            "N", "Y"),
    ],
    lambda: iter([_spec("9", 1)]),
)

BLOCKS: tuple[Block, ...] = tuple(_BLOCKS)


def find_block(spec: GroupSpec) -> Block:
    """The block listing the involution classes of the free-acting spec."""
    fam, m, n, r = spec.family, spec.m, spec.n, spec.r
    key = None
    if fam == "1":
        if r == 1:
            if m == 1 and n == 1:
                key = "1-r1-trivial"
            elif m == 1:
                key = "1-r1-m1"
            elif n == 1:
                key = "1-r1-n1"
            else:
                key = "1-r1"
        elif r == 2:
            key = "1-r2"
        else:
            key = "1-general"
    elif fam == "1p":
        if r == 2:
            if m == 1 and n == 1:
                key = "1'-r2-trivial"
            elif m == 1:
                key = "1'-r2-m1"
            elif n == 1:
                key = "1'-r2-n1"
            else:
                key = "1'-r2"
        else:
            key = "1'-general"
    elif fam == "2":
        if m == 1 and n == 2:
            key = "2-m1-n2"
        elif m == 1:
            key = "2-m1"
        elif n == 2:
            key = "2-n2"
        else:
            key = "2-general"
    elif fam == "3":
        key = "3-general"
    elif fam == "5":
        key = "5-m1" if m == 1 else "5-general"
    elif fam == "6":
        key = "6-general"
    elif fam == "7":
        key = "7-m1" if m == 1 else "7-general"
    elif fam == "9":
        key = "9-m1" if m == 1 else "9-general"
    if key is None:
        raise StructuralError(f"{spec} has no involution block (not a manifold group)")
    return next(b for b in BLOCKS if b.key == key)


def isometry_label(spec: GroupSpec):
    """Isom+(S^3/G) as a label structure; label_str() renders it."""
    return find_block(spec).isometry


def parent_work_spec(spec: GroupSpec) -> GroupSpec:
    """The conjugate representative the lift recipes are written for.

    Families 1/1' normalize s to the odd member of {s, r-s}; the groups are
    conjugate, so the classification transfers verbatim.
    """
    if spec.family in ("1", "1p"):
        return GroupSpec(
            spec.family, spec.m, spec.n, spec.r, odd_s_representative(spec.r, spec.s)
        )
    return spec


def classes_for(spec: GroupSpec) -> list[ClassData]:
    """One ClassData per involution conjugacy class, in table row order."""
    block = find_block(spec)
    work = parent_work_spec(spec)
    m, n, r, s = work.m, work.n, work.r, work.s
    out = []
    for row in block.rows:
        ext = normalize_extension(row.ext(m, n, r, s))
        out.append(
            ClassData(
                label=row.label,
                extension_spec=ext,
                lift_atoms=row.lift(m, n, r, s),
                printed_free=row.free,
                printed_hyperelliptic=row.hyper,
            )
        )
    return out


def lifts(spec: GroupSpec, conductor: int | None = None):
    """(class label, exact lift pair) for every involution class."""
    from .families import conductor_for

    M = conductor if conductor is not None else conductor_for(spec)
    return [(cls.label, cls.lift(M)) for cls in classes_for(spec)]


# -- element-level extension (Remark-style rules) ------------------------------


def extend(pg: PairGroup, lift: tuple[UnitQuaternion, UnitQuaternion]) -> PairGroup:
    """H union lift*H as a pair group, with full structural validation.

    The kernel bookkeeping follows the index-2 extension rules: the side
    whose lift coordinate stays inside its projection doubles the opposite
    kernel (through phi), the other side doubles its projection.
    """
    p, q = lift
    if (p, q) in pg.pair_set:
        raise StructuralError("lift already belongs to the group")
    p2, q2 = p * p, q * q
    if (p2, q2) not in pg.pair_set:
        raise StructuralError("lift squared must land in the group")
    pi, qi = p.conj(), q.conj()
    for x, y in pg.pairs:
        if (pi * x * p, qi * y * q) not in pg.pair_set:
            raise StructuralError("lift does not normalize the group")

    new_pairs = pg.pairs + tuple((p * x, q * y) for x, y in pg.pairs)
    ext = PairGroup(new_pairs)
    if len(ext.pair_set) != 2 * len(pg.pair_set):
        raise StructuralError("extension is not index 2")

    # cross-check the kernel rules against the direct projections
    L, LK, R, RK = pg.projections()
    L2, LK2, R2, RK2 = ext.projections()
    one = UnitQuaternion.identity(pg.conductor)
    if p in L:
        expect_RK = set(RK) | {q * y for x, y in pg.pairs if x == pi}
        if set(RK2) != expect_RK or L2 != L:
            raise StructuralError("kernel doubling rule failed on the right")
    else:
        if RK2 != RK or L2 != L | {p * x for x in L}:
            raise StructuralError("projection doubling rule failed on the left")
    if q in R:
        expect_LK = set(LK) | {p * x for x, y in pg.pairs if y == qi}
        if set(LK2) != expect_LK or R2 != R:
            raise StructuralError("kernel doubling rule failed on the left")
    else:
        if LK2 != LK or R2 != R | {q * y for y in R}:
            raise StructuralError("projection doubling rule failed on the right")
    return ext


def extension_spec_elementwise(
    pg: PairGroup, lift: tuple[UnitQuaternion, UnitQuaternion]
) -> GroupSpec:
    """identify_family(extend(...)): the slow, independent route."""
    return identify_family(extend(pg, lift)).canonical()
