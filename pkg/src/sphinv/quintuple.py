"""The (L, L_K, R, R_K, phi) model of finite subgroups of S^3 x S^3.

A quintuple realizes the group H = {(x, y) in L x R : phi(x L_K) = y R_K};
phi is stored by generator images. Realization enumerates H exactly and
validates the quintuple structure on the way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactmath import UnitQuaternion
from .groupspec import GroupSpec, canonical_s
from .s3groups import (
    I_STAR,
    O_STAR,
    T_STAR,
    SubgroupKind,
    binary_dihedral,
    cyclic,
    element_set,
    elements,
)


class StructuralError(ValueError):
    """The data does not describe a valid quintuple / subgroup."""


@dataclass(frozen=True)
class Quintuple:
    L: SubgroupKind
    L_K: SubgroupKind
    R: SubgroupKind
    R_K: SubgroupKind
    phi_gens: tuple[tuple[UnitQuaternion, UnitQuaternion], ...]
    conductor: int

    def __str__(self) -> str:
        return f"({self.L}/{self.L_K},{self.R}/{self.R_K})"


def rotation_order(q: Quintuple) -> int:
    """|Phi(H)| = |H| / 2."""
    return q.L.order * q.R_K.order // 2


class PairGroup:
    """The realized subgroup of S^3 x S^3 as an explicit pair list."""

    __slots__ = ("pairs", "_pair_set", "quintuple", "conductor", "_proj")

    def __init__(self, pairs, quintuple=None):
        self.pairs = tuple(pairs)
        self._pair_set = None
        self.quintuple = quintuple
        self.conductor = self.pairs[0][0].conductor
        self._proj = None

    @property
    def pair_set(self):
        ps = self._pair_set
        if ps is None:
            ps = self._pair_set = frozenset(self.pairs)
        return ps

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.pair_set

    def projections(self):
        """(L, L_K, R, R_K) as element sets, computed from the pairs."""
        if self._proj is None:
            one = UnitQuaternion.identity(self.conductor)
            L = frozenset(x for x, _ in self.pairs)
            R = frozenset(y for _, y in self.pairs)
            LK = frozenset(x for x, y in self.pairs if y == one)
            RK = frozenset(y for x, y in self.pairs if x == one)
            self._proj = (L, LK, R, RK)
        return self._proj


def _left_cosets(group, kernel_set):
    """Partition a listed group into left cosets of a kernel subset.

    Returns (assignment dict elem -> coset id, representatives, members).
    """
    assign: dict[UnitQuaternion, int] = {}
    reps: list[UnitQuaternion] = []
    members: list[list[UnitQuaternion]] = []
    kernel = tuple(kernel_set)
    for x in group:
        if x in assign:
            continue
        cid = len(reps)
        reps.append(x)
        row = []
        for k in kernel:
            y = x * k
            if y in assign:
                raise StructuralError("kernel does not partition the group")
            assign[y] = cid
            row.append(y)
        members.append(row)
    return assign, reps, members


def _realize_cyclic(q: Quintuple) -> PairGroup:
    """Index-arithmetic enumeration for all-cyclic quintuples.

    elements(cyclic(n), M) is indexed by exponent, and cosets of C_B in C_A
    are exponent classes mod A/B, so H enumerates without any quaternion
    multiplication. Verified against the generic path in the test suite.
    """
    M = q.conductor
    A, B = q.L.n, q.L_K.n
    C, D = q.R.n, q.R_K.n
    if A % B or C % D:
        raise StructuralError(f"{q}: kernel order does not divide group order")
    r = A // B
    if r != C // D:
        raise StructuralError(f"{q}: coset counts differ ({A // B} vs {C // D})")
    els_L = elements(q.L, M)
    els_R = elements(q.R, M)
    table_L = {el: k for k, el in enumerate(els_L)}
    table_R = {el: k for k, el in enumerate(els_R)}
    phi = {0: 0}
    gens = []
    for gx, gy in q.phi_gens:
        a, b = table_L.get(gx), table_R.get(gy)
        if a is None or b is None:
            raise StructuralError(f"{q}: phi generator outside the groups")
        gens.append((a % r, b % r))
    frontier = [(0, 0)]
    while frontier:
        x, y = frontier.pop()
        for ga, gb in gens:
            nx, ny = (x + ga) % r, (y + gb) % r
            if nx in phi:
                if phi[nx] != ny:
                    raise StructuralError(f"{q}: phi is not a well-defined homomorphism")
            else:
                phi[nx] = ny
                frontier.append((nx, ny))
    if len(phi) != r:
        raise StructuralError(f"{q}: phi generators do not span L/L_K")
    if len(set(phi.values())) != r:
        raise StructuralError(f"{q}: phi is not a bijection on cosets")
    pairs = []
    for a in range(A):
        x = els_L[a]
        for b in range(phi[a % r], C, r):
            pairs.append((x, els_R[b]))
    return PairGroup(pairs, q)


def _structural_coset_ids(kind, kernel, M: int):
    """Left-coset id per element index of elements(kind, M), or None.

    The element tuples are laid out structurally (cyclic: by exponent;
    dihedral: circle then circle*j; T*/O*/I*: by coset blocks of their
    construction), which makes left cosets of the kernels in scope pure
    index arithmetic. Checked against the generic partition in the tests.
    """
    if kind == kernel:
        return 1, [0] * kind.order
    if kind.tag == "C" and kernel.tag == "C":
        if kind.n % kernel.n:
            return None
        r = kind.n // kernel.n
        return r, [k % r for k in range(kind.n)]
    if kind.tag == "D" and kernel.tag == "C":
        n2 = 2 * kind.n
        if n2 % kernel.n:
            return None
        r0 = n2 // kernel.n
        ids = [k % r0 for k in range(n2)]
        ids += [r0 + (k % r0) for k in range(n2)]
        return 2 * r0, ids
    if kind.tag == "D" and kernel.tag == "D":
        if kind.n % kernel.n:
            return None
        # the coset of zeta^k (or zeta^k j) meets both halves in exponents = k
        q = kind.n // kernel.n
        n2 = 2 * kind.n
        ids = [k % q for k in range(n2)]
        return q, ids + ids
    if kind.tag == "T" and kernel == binary_dihedral(2):
        return 3, [k // 8 for k in range(24)]
    if kind.tag == "O" and kernel == T_STAR:
        return 2, [k // 24 for k in range(48)]
    if kind.tag == "O" and kernel == binary_dihedral(2):
        return 6, [k // 8 for k in range(48)]
    if kind.tag == "I" and kernel == T_STAR:
        return 5, [k // 24 for k in range(120)]
    return None


def _coset_data(kind, kernel, M: int):
    """(count, ids per element index, member index lists, representatives)."""
    els = elements(kind, M)
    structural = _structural_coset_ids(kind, kernel, M)
    if structural is not None:
        count, ids = structural
    else:
        assign, _, _ = _left_cosets(els, element_set(kernel, M))
        ids = [assign[x] for x in els]
        count = len(set(ids))
    members: list[list[int]] = [[] for _ in range(count)]
    for idx, cid in enumerate(ids):
        members[cid].append(idx)
    if any(len(ms) != kernel.order for ms in members):
        raise StructuralError(f"cosets of {kernel} in {kind} have uneven sizes")
    return count, ids, members


def realize(q: Quintuple) -> PairGroup:
    if (
        q.L.tag == "C"
        and q.L_K.tag == "C"
        and q.R.tag == "C"
        and q.R_K.tag == "C"
    ):
        return _realize_cyclic(q)
    M = q.conductor
    L = elements(q.L, M)
    R = elements(q.R, M)
    if not element_set(q.L_K, M) <= element_set(q.L, M):
        raise StructuralError(f"{q}: left kernel is not contained in its group")
    if not element_set(q.R_K, M) <= element_set(q.R, M):
        raise StructuralError(f"{q}: right kernel is not contained in its group")

    nl, l_ids, _ = _coset_data(q.L, q.L_K, M)
    nr, r_ids, r_members = _coset_data(q.R, q.R_K, M)
    if nl != nr:
        raise StructuralError(f"{q}: coset counts differ ({nl} vs {nr})")
    l_index = {x: i for i, x in enumerate(L)}
    r_index = {y: i for i, y in enumerate(R)}
    l_reps = [-1] * nl
    r_reps = [-1] * nr
    for idx, cid in enumerate(l_ids):
        if l_reps[cid] < 0:
            l_reps[cid] = idx
    for idx, cid in enumerate(r_ids):
        if r_reps[cid] < 0:
            r_reps[cid] = idx

    def mult_l(c1, c2):
        return l_ids[l_index[L[l_reps[c1]] * L[l_reps[c2]]]]

    def mult_r(c1, c2):
        return r_ids[r_index[R[r_reps[c1]] * R[r_reps[c2]]]]

    # close phi from its generator images
    phi: dict[int, int] = {l_ids[l_index[UnitQuaternion.identity(M)]]: r_ids[
        r_index[UnitQuaternion.identity(M)]
    ]}
    gen_cids = []
    for gx, gy in q.phi_gens:
        if gx not in l_index or gy not in r_index:
            raise StructuralError(f"{q}: phi generator outside the groups")
        gen_cids.append((l_ids[l_index[gx]], r_ids[r_index[gy]]))
    frontier = list(phi.items())
    while frontier:
        a, b = frontier.pop()
        for ga, gb in gen_cids:
            na = mult_l(ga, a)
            nb = mult_r(gb, b)
            if na in phi:
                if phi[na] != nb:
                    raise StructuralError(f"{q}: phi is not a well-defined homomorphism")
            else:
                phi[na] = nb
                frontier.append((na, nb))
    if len(phi) != nl:
        raise StructuralError(f"{q}: phi generators do not span L/L_K")
    if len(set(phi.values())) != nl:
        raise StructuralError(f"{q}: phi is not a bijection on cosets")

    pairs = []
    for idx, x in enumerate(L):
        for yi in r_members[phi[l_ids[idx]]]:
            pairs.append((x, R[yi]))
    pg = PairGroup(pairs, q)
    if len(pg.pair_set) != q.L.order * q.R_K.order:
        raise StructuralError(f"{q}: |H| != |L| * |R_K|")
    return pg


def is_conjugating_witness(
    q: Quintuple, q2: Quintuple, g: UnitQuaternion, f: UnitQuaternion
) -> bool:
    """Check the conjugation criterion: (g, f) carries q onto q2."""
    if q.conductor != q2.conductor:
        raise StructuralError("witness check requires a common conductor")
    M = q.conductor
    gi, fi = g.conj(), f.conj()

    def conj_set(kind, w, wi):
        return frozenset(wi * x * w for x in elements(kind, M))

    if conj_set(q.L, g, gi) != element_set(q2.L, M):
        return False
    if conj_set(q.R, f, fi) != element_set(q2.R, M):
        return False
    if conj_set(q.L_K, g, gi) != element_set(q2.L_K, M):
        return False
    if conj_set(q.R_K, f, fi) != element_set(q2.R_K, M):
        return False
    target = realize(q2)
    return all((gi * x * g, fi * y * f) in target for x, y in q.phi_gens)


# -- abstract recognition -----------------------------------------------------


def kind_of_set(S: frozenset[UnitQuaternion], M: int) -> SubgroupKind:
    """Identify a finite subgroup of S^3 given as an element set.

    Sets produced by the pipeline keep their circle part on the standard
    circle {z2 = 0}; twisted halves (w * circle with w off-circle) are
    recognized abstractly.
    """
    k = len(S)
    circle = [x for x in S if x.z2.is_zero()]
    if len(circle) == k:
        return cyclic(k)
    if 2 * len(circle) == k:
        half = k // 2
        c0 = UnitQuaternion.from_root(1, half, M)
        if c0 not in S:
            raise StructuralError("circle part of subgroup is not standard")
        w = next(x for x in S if not x.z2.is_zero())
        if w * c0 == c0 * w:
            return cyclic(k)
        if k % 4:
            raise StructuralError("non-cyclic subgroup of order not divisible by 4")
        return binary_dihedral(k // 4)
    for kind in (T_STAR, O_STAR, I_STAR):
        if k == kind.order and S == element_set(kind, M):
            return kind
    raise StructuralError(f"unclassified subgroup of S^3 (order {k})")


@lru_cache(maxsize=64)
def _root_table(order: int, M: int) -> dict[UnitQuaternion, int]:
    return {UnitQuaternion.from_root(t, order, M): t for t in range(order)}


def _circle_exponent(y: UnitQuaternion, order: int, M: int) -> int:
    """Which power of e^{2 pi i / order} the circle element y is."""
    if M % order != 0:
        raise StructuralError("conductor cannot host the circle group")
    t = _root_table(order, M).get(y)
    if t is None:
        raise StructuralError("element is not on the expected circle")
    return t


def _extract_s(pg: PairGroup, cyc_order_L: int, cyc_order_R: int, r: int) -> int:
    """Recover s from the partner of the standard generator of the L circle."""
    if r <= 2:
        return 1
    M = pg.conductor
    gen = UnitQuaternion.from_root(1, cyc_order_L, M)
    for x, y in pg.pairs:
        if x == gen and y.z2.is_zero():
            t = _circle_exponent(y, cyc_order_R, M)
            return canonical_s(r, t % r)
    raise StructuralError("no circle partner found for the L generator")


def identify_family(pg: PairGroup) -> GroupSpec:
    """Match a realized group against the family shapes; returns canonical spec."""
    M = pg.conductor
    Lset, LKset, Rset, RKset = pg.projections()
    Lk = kind_of_set(Lset, M)
    LKk = kind_of_set(LKset, M)
    Rk = kind_of_set(Rset, M)
    RKk = kind_of_set(RKset, M)

    def index(big: SubgroupKind, small: SubgroupKind) -> int:
        if big.order % small.order:
            raise StructuralError(f"non-integral index {big}/{small}")
        return big.order // small.order

    li, ri = index(Lk, LKk), index(Rk, RKk)
    if li != ri:
        raise StructuralError(f"quotient orders differ: {li} vs {ri}")

    tags = (Lk.tag, LKk.tag, Rk.tag, RKk.tag)

    if tags == ("C", "C", "C", "C"):
        r = li
        if LKk.n % 2 == 0:
            s = _extract_s(pg, Lk.n, Rk.n, r)
            return GroupSpec("1", LKk.n // 2, RKk.n // 2, r, s)
        s = _extract_s(pg, Lk.n, Rk.n, r)
        return GroupSpec("1p", LKk.n, RKk.n, r, s)

    if tags == ("C", "C", "D", "D") and li == 1:
        return GroupSpec("2", Lk.n // 2, Rk.n)
    if tags == ("D", "D", "C", "C") and li == 1:
        return GroupSpec("2bis", Lk.n, Rk.n // 2)
    if tags == ("C", "C", "D", "C") and li == 2:
        return GroupSpec("3", LKk.n // 2, Rk.n)
    if tags == ("D", "C", "C", "C") and li == 2:
        return GroupSpec("3bis", Lk.n, RKk.n // 2)
    if tags == ("C", "C", "D", "D") and li == 2:
        return GroupSpec("4", LKk.n // 2, RKk.n)
    if tags == ("D", "D", "C", "C") and li == 2:
        return GroupSpec("4bis", LKk.n, RKk.n // 2)
    if tags == ("C", "C", "T", "T"):
        return GroupSpec("5", Lk.n // 2)
    if tags == ("C", "C", "T", "D") and li == 3:
        return GroupSpec("6", LKk.n // 2)
    if tags == ("C", "C", "O", "O"):
        return GroupSpec("7", Lk.n // 2)
    if tags == ("C", "C", "O", "T") and li == 2:
        return GroupSpec("8", LKk.n // 2)
    if tags == ("C", "C", "I", "I"):
        return GroupSpec("9", Lk.n // 2)
    if tags == ("D", "D", "D", "D") and li == 1:
        return GroupSpec("10", Lk.n, Rk.n)
    if tags == ("D", "C", "D", "C"):
        if LKk.n % 2 == 0:
            m = LKk.n // 2
            r = li // 2
            s = _extract_s(pg, 2 * Lk.n, 2 * Rk.n, r)
            return GroupSpec("11", m, RKk.n // 2, r, s)
        m = LKk.n
        r = li // 2
        s = _extract_s(pg, 2 * Lk.n, 2 * Rk.n, r)
        return GroupSpec("11p", m, RKk.n, r, s)
    if tags == ("D", "D", "D", "C") and li == 2:
        return GroupSpec("13", LKk.n, RKk.n // 2)
    if tags == ("D", "C", "D", "D") and li == 2:
        return GroupSpec("13bis", LKk.n // 2, RKk.n)
    if tags == ("D", "D", "T", "T"):
        return GroupSpec("14", Lk.n)
    if tags == ("D", "D", "O", "O"):
        return GroupSpec("15", Lk.n)
    if tags == ("D", "C", "O", "T") and li == 2:
        return GroupSpec("16", LKk.n // 2)
    if tags == ("D", "C", "O", "D") and li == 6:
        return GroupSpec("18", LKk.n // 2)
    if tags == ("D", "D", "I", "I"):
        return GroupSpec("19", Lk.n)
    if tags == ("C", "C", "D", "C") and li == 4:
        return GroupSpec("34", LKk.n, RKk.n)
    if tags == ("D", "C", "C", "C") and li == 4:
        return GroupSpec("34bis", LKk.n, RKk.n)

    raise StructuralError(f"quintuple shape {tags} with index {li} is unclassified")
