"""Independent brute-force verification by exact finite-group computation.

Ground truth for the formula-driven answers: fixed-point scans, stabilizer
orders, abelianization by commutator closure, and first homology from a
Seifert presentation via Smith normal form.
"""

from __future__ import annotations

from fractions import Fraction

from .exactmath import UnitQuaternion
from .quintuple import PairGroup


def acts_freely_bruteforce(pg: PairGroup) -> bool:
    """Free action test: Phi(p,q) has a fixed point iff Re(p) = Re(q).

    The kernel pairs (1,1) and (-1,-1) always match, so the action is free
    exactly when no third pair does.
    """
    matches = 0
    for p, q in pg.pairs:
        rp = p.real_part()
        rq = q.real_part()
        if hash(rp) == hash(rq) and rp == rq:
            matches += 1
            if matches > 2:
                return False
    if matches != 2:
        raise AssertionError("kernel pairs +-(1,1) missing from the group")
    return True


def stabilizer_order(pg: PairGroup, x: UnitQuaternion) -> int:
    """Order of the stabilizer of x in Phi(H): pairs with p x q^-1 = x, halved."""
    count = 0
    for p, q in pg.pairs:
        if p * x == x * q:
            count += 1
    if count % 2:
        raise AssertionError("stabilizer count must be even (kernel is +-(1,1))")
    return count // 2


class MultiplicationTable:
    """Phi(H) = H / {+-(1,1)} as an indexed multiplication table."""

    __slots__ = ("elems", "table", "inverse")

    def __init__(self, pg: PairGroup):
        reps: list[tuple[UnitQuaternion, UnitQuaternion]] = []
        index: dict = {}
        for p, q in pg.pairs:
            if (p, q) in index:
                continue
            i = len(reps)
            index[(p, q)] = i
            index[(-p, -q)] = i
            reps.append((p, q))
        one = UnitQuaternion.identity(pg.conductor)
        i0 = index[(one, one)]
        if i0 != 0:  # put the identity coset first
            reps[0], reps[i0] = reps[i0], reps[0]
            index = {}
            for i, (p, q) in enumerate(reps):
                index[(p, q)] = i
                index[(-p, -q)] = i
        self.elems = reps
        n = len(reps)
        self.table = [[0] * n for _ in range(n)]
        for i, (p1, q1) in enumerate(reps):
            row = self.table[i]
            for k, (p2, q2) in enumerate(reps):
                row[k] = index[(p1 * p2, q1 * q2)]
        self.inverse = [0] * n
        for i, (p, q) in enumerate(reps):
            self.inverse[i] = index[(p.conj(), q.conj())]

    def __len__(self) -> int:
        return len(self.elems)


def abelianization_order(pg: PairGroup) -> int:
    """|Phi(H)^ab|, by generating the commutator subgroup and closing it."""
    t = MultiplicationTable(pg)
    n = len(t)
    table, inv = t.table, t.inverse
    commutators = set()
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            ba = table[b][a]
            commutators.add(table[ab][inv[ba]])
    # the set of all commutators is conjugation closed, so plain
    # multiplicative closure yields the commutator subgroup
    closure = set(commutators)
    closure.add(0)
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        row = table[x]
        for g in commutators:
            y = row[g]
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    if n % len(closure):
        raise AssertionError("commutator subgroup order must divide group order")
    return n // len(closure)


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form, by row/column reduction."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot of minimal absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = m[i][j]
                if v and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        for row in m:
            row[t], row[bj] = row[bj], row[t]
        dirty = True
        while dirty:
            dirty = False
            piv = m[t][t]
            for i in range(t + 1, rows):
                if m[i][t]:
                    f = m[i][t] // piv
                    for j in range(t, cols):
                        m[i][j] -= f * m[t][j]
                    if m[i][t]:  # remainder smaller than pivot: swap up and redo
                        m[t], m[i] = m[i], m[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, cols):
                if m[t][j]:
                    f = m[t][j] // piv
                    for i in range(t, rows):
                        m[i][j] -= f * m[i][t]
                    if m[t][j]:
                        for i in range(t, rows):
                            m[i][t], m[i][j] = m[i][j], m[i][t]
                        dirty = True
                        break
        diag.append(abs(m[t][t]))
        t += 1
    diag.extend([0] * (min(rows, cols) - len(diag)))
    return diag


def h1_from_seifert(fib) -> int | None:
    """|H1| of the Seifert-fibered manifold over S^2; None when infinite.

    Presentation: generators x_1..x_k, h; relations a_i x_i + c_i h = 0 and
    sum x_i = b h, with b = -e - sum(c_i / a_i) (an integer for honest data).
    """
    if fib.base.surface != "S2":
        raise ValueError("h1_from_seifert handles S^2-based fibrations only")
    pairs = [(inv.den, inv.num) for inv in fib.invariants]
    b = -fib.euler - sum(Fraction(c, a) for a, c in pairs)
    if b.denominator != 1:
        raise AssertionError("non-integer section obstruction b; inconsistent data")
    b = int(b)
    k = len(pairs)
    matrix = []
    for i, (a, c) in enumerate(pairs):
        row = [0] * (k + 1)
        row[i] = a
        row[k] = c
        matrix.append(row)
    matrix.append([1] * k + [-b])
    diag = smith_normal_form(matrix)
    order = 1
    for d in diag:
        if d == 0:
            return None
        order *= d
    return order
