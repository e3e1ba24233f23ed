"""Parametric constructors and free-action predicates for the group families.

construct() builds the standard quintuple for a spec; acts_freely_on_sphere()
implements the classical free-action conditions (Family 6 is decided by the
brute-force fixed-point oracle because the printed closed form is
inconsistent); manifold_class() names the quotient manifold type.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .exactmath import UnitQuaternion
from .groupspec import GroupSpec, InvalidParametersError, validate
from .quintuple import Quintuple, realize, rotation_order
from .s3groups import (
    I_STAR,
    O_STAR,
    T_STAR,
    alpha,
    beta,
    binary_dihedral,
    cyclic,
)

LENS = "lens"
PRISM = "prism"
TETRAHEDRAL = "tetrahedral"
OCTAHEDRAL = "octahedral"
ICOSAHEDRAL = "icosahedral"

MANIFOLD_CLASSES = (LENS, PRISM, TETRAHEDRAL, OCTAHEDRAL, ICOSAHEDRAL)

FREE_FAMILIES = ("1", "1p", "2", "3", "5", "6", "7", "9")


def _lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


def conductor_for(spec: GroupSpec) -> int:
    """A conductor hosting the spec's group, all its lifts and extensions."""
    fam, m, n, r = spec.family, spec.m, spec.n, spec.r
    if fam in ("1", "11"):
        return _lcm(4, 4 * m * r, 4 * n * r)
    if fam in ("1p", "11p"):
        return _lcm(4, 2 * m * r, 2 * n * r)
    if fam in ("2", "2bis", "3", "3bis", "4", "4bis", "10", "13", "13bis", "34", "34bis"):
        return _lcm(4, 4 * m, 4 * n)
    if fam in ("5", "7", "8", "14", "15", "16"):
        return _lcm(8, 4 * m)
    if fam in ("6", "18"):
        return _lcm(8, 12 * m)
    if fam in ("9", "19"):
        return _lcm(20, 4 * m)
    raise InvalidParametersError(f"unknown family {fam}")


def construct(spec: GroupSpec, conductor: int | None = None) -> Quintuple:
    """The standard quintuple for a valid spec."""
    validate(spec)
    fam, m, n, r, s = spec.family, spec.m, spec.n, spec.r, spec.s
    M = conductor if conductor is not None else conductor_for(spec)

    def root(k, N):
        return UnitQuaternion.from_root(k, N, M)

    j = UnitQuaternion.j(M)

    if fam == "1":
        return Quintuple(
            cyclic(2 * m * r), cyclic(2 * m), cyclic(2 * n * r), cyclic(2 * n),
            ((root(1, 2 * m * r), root(s, 2 * n * r)),), M,
        )
    if fam == "1p":
        return Quintuple(
            cyclic(m * r), cyclic(m), cyclic(n * r), cyclic(n),
            ((root(1, m * r), root(s, n * r)),), M,
        )
    if fam == "2":
        return Quintuple(
            cyclic(2 * m), cyclic(2 * m), binary_dihedral(n), binary_dihedral(n), (), M
        )
    if fam == "2bis":
        return Quintuple(
            binary_dihedral(m), binary_dihedral(m), cyclic(2 * n), cyclic(2 * n), (), M
        )
    if fam == "3":
        return Quintuple(
            cyclic(4 * m), cyclic(2 * m), binary_dihedral(n), cyclic(2 * n),
            ((root(1, 4 * m), j),), M,
        )
    if fam == "3bis":
        return Quintuple(
            binary_dihedral(m), cyclic(2 * m), cyclic(4 * n), cyclic(2 * n),
            ((j, root(1, 4 * n)),), M,
        )
    if fam == "4":
        return Quintuple(
            cyclic(4 * m), cyclic(2 * m), binary_dihedral(2 * n), binary_dihedral(n),
            ((root(1, 4 * m), root(1, 4 * n)),), M,
        )
    if fam == "4bis":
        return Quintuple(
            binary_dihedral(2 * m), binary_dihedral(m), cyclic(4 * n), cyclic(2 * n),
            ((root(1, 4 * m), root(1, 4 * n)),), M,
        )
    if fam == "5":
        return Quintuple(cyclic(2 * m), cyclic(2 * m), T_STAR, T_STAR, (), M)
    if fam == "6":
        return Quintuple(
            cyclic(6 * m), cyclic(2 * m), T_STAR, binary_dihedral(2),
            ((root(1, 6 * m), alpha(M)),), M,
        )
    if fam == "7":
        return Quintuple(cyclic(2 * m), cyclic(2 * m), O_STAR, O_STAR, (), M)
    if fam == "8":
        return Quintuple(
            cyclic(4 * m), cyclic(2 * m), O_STAR, T_STAR,
            ((root(1, 4 * m), beta(M)),), M,
        )
    if fam == "9":
        return Quintuple(cyclic(2 * m), cyclic(2 * m), I_STAR, I_STAR, (), M)
    if fam == "10":
        return Quintuple(
            binary_dihedral(m), binary_dihedral(m), binary_dihedral(n),
            binary_dihedral(n), (), M,
        )
    if fam == "11":
        return Quintuple(
            binary_dihedral(m * r), cyclic(2 * m), binary_dihedral(n * r), cyclic(2 * n),
            ((root(1, 2 * m * r), root(s, 2 * n * r)), (j, j)), M,
        )
    if fam == "11p":
        return Quintuple(
            binary_dihedral(m * r // 2), cyclic(m), binary_dihedral(n * r // 2), cyclic(n),
            ((root(1, m * r), root(s, n * r)), (j, j)), M,
        )
    if fam == "13":
        return Quintuple(
            binary_dihedral(2 * m), binary_dihedral(m), binary_dihedral(n), cyclic(2 * n),
            ((root(1, 4 * m), j),), M,
        )
    if fam == "13bis":
        return Quintuple(
            binary_dihedral(m), cyclic(2 * m), binary_dihedral(2 * n), binary_dihedral(n),
            ((j, root(1, 4 * n)),), M,
        )
    if fam == "14":
        return Quintuple(binary_dihedral(m), binary_dihedral(m), T_STAR, T_STAR, (), M)
    if fam == "15":
        return Quintuple(binary_dihedral(m), binary_dihedral(m), O_STAR, O_STAR, (), M)
    if fam == "16":
        return Quintuple(
            binary_dihedral(m), cyclic(2 * m), O_STAR, T_STAR, ((j, beta(M)),), M
        )
    if fam == "18":
        return Quintuple(
            binary_dihedral(3 * m), cyclic(2 * m), O_STAR, binary_dihedral(2),
            ((root(1, 6 * m), alpha(M)), (j, beta(M))), M,
        )
    if fam == "19":
        return Quintuple(binary_dihedral(m), binary_dihedral(m), I_STAR, I_STAR, (), M)
    if fam == "34":
        return Quintuple(
            cyclic(4 * m), cyclic(m), binary_dihedral(n), cyclic(n),
            ((root(1, 4 * m), j),), M,
        )
    if fam == "34bis":
        return Quintuple(
            binary_dihedral(m), cyclic(m), cyclic(4 * n), cyclic(n),
            ((j, root(1, 4 * n)),), M,
        )
    raise InvalidParametersError(f"unknown family {fam}")


def table1_order(spec: GroupSpec) -> int:
    """The order of Phi(G) per the classification table."""
    fam, m, n, r = spec.family, spec.m, spec.n, spec.r
    return {
        "1": 2 * m * n * r, "1p": m * n * r // 2,
        "2": 4 * m * n, "2bis": 4 * m * n, "3": 4 * m * n, "3bis": 4 * m * n,
        "4": 8 * m * n, "4bis": 8 * m * n,
        "5": 24 * m, "6": 24 * m, "7": 48 * m, "8": 48 * m, "9": 120 * m,
        "10": 8 * m * n, "11": 4 * m * n * r, "11p": m * n * r,
        "13": 8 * m * n, "13bis": 8 * m * n,
        "14": 48 * m, "15": 96 * m, "16": 48 * m, "18": 48 * m, "19": 240 * m,
        "34": 2 * m * n, "34bis": 2 * m * n,
    }[fam]


@lru_cache(maxsize=None)
def _family6_acts_freely(m: int) -> bool:
    from .oracle import acts_freely_bruteforce

    return acts_freely_bruteforce(realize(construct(GroupSpec("6", m))))


def acts_freely_on_sphere(spec: GroupSpec) -> bool:
    """Whether the realized group acts freely on S^3.

    Families 1, 1', 2, 3, 5, 7, 9 use the classical closed conditions;
    Family 6 is delegated to the exact fixed-point oracle; the bis partners
    of 2 and 3 use the mirrored conditions (free action is conjugation
    invariant); every other family never acts freely.
    """
    validate(spec)
    fam, m, n, r, s = spec.family, spec.m, spec.n, spec.r, spec.s
    if fam == "1":
        return (
            gcd(m, n) == 1
            and (m * n % 2 == 0 or r % 2 == 1)
            and gcd(n - s * m, 2 * m * n * r) == gcd(n + s * m, 2 * m * n * r)
        )
    if fam == "1p":
        return gcd(m, n) == 1 and gcd(n - s * m, m * n * r) == gcd(n + s * m, m * n * r)
    if fam == "2":
        return gcd(m, 2 * n) == 1
    if fam == "2bis":
        return gcd(n, 2 * m) == 1
    if fam == "3":
        return gcd(m, n) == 1 and m % 2 == 0
    if fam == "3bis":
        return gcd(m, n) == 1 and n % 2 == 0
    if fam == "5":
        return gcd(m, 6) == 1
    if fam == "6":
        return _family6_acts_freely(m)
    if fam == "7":
        return gcd(m, 6) == 1
    if fam == "9":
        return gcd(m, 30) == 1
    return False


def manifold_class(spec: GroupSpec) -> str:
    if not acts_freely_on_sphere(spec):
        raise InvalidParametersError(f"{spec} does not act freely on the sphere")
    return {
        "1": LENS, "1p": LENS, "2": PRISM, "3": PRISM,
        "5": TETRAHEDRAL, "6": TETRAHEDRAL, "7": OCTAHEDRAL, "9": ICOSAHEDRAL,
    }[spec.family]


def du_val(spec: GroupSpec) -> str:
    """The group in Du Val's (L/L_K, R/R_K) notation, concrete parameters."""
    q = construct(spec)
    base = f"({q.L}/{q.L_K},{q.R}/{q.R_K})"
    if spec.family in ("1", "1p", "11", "11p") and spec.r > 2:
        base += f"_{spec.s}"
    return base


def enumerate_free_specs(max_order: int, classes=None) -> list[GroupSpec]:
    """All canonical free-acting specs with rotation order <= max_order."""
    out: list[GroupSpec] = []

    def emit(spec: GroupSpec):
        if classes is None or manifold_class(spec) in classes:
            out.append(spec)

    # Family 1: order 2mnr
    for r in range(1, max_order // 2 + 1):
        for m in range(1, max_order // (2 * r) + 1):
            for n in range(1, max_order // (2 * m * r) + 1):
                if gcd(m, n) != 1:
                    continue
                ss = [1] if r <= 2 else [
                    s for s in range(1, r // 2 + 1) if gcd(s, r) == 1
                ]
                for s in ss:
                    spec = GroupSpec("1", m, n, r, s)
                    if acts_freely_on_sphere(spec):
                        emit(spec)
    # Family 1': order mnr/2, m,n odd, r even
    for r in range(2, 2 * max_order + 1, 2):
        for m in range(1, 2 * max_order // r + 1, 2):
            for n in range(1, 2 * max_order // (m * r) + 1, 2):
                if gcd(m, n) != 1:
                    continue
                ss = [1] if r <= 2 else [
                    s for s in range(1, r // 2 + 1) if gcd(s, r) == 1
                ]
                for s in ss:
                    spec = GroupSpec("1p", m, n, r, s)
                    if acts_freely_on_sphere(spec):
                        emit(spec)
    # Family 2/3: order 4mn (n >= 2)
    for fam in ("2", "3"):
        for m in range(1, max_order // 8 + 1):
            for n in range(2, max_order // (4 * m) + 1):
                spec = GroupSpec(fam, m, n)
                try:
                    validate(spec)
                except InvalidParametersError:
                    continue
                if acts_freely_on_sphere(spec):
                    emit(spec)
    # Families 5, 6, 7, 9
    for fam, per in (("5", 24), ("6", 24), ("7", 48), ("9", 120)):
        for m in range(1, max_order // per + 1):
            spec = GroupSpec(fam, m)
            if acts_freely_on_sphere(spec):
                emit(spec)

    out.sort(key=lambda sp: (table1_order(sp), sp.family, sp.params))
    return out
