"""The finite subgroups of S^3 as exact quaternion sets, plus their normalizers.

Finite kinds: C_n, D*_4n (n >= 2), T*, O*, I*. The symbolic kinds S^1,
O(2)* and S^3 only occur as normalizer answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactmath import (
    ConductorMismatchError,
    CyclotomicNumber,
    UnitQuaternion,
    root_of_unity,
)

_HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class SubgroupKind:
    tag: str  # "C", "D", "T", "O", "I", "S1", "O2*", "S3"
    n: int = 0  # C_n: order n; D: order 4n

    @property
    def order(self) -> int:
        if self.tag == "C":
            return self.n
        if self.tag == "D":
            return 4 * self.n
        if self.tag == "T":
            return 24
        if self.tag == "O":
            return 48
        if self.tag == "I":
            return 120
        raise ValueError(f"{self} is not finite")

    @property
    def is_finite(self) -> bool:
        return self.tag in ("C", "D", "T", "O", "I")

    def __str__(self) -> str:
        if self.tag == "C":
            return f"C_{self.n}"
        if self.tag == "D":
            return f"D*_{4 * self.n}"
        return {"T": "T*", "O": "O*", "I": "I*", "S1": "S^1", "O2*": "O(2)*", "S3": "S^3"}[
            self.tag
        ]


def cyclic(n: int) -> SubgroupKind:
    if n < 1:
        raise ValueError("cyclic order must be >= 1")
    return SubgroupKind("C", n)


def binary_dihedral(n: int) -> SubgroupKind:
    # order 4n; D*_4 is conjugate to C_4 and is not admitted as a kind
    if n < 2:
        raise ValueError("binary dihedral D*_4n requires n >= 2")
    return SubgroupKind("D", n)


T_STAR = SubgroupKind("T")
O_STAR = SubgroupKind("O")
I_STAR = SubgroupKind("I")
CIRCLE = SubgroupKind("S1")
PIN_CIRCLE = SubgroupKind("O2*")
FULL = SubgroupKind("S3")


# -- distinguished generators ----------------------------------------------


def alpha(M: int) -> UnitQuaternion:
    """(1 + i + j + k)/2, the order-6 generator of T* over D*_8."""
    z = (CyclotomicNumber.one(M) + root_of_unity(1, 4, M)).scale(_HALF)
    return UnitQuaternion(z, z)


def beta(M: int) -> UnitQuaternion:
    """(1 + j)/sqrt(2), the generator of O* over T*; needs 8 | M."""
    z = (root_of_unity(1, 8, M) - root_of_unity(3, 8, M)).scale(_HALF)
    return UnitQuaternion(z, z)


def gamma(M: int) -> UnitQuaternion:
    """(phi^-1 + phi j + k)/2 with phi the golden ratio; needs 20 | M."""
    phi = -(root_of_unity(2, 5, M) + root_of_unity(3, 5, M))
    one = CyclotomicNumber.one(M)
    if phi * phi != phi + one:
        raise AssertionError("golden ratio expression failed x^2 = x + 1")
    z1 = (phi - one).scale(_HALF)  # phi^-1 = phi - 1
    z2 = (phi + root_of_unity(1, 4, M)).scale(_HALF)
    return UnitQuaternion(z1, z2)


# -- element enumeration -----------------------------------------------------


@lru_cache(maxsize=24)
def circle(M: int) -> tuple[UnitQuaternion, ...]:
    """All M-th roots of unity as quaternions; every C_n at this conductor
    is an index slice, so elements and their cached real parts are shared."""
    return tuple(UnitQuaternion.from_root(k, M, M) for k in range(M))


@lru_cache(maxsize=256)
def elements(kind: SubgroupKind, M: int) -> tuple[UnitQuaternion, ...]:
    """All elements of the subgroup, exactly; cached per (kind, conductor)."""
    if kind.tag == "C":
        n = kind.n
        if M % n != 0:
            raise ConductorMismatchError(f"conductor {M} cannot host C_{n}")
        master = circle(M)
        step = M // n
        return tuple(master[k * step] for k in range(n))
    if kind.tag == "D":
        circ = elements(cyclic(2 * kind.n), M)
        zero = CyclotomicNumber.zero(M)
        # x * j for a circle element x = z1 is just (0, z1)
        return circ + tuple(UnitQuaternion(zero, x.z1, _unchecked=True) for x in circ)
    if kind.tag == "T":
        d8 = elements(binary_dihedral(2), M)
        a = alpha(M)
        a2 = a * a
        out = d8 + tuple(a * x for x in d8) + tuple(a2 * x for x in d8)
        if len(set(out)) != 24:
            raise AssertionError("T* enumeration produced duplicates")
        return out
    if kind.tag == "O":
        t = elements(T_STAR, M)
        b = beta(M)
        if b * b not in set(t):
            raise AssertionError("beta^2 should lie in T*")
        out = t + tuple(b * x for x in t)
        if len(set(out)) != 48:
            raise AssertionError("O* enumeration produced duplicates")
        return out
    if kind.tag == "I":
        t = elements(T_STAR, M)
        g = gamma(M)
        out = list(t)
        power = g
        for _ in range(4):
            out.extend(power * x for x in t)
            power = power * g
        if len(set(out)) != 120:
            raise AssertionError("I* enumeration produced duplicates")
        return tuple(out)
    raise ValueError(f"cannot enumerate infinite kind {kind}")


@lru_cache(maxsize=128)
def element_set(kind: SubgroupKind, M: int) -> frozenset[UnitQuaternion]:
    return frozenset(elements(kind, M))


def normalizer(kind: SubgroupKind) -> SubgroupKind:
    """Norm_{S^3}(kind), as a (possibly infinite) kind."""
    if kind.tag == "C":
        return PIN_CIRCLE if kind.n > 2 else FULL
    if kind.tag == "D":
        return O_STAR if kind.n == 2 else binary_dihedral(2 * kind.n)
    if kind.tag in ("T", "O"):
        return O_STAR
    if kind.tag == "I":
        return I_STAR
    raise ValueError(f"normalizer of {kind} not supported")


def minimal_conductor(kind: SubgroupKind) -> int:
    """A conductor must be a multiple of this to host the subgroup's coordinates."""
    if kind.tag == "C":
        return kind.n
    if kind.tag == "D":
        return 2 * kind.n
    if kind.tag == "T":
        return 4
    if kind.tag == "O":
        return 8
    if kind.tag == "I":
        return 20
    raise ValueError(f"{kind} has no finite conductor")
