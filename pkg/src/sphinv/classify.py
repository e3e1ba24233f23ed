"""Geometric classification of involutions from their Seifert data.

Decides free action, the underlying topological space (hyperelliptic means
underlying S^3), and extracts the Montesinos link of disk-base hyperelliptic
quotients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .groupspec import GroupSpec
from .quintuple import Quintuple, StructuralError
from .seifert import SeifertInvariants, for_extension


class RefibrationRequiredError(ValueError):
    """Montesinos extraction needs a disk-base fibration."""


SPHERE = "S3"
LENS_SPACE = "lens"
OTHER = "other"


@dataclass(frozen=True)
class MontesinosLink:
    half_twists: int
    tangles: tuple[Fraction, ...]

    def __str__(self) -> str:
        ts = ", ".join(str(t) for t in self.tangles)
        return f"Montesinos(k={self.half_twists}; tangles=[{ts}])"


@dataclass(frozen=True)
class InvolutionReport:
    label: str
    lift: tuple
    extension: Quintuple
    extension_spec: GroupSpec
    fibration: SeifertInvariants
    acts_freely: bool
    hyperelliptic: bool
    underlying: tuple  # (SPHERE, None) | (LENS_SPACE, (l, q)) | (OTHER, None)
    montesinos: MontesinosLink | None
    printed_free: str
    printed_hyperelliptic: str


def acts_freely(fib: SeifertInvariants) -> bool:
    """Manifold quotient test: disk bases never act freely; otherwise all
    singularity indices (gcd of printed invariant pairs) must be 1."""
    if fib.base.surface == "D2":
        return False
    if fib.singular_indices is not None and any(i != 1 for i in fib.singular_indices):
        return False
    return all(inv.singular_index == 1 for inv in fib.invariants)


def _sphere_fibration_match(cones: list[tuple[int, Fraction]], euler: Fraction) -> bool:
    """Does (reduced) data describe a Seifert fibration of S^3?

    Those fiber over S^2(u, v) with gcd(u, v) = 1, local invariants
    vbar/u and ubar/v where u*ubar + v*vbar = 1, and Euler class -1/(uv)
    (or the mirror with all signs flipped).
    """
    if len(cones) > 2:
        return False
    while len(cones) < 2:
        cones.append((1, Fraction(0)))
    (u, iu), (v, iv) = cones
    if gcd(u, v) != 1:
        return False
    for sign in (1, -1):
        if euler != Fraction(-sign, u * v):
            continue
        vbar = pow(v, -1, u) if u > 1 else 0
        ubar = pow(u, -1, v) if v > 1 else 0
        if (sign * vbar - iu * u) % u == 0 and (sign * ubar - iv * v) % v == 0:
            return True
    return False


def underlying_space(fib: SeifertInvariants) -> tuple:
    """The underlying topological space of the quotient orbifold."""
    if fib.underlying_lens is not None:
        l, q = fib.underlying_lens
        return (SPHERE, None) if l == 1 else (LENS_SPACE, (l, q))
    base = fib.base
    if base.surface == "D2":
        cones = base.cone_orders
        if not cones:
            return (SPHERE, None)
        if len(cones) > 1:
            raise StructuralError("disk bases here have at most one interior cone")
        inv = fib.cone_invariants()[0]
        _, den = inv.reduced
        return (SPHERE, None) if den == 1 else (OTHER, None)
    if base.surface == "RP2":
        return (OTHER, None)
    # S^2 base: reduce all local invariants, then match an S^3 fibration
    reduced = []
    for inv in fib.invariants:
        num, den = inv.reduced
        if den > 1:
            reduced.append((den, Fraction(num % den, den)))
    return (SPHERE, None) if _sphere_fibration_match(reduced, fib.euler) else (OTHER, None)


def montesinos(fib: SeifertInvariants) -> MontesinosLink:
    """The singular set of a disk-base hyperelliptic quotient as a
    Montesinos link: tangles c_i/b_i in (-b_i/2, b_i/2), closed by k
    half twists with k = -2e - sum c_i/b_i."""
    if fib.base.surface != "D2":
        raise RefibrationRequiredError(
            "sphere-base hyperelliptic quotients need a refibration (out of scope)"
        )
    if fib.base.cone_orders:
        raise RefibrationRequiredError(
            "disk base has an interior cone point; not a plain tangle picture"
        )
    if underlying_space(fib) != (SPHERE, None):
        raise ValueError("Montesinos extraction requires underlying space S^3")
    tangles = []
    for inv in fib.corner_invariants():
        b = inv.den
        c = inv.num % b
        if 2 * c > b:  # representative of c/b mod 1 in (-1/2, 1/2]
            c -= b
        tangles.append(Fraction(c, b))
    k = -2 * fib.euler - sum(tangles)
    if k.denominator != 1:
        raise StructuralError(f"half-twist count k = {k} is not an integer")
    return MontesinosLink(int(k), tuple(tangles))


def build_report(spec: GroupSpec) -> list[InvolutionReport]:
    """One report per conjugacy class of involutions of S^3/G."""
    from .families import acts_freely_on_sphere, construct
    from .involutions import classes_for

    if not acts_freely_on_sphere(spec):
        raise ValueError(f"{spec} does not act freely; S^3/G is not a manifold")
    reports = []
    for cls in classes_for(spec):
        fib = for_extension(cls.extension_spec)
        free = acts_freely(fib)
        under = underlying_space(fib)
        hyper = under[0] == SPHERE
        link = None
        if hyper and fib.base.surface == "D2" and not fib.base.cone_orders:
            link = montesinos(fib)
        reports.append(
            InvolutionReport(
                label=cls.label,
                lift=cls.lift,
                extension=construct(cls.extension_spec),
                extension_spec=cls.extension_spec,
                fibration=fib,
                acts_freely=free,
                hyperelliptic=hyper,
                underlying=under,
                montesinos=link,
                printed_free=cls.printed_free,
                printed_hyperelliptic=cls.printed_hyperelliptic,
            )
        )
    hyper_count = sum(1 for rep in reports if rep.hyperelliptic)
    if hyper_count != 1:
        raise StructuralError(
            f"{spec}: expected exactly one hyperelliptic class, found {hyper_count}"
        )
    return reports


CLASS_COUNT_RANGES = {
    "lens": (3, 8),
    "prism": (3, 5),
    "tetrahedral": (2, 5),
    "octahedral": (1, 2),
    "icosahedral": (1, 2),
}
