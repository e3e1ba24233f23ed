"""Seifert invariants of the quotient orbifolds S^3 / Phi(H).

Families 1, 1', 11, 11' go through the full gcd/congruence chains; every
other family in scope has closed-form local invariants. All data is a
function of the extension's own parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .groupspec import GroupSpec, InvalidParametersError, odd_s_representative, validate


class ChainError(ArithmeticError):
    """A chain quantity failed integrality or invertibility."""


@dataclass(frozen=True)
class BaseOrbifold:
    surface: str  # "S2" | "D2" | "RP2"
    cone_orders: tuple[int, ...] = ()
    corner_orders: tuple[int, ...] = ()

    def __post_init__(self):
        if self.surface != "D2" and self.corner_orders:
            raise ValueError("corner points need a D2 base")

    def __str__(self) -> str:
        cones = ",".join(str(a) for a in self.cone_orders)
        if self.surface == "D2":
            corners = ",".join(str(b) for b in self.corner_orders)
            return f"D2({cones};{corners})"
        name = "S2" if self.surface == "S2" else "RP2"
        return f"{name}({cones})" if cones else name


@dataclass(frozen=True)
class LocalInvariant:
    """A local invariant as printed: numerator over (cone/corner) order."""

    num: int
    den: int

    @property
    def singular_index(self) -> int:
        return gcd(self.num, self.den)

    @property
    def value(self) -> Fraction:
        """The class mod 1 in [0, 1)."""
        return Fraction(self.num % self.den, self.den)

    @property
    def reduced(self) -> tuple[int, int]:
        g = self.singular_index
        return self.num // g, self.den // g

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class SeifertInvariants:
    base: BaseOrbifold
    invariants: tuple[LocalInvariant, ...]  # aligned: cone points, then corners
    euler: Fraction
    singular_indices: tuple[int, int] | None = None  # family 1/1' chain outputs
    underlying_lens: tuple[int, int] | None = None  # (l, d*gbar mod l) when known

    def __post_init__(self):
        orders = self.base.cone_orders + self.base.corner_orders
        if len(orders) != len(self.invariants):
            raise ValueError("one local invariant per cone/corner point")
        for o, inv in zip(orders, self.invariants):
            if o != inv.den:
                raise ValueError("local invariant denominator must be the point order")

    def cone_invariants(self) -> tuple[LocalInvariant, ...]:
        return self.invariants[: len(self.base.cone_orders)]

    def corner_invariants(self) -> tuple[LocalInvariant, ...]:
        return self.invariants[len(self.base.cone_orders):]


def _make(surface, cones, corners, invs, euler, indices=None, lens=None):
    """Assemble invariants, dropping order-1 points (regular fibers)."""
    cones = tuple(cones)
    corners = tuple(corners)
    both = cones + corners
    keep = [i for i, o in enumerate(both) if o > 1]
    base = BaseOrbifold(
        surface,
        tuple(both[i] for i in keep if i < len(cones)),
        tuple(both[i] for i in keep if i >= len(cones)),
    )
    return SeifertInvariants(
        base,
        tuple(LocalInvariant(*invs[i]) for i in keep),
        Fraction(euler),
        indices,
        lens,
    )


def _inverse_mod(a: int, mod: int) -> int:
    if mod == 1:
        return 0
    a %= mod
    g = gcd(a, mod)
    if g != 1:
        raise ChainError(f"{a} is not invertible mod {mod}")
    return pow(a, -1, mod)


def _chain(m: int, n: int, r: int, s: int, prime: bool) -> dict:
    """The shared quantity chain for Families 1/11 (prime=False) and 1'/11'."""
    s = odd_s_representative(r, s) if not prime else s % r
    if prime and s % 2 == 0:
        raise ChainError("s must be odd (gcd(s, r) = 1 with r even)")
    h = gcd(m, n)
    mp, np_ = m // h, n // h
    total = (2 if not prime else 1) * mp * np_ * r
    u, v = np_ - s * mp, np_ + s * mp
    a = gcd(gcd(abs(u), abs(v)), total)
    b1 = gcd(abs(u) // a, total // a)
    b2 = gcd(abs(v) // a, total // a)

    def find_nu(numer: int, modulus: int) -> int:
        for nu in range(1, a + 1):
            if numer % (a * nu) == 0 and gcd(numer // (a * nu), modulus) == 1:
                return nu
        raise ChainError("no admissible nu <= a; chain preconditions violated")

    if prime:
        nu = find_nu(2 * np_, a // 2)
        l1 = l2 = 1
        dd = 2 * a * nu
    else:
        if (mp * np_) % 2 == 0:
            nu = find_nu(np_, a)
            l1 = l2 = 1
        else:
            nu = find_nu(2 * np_, a // 2)
            if r % b1 or r % b2:
                raise ChainError("b_i does not divide r; chain preconditions violated")
            l1 = 2 if (r // b1) % 2 == 0 else 1
            l2 = 2 if (r // b2) % 2 == 0 else 1
        dd = a * nu

    d_num = nu * nu * a * v + 2 * np_ * mp * r
    g_num = nu * nu * a * u - 2 * np_ * mp * r
    if d_num % (dd * b2 * (l2 if not prime else 1)) or g_num % (
        dd * b1 * (l1 if not prime else 1)
    ):
        raise ChainError("d or g is not integral; chain preconditions violated")
    if prime:
        d = d_num // (dd * b2)
        g = g_num // (dd * b1)
        l_total = mp * np_ * r
        if l_total % (2 * b1 * b2):
            raise ChainError("l is not integral")
        ell = l_total // (2 * b1 * b2)
    else:
        d = d_num // (l2 * dd * b2)
        g = g_num // (l1 * dd * b1)
        l_total = 2 * mp * np_ * r
        if l_total % (l1 * l2 * b1 * b2):
            raise ChainError("l is not integral")
        ell = l_total // (l1 * l2 * b1 * b2)

    gbar = _inverse_mod(g, ell)
    cbar_arg = nu * s + r * (2 * np_ // (a * nu))
    cbar = _inverse_mod(cbar_arg, np_ * r)
    return {
        "h": h, "mp": mp, "np": np_, "a": a, "b1": b1, "b2": b2, "nu": nu,
        "l1": l1, "l2": l2, "d": d, "g": g, "l": ell, "gbar": gbar, "cbar": cbar,
        "s": s,
    }


def _chain_fibration(m, n, r, s, prime: bool, dihedral: bool) -> SeifertInvariants:
    c = _chain(m, n, r, s, prime)
    h, b1, b2, l1, l2 = c["h"], c["b1"], c["b2"], c["l1"], c["l2"]
    d, g, cbar, ell, gbar = c["d"], c["g"], c["cbar"], c["l"], c["gbar"]
    if prime:
        den = n * r // 2
        idx1, idx2 = b1 * h, b2 * h
        inv1 = (d * cbar * b2 * h, den)
        inv2 = (-g * cbar * b1 * h, den)
    else:
        den = n * r
        idx1, idx2 = l1 * b1 * h, l2 * b2 * h
        inv1 = (d * cbar * l2 * b2 * h, den)
        inv2 = (-g * cbar * l1 * b1 * h, den)
    if gcd(abs(inv1[0]), den) != idx2 or gcd(abs(inv2[0]), den) != idx1:
        raise ChainError("invariant gcds disagree with the singular indices")
    if dihedral:
        # the corner fibers pick up the reflection: indices double
        euler = Fraction(-m, n * r)
        return _make(
            "D2", (), (den, den), (inv1, inv2), euler, (2 * idx1, 2 * idx2), None
        )
    # index order matches stabilizers at the core circles (x=1, then x=j)
    indices = (idx1, idx2)
    euler = Fraction(-2 * m, n * r)
    lens = (ell, (d * gbar) % ell if ell > 1 else 0)
    return _make("S2", (den, den), (), (inv1, inv2), euler, indices, lens)


def fibration_family1(m: int, n: int, r: int, s: int) -> SeifertInvariants:
    """Quotient of the Family-1 group: fibers over S^2(nr, nr)."""
    return _chain_fibration(m, n, r, s, prime=False, dihedral=False)


def fibration_family1prime(m: int, n: int, r: int, s: int) -> SeifertInvariants:
    return _chain_fibration(m, n, r, s, prime=True, dihedral=False)


def fibration_family11(m: int, n: int, r: int, s: int, prime: bool = False) -> SeifertInvariants:
    """Family 11/11': same local data over a disk, half the Euler class."""
    return _chain_fibration(m, n, r, s, prime=prime, dihedral=True)


def for_extension(spec: GroupSpec) -> SeifertInvariants:
    """Seifert invariants of S^3 / Phi(H) for the named group H."""
    validate(spec)
    fam, m, n = spec.family, spec.m, spec.n
    if fam == "1":
        return fibration_family1(m, n, spec.r, spec.s)
    if fam == "1p":
        return fibration_family1prime(m, n, spec.r, spec.s)
    if fam == "11":
        return fibration_family11(m, n, spec.r, spec.s, prime=False)
    if fam == "11p":
        return fibration_family11(m, n, spec.r, spec.s, prime=True)
    if fam == "2":
        return _make("S2", (2, 2, n), (), ((m, 2), (m, 2), (m, n)), Fraction(-m, n))
    if fam == "2bis":
        surface = "D2" if n % 2 == 0 else "RP2"
        return _make(surface, (n,), (), ((m, n),), Fraction(-m, n))
    if fam == "3":
        return _make(
            "S2", (2, 2, n), (), ((m + 1, 2), (m + 1, 2), (m, n)), Fraction(-m, n)
        )
    if fam == "3bis":
        surface = "D2" if n % 2 == 1 else "RP2"
        return _make(surface, (n,), (), ((m, n),), Fraction(-m, n))
    if fam == "4":
        return _make(
            "S2", (2, 2, 2 * n), (),
            ((m, 2), (m + 1, 2), (m + n, 2 * n)), Fraction(-m, 2 * n),
        )
    if fam == "4bis":
        return _make("D2", (2 * n,), (), ((m + n, 2 * n),), Fraction(-m, 2 * n))
    if fam == "5":
        return _make("S2", (2, 3, 3), (), ((m, 2), (m, 3), (m, 3)), Fraction(-m, 6))
    if fam == "6":
        return _make(
            "S2", (2, 3, 3), (), ((m, 2), (m + 1, 3), (m + 2, 3)), Fraction(-m, 6)
        )
    if fam == "7":
        return _make("S2", (2, 3, 4), (), ((m, 2), (m, 3), (m, 4)), Fraction(-m, 12))
    if fam == "8":
        return _make(
            "S2", (2, 3, 4), (), ((m + 1, 2), (m, 3), (m + 2, 4)), Fraction(-m, 12)
        )
    if fam == "9":
        return _make("S2", (2, 3, 5), (), ((m, 2), (m, 3), (m, 5)), Fraction(-m, 30))
    if fam == "10":
        if n % 2 == 0:
            return _make(
                "D2", (), (2, 2, n), ((m, 2), (m, 2), (m, n)), Fraction(-m, 2 * n)
            )
        return _make("D2", (2,), (n,), ((m, 2), (m, n)), Fraction(-m, 2 * n))
    if fam == "13":
        return _make("D2", (2,), (n,), ((m + 1, 2), (m, n)), Fraction(-m, 2 * n))
    if fam == "13bis":
        if n % 2 == 1:
            return _make(
                "D2", (), (2, 2, n), ((m, 2), (m, 2), (m, n)), Fraction(-m, 2 * n)
            )
        return _make("D2", (2,), (n,), ((m, 2), (m, n)), Fraction(-m, 2 * n))
    if fam == "14":
        return _make("D2", (3,), (2,), ((m, 3), (m, 2)), Fraction(-m, 12))
    if fam == "15":
        return _make("D2", (), (2, 3, 4), ((m, 2), (m, 3), (m, 4)), Fraction(-m, 24))
    if fam == "16":
        return _make("D2", (), (2, 3, 3), ((m, 2), (m, 3), (m, 3)), Fraction(-m, 12))
    if fam == "18":
        return _make(
            "D2", (), (2, 3, 3), ((m, 2), (m + 1, 3), (m + 2, 3)), Fraction(-m, 12)
        )
    if fam == "19":
        return _make("D2", (), (2, 3, 5), ((m, 2), (m, 3), (m, 5)), Fraction(-m, 60))
    if fam == "34":
        return _make(
            "S2", (2, 2, n), (),
            ((m, 2), (m + 1, 2), ((m + n) // 2, n)), Fraction(-m, 2 * n),
        )
    if fam == "34bis":
        return _make("D2", (n,), (), (((m + n) // 2, n),), Fraction(-m, 2 * n))
    raise InvalidParametersError(f"no fibration data for family {fam}")
