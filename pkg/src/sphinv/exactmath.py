"""Exact arithmetic in cyclotomic fields Q(zeta_M) and unit quaternions over them.

Every group element, product and comparison in this package is decided
exactly; there is no floating point anywhere.

Representation: an element of Q(zeta_M) is stored as a sparse rational
combination of roots of unity zeta_M^e, with exponents normalized so that
for every prime p | M the top base-p digit of (e mod p^a) is not p-1.
This exponent set is a Q-basis of the field (it has phi(M) members and
spans, since a disallowed exponent rewrites through the vanishing sum of a
p-orbit), so the stored form is canonical and equality is structural.
Monomials stay monomials, which keeps arithmetic cheap at the large
conductors that cyclic and binary dihedral groups need.

The classical power-basis vector (coefficients mod the cyclotomic
polynomial Phi_M) is available as the `coeffs` property.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class ConductorMismatchError(ValueError):
    """Raised when operands live in incompatible cyclotomic fields."""


def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, d**a))
        d += 1
    if n > 1:
        out.append((n, n))
    return tuple(out)


def euler_phi(n: int) -> int:
    out = 1
    for p, pa in _factorize(n):
        out *= pa - pa // p
    return out


class _Conductor:
    """Per-conductor data: rewrite rules and memoized root expansions.

    The expansion memo only grows and entries never change, so concurrent
    reads with idempotent fills are safe.
    """

    __slots__ = ("M", "rules", "expansion")

    def __init__(self, M: int):
        self.M = M
        # per prime p | M: (p, p^a, p^(a-1), M // p)
        self.rules = tuple((p, pa, pa // p, M // p) for p, pa in _factorize(M))
        self.expansion: dict[int, tuple[tuple[int, int], ...]] = {}

    def expand(self, e: int) -> tuple[tuple[int, int], ...]:
        """zeta^e as a signed sum of basis roots: ((exponent, +-1), ...)."""
        got = self.expansion.get(e)
        if got is not None:
            return got
        for p, pa, pa1, Mp in self.rules:
            if (e % pa) // pa1 == p - 1:
                M = self.M
                acc: dict[int, int] = {}
                for k in range(1, p):
                    for e2, sg in self.expand((e + k * Mp) % M):
                        v = acc.get(e2, 0) - sg
                        if v:
                            acc[e2] = v
                        elif e2 in acc:
                            del acc[e2]
                got = tuple(sorted(acc.items()))
                break
        else:
            got = ((e, 1),)
        self.expansion[e] = got
        return got


_CONDUCTORS: dict[int, _Conductor] = {}


def _conductor(M: int) -> _Conductor:
    ctx = _CONDUCTORS.get(M)
    if ctx is None:
        ctx = _CONDUCTORS[M] = _Conductor(M)
    return ctx


def _canonical(M: int, items) -> tuple[tuple[int, Fraction], ...]:
    """Collect (exponent, coefficient) pairs into canonical form."""
    ctx = _conductor(M)
    acc: dict[int, Fraction] = {}
    for e, c in items:
        if not c:
            continue
        for e2, sg in ctx.expand(e % M):
            v = acc.get(e2)
            v = (c if sg > 0 else -c) if v is None else v + (c if sg > 0 else -c)
            if v:
                acc[e2] = v
            elif e2 in acc:
                del acc[e2]
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_M, ascending degree."""
    if M == 1:
        return (-1, 1)
    rad = 1
    for p, _ in _factorize(M):
        rad *= p
    if rad != M:
        inner = cyclotomic_polynomial(rad)
        q = M // rad
        out = [0] * ((len(inner) - 1) * q + 1)
        for i, c in enumerate(inner):
            out[i * q] = c
        return tuple(out)
    # squarefree M: divide x^M - 1 by Phi_d over proper divisors d
    poly = [0] * (M + 1)
    poly[0], poly[M] = -1, 1
    for d in range(1, M):
        if M % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q, r = divmod(c, den[dd])
            if r:
                raise ArithmeticError("non-exact polynomial division")
            out[i - dd] = q
            for k in range(dd + 1):
                num[i - dd + k] -= q * den[k]
    if any(num[:dd]):
        raise ArithmeticError("non-exact polynomial division")
    return out


_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


class CyclotomicNumber:
    """An exact element of Q(zeta_M), canonical and hashable."""

    __slots__ = ("conductor", "terms", "_hash")

    def __init__(self, conductor: int, items=(), _canonical_terms=None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        if _canonical_terms is not None:
            self.terms = _canonical_terms
        else:
            self.terms = _canonical(conductor, items)
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(M: int) -> "CyclotomicNumber":
        return CyclotomicNumber(M, _canonical_terms=())

    @staticmethod
    def from_rational(M: int, q) -> "CyclotomicNumber":
        q = Fraction(q)
        return CyclotomicNumber(M, _canonical_terms=(((0, q),) if q else ()))

    @staticmethod
    def one(M: int) -> "CyclotomicNumber":
        return CyclotomicNumber.from_rational(M, 1)

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def as_rational(self) -> Fraction:
        if not self.terms:
            return _ZERO
        if self.is_rational():
            return self.terms[0][1]
        raise ValueError("not a rational value")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coefficients: the element reduced mod Phi_M."""
        M = self.conductor
        deg = euler_phi(M)
        phi = cyclotomic_polynomial(M)
        poly = [_ZERO] * max(M, deg + 1)
        for e, c in self.terms:
            poly[e] += c
        lead = phi[deg]
        for i in range(len(poly) - 1, deg - 1, -1):
            c = poly[i]
            if c:
                q = c / lead
                for k in range(deg + 1):
                    poly[i - deg + k] -= q * Fraction(phi[k])
        return tuple(poly[:deg])

    # -- ring operations --------------------------------------------------

    def _check(self, other: "CyclotomicNumber") -> None:
        if self.conductor != other.conductor:
            raise ConductorMismatchError(
                f"conductors differ: {self.conductor} vs {other.conductor}"
            )

    def __add__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        acc = dict(self.terms)
        for e, c in other.terms:
            v = acc.get(e)
            v = c if v is None else v + c
            if v:
                acc[e] = v
            elif e in acc:
                del acc[e]
        return CyclotomicNumber(self.conductor, _canonical_terms=tuple(sorted(acc.items())))

    def __sub__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check(other)
        if not other.terms:
            return self
        acc = dict(self.terms)
        for e, c in other.terms:
            v = acc.get(e)
            v = -c if v is None else v - c
            if v:
                acc[e] = v
            elif e in acc:
                del acc[e]
        return CyclotomicNumber(self.conductor, _canonical_terms=tuple(sorted(acc.items())))

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(
            self.conductor, _canonical_terms=tuple((e, -c) for e, c in self.terms)
        )

    def __mul__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check(other)
        M = self.conductor
        a, b = self.terms, other.terms
        if not a or not b:
            return CyclotomicNumber.zero(M)
        if len(a) == 1 and len(b) == 1:
            (e1, c1), (e2, c2) = a[0], b[0]
            c = c1 * c2
            ex = _conductor(M).expand((e1 + e2) % M)
            return CyclotomicNumber(
                M,
                _canonical_terms=tuple((e, c if sg > 0 else -c) for e, sg in ex),
            )
        items = [((e1 + e2) % M, c1 * c2) for e1, c1 in a for e2, c2 in b]
        return CyclotomicNumber(M, items)

    def scale(self, q) -> "CyclotomicNumber":
        q = Fraction(q)
        if not q:
            return CyclotomicNumber.zero(self.conductor)
        return CyclotomicNumber(
            self.conductor, _canonical_terms=tuple((e, c * q) for e, c in self.terms)
        )

    def conj(self) -> "CyclotomicNumber":
        """The automorphism zeta -> zeta^-1 (complex conjugation)."""
        M = self.conductor
        t = self.terms
        if not t:
            return self
        if len(t) == 1:
            e, c = t[0]
            ex = _conductor(M).expand((-e) % M)
            return CyclotomicNumber(
                M, _canonical_terms=tuple((e2, c if sg > 0 else -c) for e2, sg in ex)
            )
        return CyclotomicNumber(M, [((-e) % M, c) for e, c in t])

    def inverse(self) -> "CyclotomicNumber":
        if not self.terms:
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            return CyclotomicNumber.from_rational(self.conductor, 1 / self.terms[0][1])
        M = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(M)]
        inv = _poly_invert(list(self.coeffs), phi)
        return CyclotomicNumber(M, list(enumerate(inv)))

    def embed(self, M2: int) -> "CyclotomicNumber":
        """Embed into Q(zeta_M2); the current conductor must divide M2."""
        if M2 % self.conductor != 0:
            raise ConductorMismatchError(
                f"{self.conductor} does not divide target conductor {M2}"
            )
        k = M2 // self.conductor
        return CyclotomicNumber(M2, [(e * k, c) for e, c in self.terms])

    # -- equality / ordering ---------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclotomicNumber)
            and self.conductor == other.conductor
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            key = [self.conductor]
            for e, c in self.terms:
                key.append(e)
                key.append(c.numerator)
                key.append(c.denominator)
            h = self._hash = hash(tuple(key))
        return h

    def sort_key(self):
        return tuple((e, c.numerator, c.denominator) for e, c in self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.terms:
            if e == 0:
                bits.append(str(c))
            elif c == 1:
                bits.append(f"z{self.conductor}^{e}")
            else:
                bits.append(f"({c})*z{self.conductor}^{e}")
        return " + ".join(bits)


def _poly_invert(a: list[Fraction], phi: list[Fraction]) -> list[Fraction]:
    """Inverse of a mod phi in Q[x] by the extended Euclidean algorithm."""
    deg = len(phi) - 1

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    r0, r1 = list(phi), trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while True:
        if not r1:
            raise ZeroDivisionError("element not invertible mod Phi_M")
        if len(r1) == 1:
            c = r1[0]
            return [x / c for x in s1] + [_ZERO] * (deg - len(s1))
        r2 = list(r0)
        q = [_ZERO] * (len(r0) - len(r1) + 1)
        while len(r2) >= len(r1) and trim(r2):
            f = r2[-1] / r1[-1]
            sh = len(r2) - len(r1)
            q[sh] = f
            for i, c in enumerate(r1):
                r2[sh + i] -= f * c
            trim(r2)
        s2 = list(s0) + [_ZERO] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    s2[i + j] -= qc * sc
        trim(s2)
        r0, r1, s0, s1 = r1, r2, s1, s2


def root_of_unity(k: int, N: int, M: int) -> CyclotomicNumber:
    """e^{2 pi i k / N} as an element of Q(zeta_M); N must divide M."""
    if N < 1:
        raise ValueError("N must be positive")
    if M % N != 0:
        raise ConductorMismatchError(f"{N} does not divide conductor {M}")
    ex = _conductor(M).expand((k * (M // N)) % M)
    return CyclotomicNumber(
        M, _canonical_terms=tuple((e, _ONE if sg > 0 else -_ONE) for e, sg in ex)
    )


class UnitQuaternion:
    """z1 + z2*j with cyclotomic coordinates and exact unit norm."""

    __slots__ = ("z1", "z2", "_hash", "_re")

    def __init__(self, z1: CyclotomicNumber, z2: CyclotomicNumber, *, _unchecked=False):
        if z1.conductor != z2.conductor:
            raise ConductorMismatchError("quaternion coordinates mix conductors")
        self.z1 = z1
        self.z2 = z2
        self._hash = None
        self._re = None
        if not _unchecked:
            norm = z1 * z1.conj() + z2 * z2.conj()
            if not (norm.is_rational() and norm.as_rational() == 1):
                raise ValueError(f"not a unit quaternion: |q|^2 = {norm!r}")

    @property
    def conductor(self) -> int:
        return self.z1.conductor

    @staticmethod
    def identity(M: int) -> "UnitQuaternion":
        return UnitQuaternion(
            CyclotomicNumber.one(M), CyclotomicNumber.zero(M), _unchecked=True
        )

    @staticmethod
    def from_root(k: int, N: int, M: int) -> "UnitQuaternion":
        """The circle element e^{2 pi i k/N}."""
        return UnitQuaternion(
            root_of_unity(k, N, M), CyclotomicNumber.zero(M), _unchecked=True
        )

    @staticmethod
    def j(M: int) -> "UnitQuaternion":
        return UnitQuaternion(
            CyclotomicNumber.zero(M), CyclotomicNumber.one(M), _unchecked=True
        )

    def __mul__(self, other: "UnitQuaternion") -> "UnitQuaternion":
        # (z1 + z2 j)(w1 + w2 j) = (z1 w1 - z2 conj(w2)) + (z1 w2 + z2 conj(w1)) j
        z1, z2, w1, w2 = self.z1, self.z2, other.z1, other.z2
        if not z2.terms:
            if not w2.terms:
                return UnitQuaternion(z1 * w1, z2, _unchecked=True)
            return UnitQuaternion(z1 * w1, z1 * w2, _unchecked=True)
        if not w2.terms:
            return UnitQuaternion(z1 * w1, z2 * w1.conj(), _unchecked=True)
        return UnitQuaternion(
            z1 * w1 - z2 * w2.conj(), z1 * w2 + z2 * w1.conj(), _unchecked=True
        )

    def conj(self) -> "UnitQuaternion":
        """Quaternion conjugate; equals the inverse since the norm is 1."""
        return UnitQuaternion(self.z1.conj(), -self.z2, _unchecked=True)

    inverse = conj

    def __neg__(self) -> "UnitQuaternion":
        return UnitQuaternion(-self.z1, -self.z2, _unchecked=True)

    def real_part(self) -> CyclotomicNumber:
        re = self._re
        if re is None:
            re = self._re = (self.z1 + self.z1.conj()).scale(_HALF)
        return re

    def is_identity(self) -> bool:
        return self.z2.is_zero() and self.z1.is_rational() and self.z1.as_rational() == 1

    def order(self, bound: int = 10_000) -> int:
        q = self
        for k in range(1, bound + 1):
            if q.is_identity():
                return k
            q = q * self
        raise RuntimeError("element order exceeds bound")

    def embed(self, M2: int) -> "UnitQuaternion":
        return UnitQuaternion(self.z1.embed(M2), self.z2.embed(M2), _unchecked=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UnitQuaternion)
            and self.z1 == other.z1
            and self.z2 == other.z2
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash((self.z1, self.z2))
        return h

    def sort_key(self):
        return (self.z1.sort_key(), self.z2.sort_key())

    def __repr__(self) -> str:
        return f"({self.z1!r}) + ({self.z2!r})j"
