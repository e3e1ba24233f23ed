"""Family identifiers and parameters for the finite subgroups of SO(4).

A spec is written `F<k>[p|bis](args...)`, e.g. F1(2,3,5,1), F1p(3,1,2,1),
F2(1,2), F13bis(3,2). Absent parameters default to 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd


class SpecParseError(ValueError):
    """Bad spec syntax; carries the offending position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.position = position


class InvalidParametersError(ValueError):
    """Parameters violate the family's side conditions."""


# families constructible by the pipeline; bis = left/right factors swapped
FAMILIES = (
    "1", "1p", "2", "2bis", "3", "3bis", "4", "4bis", "5", "6", "7", "8",
    "9", "10", "11", "11p", "13", "13bis", "14", "15", "16", "18", "19",
    "34", "34bis",
)

_PARAM_COUNT = {
    "1": 4, "1p": 4, "11": 4, "11p": 4,
    "2": 2, "2bis": 2, "3": 2, "3bis": 2, "4": 2, "4bis": 2,
    "10": 2, "13": 2, "13bis": 2, "34": 2, "34bis": 2,
    "5": 1, "6": 1, "7": 1, "8": 1, "9": 1,
    "14": 1, "15": 1, "16": 1, "18": 1, "19": 1,
}


def canonical_s(r: int, s: int) -> int:
    """Reduce s mod r and pick the smaller of {s, r-s} (conjugate groups)."""
    if r <= 2:
        return 1
    t = s % r
    return min(t, r - t) if t else r  # t == 0 only when gcd(s, r) = r; invalid anyway


def odd_s_representative(r: int, s: int) -> int:
    """An odd representative of {s, r-s} mod r, as Table-5 style chains need."""
    t = s % r
    if r % 2 == 0:
        return t  # gcd(s, r) = 1 with r even forces s odd
    return t if t % 2 == 1 else r - t


@dataclass(frozen=True, order=True)
class GroupSpec:
    family: str
    m: int = 1
    n: int = 1
    r: int = 1
    s: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParametersError(f"unknown family {self.family!r}")

    @property
    def params(self) -> tuple[int, ...]:
        k = _PARAM_COUNT[self.family]
        return (self.m, self.n, self.r, self.s)[:k]

    def __str__(self) -> str:
        fam = self.family.replace("p", "p") if self.family.endswith("p") else self.family
        return f"F{fam}({','.join(str(p) for p in self.params)})"

    def canonical(self) -> "GroupSpec":
        if self.family in ("1", "1p", "11", "11p"):
            return GroupSpec(self.family, self.m, self.n, self.r, canonical_s(self.r, self.s))
        return GroupSpec(self.family, *self.params)


_SPEC_RE = re.compile(r"^F(\d+)(p|bis)?\(([^)]*)\)$")


def parse_spec(text: str) -> GroupSpec:
    text = text.strip()
    m = _SPEC_RE.match(text)
    if not m:
        raise SpecParseError(f"cannot parse spec {text!r}; expected F<k>[p|bis](args)", 0)
    family = m.group(1) + (m.group(2) or "")
    if family not in FAMILIES:
        raise SpecParseError(f"unknown family F{family}", 1)
    args = []
    body = m.group(3).strip()
    if body:
        for idx, piece in enumerate(body.split(",")):
            piece = piece.strip()
            if not re.fullmatch(r"-?\d+", piece):
                raise SpecParseError(
                    f"bad integer {piece!r} in spec {text!r}", m.start(3) + idx
                )
            args.append(int(piece))
    want = _PARAM_COUNT[family]
    if len(args) != want:
        raise SpecParseError(
            f"family F{family} takes {want} parameter(s), got {len(args)}", m.start(3)
        )
    padded = tuple(args) + (1,) * (4 - len(args))
    return GroupSpec(family, *padded)


def validate(spec: GroupSpec) -> None:
    """Check the Table-1 side conditions; raise InvalidParametersError."""
    fam, m, n, r, s = spec.family, spec.m, spec.n, spec.r, spec.s
    def need(cond: bool, msg: str):
        if not cond:
            raise InvalidParametersError(f"{spec}: {msg}")

    need(m >= 1 and n >= 1 and r >= 1 and s >= 1, "parameters must be >= 1")
    if fam == "1":
        need(gcd(s, r) == 1, "requires gcd(s,r)=1")
    elif fam == "1p":
        need(m % 2 == 1 and n % 2 == 1, "requires m,n odd")
        need(r % 2 == 0, "requires r even")
        need(gcd(s, r) == 1, "requires gcd(s,r)=1")
    elif fam in ("2", "3", "4"):
        need(n >= 2, "requires n >= 2 (D*_4 collapses to C_4)")
    elif fam in ("2bis", "3bis", "4bis"):
        need(m >= 2, "requires m >= 2 (D*_4 collapses to C_4)")
    elif fam == "13bis":
        need(m >= 2 and n >= 2, "requires m,n >= 2")
    elif fam == "10":
        need(m >= 2 and n >= 2, "requires m,n >= 2")
    elif fam == "11":
        need(gcd(s, r) == 1, "requires gcd(s,r)=1")
        need(m * r >= 2 and n * r >= 2, "requires mr,nr >= 2")
    elif fam == "11p":
        need(m % 2 == 1 and n % 2 == 1, "requires m,n odd")
        need(r % 2 == 0, "requires r even")
        need(gcd(s, r) == 1, "requires gcd(s,r)=1")
        need(m * r >= 4 and n * r >= 4, "requires mr,nr >= 4")
    elif fam == "13":
        need(m >= 2 and n >= 2, "requires m,n >= 2")
    elif fam == "34":
        need(m % 2 == 1 and n % 2 == 1, "requires m,n odd")
        need(n >= 2, "requires n >= 2 (D*_4 collapses to C_4)")
    elif fam == "34bis":
        need(m % 2 == 1 and n % 2 == 1, "requires m,n odd")
        need(m >= 2, "requires m >= 2 (D*_4 collapses to C_4)")
