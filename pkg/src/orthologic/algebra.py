"""Finite algebras of signature (->, *, 1) over a named universe.

The arrow table is the single source of truth: ``arrow[x][y]`` is x -> y with
elements identified by their position in the declared element order.  All
derived operations (star, the two meet/join families, the three order
relations) and every named axiom are computed from it.  Values are immutable
and hashable, so results of the heavier classification scans are cached.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


class InputError(AlgebraError):
    """Malformed or structurally invalid algebra document."""


class PreconditionError(AlgebraError):
    """Operation applied outside its declared class of algebras."""


class ResourceLimitError(AlgebraError):
    """A configured search or enumeration cap was exceeded."""


class NonLatticeError(AlgebraError):
    """A meet/join fold produced a value that is not a bound of its input."""


def max_elements() -> int:
    """Universe-size cap; override with ORTHO_MAX_ELEMENTS."""
    return int(os.environ.get("ORTHO_MAX_ELEMENTS", "64"))


def node_budget() -> int:
    """Search-node cap for backtracking searches; override with ORTHO_NODE_BUDGET."""
    return int(os.environ.get("ORTHO_NODE_BUDGET", "5000000"))


@dataclass(frozen=True)
class CheckResult:
    """Uniform outcome of an axiom or theorem check.

    ``witness`` is a tuple of (role, value) pairs: the violating assignment on
    failure, or the unmet precondition on a skip.  Empty on pass.
    """

    check_id: str
    status: str  # "pass" | "fail" | "skipped"
    witness: tuple[tuple[str, str], ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    @property
    def skipped(self) -> bool:
        return self.status == "skipped"


@dataclass(frozen=True)
class ClassLabel:
    """Classification flags; the chain iboolean => ioml => iol => involutive
    & bounded & BE holds by construction."""

    is_be: bool
    is_bounded: bool
    is_involutive: bool
    is_iol: bool
    is_ioml: bool
    is_iboolean: bool
    is_distributive: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "be": self.is_be,
            "bounded": self.is_bounded,
            "involutive": self.is_involutive,
            "iol": self.is_iol,
            "ioml": self.is_ioml,
            "iboolean": self.is_iboolean,
            "distributive": self.is_distributive,
        }


@dataclass(frozen=True)
class FiniteAlgebra:
    """A finite algebra (X, ->, 1) with distinguished constants 1 and 0."""

    name: str
    elements: tuple[str, ...]
    arrow: tuple[tuple[int, ...], ...]
    one: int
    zero: int

    def __post_init__(self) -> None:
        n = len(self.elements)
        if len(self.arrow) != n or any(len(row) != n for row in self.arrow):
            raise InputError(f"{self.name}: arrow table is not {n}x{n}")
        if not (0 <= self.one < n and 0 <= self.zero < n):
            raise InputError(f"{self.name}: constants outside the universe")
        for i, row in enumerate(self.arrow):
            for j, v in enumerate(row):
                if not (0 <= v < n):
                    raise InputError(
                        f"{self.name}: arrow[{self.elements[i]}][{self.elements[j]}]"
                        f" = {v} is not an element index"
                    )

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise InputError(f"{self.name}: unknown element {name!r}") from None

    def mask(self, names: Iterator[str] | list[str] | tuple[str, ...]) -> int:
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in iter_bits(mask))

    def universe_mask(self) -> int:
        return (1 << self.n) - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def validate_algebra(alg: FiniteAlgebra) -> None:
    """Structural validation beyond table shape: n >= 2, the forced 1-row and
    1-column, and 0 being a lower bound.  BE1/BE4 stay with classify so that
    defective tables can still be loaded and diagnosed."""
    if alg.n < 2:
        raise InputError(f"{alg.name}: trivial algebra (0 = 1) is rejected")
    if alg.n > max_elements():
        raise ResourceLimitError(
            f"{alg.name}: {alg.n} elements exceeds cap {max_elements()}"
        )
    if alg.one == alg.zero:
        raise InputError(f"{alg.name}: constants 1 and 0 coincide")
    for x in range(alg.n):
        if alg.arrow[alg.one][x] != x:
            raise InputError(
                f"{alg.name}: 1 -> {alg.elements[x]} = "
                f"{alg.elements[alg.arrow[alg.one][x]]}, expected {alg.elements[x]}"
            )
        if alg.arrow[x][alg.one] != alg.one:
            raise InputError(
                f"{alg.name}: {alg.elements[x]} -> 1 = "
                f"{alg.elements[alg.arrow[x][alg.one]]}, expected 1"
            )
        if alg.arrow[alg.zero][x] != alg.one:
            raise InputError(
                f"{alg.name}: 0 is not a lower bound, 0 -> {alg.elements[x]} != 1"
            )


# ---------------------------------------------------------------------------
# Derived operations and order relations.
# ---------------------------------------------------------------------------

def star(alg: FiniteAlgebra, x: int) -> int:
    """x* = x -> 0."""
    return alg.arrow[x][alg.zero]


def vee_q(alg: FiniteAlgebra, x: int, y: int) -> int:
    """x vQ y = (x -> y) -> y."""
    return alg.arrow[alg.arrow[x][y]][y]


def wedge_q(alg: FiniteAlgebra, x: int, y: int) -> int:
    """x ^Q y = (x* vQ y*)*."""
    return star(alg, vee_q(alg, star(alg, x), star(alg, y)))


def wedge_p(alg: FiniteAlgebra, x: int, y: int) -> int:
    """x ^P y = (x -> y*)*; the lattice meet for the le_l order on i-OLs."""
    return star(alg, alg.arrow[x][star(alg, y)])


def vee_p(alg: FiniteAlgebra, x: int, y: int) -> int:
    """x vP y = x* -> y; the lattice join for the le_l order on i-OLs."""
    return alg.arrow[star(alg, x)][y]


def le(alg: FiniteAlgebra, x: int, y: int) -> bool:
    """x <= y iff x -> y = 1."""
    return alg.arrow[x][y] == alg.one


def le_q(alg: FiniteAlgebra, x: int, y: int) -> bool:
    """x <=Q y iff x = x ^Q y."""
    return x == wedge_q(alg, x, y)


def le_l(alg: FiniteAlgebra, x: int, y: int) -> bool:
    """x <=L y iff x = (x -> y*)*."""
    return x == star(alg, alg.arrow[x][star(alg, y)])


def ortho(alg: FiniteAlgebra, x: int, y: int) -> bool:
    """Orthogonality on the full universe: x _|_ y iff x* = x -> y."""
    return star(alg, x) == alg.arrow[x][y]


def down_set(alg: FiniteAlgebra, x: int) -> int:
    """Mask of all y with y <=L x (0 and x itself included on i-OLs)."""
    m = 0
    for y in range(alg.n):
        if le_l(alg, y, x):
            m |= 1 << y
    return m


def big_meet(alg: FiniteAlgebra, members: int) -> int:
    """Fold of ^P over the masked elements in declared order; the empty meet
    is 1.  Raises NonLatticeError when the fold is not a <=L lower bound,
    which signals that the algebra is not an i-OL."""
    acc = alg.one
    for x in iter_bits(members):
        acc = wedge_p(alg, acc, x)
    for x in iter_bits(members):
        if not le_l(alg, acc, x):
            raise NonLatticeError(
                f"{alg.name}: meet fold gave {alg.elements[acc]}, not a lower"
                f" bound of {alg.elements[x]}"
            )
    return acc


def big_join(alg: FiniteAlgebra, members: int) -> int:
    """Fold of vP over the masked elements; the empty join is 0."""
    acc = alg.zero
    for x in iter_bits(members):
        acc = vee_p(alg, acc, x)
    for x in iter_bits(members):
        if not le_l(alg, x, acc):
            raise NonLatticeError(
                f"{alg.name}: join fold gave {alg.elements[acc]}, not an upper"
                f" bound of {alg.elements[x]}"
            )
    return acc


# ---------------------------------------------------------------------------
# Axioms.
# ---------------------------------------------------------------------------

def _be1(a, x):
    return a.arrow[x][x] == a.one


def _be2(a, x):
    return a.arrow[x][a.one] == a.one


def _be3(a, x):
    return a.arrow[a.one][x] == x


def _be4(a, x, y, z):
    return a.arrow[x][a.arrow[y][z]] == a.arrow[y][a.arrow[x][z]]


def _bounded(a, x):
    return a.arrow[a.zero][x] == a.one


def _dn(a, x):
    return star(a, star(a, x)) == x


def _impl(a, x, y):
    return a.arrow[a.arrow[x][y]][x] == x


def _ig(a, x):
    return a.arrow[star(a, x)][x] == x


def _pi(a, x, y):
    return a.arrow[x][a.arrow[x][y]] == a.arrow[x][y]


def _iabs(a, x, y):
    return a.arrow[a.arrow[x][a.arrow[x][y]]][x] == x


def _iom(a, x, y):
    return wedge_q(a, x, a.arrow[y][x]) == x


def _iom_prime(a, x, y):
    return wedge_q(a, x, a.arrow[star(a, x)][y]) == x


def _iom_second(a, x, y):
    return vee_q(a, x, star(a, a.arrow[x][y])) == x


def _at(a, x, y):
    return a.arrow[a.arrow[star(a, y)][x]][y] == a.arrow[x][y]


def _idiv(a, x, y):
    return a.arrow[x][star(a, a.arrow[x][y])] == a.arrow[x][star(a, y)]


def _idis1(a, x, y, z):
    lhs = star(a, a.arrow[a.arrow[star(a, x)][y]][star(a, z)])
    rhs = a.arrow[a.arrow[x][star(a, z)]][star(a, a.arrow[y][star(a, z)])]
    return lhs == rhs


def _idis2(a, x, y, z):
    lhs = star(a, a.arrow[a.arrow[x][star(a, y)]][z])
    rhs = a.arrow[a.arrow[star(a, z)][x]][star(a, a.arrow[star(a, z)][y])]
    return lhs == rhs


AXIOMS: dict[str, tuple[tuple[str, ...], Callable[..., bool]]] = {
    "BE1": (("x",), _be1),
    "BE2": (("x",), _be2),
    "BE3": (("x",), _be3),
    "BE4": (("x", "y", "z"), _be4),
    "bounded": (("x",), _bounded),
    "DN": (("x",), _dn),
    "impl": (("x", "y"), _impl),
    "iG": (("x",), _ig),
    "pi": (("x", "y"), _pi),
    "Iabs-i": (("x", "y"), _iabs),
    "IOM": (("x", "y"), _iom),
    "IOM'": (("x", "y"), _iom_prime),
    "IOM''": (("x", "y"), _iom_second),
    "@": (("x", "y"), _at),
    "Idiv": (("x", "y"), _idiv),
    "Idis1": (("x", "y", "z"), _idis1),
    "Idis2": (("x", "y", "z"), _idis2),
}

# Case-insensitive lookup aliases for CLI use ("at" stands in for "@").
AXIOM_ALIASES = {key.lower(): key for key in AXIOMS} | {
    "at": "@",
    "iom-prime": "IOM'",
    "iom-second": "IOM''",
    "iabs": "Iabs-i",
}


def resolve_axiom_id(name: str) -> str:
    key = AXIOM_ALIASES.get(name.lower())
    if key is None:
        raise InputError(f"unknown axiom id {name!r}")
    return key


def check_axiom(alg: FiniteAlgebra, axiom_id: str) -> CheckResult:
    """Exhaustive scan of one axiom in lexicographic order over the declared
    element order; the first violating tuple is the canonical witness."""
    if axiom_id not in AXIOMS:
        raise InputError(f"unknown axiom id {axiom_id!r}")
    roles, pred = AXIOMS[axiom_id]
    for tup in product(range(alg.n), repeat=len(roles)):
        if not pred(alg, *tup):
            witness = tuple(
                (role, alg.elements[v]) for role, v in zip(roles, tup)
            )
            return CheckResult(axiom_id, "fail", witness)
    return CheckResult(axiom_id, "pass")


@lru_cache(maxsize=None)
def axiom_holds(alg: FiniteAlgebra, axiom_id: str) -> bool:
    return check_axiom(alg, axiom_id).passed


@lru_cache(maxsize=None)
def classify(alg: FiniteAlgebra) -> ClassLabel:
    """Derive all classification flags; the monotone flag chain holds by
    construction, so a defective table simply gets all-false flags."""
    is_be = all(axiom_holds(alg, a) for a in ("BE1", "BE2", "BE3", "BE4"))
    is_bounded = axiom_holds(alg, "bounded")
    is_involutive = is_bounded and axiom_holds(alg, "DN")
    is_iol = is_be and is_involutive and axiom_holds(alg, "impl")
    is_ioml = is_iol and axiom_holds(alg, "IOM")
    is_iboolean = is_iol and axiom_holds(alg, "@")
    is_distributive = (
        is_iol and axiom_holds(alg, "Idis1") and axiom_holds(alg, "Idis2")
    )
    return ClassLabel(
        is_be, is_bounded, is_involutive, is_iol, is_ioml, is_iboolean,
        is_distributive,
    )


def require_iol(alg: FiniteAlgebra) -> None:
    if not classify(alg).is_iol:
        raise PreconditionError(f"{alg.name}: not an i-OL")


def require_ioml(alg: FiniteAlgebra) -> None:
    if not classify(alg).is_ioml:
        raise PreconditionError(f"{alg.name}: not an i-OML")


def axiom_report(alg: FiniteAlgebra) -> dict[str, CheckResult]:
    """One CheckResult per registered axiom, in registry order."""
    return {axiom_id: check_axiom(alg, axiom_id) for axiom_id in AXIOMS}
