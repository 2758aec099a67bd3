"""Exhaustive generation of small models up to isomorphism.

The search universe is the bounded involutive BE candidates: the star map is
fixed first as the standard fixed-point-free pairing on the non-constant
elements (every involutive algebra is isomorphic to one of this shape), which
pins the 0-column, and the forced 0/1 rows and columns and the diagonal are
pre-filled.  The remaining cells come in contrapositive pairs
(x -> y = y* -> x*), halving the free-cell count.  Backtracking assigns one
cell pair at a time and prunes on every axiom instance that is already fully
determined.  Axioms are interpreted from a small term table here, separate
from the direct predicates used for final verification, so the two encodings
cross-check each other at every accepted leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Optional

from .algebra import (
    FiniteAlgebra,
    InputError,
    ResourceLimitError,
    axiom_holds,
    classify,
    node_budget,
    resolve_axiom_id,
)

# Term language: "x"/"y"/"z" are variables, "0"/"1" constants, and
# ("->", s, t) the arrow.  Star is arrow-to-0.
def _imp(s, t):
    return ("->", s, t)


def _neg(t):
    return _imp(t, "0")


def _veeq(s, t):
    return _imp(_imp(s, t), t)


def _wedgeq(s, t):
    return _neg(_veeq(_neg(s), _neg(t)))


AXIOM_TERMS: dict[str, tuple[tuple[str, ...], tuple, tuple]] = {
    "BE1": (("x",), _imp("x", "x"), "1"),
    "BE2": (("x",), _imp("x", "1"), "1"),
    "BE3": (("x",), _imp("1", "x"), "x"),
    "BE4": (("x", "y", "z"), _imp("x", _imp("y", "z")), _imp("y", _imp("x", "z"))),
    "bounded": (("x",), _imp("0", "x"), "1"),
    "DN": (("x",), _neg(_neg("x")), "x"),
    "impl": (("x", "y"), _imp(_imp("x", "y"), "x"), "x"),
    "iG": (("x",), _imp(_neg("x"), "x"), "x"),
    "pi": (("x", "y"), _imp("x", _imp("x", "y")), _imp("x", "y")),
    "Iabs-i": (("x", "y"), _imp(_imp("x", _imp("x", "y")), "x"), "x"),
    "IOM": (("x", "y"), _wedgeq("x", _imp("y", "x")), "x"),
    "IOM'": (("x", "y"), _wedgeq("x", _imp(_neg("x"), "y")), "x"),
    "IOM''": (("x", "y"), _veeq("x", _neg(_imp("x", "y"))), "x"),
    "@": (("x", "y"), _imp(_imp(_neg("y"), "x"), "y"), _imp("x", "y")),
    "Idiv": (("x", "y"), _imp("x", _neg(_imp("x", "y"))), _imp("x", _neg("y"))),
    "Idis1": (
        ("x", "y", "z"),
        _neg(_imp(_imp(_neg("x"), "y"), _neg("z"))),
        _imp(_imp("x", _neg("z")), _neg(_imp("y", _neg("z")))),
    ),
    "Idis2": (
        ("x", "y", "z"),
        _neg(_imp(_imp("x", _neg("y")), "z")),
        _imp(_imp(_neg("z"), "x"), _neg(_imp(_neg("z"), "y"))),
    ),
}

# Axioms that hold on every candidate by construction of the pre-fill.
_UNIVERSE_AXIOMS = frozenset({"BE1", "BE2", "BE3", "bounded", "DN"})


@dataclass(frozen=True)
class SearchGoal:
    """Counterexample-search request: axioms to require, axioms to refute,
    sizes to try."""

    require: frozenset[str]
    forbid: frozenset[str]
    min_size: int = 2
    max_size: int = 6

    def __post_init__(self) -> None:
        for name in self.require | self.forbid:
            if name not in AXIOM_TERMS:
                raise InputError(f"unknown axiom id {name!r}")
        if self.require & self.forbid:
            raise InputError("contradictory goal: require and forbid overlap")
        if self.forbid & (_UNIVERSE_AXIOMS | {"BE4"}):
            raise InputError(
                "goal lies outside the bounded involutive BE search universe"
            )
        if self.min_size < 2:
            raise InputError("sizes below 2 are rejected (trivial algebra)")


def _peval(term, table, env, zero, one) -> Optional[int]:
    """Evaluate a term over a partial table; None when any needed cell is
    still unknown."""
    if term == "0":
        return zero
    if term == "1":
        return one
    if isinstance(term, str):
        return env[term]
    a = _peval(term[1], table, env, zero, one)
    if a is None:
        return None
    b = _peval(term[2], table, env, zero, one)
    if b is None:
        return None
    return table[a][b]


def _partial_violation(axiom_id, table, n, zero, one) -> bool:
    """True when some fully determined instance of the axiom is violated."""
    roles, lhs, rhs = AXIOM_TERMS[axiom_id]
    env = {}
    for tup in product(range(n), repeat=len(roles)):
        for r, v in zip(roles, tup):
            env[r] = v
        a = _peval(lhs, table, env, zero, one)
        if a is None:
            continue
        b = _peval(rhs, table, env, zero, one)
        if b is None:
            continue
        if a != b:
            return True
    return False


def _standard_names(n: int) -> tuple[str, ...]:
    return ("0",) + tuple(f"x{i}" for i in range(1, n - 1)) + ("1",)


def _search_tables(n: int, required: frozenset[str]) -> Iterator[FiniteAlgebra]:
    """Yield completed candidate tables (unverified, undeduplicated)."""
    zero, one = 0, n - 1
    names = _standard_names(n)
    if n == 2:
        yield FiniteAlgebra("model", names, ((1, 1), (0, 1)), one, zero)
        return
    mid = n - 2
    if mid % 2:
        return  # no fixed-point-free star pairing on an odd middle
    star_of = {zero: one, one: zero}
    for i in range(1, mid + 1, 2):
        star_of[i] = i + 1
        star_of[i + 1] = i
    table: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for x in range(n):
        table[zero][x] = one
        table[one][x] = x
        table[x][one] = one
        table[x][x] = one
        table[x][zero] = star_of[x]
    if "impl" in required or "iG" in required:
        for x in range(1, n - 1):
            table[star_of[x]][x] = x  # x* -> x = x, taken at every element
    cells: list[tuple[int, int]] = []
    paired: set[tuple[int, int]] = set()
    for i in range(1, n - 1):
        for j in range(1, n - 1):
            if table[i][j] is None and (i, j) not in paired:
                cells.append((i, j))
                paired.add((i, j))
                paired.add((star_of[j], star_of[i]))
    prune_axioms = tuple(
        a for a in (("BE4",) + tuple(sorted(required))) if a not in _UNIVERSE_AXIOMS
    )
    budget = node_budget()
    nodes = 0

    def assign(i: int, j: int, v: Optional[int]) -> None:
        # x -> y = y* -> x* on involutive candidates, so the partner cell
        # carries the same value; a cell (x, x*) is its own partner.
        table[i][j] = v
        pi, pj = star_of[j], star_of[i]
        if (pi, pj) != (i, j):
            table[pi][pj] = v

    def fill(k: int) -> Iterator[FiniteAlgebra]:
        nonlocal nodes
        if k == len(cells):
            yield FiniteAlgebra(
                "model", names, tuple(tuple(r) for r in table), one, zero
            )
            return
        i, j = cells[k]
        for v in range(n):
            nodes += 1
            if nodes > budget:
                raise ResourceLimitError("enumeration exceeded node budget")
            assign(i, j, v)
            if not any(
                _partial_violation(a, table, n, zero, one) for a in prune_axioms
            ):
                yield from fill(k + 1)
        assign(i, j, None)

    yield from fill(0)


_CLASS_AXIOMS = {
    "iol": frozenset({"impl"}),
    "ioml": frozenset({"impl", "IOM"}),
    "iboolean": frozenset({"impl", "@"}),
}


def canonical_key(alg: FiniteAlgebra) -> tuple[int, ...]:
    """Min-lex flattened arrow table over all relabelings that keep 0 first
    and 1 last; equal keys mean isomorphic algebras."""
    middles = [i for i in range(alg.n) if i not in (alg.zero, alg.one)]
    best: Optional[tuple[int, ...]] = None
    for perm in permutations(range(1, alg.n - 1)):
        pos = {alg.zero: 0, alg.one: alg.n - 1}
        for old, new in zip(middles, perm):
            pos[old] = new
        flat = [0] * (alg.n * alg.n)
        for x in range(alg.n):
            for y in range(alg.n):
                flat[pos[x] * alg.n + pos[y]] = pos[alg.arrow[x][y]]
        key = tuple(flat)
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def canonical_form(alg: FiniteAlgebra) -> FiniteAlgebra:
    """The canonically relabeled copy, with standard element names; invariant
    under any relabeling of the input."""
    key = canonical_key(alg)
    n = alg.n
    arrow = tuple(tuple(key[x * n + y] for y in range(n)) for x in range(n))
    return FiniteAlgebra(alg.name, _standard_names(n), arrow, n - 1, 0)


def enumerate_models(
    n: int, cls: str = "iol", limit: Optional[int] = None
) -> list[FiniteAlgebra]:
    """All algebras of the class with n elements, one per isomorphism class,
    in canonical order."""
    if cls not in _CLASS_AXIOMS:
        raise InputError(f"unknown class {cls!r}; expected iol, ioml or iboolean")
    if n < 2:
        raise InputError("sizes below 2 are rejected (trivial algebra)")
    required = _CLASS_AXIOMS[cls]
    seen: dict[tuple[int, ...], FiniteAlgebra] = {}
    for cand in _search_tables(n, required):
        if not axiom_holds(cand, "BE4"):
            continue
        if not all(axiom_holds(cand, a) for a in sorted(required)):
            continue
        label = classify(cand)
        if not {"iol": label.is_iol, "ioml": label.is_ioml, "iboolean": label.is_iboolean}[cls]:
            continue
        key = canonical_key(cand)
        if key not in seen:
            seen[key] = canonical_form(cand)
    ordered = [seen[k] for k in sorted(seen)]
    renamed = [
        FiniteAlgebra(f"{cls}-{n}-{i}", a.elements, a.arrow, a.one, a.zero)
        for i, a in enumerate(ordered)
    ]
    return renamed[:limit] if limit is not None else renamed


def counterexample_search(goal: SearchGoal) -> Optional[FiniteAlgebra]:
    """Smallest (then canonically least) model satisfying every required
    axiom and refuting every forbidden one; None is a proof of absence for
    the whole size range."""
    for n in range(goal.min_size, goal.max_size + 1):
        hits: dict[tuple[int, ...], FiniteAlgebra] = {}
        for cand in _search_tables(n, goal.require):
            if not axiom_holds(cand, "BE4"):
                continue
            if not all(axiom_holds(cand, a) for a in sorted(goal.require)):
                continue
            if any(axiom_holds(cand, a) for a in sorted(goal.forbid)):
                continue
            key = canonical_key(cand)
            if key not in hits:
                hits[key] = canonical_form(cand)
        if hits:
            best = hits[min(hits)]
            return FiniteAlgebra(
                f"counterexample-{n}", best.elements, best.arrow, best.one, best.zero
            )
    return None


def goal_from_names(require, forbid, min_size=2, max_size=6) -> SearchGoal:
    return SearchGoal(
        frozenset(resolve_axiom_id(r) for r in require),
        frozenset(resolve_axiom_id(f) for f in forbid),
        min_size,
        max_size,
    )


# ---------------------------------------------------------------------------
# Isomorphism testing.
# ---------------------------------------------------------------------------

def _refine_colors(alg: FiniteAlgebra) -> tuple[int, ...]:
    colors = [0] * alg.n
    colors[alg.zero] = 1
    colors[alg.one] = 2
    while True:
        sigs = []
        for x in range(alg.n):
            profile = sorted(
                (colors[y], colors[alg.arrow[x][y]], colors[alg.arrow[y][x]])
                for y in range(alg.n)
            )
            sigs.append((colors[x], tuple(profile)))
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(relabel[s] for s in sigs)
        if new == tuple(colors):
            return new
        colors = list(new)


def is_isomorphic(a: FiniteAlgebra, b: FiniteAlgebra) -> Optional[tuple[int, ...]]:
    """An arrow-preserving bijection as an index map (position i of ``a`` to
    position map[i] of ``b``), or None.  Such a bijection fixes 1, and 0 on
    bounded algebras, so candidates are filtered by color refinement first."""
    if a.n != b.n:
        return None
    if a.arrow == b.arrow and a.one == b.one and a.zero == b.zero:
        return tuple(range(a.n))
    ca, cb = _refine_colors(a), _refine_colors(b)
    if sorted(ca) != sorted(cb):
        return None
    mapping: list[Optional[int]] = [None] * a.n
    used = [False] * b.n
    mapping[a.zero], used[b.zero] = b.zero, True
    mapping[a.one] = b.one
    used[b.one] = True
    if ca[a.zero] != cb[b.zero] or ca[a.one] != cb[b.one]:
        return None
    order = sorted(
        (x for x in range(a.n) if x not in (a.zero, a.one)), key=lambda x: ca[x]
    )

    def consistent(x: int) -> bool:
        fx = mapping[x]
        for y in range(a.n):
            fy = mapping[y]
            if fy is None:
                continue
            if mapping[a.arrow[x][y]] is not None and mapping[a.arrow[x][y]] != b.arrow[fx][fy]:
                return False
            if mapping[a.arrow[y][x]] is not None and mapping[a.arrow[y][x]] != b.arrow[fy][fx]:
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            for x in range(a.n):
                for y in range(a.n):
                    if mapping[a.arrow[x][y]] != b.arrow[mapping[x]][mapping[y]]:
                        return False
            return True
        x = order[k]
        for t in range(b.n):
            if used[t] or cb[t] != ca[x]:
                continue
            mapping[x] = t
            used[t] = True
            if consistent(x) and extend(k + 1):
                return True
            mapping[x] = None
            used[t] = False
        return False

    if extend(0):
        return tuple(mapping)  # type: ignore[arg-type]
    return None
