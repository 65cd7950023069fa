"""Factorizations of a d-cycle into cycle factors, and exact count formulas.

The enumeration core walks tuples (sigma_1, ..., sigma_{r-1}) of cycles of
prescribed lengths whose ordered product equals a fixed d-cycle tau.  The
last factor is always solved for rather than searched, and branches whose
remaining target is too far (in Cayley distance) from the identity to be
bridged by the remaining cycle lengths are pruned; the prune is exact in
genus 0 and conservative otherwise.

All counts are exact integers; Hurwitz numbers are exact rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator

from .perm import (
    Cycle,
    CycleType,
    Permutation,
    cycle_type,
    index,
    product,
    pure_cycle_type,
    standard_cycle,
)
from .trees import mnr_cardinality


class CapExceededError(RuntimeError):
    """A brute-force search was requested beyond its configured size cap."""


@dataclass(frozen=True)
class FactorizationType:
    """Degree d plus the ordered factor lengths (e_1, ..., e_{r-1}), e_i >= 2.

    The genus is determined by sum(e_i - 1) = d - 1 + 2g and must come out a
    nonnegative integer.
    """

    d: int
    e: tuple[int, ...]

    def __post_init__(self) -> None:
        e = tuple(self.e)
        object.__setattr__(self, "e", e)
        if self.d < 1:
            raise ValueError("degree must be positive")
        if not e:
            raise ValueError("need at least one factor length (r >= 2)")
        if any(not 2 <= ei <= self.d for ei in e):
            raise ValueError(f"factor lengths must lie in [2, {self.d}]: {e!r}")
        excess = sum(ei - 1 for ei in e) - (self.d - 1)
        if excess < 0 or excess % 2:
            raise ValueError(
                f"sum(e_i - 1) = {sum(ei - 1 for ei in e)} is not d-1+2g "
                f"for a nonnegative integer g (d = {self.d})"
            )

    @property
    def r(self) -> int:
        return len(self.e) + 1

    @property
    def genus(self) -> int:
        return (sum(ei - 1 for ei in self.e) - (self.d - 1)) // 2


@dataclass(frozen=True)
class Factorization:
    """A tuple of cycles multiplying (left to right) to the base cycle tau.

    ``ftype.d`` is the length of tau; the ambient degree is ``tau.degree``.
    The two coincide for factorizations of a full d-cycle, and differ for the
    sub-factorizations living on a sub-circle.
    """

    ftype: FactorizationType
    tau: Cycle
    sigmas: tuple[Cycle, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigmas", tuple(self.sigmas))
        if self.tau.length != self.ftype.d:
            raise ValueError(f"tau must be a {self.ftype.d}-cycle")
        if any(s.degree != self.tau.degree for s in self.sigmas):
            raise ValueError("factors must share tau's ambient degree")

    @property
    def d(self) -> int:
        return self.ftype.d


def validate(f: Factorization) -> bool:
    """True iff the factors match the type, sit inside supp(tau), and multiply to tau."""
    if len(f.sigmas) != len(f.ftype.e):
        return False
    if any(s.length != ei for s, ei in zip(f.sigmas, f.ftype.e)):
        return False
    if any(not s.support <= f.tau.support for s in f.sigmas):
        return False
    prod = product((s.to_permutation() for s in f.sigmas), f.tau.degree)
    return prod == f.tau.to_permutation()


def _cycles_of_length(d: int, e: int) -> list[tuple[int, ...]]:
    """All e-cycle element tuples in canonical form, lexicographically sorted."""
    out = []
    for first in range(1, d + 1):
        for rest in itertools.permutations(range(first + 1, d + 1), e - 1):
            out.append((first,) + rest)
    return out


def _cycle_tables(d: int, e: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # (canonical elements, inverse image array) per e-cycle; arrays are
    # 0-indexed with 1-based values so composition is a single lookup chain.
    tables = []
    for elems in _cycles_of_length(d, e):
        inv = list(range(1, d + 1))
        for i, x in enumerate(elems):
            inv[x - 1] = elems[i - 1]
        tables.append((elems, tuple(inv)))
    return tables


def _cycle_count(imgs) -> int:
    seen = [False] * len(imgs)
    count = 0
    for start in range(len(imgs)):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = imgs[x] - 1
    return count


def _as_single_cycle(imgs, length: int) -> tuple[int, ...] | None:
    """The moved points of imgs in cycle order, if imgs is one `length`-cycle."""
    moved = [i + 1 for i, y in enumerate(imgs) if y != i + 1]
    if len(moved) != length:
        return None
    start = moved[0]
    elems = [start]
    x = imgs[start - 1]
    while x != start:
        elems.append(x)
        x = imgs[x - 1]
    if len(elems) != length:
        return None
    return tuple(elems)


def _search(target, e, k, tables, budgets, out):
    """Yield factor-element tuples; `target` is what sigma_{k+1}.. must multiply to."""
    d = len(target)
    if k == len(e) - 1:
        elems = _as_single_cycle(target, e[k])
        if elems is not None:
            yield tuple(out) + (elems,)
        return
    if d - _cycle_count(target) > budgets[k]:
        return
    for elems, inv in tables[k]:
        # next target = sigma^{-1} * target
        new_target = tuple(inv[y - 1] for y in target)
        out.append(elems)
        yield from _search(new_target, e, k + 1, tables, budgets, out)
        out.pop()


def _stream_element_tuples(d: int, tau: Cycle, e: tuple[int, ...]):
    FactorizationType(d, e)  # validates lengths and genus
    if tau.degree != d or tau.length != d:
        raise ValueError(f"tau must be a {d}-cycle of degree {d}")
    target = tau.to_permutation().images
    # remaining Cayley-distance budget before sigma_{k+1} is chosen
    budgets = [sum(ei - 1 for ei in e[k:]) for k in range(len(e))]
    by_length = {ei: _cycle_tables(d, ei) for ei in set(e[:-1])}
    tables = [by_length.get(ei) for ei in e]
    yield from _search(target, tuple(e), 0, tables, budgets, [])


def enumerate_factorizations(d: int, tau: Cycle, e) -> Iterator[Factorization]:
    """Stream every factorization of tau with factor lengths e, exactly once.

    The stream is in lexicographic order of the canonical factor sequences.
    """
    e = tuple(e)
    ftype = FactorizationType(d, e)

    def gen():
        for elem_tuple in _stream_element_tuples(d, tau, e):
            sigmas = tuple(Cycle(d, elems) for elems in elem_tuple)
            yield Factorization(ftype, tau, sigmas)

    return gen()


def count_factorizations(d: int, e, method: str = "bruteforce", tau: Cycle | None = None) -> int:
    """Count factorizations of a d-cycle with factor lengths e.

    method:
      * ``bruteforce`` counts the enumeration stream (any genus);
      * ``formula`` returns d^(r-2), valid only in genus 0;
      * ``bijection`` routes through the tree-family cardinality that the
        encoding maps factorizations onto, also genus 0 only.
    """
    e = tuple(e)
    ftype = FactorizationType(d, e)
    if method == "bruteforce":
        if tau is None:
            tau = standard_cycle(d)
        return sum(1 for _ in _stream_element_tuples(d, tau, e))
    if ftype.genus != 0:
        raise ValueError(f"method {method!r} requires genus 0, got genus {ftype.genus}")
    if method == "formula":
        return d ** (ftype.r - 2)
    if method == "bijection":
        return mnr_cardinality((1,) + tuple(ei - 1 for ei in e))
    raise ValueError(f"unknown method {method!r}")


def count_by_cycle_index(d: int, n) -> int:
    """Count factorizations of a d-cycle with n_m factors of length m.

    ``n`` maps factor lengths m in [2, d] to multiplicities.  Requires
    sum (m-1) n_m = d - 1, and returns d^(r-2) (r-1)! / prod n_m! exactly.
    """
    n = {int(m): int(nm) for m, nm in dict(n).items() if nm}
    if any(not 2 <= m <= d for m in n) or any(nm < 0 for nm in n.values()):
        raise ValueError(f"bad cycle index {n!r} for degree {d}")
    if sum((m - 1) * nm for m, nm in n.items()) != d - 1:
        raise ValueError("cycle index must satisfy sum (m-1) n_m = d - 1")
    r_minus_1 = sum(n.values())
    count = d ** (r_minus_1 - 1) * factorial(r_minus_1)
    for nm in n.values():
        count //= factorial(nm)
    return count


@dataclass(frozen=True)
class HurwitzDatum:
    """Branch data (d, r, g; lambda^1, ..., lambda^r) satisfying Riemann-Hurwitz."""

    d: int
    r: int
    g: int
    lambdas: tuple[CycleType, ...]

    def __post_init__(self) -> None:
        lambdas = tuple(self.lambdas)
        object.__setattr__(self, "lambdas", lambdas)
        if self.g < 0:
            raise ValueError("genus must be nonnegative")
        if len(lambdas) != self.r:
            raise ValueError(f"expected {self.r} cycle types, got {len(lambdas)}")
        if any(t.degree != self.d for t in lambdas):
            raise ValueError("every cycle type must partition d")
        total = sum(index(t) for t in lambdas)
        if total != 2 * self.d - 2 + 2 * self.g:
            raise ValueError(
                f"Riemann-Hurwitz violated: sum of indices {total} != "
                f"{2 * self.d - 2 + 2 * self.g}"
            )


def pure_cycle_datum(d: int, e) -> HurwitzDatum:
    """The genus-0 datum with pure-cycle branch types (e_1, ..., e_r)."""
    e = tuple(e)
    total = sum(ei - 1 for ei in e)
    if total != 2 * d - 2:
        raise ValueError(f"sum(e_i - 1) = {total} != 2d - 2 = {2 * d - 2}")
    return HurwitzDatum(d, len(e), 0, tuple(pure_cycle_type(d, ei) for ei in e))


def _transitive(perms_images, d: int) -> bool:
    # union-find over [d], joining x with its image under every factor
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for imgs in perms_images:
        for x in range(d):
            a, b = find(x), find(imgs[x] - 1)
            if a != b:
                parent[a] = b
    return sum(1 for x in range(d) if find(x) == x) == 1


def hurwitz_count_bruteforce(h: HurwitzDatum, max_degree: int = 6) -> Fraction:
    """Count Hurwitz factorizations for the datum, divided by d!.

    Enumerates tuples (sigma_1, ..., sigma_r) with the prescribed cycle
    types, product the identity, and transitive joint action.  The last
    factor is solved for.  Degrees above ``max_degree`` are refused; pass a
    larger cap explicitly to override.
    """
    d = h.d
    if d > max_degree:
        raise CapExceededError(
            f"degree {d} exceeds the brute-force cap {max_degree}; "
            "pass max_degree explicitly to override"
        )
    by_type: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for images in itertools.permutations(range(1, d + 1)):
        p = Permutation(d, images)
        by_type.setdefault(cycle_type(p).partition, []).append(images)

    def with_inverses(members):
        pairs = []
        for imgs in members:
            inv = [0] * d
            for i, y in enumerate(imgs):
                inv[y - 1] = i + 1
            pairs.append((imgs, tuple(inv)))
        return pairs

    classes = [with_inverses(by_type.get(t.partition, [])) for t in h.lambdas[:-1]]
    last_type = h.lambdas[-1].partition
    # remaining index budget before sigma_{k+1} is chosen
    budgets = [sum(index(t) for t in h.lambdas[k:]) for k in range(h.r)]
    identity = tuple(range(1, d + 1))
    count = 0
    stack: list[tuple[int, ...]] = []

    def type_of(imgs) -> tuple[int, ...]:
        lengths = []
        seen = [False] * d
        for start in range(d):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                length += 1
                x = imgs[x] - 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def rec(target, k):
        # target is what sigma_{k+1} ... sigma_r must multiply to
        nonlocal count
        if k == h.r - 1:
            if type_of(target) == last_type and _transitive(stack + [target], d):
                count += 1
            return
        if d - _cycle_count(target) > budgets[k]:
            return
        for imgs, inv in classes[k]:
            new_target = tuple(inv[y - 1] for y in target)
            stack.append(imgs)
            rec(new_target, k + 1)
            stack.pop()

    rec(identity, 0)
    return Fraction(count, factorial(d))


def formula_hurwitz_simple(d: int, r: int, tau_partition: CycleType) -> Fraction:
    """Closed form for genus-0 Hurwitz numbers with r-1 simple branch points.

    The last branch point has cycle type ``tau_partition``; all others are
    transpositions.  Requires (r-1) + index(tau_partition) = 2d - 2.
    """
    if tau_partition.degree != d:
        raise ValueError(f"{tau_partition.partition!r} does not partition {d}")
    if (r - 1) + index(tau_partition) != 2 * d - 2:
        raise ValueError(
            f"Riemann-Hurwitz violated: r-1 = {r - 1} != "
            f"{2 * d - 2 - index(tau_partition)}"
        )
    parts = tau_partition.partition
    n = len(parts)
    value = Fraction(factorial(r - 1)) * Fraction(d) ** (n - 3)
    for t in parts:
        value *= Fraction(t**t, factorial(t))
    multiplicity: dict[int, int] = {}
    for t in parts:
        multiplicity[t] = multiplicity.get(t, 0) + 1
    for m in multiplicity.values():
        value /= factorial(m)
    return value


def formula_hurwitz_4point(d: int, e) -> int:
    """Genus-0 pure-cycle count with four branch points: min of e_i (d+1-e_i)."""
    e = tuple(e)
    if len(e) != 4:
        raise ValueError("exactly four ramification indices required")
    if any(not 2 <= ei <= d for ei in e):
        raise ValueError(f"ramification indices must lie in [2, {d}]")
    if sum(ei - 1 for ei in e) != 2 * d - 2:
        raise ValueError(f"sum(e_i - 1) must be 2d - 2 = {2 * d - 2}")
    return min(ei * (d + 1 - ei) for ei in e)


def standardize(f: Factorization) -> tuple[Factorization, dict[int, int]]:
    """Conjugate a factorization so its base cycle becomes (1 2 ... d).

    Returns the relabeled factorization and the value map applied to every
    point.  The map sends the i-th element of tau (reading the canonical
    form, which starts at 1) to i.
    """
    d = f.d
    relabel = {x: i + 1 for i, x in enumerate(f.tau.elements)}
    sigmas = tuple(
        Cycle(d, tuple(relabel[x] for x in s.elements)) for s in f.sigmas
    )
    return Factorization(f.ftype, standard_cycle(d), sigmas), relabel


def factorization_to_json(f: Factorization) -> dict:
    return {
        "d": f.tau.degree,
        "tau": list(f.tau.elements),
        "sigmas": [list(s.elements) for s in f.sigmas],
    }


def factorization_from_json(data: dict) -> Factorization:
    degree = int(data["d"])
    tau = Cycle(degree, tuple(data["tau"]))
    sigmas = tuple(Cycle(degree, tuple(elems)) for elems in data["sigmas"])
    ftype = FactorizationType(tau.length, tuple(s.length for s in sigmas))
    return Factorization(ftype, tau, sigmas)
