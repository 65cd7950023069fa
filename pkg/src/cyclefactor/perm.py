"""Permutations, cycles, and circular reading order on {1, ..., d}.

All values are immutable and all functions are pure, so everything here is
safe to share across threads.  Composition is right-to-left throughout:
``compose(p, q)(x) == p(q(x))``, i.e. the right factor acts first.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., degree}; ``images[i-1]`` is the image of ``i``.

    >>> p = Permutation.from_cycles(3, [(1, 2, 3)])
    >>> p(1), p(3)
    (2, 1)
    """

    degree: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("degree must be a positive integer")
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, self.degree + 1)):
            raise ValueError(f"not a bijection of [1, {self.degree}]: {images!r}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(degree, tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> Permutation:
        """Build a permutation from disjoint cycles given as element sequences."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for elems in cycles:
            elems = tuple(elems)
            for x in elems:
                if not 1 <= x <= degree:
                    raise ValueError(f"element {x} outside [1, {degree}]")
                if x in seen:
                    raise ValueError(f"cycles are not disjoint at {x}")
                seen.add(x)
            for i, x in enumerate(elems):
                images[x - 1] = elems[(i + 1) % len(elems)]
        return cls(degree, tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, y in enumerate(self.images):
            inv[y - 1] = i + 1
        return Permutation(self.degree, tuple(inv))

    def is_identity(self) -> bool:
        return all(y == i + 1 for i, y in enumerate(self.images))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, y in enumerate(self.images) if y != i + 1)

    def __str__(self) -> str:
        return format_permutation(self)


@dataclass(frozen=True)
class Cycle:
    """A cyclic permutation of some subset of {1, ..., degree}.

    The element sequence is canonicalized to start at its minimum, so two
    cycles are equal iff they are rotations of each other.  Length-1 cycles
    are legal values: they carry their fixed point as support.

    >>> Cycle(5, (3, 1, 4)).elements
    (1, 4, 3)
    """

    degree: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        if not elems:
            raise ValueError("a cycle needs at least one element")
        if len(set(elems)) != len(elems):
            raise ValueError(f"repeated element in cycle {elems!r}")
        if any(not 1 <= x <= self.degree for x in elems):
            raise ValueError(f"cycle {elems!r} leaves [1, {self.degree}]")
        i = elems.index(min(elems))
        object.__setattr__(self, "elements", elems[i:] + elems[:i])

    @property
    def length(self) -> int:
        return len(self.elements)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.elements)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.degree, [self.elements])

    def inverse(self) -> Cycle:
        return Cycle(self.degree, tuple(reversed(self.elements)))

    def __str__(self) -> str:
        return "(" + " ".join(str(x) for x in self.elements) + ")"


@dataclass(frozen=True)
class CycleType:
    """A partition of d recording the cycle lengths of a permutation."""

    partition: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.partition)
        object.__setattr__(self, "partition", parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("partition must be weakly decreasing")

    @property
    def degree(self) -> int:
        return sum(self.partition)


def pure_cycle_type(d: int, e: int) -> CycleType:
    """The type (e, 1, ..., 1) of an e-cycle in degree d."""
    if not 2 <= e <= d:
        raise ValueError(f"need 2 <= e <= d, got e={e}, d={d}")
    return CycleType((e,) + (1,) * (d - e))


def index(t: CycleType) -> int:
    """The index of a cycle type: the sum of (part - 1) over all parts.

    >>> index(CycleType((3, 2, 1)))
    3
    """
    return sum(p - 1 for p in t.partition)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product pq with the right factor acting first: (pq)(x) = p(q(x))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    pi = p.images
    return Permutation(p.degree, tuple(pi[y - 1] for y in q.images))


def product(perms, degree: int) -> Permutation:
    """The ordered product p1 p2 ... pn (empty product is the identity)."""
    result = Permutation.identity(degree)
    for p in perms:
        result = compose(result, p)
    return result


def cycle_decomposition(p: Permutation) -> list[Cycle]:
    """Disjoint cycles of p, fixed points included as 1-cycles.

    The cycles are support-disjoint, cover [1, degree], and are sorted by
    their minimum element.

    >>> [str(c) for c in cycle_decomposition(Permutation.from_cycles(5, [(1, 3), (2, 4)]))]
    ['(1 3)', '(2 4)', '(5)']
    """
    cycles = []
    seen = [False] * p.degree
    for start in range(1, p.degree + 1):
        if seen[start - 1]:
            continue
        elems = []
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            elems.append(x)
            x = p.images[x - 1]
        cycles.append(Cycle(p.degree, tuple(elems)))
    return cycles


def cycle_type(p: Permutation) -> CycleType:
    lengths = sorted((c.length for c in cycle_decomposition(p)), reverse=True)
    return CycleType(tuple(lengths))


def standard_cycle(d: int) -> Cycle:
    """The d-cycle (1 2 ... d)."""
    return Cycle(d, tuple(range(1, d + 1)))


@dataclass(frozen=True)
class CircleOrder:
    """The support of a base cycle laid out clockwise in cycle order.

    Reading the circle clockwise from any start recovers a rotation of the
    base cycle.  Consecutive arcs are reported as (start position, length)
    in clockwise orientation; the full circle is a valid arc.
    """

    base_cycle: Cycle
    _pos: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        pos = {x: i for i, x in enumerate(self.base_cycle.elements)}
        object.__setattr__(self, "_pos", pos)

    @property
    def size(self) -> int:
        return self.base_cycle.length

    def __contains__(self, value: int) -> bool:
        return value in self._pos

    def position(self, value: int) -> int:
        if value not in self._pos:
            raise ValueError(f"{value} is not on the circle of {self.base_cycle}")
        return self._pos[value]

    def element_at(self, position: int) -> int:
        return self.base_cycle.elements[position % self.size]

    def arc_span(self, values) -> tuple[int, int] | None:
        """(start, length) if the values form one clockwise-consecutive arc."""
        values = set(values)
        if not values or not values <= self.base_cycle.support:
            return None
        q = self.size
        if len(values) == q:
            return (0, q)
        positions = {self._pos[v] for v in values}
        starts = [p for p in positions if (p - 1) % q not in positions]
        if len(starts) != 1:
            return None
        return (starts[0], len(values))

    def clockwise_cycle(self, values) -> Cycle:
        """The cycle obtained by reading the given support clockwise."""
        values = set(values)
        if not values <= self.base_cycle.support:
            raise ValueError("values leave the circle's support")
        ordered = tuple(sorted(values, key=self._pos.__getitem__))
        return Cycle(self.base_cycle.degree, ordered)


def _is_rotated_decreasing(positions: list[int]) -> bool:
    # True iff some rotation of the sequence is strictly decreasing.
    n = len(positions)
    if n <= 2:
        return True
    top = positions.index(max(positions))
    rotated = positions[top:] + positions[:top]
    return all(a > b for a, b in zip(rotated, rotated[1:]))


def is_counterclockwise_on(eta: Cycle, circle: CircleOrder) -> bool:
    """Whether eta's elements, in cycle order, go counterclockwise on the circle.

    Cycles of length <= 2 read both ways, so they count as counterclockwise.
    """
    if not eta.support <= circle.base_cycle.support:
        raise ValueError(f"support of {eta} leaves the circle of {circle.base_cycle}")
    return _is_rotated_decreasing([circle.position(x) for x in eta.elements])


def is_clockwise_on(eta: Cycle, circle: CircleOrder) -> bool:
    """Whether eta's elements, in cycle order, go clockwise on the circle."""
    return is_counterclockwise_on(eta.inverse(), circle)


@dataclass(frozen=True)
class NotMaximal:
    """Returned when a cycle product splits into fewer cycles than maximal."""

    cycle_count: int


def split_circle_product(mu: Cycle, eta: Cycle) -> list[Cycle] | NotMaximal:
    """Split the circle of mu into the cycles of the product mu*eta.

    Writing p = |supp(eta)|, the product mu*eta decomposes into at most p
    cycles on supp(mu).  In the maximal case the circle of mu, cut after each
    element of supp(eta), falls into exactly p consecutive pieces, each of
    which read clockwise is one cycle of mu*eta; the pieces are returned in
    clockwise order starting just after the cut at the element of supp(eta)
    earliest on the circle.  Otherwise ``NotMaximal`` reports the actual
    cycle count.

    >>> [str(c) for c in split_circle_product(Cycle(3, (1, 2, 3)), Cycle(3, (3, 1)))]
    ['(2 3)', '(1)']
    """
    if mu.degree != eta.degree:
        raise ValueError(f"degree mismatch: {mu.degree} != {eta.degree}")
    if not eta.support <= mu.support:
        raise ValueError(f"support of {eta} is not contained in support of {mu}")
    p = eta.length

    # Cycle count of mu*eta on supp(mu), without building permutation objects.
    mu_next = {x: mu.elements[(i + 1) % mu.length] for i, x in enumerate(mu.elements)}
    eta_next = {x: eta.elements[(i + 1) % eta.length] for i, x in enumerate(eta.elements)}
    prod = {x: mu_next[eta_next.get(x, x)] for x in mu.elements}
    seen: set[int] = set()
    s = 0
    for start in mu.elements:
        if start in seen:
            continue
        s += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = prod[x]
    if s != p:
        return NotMaximal(s)

    circle = CircleOrder(mu)
    cuts = sorted(circle.position(x) for x in eta.elements)
    pieces = []
    for i, cut in enumerate(cuts):
        prev = cuts[i - 1]  # for i == 0 this wraps to the last cut
        length = (cut - prev) % mu.length or mu.length
        elems = tuple(circle.element_at(prev + 1 + k) for k in range(length))
        pieces.append(Cycle(mu.degree, elems))
    ordered = pieces[1:] + pieces[:1] if p > 1 else pieces
    return ordered


def format_cycle(c: Cycle) -> str:
    return str(c)


def format_permutation(p: Permutation) -> str:
    """Product-of-cycles text form, fixed points omitted, identity as ``()``.

    >>> format_permutation(Permutation.from_cycles(5, [(1, 3), (2, 4)]))
    '(1 3)(2 4)'
    """
    parts = [str(c) for c in cycle_decomposition(p) if c.length > 1]
    return "".join(parts) if parts else "()"


def _parse_cycle_texts(text: str) -> list[tuple[int, ...]]:
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    chunks = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch == "(":
            if depth:
                raise ValueError(f"nested parenthesis in {text!r}")
            depth = 1
            current = []
        elif ch == ")":
            if not depth:
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            depth = 0
            chunks.append(tuple(int(tok) for tok in "".join(current).split()))
        elif depth:
            current.append(ch)
        elif not ch.isspace():
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    if depth:
        raise ValueError(f"unbalanced parenthesis in {text!r}")
    return chunks


def parse_cycle(text: str, degree: int) -> Cycle:
    """Parse a single parenthesized cycle such as ``(1 19)``."""
    chunks = _parse_cycle_texts(text)
    if len(chunks) != 1 or not chunks[0]:
        raise ValueError(f"expected a single nonempty cycle, got {text!r}")
    return Cycle(degree, chunks[0])


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse a product of cycles such as ``(1 3)(2 4)``; ``()`` is the identity."""
    chunks = [c for c in _parse_cycle_texts(text) if c]
    return Permutation.from_cycles(degree, chunks)
