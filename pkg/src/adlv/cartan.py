"""Root-system foundations: Cartan data, positive roots, pairings, dominance.

Coordinate conventions, used everywhere in this package:

* roots are integer vectors in the basis of *simple roots*;
* coweights are exact-rational vectors in the basis of *simple coroots*
  (:class:`CoweightVec`), so the dominance order on dominant coweights is a
  plain coordinatewise sign check;
* ``cartan_matrix[i][j]`` is the value of the j-th simple root on the i-th
  simple coroot.

Only irreducible types A-G are supported, and the translation lattice is one
of the two extremes: the coroot lattice (trivial fundamental group) or the
coweight lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConfigError

FAMILIES = "ABCDEFG"
LATTICES = ("coroot", "coweight")

#: number of positive roots per family, as a function of the rank
POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _validate_type(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise ConfigError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if rank < 1:
        raise ConfigError(f"rank must be positive, got {rank}")
    low = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}[family]
    high = {"A": None, "B": None, "C": None, "D": None, "E": 8, "F": 4, "G": 2}[family]
    if rank < low or (high is not None and rank > high):
        span = f"rank == {low}" if low == high else f"rank >= {low}" if high is None else f"{low} <= rank <= {high}"
        raise ConfigError(f"type {family}{rank} is not a valid irreducible type ({family} needs {span})")


def _edges(family: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Return diagram edges as (i, j, cij, cji) with 0-based node indices."""
    chain = [(i, i + 1, -1, -1) for i in range(rank - 1)]
    if family == "A":
        return chain
    if family == "B":
        # last node short: <alpha_{n-1}^vee, alpha_n> = -1, <alpha_n^vee, alpha_{n-1}> = -2
        return chain[:-1] + [(rank - 2, rank - 1, -1, -2)]
    if family == "C":
        return chain[:-1] + [(rank - 2, rank - 1, -2, -1)]
    if family == "D":
        return [(i, i + 1, -1, -1) for i in range(rank - 3)] + [
            (rank - 3, rank - 2, -1, -1),
            (rank - 3, rank - 1, -1, -1),
        ]
    if family == "E":
        # Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
        pairs = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if rank >= 7:
            pairs.append((6, 7))
        if rank == 8:
            pairs.append((7, 8))
        return [(i - 1, j - 1, -1, -1) for i, j in pairs]
    if family == "F":
        # nodes 1,2 long; 3,4 short
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    if family == "G":
        # node 1 long, node 2 short
        return [(0, 1, -1, -3)]
    raise AssertionError(family)


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Integer Cartan matrix with C[i][j] = <alpha_i^vee, alpha_j>.

    >>> cartan_matrix("A", 2)
    ((2, -1), (-1, 2))
    >>> cartan_matrix("G", 2)
    ((2, -1), (-3, 2))
    """
    _validate_type(family, rank)
    mat = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        mat[i][i] = 2
    for i, j, cij, cji in _edges(family, rank):
        mat[i][j] = cij
        mat[j][i] = cji
    return tuple(tuple(row) for row in mat)


@dataclass(frozen=True)
class CartanDatum:
    """An irreducible Cartan type together with the chosen translation lattice."""

    family: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    lattice: str

    @property
    def type_name(self) -> str:
        return f"{self.family}{self.rank}"

    def config_string(self) -> str:
        return f"type={self.type_name};lattice={self.lattice}"


@dataclass(frozen=True)
class RootSystem:
    """Fully enumerated finite root system.

    ``positive_roots[a]`` is in simple-root coordinates and
    ``positive_coroots[a]`` holds the coroot of the same root in
    simple-coroot coordinates.
    """

    simple_roots: tuple[tuple[int, ...], ...]
    simple_coroots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    positive_coroots: tuple[tuple[int, ...], ...]
    highest_root: tuple[int, ...]
    two_rho: tuple[int, ...]
    fundamental_coweights: tuple[tuple[Fraction, ...], ...]

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)


@dataclass(frozen=True)
class CoweightVec:
    """Exact rational coweight in simple-coroot coordinates."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def from_ints(values: Iterable[int]) -> "CoweightVec":
        return CoweightVec(tuple(Fraction(v) for v in values))

    @staticmethod
    def zero(rank: int) -> "CoweightVec":
        return CoweightVec((Fraction(0),) * rank)

    def __add__(self, other: "CoweightVec") -> "CoweightVec":
        return CoweightVec(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "CoweightVec") -> "CoweightVec":
        return CoweightVec(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "CoweightVec":
        return CoweightVec(tuple(-a for a in self.coords))

    def scale(self, factor) -> "CoweightVec":
        f = Fraction(factor)
        return CoweightVec(tuple(a * f for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def rational_str(x: Fraction) -> str:
    """Uniform exact serialization of a rational as "p/q"."""
    return f"{x.numerator}/{x.denominator}"


def _invert_rational(mat: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination; mat must be square."""
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _generate_roots(cmat) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Close the simple (root, coroot) pairs under all simple reflections."""
    rank = len(cmat)
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    frontier = []
    for i in range(rank):
        root = tuple(int(i == j) for j in range(rank))
        seen[root] = root  # coroot coords of alpha_i^vee are also e_i
        frontier.append(root)
    while frontier:
        nxt = []
        for a in frontier:
            b = seen[a]
            for i in range(rank):
                pa = sum(a[j] * cmat[i][j] for j in range(rank))  # <alpha_i^vee, alpha>
                pb = sum(b[k] * cmat[k][i] for k in range(rank))  # <alpha^vee, alpha_i>
                ra = list(a)
                ra[i] -= pa
                rb = list(b)
                rb[i] -= pb
                ra, rb = tuple(ra), tuple(rb)
                if ra not in seen:
                    seen[ra] = rb
                    nxt.append(ra)
        frontier = nxt
    return sorted((a, b) for a, b in seen.items())


def build_cartan(family: str, rank: int, lattice: str = "coroot") -> tuple[CartanDatum, RootSystem]:
    """Construct the Cartan datum and its fully enumerated root system.

    >>> datum, rs = build_cartan("A", 2)
    >>> rs.num_positive
    3
    >>> rs.highest_root
    (1, 1)
    """
    if lattice not in LATTICES:
        raise ConfigError(f"unknown lattice {lattice!r}; expected 'coroot' or 'coweight'")
    cmat = cartan_matrix(family, rank)
    datum = CartanDatum(family, rank, cmat, lattice)

    all_roots = _generate_roots(cmat)
    positives = [(a, b) for a, b in all_roots if all(x >= 0 for x in a)]
    for a, _ in all_roots:
        if not (all(x >= 0 for x in a) or all(x <= 0 for x in a)):
            raise AssertionError(f"mixed-sign root generated: {a}")
    expected = POSITIVE_ROOT_COUNTS[family](rank)
    if len(positives) != expected or 2 * len(positives) != len(all_roots):
        raise AssertionError(f"{family}{rank}: generated {len(positives)} positive roots, expected {expected}")

    positives.sort(key=lambda ab: (sum(ab[0]), ab[0]))
    pos_roots = tuple(a for a, _ in positives)
    pos_coroots = tuple(b for _, b in positives)
    heights = [sum(a) for a in pos_roots]
    top = max(heights)
    if heights.count(top) != 1:
        raise AssertionError("highest root is not unique; type is not irreducible")
    highest = pos_roots[heights.index(top)]
    two_rho = tuple(sum(a[j] for a in pos_roots) for j in range(rank))
    cinv = _invert_rational(cmat)
    fundamental = tuple(tuple(cinv[i][j] for j in range(rank)) for i in range(rank))

    simple = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    rs = RootSystem(
        simple_roots=simple,
        simple_coroots=simple,
        positive_roots=pos_roots,
        positive_coroots=pos_coroots,
        highest_root=highest,
        two_rho=two_rho,
        fundamental_coweights=fundamental,
    )
    return datum, rs


def parse_config(config: str) -> tuple[CartanDatum, RootSystem]:
    """Parse a config string like ``"type=A2;lattice=coweight"``.

    >>> datum, _ = parse_config("type=G2;lattice=coroot")
    >>> datum.type_name
    'G2'
    """
    fields = {}
    for part in config.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ConfigError(f"malformed config fragment {part!r} in {config!r}")
        key, value = part.split("=", 1)
        fields[key.strip()] = value.strip()
    unknown = set(fields) - {"type", "lattice"}
    if unknown:
        raise ConfigError(f"unknown config keys {sorted(unknown)} in {config!r}")
    if "type" not in fields:
        raise ConfigError(f"config {config!r} is missing 'type='")
    tname = fields["type"]
    if len(tname) < 2 or tname[0] not in FAMILIES or not tname[1:].isdigit():
        raise ConfigError(f"malformed type {tname!r}; expected e.g. 'A2'")
    return build_cartan(tname[0], int(tname[1:]), fields.get("lattice", "coroot"))


def pair(datum: CartanDatum, v: CoweightVec, alpha: Sequence[int]) -> Fraction:
    """Canonical pairing of a coweight with a root-basis vector.

    >>> datum, rs = build_cartan("A", 2)
    >>> pair(datum, CoweightVec.from_ints([1, 0]), rs.simple_roots[1])
    Fraction(-1, 1)
    """
    rank = datum.rank
    if len(v.coords) != rank or len(alpha) != rank:
        raise ConfigError(f"dimension mismatch: rank {rank}, coweight {len(v.coords)}, root {len(alpha)}")
    cmat = datum.cartan_matrix
    return sum(
        (v.coords[i] * cmat[i][j] * alpha[j] for i in range(rank) for j in range(rank) if alpha[j] and cmat[i][j]),
        Fraction(0),
    )


def _simple_pairings(datum: CartanDatum, v: CoweightVec) -> list[Fraction]:
    cmat = datum.cartan_matrix
    rank = datum.rank
    return [sum((v.coords[i] * cmat[i][j] for i in range(rank)), Fraction(0)) for j in range(rank)]


def reflect_coweight(datum: CartanDatum, i: int, v: CoweightVec) -> CoweightVec:
    """Apply the simple reflection s_i (1-based node index) to a coweight."""
    if not 1 <= i <= datum.rank:
        raise ConfigError(f"simple reflection index {i} out of range 1..{datum.rank}")
    h = sum((v.coords[k] * datum.cartan_matrix[k][i - 1] for k in range(datum.rank)), Fraction(0))
    coords = list(v.coords)
    coords[i - 1] -= h
    return CoweightVec(tuple(coords))


def act_word(datum: CartanDatum, word: Sequence[int], v: CoweightVec) -> CoweightVec:
    """Act by a word in finite simple reflections, rightmost letter first."""
    for i in reversed(word):
        v = reflect_coweight(datum, i, v)
    return v


def is_dominant(datum: CartanDatum, v: CoweightVec) -> bool:
    return all(h >= 0 for h in _simple_pairings(datum, v))


def dominant_rep(datum: CartanDatum, v: CoweightVec) -> tuple[CoweightVec, tuple[int, ...]]:
    """Dominant representative of the finite Weyl orbit of ``v``.

    Returns ``(vd, word)`` where ``act_word(datum, word, v) == vd``.

    >>> datum, _ = build_cartan("A", 1)
    >>> vd, word = dominant_rep(datum, CoweightVec.from_ints([-1]))
    >>> (str(vd), word)
    ('(1)', (1,))
    """
    word: list[int] = []
    while True:
        pairs = _simple_pairings(datum, v)
        for j, h in enumerate(pairs):
            if h < 0:
                v = reflect_coweight(datum, j + 1, v)
                word.insert(0, j + 1)
                break
        else:
            return v, tuple(word)


def dominance_leq(datum: CartanDatum, v1: CoweightVec, v2: CoweightVec) -> bool:
    """Dominance order: is v2 - v1 a non-negative combination of simple coroots?

    Both arguments must be dominant. In simple-coroot coordinates this is a
    coordinatewise comparison, exact over the rationals.
    """
    for name, v in (("v1", v1), ("v2", v2)):
        if not is_dominant(datum, v):
            raise ConfigError(f"dominance_leq requires dominant input, {name}={v} is not")
    return all(b >= a for a, b in zip(v1.coords, v2.coords, strict=True))
