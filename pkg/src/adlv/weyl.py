"""The extended affine Weyl group: elements, length, words, Bruhat order,
length-preserving automorphisms and twisted powers.

An element is canonically a pair (lam, u): the translation part t^lam with
integer coordinates in the chosen lattice basis, and a finite Weyl part u.
Words are derived views.  The affine node 0 is s_0 = t^{theta^vee} s_theta
for the highest root theta, so the identification of reduced words with
elements matches the standard base alcove.

Element grammar (CLI and fixtures): whitespace-separated tokens multiplied
left to right; ``e``, ``s<i>`` for affine simple reflections (i in 0..rank),
``pi<k>`` for length-zero generators, ``t[c1,...,cr]`` for the translation
by an integer vector in the lattice basis.

>>> g = EAWGroup.from_config("type=A1;lattice=coroot")
>>> g.parse("s0 s1").length()
2
>>> g.parse("t[1]") == g.parse("s0 s1")
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Iterator, Sequence

from . import cartan as _cartan
from ._backend import make_kernel
from ._tables import W0_CAP, Tables, build_tables
from .cartan import CartanDatum, CoweightVec, RootSystem
from .errors import ConfigError

Raw = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class ExtAffElt:
    """Element t^lam u of the extended affine Weyl group."""

    group: "EAWGroup" = field(compare=False, repr=False)
    lam: tuple[int, ...] = ()
    u: int = 0

    @property
    def raw(self) -> Raw:
        return (self.lam, self.u)

    def length(self) -> int:
        return self.group.length(self)

    def inverse(self) -> "ExtAffElt":
        return self.group.inv(self)

    def __mul__(self, other: "ExtAffElt") -> "ExtAffElt":
        return self.group.mul(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtAffElt)
            and self.group is other.group
            and self.lam == other.lam
            and self.u == other.u
        )

    def __hash__(self) -> int:
        return hash((self.lam, self.u))

    @property
    def is_identity(self) -> bool:
        return self.u == 0 and not any(self.lam)

    @property
    def translation(self) -> CoweightVec:
        """Translation part as an exact coweight in simple-coroot coordinates."""
        return CoweightVec(self.group.tables.to_coroot(self.lam))

    def omega_name(self) -> str:
        return self.group.omega_name_of(self)

    def __repr__(self) -> str:
        return f"<{self.group.canonical_str(self)}>"


def _perm_matrix(dperm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    rank = len(dperm)
    return tuple(tuple(int(k == dperm[c]) for c in range(rank)) for k in range(rank))


@dataclass(frozen=True)
class GroupAuto:
    """Length-preserving automorphism: a diagram permutation, optionally
    composed with conjugation by a length-zero element.

    ``dperm`` maps 0-based finite node i to its image; ``inner`` is the raw
    pair of the conjugating length-zero element (identity pair if absent).
    The induced map is w -> tau . delta(w) . tau^{-1}.
    """

    group: "EAWGroup" = field(compare=False, repr=False)
    dperm: tuple[int, ...] = ()
    inner: Raw = ((), 0)
    _derived: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        g = self.group
        cmat = g.datum.cartan_matrix
        rank = g.datum.rank
        if sorted(self.dperm) != list(range(rank)):
            raise ConfigError(f"diagram map {self.dperm} is not a permutation of 0..{rank - 1}")
        for i in range(rank):
            for j in range(rank):
                if cmat[i][j] != cmat[self.dperm[i]][self.dperm[j]]:
                    raise ConfigError(f"diagram map {self.dperm} does not preserve the Cartan matrix")
        if g.kernel.length(*self.inner) != 0:
            raise ConfigError("inner part of an automorphism must have length zero")
        d = self._derived
        d["lat_mat"] = _perm_matrix(self.dperm)
        kern, tab = g.kernel, g.tables
        w0_map = []
        for u in range(tab.n_w0):
            v = 0
            for i in tab.words[u]:
                v = tab.rmult[v][self.dperm[i]]
            w0_map.append(v)
        d["w0_map"] = tuple(w0_map)
        d["inner_inv"] = kern.inv(*self.inner)
        # the induced permutation of the affine simple reflections
        perm = []
        for i in range(rank + 1):
            img = self._apply_raw(g._gens[i])
            for j in range(rank + 1):
                if img == g._gens[j]:
                    perm.append(j)
                    break
            else:
                raise AssertionError("automorphism does not permute the affine simple reflections")
        d["affine_perm"] = tuple(perm)

    # -- structure ---------------------------------------------------------

    @property
    def is_identity(self) -> bool:
        return self.dperm == tuple(range(len(self.dperm))) and self.inner == self.group._id_raw

    @property
    def affine_perm(self) -> tuple[int, ...]:
        return self._derived["affine_perm"]

    def diagram_order(self) -> int:
        n, p = 1, self.dperm
        cur = p
        ident = tuple(range(len(p)))
        while cur != ident:
            cur = tuple(p[c] for c in cur)
            n += 1
        return n

    def compose(self, other: "GroupAuto") -> "GroupAuto":
        """Composite self after other."""
        if self.group is not other.group:
            raise ConfigError("cannot compose automorphisms of different groups")
        dperm = tuple(self.dperm[other.dperm[i]] for i in range(len(self.dperm)))
        inner = self.group.kernel.mul(*self.inner, *self._apply_diagram(other.inner))
        return GroupAuto(self.group, dperm, inner)

    def order(self, cap: int = 10_000) -> int:
        return len(self.cycle(cap))

    def cycle(self, cap: int = 10_000) -> list["GroupAuto"]:
        """[identity, self, self^2, ...] up to (excluding) the first identity power."""
        key = "cycle"
        if key not in self._derived:
            powers = [self.group.auto()]
            cur = self
            while not cur.is_identity:
                powers.append(cur)
                cur = cur.compose(self)
                if len(powers) > cap:
                    raise AssertionError("automorphism order exceeds cap; inner data corrupt?")
            self._derived[key] = powers
        return self._derived[key]

    # -- action ------------------------------------------------------------

    def _apply_diagram(self, raw: Raw) -> Raw:
        lam, u = raw
        mat = self._derived["lat_mat"]
        rank = len(lam)
        lam2 = tuple(sum(mat[k][c] * lam[c] for c in range(rank)) for k in range(rank))
        return (lam2, self._derived["w0_map"][u])

    def _apply_raw(self, raw: Raw) -> Raw:
        out = self._apply_diagram(raw)
        if self.inner != self.group._id_raw:
            kern = self.group.kernel
            out = kern.mul(*kern.mul(*self.inner, *out), *self._derived["inner_inv"])
        return out

    def __call__(self, w: ExtAffElt) -> ExtAffElt:
        return self.group.element(*self._apply_raw(w.raw))

    def key(self) -> tuple:
        return (self.dperm, self.inner)

    def describe(self) -> str:
        """Canonical string accepted by :func:`parse_sigma`."""
        parts = []
        if self.inner != self.group._id_raw:
            parts.append(f"ad:{self.group.omega_name_of(self.group.element(*self.inner))}")
        if self.dperm != tuple(range(len(self.dperm))):
            parts.append("perm[" + ",".join(str(i + 1) for i in self.dperm) + "]")
        return "*".join(parts) if parts else "id"

    def __repr__(self) -> str:
        return f"<auto {self.describe()}>"


class EAWGroup:
    """Extended affine Weyl group of an irreducible Cartan datum.

    All elements are immutable; all operations are pure.  Per-group caches
    (Bruhat intervals, enumeration levels) are plain dicts and should not be
    shared across threads without external locking.
    """

    def __init__(
        self,
        datum: CartanDatum,
        rootsystem: RootSystem,
        *,
        backend: str = "auto",
        w0_cap: int = W0_CAP,
    ):
        self.datum = datum
        self.rootsystem = rootsystem
        self.tables: Tables = build_tables(datum, rootsystem, w0_cap=w0_cap)
        self.kernel = make_kernel(self.tables, backend)
        self.backend = "pure" if type(self.kernel).__module__.endswith("_kernel_py") else "compiled"
        self.rank = datum.rank
        self._id_raw: Raw = ((0,) * self.rank, 0)
        gens = [(self.tables.s0_lam, self.tables.s0_u)]
        gens += [((0,) * self.rank, self.tables.rmult[0][i]) for i in range(self.rank)]
        self._gens: list[Raw] = gens
        self._interval_cache: dict[Raw, frozenset[Raw]] = {}
        self._levels: list[list[Raw]] = []
        self.caches: dict = {}  # scratch space for higher layers, keyed by purpose

    @classmethod
    def from_config(cls, config: str, **kwargs) -> "EAWGroup":
        datum, rs = _cartan.parse_config(config)
        return cls(datum, rs, **kwargs)

    def __repr__(self) -> str:
        return f"EAWGroup({self.datum.config_string()}, backend={self.backend})"

    # -- element construction ----------------------------------------------

    def element(self, lam: Sequence[int], u: int = 0) -> ExtAffElt:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.rank:
            raise ConfigError(f"translation vector {lam} has wrong rank (expected {self.rank})")
        if not 0 <= u < self.tables.n_w0:
            raise ConfigError(f"finite Weyl index {u} out of range")
        return ExtAffElt(self, lam, u)

    @property
    def identity(self) -> ExtAffElt:
        return ExtAffElt(self, *self._id_raw)

    def simple_refl(self, i: int) -> ExtAffElt:
        """Affine simple reflection s_i, i in 0..rank (0 = affine node)."""
        if not 0 <= i <= self.rank:
            raise ConfigError(f"simple reflection index {i} out of range 0..{self.rank}")
        return ExtAffElt(self, *self._gens[i])

    def translation(self, coords: Sequence[int]) -> ExtAffElt:
        return self.element(coords, 0)

    def omega_elements(self) -> list[ExtAffElt]:
        return [ExtAffElt(self, *raw) for raw in self.tables.omega_elements]

    def omega_gen(self, k: int) -> ExtAffElt:
        """Length-zero generator named pi<k>; k is a minuscule node index."""
        for idx, node in enumerate(self.tables.omega_node):
            if node == k:
                return ExtAffElt(self, *self.tables.omega_elements[idx])
        valid = [n for n in self.tables.omega_node if n]
        raise ConfigError(f"no length-zero generator pi{k}; valid indices: {valid or 'none (trivial Omega)'}")

    # -- basic arithmetic ----------------------------------------------------

    def mul(self, w1: ExtAffElt, w2: ExtAffElt) -> ExtAffElt:
        return ExtAffElt(self, *self.kernel.mul(w1.lam, w1.u, w2.lam, w2.u))

    def inv(self, w: ExtAffElt) -> ExtAffElt:
        return ExtAffElt(self, *self.kernel.inv(w.lam, w.u))

    def length(self, w: ExtAffElt) -> int:
        return self.kernel.length(w.lam, w.u)

    def prod(self, ws: Iterable[ExtAffElt]) -> ExtAffElt:
        return reduce(self.mul, ws, self.identity)

    # -- decomposition W_aff x Omega -----------------------------------------

    def omega_index_of(self, w: ExtAffElt) -> int:
        return self.tables.omega_by_coset[self.tables.coset_key(w.lam)]

    def omega_of(self, w: ExtAffElt) -> ExtAffElt:
        """Length-zero component of w = x . omega(w) with x in W_aff."""
        return ExtAffElt(self, *self.tables.omega_elements[self.omega_index_of(w)])

    def omega_name_of(self, w: ExtAffElt) -> str:
        if self.kernel.length(*w.raw) != 0:
            raise ConfigError(f"{w!r} has positive length, not in Omega")
        return self.tables.omega_names[self.omega_index_of(w)]

    def waff_part(self, w: ExtAffElt) -> ExtAffElt:
        return self.mul(w, self.inv(self.omega_of(w)))

    # -- words ---------------------------------------------------------------

    def as_word(self, w: ExtAffElt) -> tuple[tuple[int, ...], str]:
        """A reduced word for the W_aff part (greedy left descents) plus the
        name of the length-zero component; ``from_word`` inverts this."""
        om_idx = self.omega_index_of(w)
        raw = self.kernel.mul(*w.raw, *self.kernel.inv(*self.tables.omega_elements[om_idx]))
        kern = self.kernel
        letters = []
        while raw != self._id_raw:
            for i in range(self.rank + 1):
                if not kern.left_ascent(i, *raw):
                    letters.append(i)
                    raw = kern.mul(*self._gens[i], *raw)
                    break
            else:
                raise AssertionError(f"no descent found for nonidentity {raw}")
        return tuple(letters), self.tables.omega_names[om_idx]

    def from_word(self, word: Sequence[int], omega: str = "e") -> ExtAffElt:
        """Evaluate a (not necessarily reduced) word, then append an
        Omega element given by name."""
        raw = self._id_raw
        for i in word:
            if not 0 <= i <= self.rank:
                raise ConfigError(f"letter {i} out of range 0..{self.rank}")
            raw = self.kernel.mul(*raw, *self._gens[i])
        if omega != "e":
            try:
                idx = self.tables.omega_names.index(omega)
            except ValueError:
                raise ConfigError(f"unknown Omega element {omega!r}") from None
            raw = self.kernel.mul(*raw, *self.tables.omega_elements[idx])
        return ExtAffElt(self, *raw)

    def reduced_words(self, w: ExtAffElt) -> Iterator[tuple[int, ...]]:
        """All reduced words of the W_aff part (exponential; small lengths only)."""
        kern = self.kernel

        def rec(raw):
            if raw == self._id_raw:
                yield ()
                return
            for i in range(self.rank + 1):
                if not kern.left_ascent(i, *raw):
                    for rest in rec(kern.mul(*self._gens[i], *raw)):
                        yield (i,) + rest

        yield from rec(self.waff_part(w).raw)

    # -- parsing / printing ----------------------------------------------------

    _TOKEN = re.compile(r"^(e|s(\d+)|pi(\d+)|t\[(-?\d+(?:,-?\d+)*)\])$")

    def parse(self, text: str) -> ExtAffElt:
        """Parse the element grammar; tokens multiply left to right.

        >>> g = EAWGroup.from_config("type=A1;lattice=coweight")
        >>> g.parse("t[1] s1") == g.omega_gen(1)
        True
        """
        raw = self._id_raw
        for token in text.split():
            m = self._TOKEN.match(token)
            if not m:
                raise ConfigError(f"cannot parse token {token!r}")
            if token == "e":
                continue
            if m.group(2) is not None:
                factor = self.simple_refl(int(m.group(2)))
            elif m.group(3) is not None:
                factor = self.omega_gen(int(m.group(3)))
            else:
                coords = [int(c) for c in m.group(4).split(",")]
                factor = self.translation(coords)
            raw = self.kernel.mul(*raw, *factor.raw)
        return ExtAffElt(self, *raw)

    def canonical_str(self, w: ExtAffElt) -> str:
        word, om = self.as_word(w)
        parts = [f"s{i}" for i in word]
        if om != "e":
            parts.append(om)
        return " ".join(parts) if parts else "e"

    # -- automorphisms -----------------------------------------------------------

    def auto(self, dperm=None, inner: ExtAffElt | None = None) -> GroupAuto:
        """Build an automorphism from a diagram permutation (mapping of 1-based
        node indices, or None for identity) and an optional inner part."""
        if dperm is None:
            perm = tuple(range(self.rank))
        elif isinstance(dperm, dict):
            perm = tuple(dperm.get(i + 1, i + 1) - 1 for i in range(self.rank))
        else:
            perm = tuple(int(x) - 1 for x in dperm)
        raw = inner.raw if inner is not None else self._id_raw
        return GroupAuto(self, perm, raw)

    def parse_sigma(self, text: str) -> GroupAuto:
        """Parse an automorphism description.

        Factors are composed with ``*`` read as "apply the right factor
        first": ``id``, ``swap(i,j)``, ``perm[j1,...,jr]`` (images of nodes
        1..r), ``ad:pi<k>`` / ``ad:e``.
        """
        text = text.strip()
        if not text:
            raise ConfigError("empty automorphism description")
        factors = []
        for part in text.split("*"):
            part = part.strip()
            if part == "id":
                factors.append(self.auto())
            elif m := re.fullmatch(r"swap\((\d+),(\d+)\)", part):
                i, j = int(m.group(1)), int(m.group(2))
                factors.append(self.auto({i: j, j: i}))
            elif m := re.fullmatch(r"perm\[(\d+(?:,\d+)*)\]", part):
                images = [int(x) for x in m.group(1).split(",")]
                if len(images) != self.rank:
                    raise ConfigError(f"perm[...] must list {self.rank} images")
                factors.append(self.auto(images))
            elif m := re.fullmatch(r"ad:(e|pi\d+)", part):
                name = m.group(1)
                elt = self.identity if name == "e" else self.omega_gen(int(name[2:]))
                factors.append(self.auto(inner=elt))
            else:
                raise ConfigError(f"cannot parse automorphism factor {part!r}")
        return reduce(lambda a, b: a.compose(b), factors)

    # -- twisted powers ------------------------------------------------------------

    def twisted_power(self, w: ExtAffElt, n: int, sigma: GroupAuto) -> ExtAffElt:
        """w . sigma(w) ... sigma^{n-1}(w)."""
        if n < 1:
            raise ConfigError(f"twisted power needs n >= 1, got {n}")
        cycle = sigma.cycle()
        period = len(cycle)
        images = [cycle[k]._apply_raw(w.raw) for k in range(min(period, n))]
        raw = w.raw
        for k in range(1, n):
            raw = self.kernel.mul(*raw, *images[k % period])
        return ExtAffElt(self, *raw)

    # -- Bruhat order ---------------------------------------------------------------

    def _interval_raw(self, w: ExtAffElt) -> frozenset[Raw]:
        cached = self._interval_cache.get(w.raw)
        if cached is not None:
            return cached
        word, om = self.as_word(w)
        om_raw = self.tables.omega_elements[self.tables.omega_names.index(om)]
        n = len(word)
        evals: list[Raw] = [self._id_raw] * (1 << n)
        kern = self.kernel
        gens = self._gens
        for mask in range(1, 1 << n):
            j = mask.bit_length() - 1
            evals[mask] = kern.mul(*evals[mask ^ (1 << j)], *gens[word[j]])
        if om == "e":
            out = frozenset(evals)
        else:
            out = frozenset(kern.mul(*r, *om_raw) for r in evals)
        self._interval_cache[w.raw] = out
        return out

    def bruhat_interval(self, w: ExtAffElt) -> frozenset[ExtAffElt]:
        """All x <= w: subwords of one reduced word, re-multiplied by omega(w)."""
        return frozenset(ExtAffElt(self, *raw) for raw in self._interval_raw(w))

    def bruhat_leq(self, w1: ExtAffElt, w2: ExtAffElt) -> bool:
        """Subword characterization against one reduced word of w2."""
        return w1.raw in self._interval_raw(w2)

    # -- enumeration -------------------------------------------------------------------

    def _levels_upto(self, max_len: int) -> list[list[Raw]]:
        if not self._levels:
            self._levels.append(sorted(self.tables.omega_elements))
        kern = self.kernel
        gens = self._gens
        while len(self._levels) <= max_len:
            nxt = set()
            for raw in self._levels[-1]:
                for i in range(self.rank + 1):
                    if kern.right_ascent(*raw, i):
                        nxt.add(kern.mul(*raw, *gens[i]))
            self._levels.append(sorted(nxt))
        return self._levels[: max_len + 1]

    def elements_of_length(self, n: int) -> list[ExtAffElt]:
        return [ExtAffElt(self, *raw) for raw in self._levels_upto(n)[n]]

    def elements_upto(self, max_len: int) -> Iterator[ExtAffElt]:
        """Every element of length <= max_len exactly once, by length then
        by canonical (lam, u) key; the order is deterministic across runs."""
        for level in self._levels_upto(max_len):
            for raw in level:
                yield ExtAffElt(self, *raw)
