"""Twisted-conjugation combinatorics: reduction to minimal length, Newton
points, Kottwitz classes, straight classes, and the generic class of an
element by two independent routes.

Throughout, "sigma-conjugation" by x maps w to x . w . sigma(x)^{-1}, and a
move is the special case x = s for an affine simple reflection s.  Minimal
length elements are reachable from any w by non-length-increasing moves, so
minimality is certified by exhausting the length-preserving move closure of
w (its "level set") without finding a length-decreasing move.

Straight classes are keyed by their invariant pair (Kottwitz class, Newton
point): for elements on which some twisted power is a pure translation the
pair is a complete key, which avoids materializing infinite conjugacy
classes.  The decision procedure for straightness is the exact pairing test
l(w) = <nu_w, 2 rho>; its equivalence with the defining power condition is
exercised in the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cartan as _cartan
from .cartan import CoweightVec
from .errors import ResourceCapError, VerificationError
from .weyl import EAWGroup, ExtAffElt, GroupAuto, Raw

#: cap on visited elements in level-set searches
SEARCH_CAP = 1_000_000


@dataclass(frozen=True)
class NewtonPoint:
    """Dominant rational coweight attached to a twisted-conjugacy class."""

    nu: CoweightVec

    def is_zero(self) -> bool:
        return self.nu.is_zero()

    def __str__(self) -> str:
        return str(self.nu)


@dataclass(frozen=True)
class KottwitzClass:
    """A coset of the length-zero subgroup modulo {omega . sigma(omega)^{-1}}."""

    members: frozenset[str]

    @property
    def label(self) -> str:
        return "+".join(sorted(self.members, key=lambda n: (n != "e", n)))

    def is_trivial(self) -> bool:
        return "e" in self.members

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class ClassInvariant:
    """(Kottwitz class, Newton point): the complete invariant pair.

    The partial order requires equal Kottwitz classes and dominance of the
    Newton points.
    """

    kappa: KottwitzClass
    nu: NewtonPoint

    def leq(self, other: "ClassInvariant", datum) -> bool:
        return self.kappa == other.kappa and _cartan.dominance_leq(datum, self.nu.nu, other.nu.nu)

    def __str__(self) -> str:
        return f"(kappa={self.kappa}, nu={self.nu})"


@dataclass(frozen=True)
class StraightClass:
    """A straight twisted-conjugacy class, keyed by its invariant.

    ``representative`` is a sigma-straight element of length ``min_length``
    = <nu, 2 rho>.
    """

    invariant: ClassInvariant
    min_length: int
    representative: ExtAffElt

    def __str__(self) -> str:
        return f"StraightClass({self.invariant}, min_length={self.min_length}, rep={self.representative!r})"


# -- invariants ---------------------------------------------------------------


def _affine_realization(sigma: GroupAuto):
    """sigma acting on the apartment: x -> b + g(x) in lattice coordinates."""
    g = sigma.group
    lam_t, u_t = sigma.inner
    p_mat = sigma._derived["lat_mat"]
    mat = _matmul(g.tables.uact[u_t], p_mat)
    return mat, lam_t


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(a, v):
    return tuple(sum(row[c] * v[c] for c in range(len(v))) for row in a)


def _invariant_data(w: ExtAffElt, sigma: GroupAuto):
    g = w.group
    cache = g.caches.setdefault(("invariant", sigma.key()), {})
    hit = cache.get(w.raw)
    if hit is not None:
        return hit
    rank = g.rank
    ident = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    zero = (0,) * rank

    s_mat, s_vec = _affine_realization(sigma)
    h = _matmul(g.tables.uact[w.u], s_mat)
    a = tuple(x + y for x, y in zip(w.lam, _matvec(g.tables.uact[w.u], s_vec)))

    # m = least n with h^n = 1 and sigma^n acting trivially on the apartment;
    # then the m-th twisted power of w is the pure translation by mu below,
    # and every further block contributes the same translation.
    hp, sp_mat, sp_vec = h, s_mat, s_vec
    m = 1
    while hp != ident or sp_mat != ident or sp_vec != zero:
        hp = _matmul(hp, h)
        sp_vec = tuple(x + y for x, y in zip(s_vec, _matvec(s_mat, sp_vec)))
        sp_mat = _matmul(s_mat, sp_mat)
        m += 1
        if m > 100_000:
            raise AssertionError("twisted power order did not close; tables corrupt?")
    mu = zero
    cur = a
    for _ in range(m):
        mu = tuple(x + y for x, y in zip(mu, cur))
        cur = _matvec(h, cur)

    dom, _ = _cartan.dominant_rep(g.datum, CoweightVec(g.tables.to_coroot(mu)))
    nu = NewtonPoint(dom.scale(Fraction(1, m)))
    kappa = _kottwitz_of(w, sigma)
    result = (ClassInvariant(kappa, nu), m)
    cache[w.raw] = result
    return result


def class_invariant(w: ExtAffElt, sigma: GroupAuto) -> ClassInvariant:
    """Invariant pair (kappa, nu) of the twisted-conjugacy class of w.

    nu is the dominant representative of mu/m where the m-th twisted power
    of w is the translation t^mu; kappa is the class of the length-zero
    component of w in the twisted coinvariants of Omega.
    """
    return _invariant_data(w, sigma)[0]


def newton_exponent(w: ExtAffElt, sigma: GroupAuto) -> int:
    """The exponent m used by :func:`class_invariant`; the m-th twisted power
    of w is a pure translation."""
    return _invariant_data(w, sigma)[1]


def _omega_cosets(g: EAWGroup, sigma: GroupAuto) -> list[frozenset[str]]:
    """Partition of Omega into cosets modulo {omega . sigma(omega)^{-1}}."""
    key = ("omega_cosets", sigma.key())
    if key in g.caches:
        return g.caches[key]
    raws = list(g.tables.omega_elements)
    names = g.tables.omega_names
    index = {raw: i for i, raw in enumerate(raws)}
    kern = g.kernel
    gens = set()
    for raw in raws:
        img = sigma._apply_raw(raw)
        gens.add(index[kern.mul(*raw, *kern.inv(*img))])
    subgroup = {index[g._id_raw]}
    changed = True
    while changed:
        changed = False
        for a in list(subgroup):
            for b in gens:
                c = index[kern.mul(*raws[a], *raws[b])]
                if c not in subgroup:
                    subgroup.add(c)
                    changed = True
    cosets = []
    seen: set[int] = set()
    for i, raw in enumerate(raws):
        if i in seen:
            continue
        coset = {index[kern.mul(*raw, *raws[j])] for j in subgroup}
        seen |= coset
        cosets.append(frozenset(names[j] for j in coset))
    g.caches[key] = cosets
    return cosets


def _kottwitz_of(w: ExtAffElt, sigma: GroupAuto) -> KottwitzClass:
    g = w.group
    name = g.tables.omega_names[g.omega_index_of(w)]
    for coset in _omega_cosets(g, sigma):
        if name in coset:
            return KottwitzClass(coset)
    raise AssertionError(f"Omega element {name} missing from coset partition")


# -- reduction to minimal length ---------------------------------------------


def _conj_move(g: EAWGroup, raw: Raw, i: int, sigma_perm) -> Raw:
    """The move raw -> s_i . raw . sigma(s_i)."""
    kern = g.kernel
    return kern.mul(*kern.mul(*g._gens[i], *raw), *g._gens[sigma_perm[i]])


def _level_search(g, raw, sigma, tie_break="lex", cap=SEARCH_CAP):
    """Explore the length-preserving move closure of ``raw``.

    Returns (descent, parents): ``descent`` is (y_raw, i) for the first
    discovered y in the closure with l(s_i y sigma(s_i)) < l(y), or None if
    the whole closure admits no decreasing move (certifying minimality);
    ``parents`` maps visited raws to (previous raw, move letter) for path
    reconstruction.
    """
    kern = g.kernel
    perm = sigma.affine_perm
    letters = list(range(g.rank + 1))
    if tie_break == "revlex":
        letters.reverse()
    elif tie_break != "lex":
        raise ValueError(f"unknown tie_break {tie_break!r}")
    base_len = kern.length(*raw)
    parents: dict[Raw, tuple[Raw, int] | None] = {raw: None}
    queue = [raw]
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for i in letters:
            nxt = _conj_move(g, cur, i, perm)
            dlen = kern.length(*nxt)
            if dlen < base_len:
                return (cur, i), parents
            if dlen == base_len and nxt not in parents:
                parents[nxt] = (cur, i)
                queue.append(nxt)
                if len(parents) > cap:
                    raise ResourceCapError(f"level-set search exceeded cap {cap}")
    return None, parents


def _path_to(parents, raw) -> list[int]:
    path = []
    while parents[raw] is not None:
        raw, letter = parents[raw]
        path.append(letter)
    path.reverse()
    return path


def reduce_min(w: ExtAffElt, sigma: GroupAuto, tie_break: str = "lex") -> tuple[ExtAffElt, list[int]]:
    """A minimal-length element of the twisted-conjugacy class of w, with the
    sequence of conjugation moves (simple reflection indices) realizing it.

    Searches the level set breadth-first and follows any strictly decreasing
    move; when an entire level set admits none, the current element is
    minimal.  Moves never increase length.
    """
    g = w.group
    raw = w.raw
    path: list[int] = []
    while True:
        descent, parents = _level_search(g, raw, sigma, tie_break)
        if descent is None:
            return g.element(*raw), path
        y, i = descent
        path.extend(_path_to(parents, y))
        path.append(i)
        raw = _conj_move(g, y, i, sigma.affine_perm)


def is_straight(w: ExtAffElt, sigma: GroupAuto) -> bool:
    """Exact test l(w) = <nu_w, 2 rho>, equivalent to all twisted powers
    having additive length."""
    inv = class_invariant(w, sigma)
    return Fraction(w.length()) == _cartan.pair(w.group.datum, inv.nu.nu, w.group.rootsystem.two_rho)


def min_length_of(invariant: ClassInvariant, datum, rootsystem) -> int:
    """<nu, 2 rho>, the length of minimal elements of the straight class."""
    val = _cartan.pair(datum, invariant.nu.nu, rootsystem.two_rho)
    if val.denominator != 1:
        raise VerificationError(f"<nu, 2 rho> = {val} is not an integer", payload=invariant)
    return int(val)


# -- straight classes ----------------------------------------------------------


def straight_classes_upto(max_len: int, sigma: GroupAuto) -> list[StraightClass]:
    """One straight class per invariant among all straight elements of length
    <= max_len; complete for classes of minimal length <= max_len."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    g = sigma.group
    cache = g.caches.setdefault(("straight_atlas", sigma.key()), {"max_len": -1, "classes": {}})
    if cache["max_len"] < max_len:
        classes: dict[ClassInvariant, StraightClass] = {}
        for w in g.elements_upto(max_len):
            if is_straight(w, sigma):
                inv = class_invariant(w, sigma)
                if inv not in classes:
                    classes[inv] = StraightClass(inv, w.length(), w)
        cache["max_len"] = max_len
        cache["classes"] = classes
    return sorted(
        (c for c in cache["classes"].values() if c.min_length <= max_len),
        key=lambda c: (c.min_length, c.invariant.kappa.label, c.invariant.nu.nu.coords),
    )


def _straight_class_of_invariant(inv: ClassInvariant, sigma: GroupAuto) -> StraightClass:
    g = sigma.group
    target = min_length_of(inv, g.datum, g.rootsystem)
    for cls in straight_classes_upto(target, sigma):
        if cls.invariant == inv:
            return cls
    raise VerificationError(
        f"no straight element of length {target} realizes invariant {inv}", payload=inv
    )


def preceq(straight: StraightClass, w: ExtAffElt, sigma: GroupAuto) -> bool:
    """Does some minimal-length element of the straight class lie below w in
    Bruhat order?  Minimal elements of a straight class are exactly its
    straight members, recognized by invariant equality."""
    g = w.group
    for x in g.bruhat_interval(w):
        if (
            x.length() == straight.min_length
            and is_straight(x, sigma)
            and class_invariant(x, sigma) == straight.invariant
        ):
            return True
    return False


# -- the generic class, two routes ----------------------------------------------


def generic_class(w: ExtAffElt, sigma: GroupAuto, tie_break: str = "lex") -> StraightClass:
    """The straight class governing the generic twisted-conjugacy class of the
    double coset of w, by length reduction.

    If w is minimal in its class the answer is the straight class with the
    invariant of w; otherwise some y in the level set of w admits a
    decreasing move s y sigma(s) < y, and the recursion continues on the
    shorter element s y.  Each step strictly decreases length.
    """
    g = w.group
    raw = w.raw
    while True:
        descent, _ = _level_search(g, raw, sigma, tie_break)
        if descent is None:
            inv = class_invariant(g.element(*raw), sigma)
            return _straight_class_of_invariant(inv, sigma)
        y, i = descent
        raw = g.kernel.mul(*g._gens[i], *y)


def generic_class_bruhat(w: ExtAffElt, sigma: GroupAuto) -> StraightClass:
    """Independent oracle for :func:`generic_class` via the Bruhat interval:
    the invariants of {x : x <= w} contain a unique maximum.

    Raises VerificationError if no unique maximum exists, which would
    contradict the guaranteed structure and signals an implementation bug.
    """
    g = w.group
    invariants = {class_invariant(x, sigma) for x in g.bruhat_interval(w)}
    maxima = [
        inv
        for inv in invariants
        if all(other.leq(inv, g.datum) for other in invariants if other.kappa == inv.kappa)
    ]
    if len(maxima) != 1:
        raise VerificationError(
            f"Bruhat interval of {w!r} has {len(maxima)} maximal invariants, expected exactly 1",
            payload=(w, sorted(str(i) for i in maxima)),
        )
    return _straight_class_of_invariant(maxima[0], sigma)
