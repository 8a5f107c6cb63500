"""Precomputed lookup tables for extended-affine-Weyl-group arithmetic.

Everything the arithmetic kernels need is tabulated once per Cartan datum:
the finite Weyl group as signed permutations of the positive roots, its
action matrices on the chosen translation lattice, reduced words, and the
length-zero subgroup.  Translation coordinates are kept in the lattice
basis (simple coroots or fundamental coweights), which makes every table
entry an integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import CartanDatum, RootSystem, _invert_rational
from .errors import ResourceCapError

#: default cap on the size of the tabulated finite Weyl group
W0_CAP = 1_000_000


def _matvec(mat, vec):
    return tuple(sum(row[c] * vec[c] for c in range(len(vec))) for row in mat)


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _compose_perm(perm, gen_perm):
    """Signed-permutation composite a -> perm(gen_perm(a))."""
    out = []
    for c in gen_perm:
        img = perm[abs(c) - 1]
        out.append(img if c > 0 else -img)
    return tuple(out)


@dataclass
class Tables:
    """Immutable-after-construction lookup tables for one Cartan datum."""

    datum: CartanDatum
    rootsystem: RootSystem
    rank: int
    n_pos: int
    # pairing[a][k] = <basis_k, alpha_a>, basis = chosen lattice basis
    pairing: tuple[tuple[int, ...], ...]
    simple_pos: tuple[int, ...]  # index of alpha_i among the positive roots
    theta_pos: int  # index of the highest root
    # finite Weyl group, indexed by BFS discovery order (identity = 0)
    n_w0: int
    uperm: tuple[tuple[int, ...], ...]  # signed action on positive roots, code +-(b+1)
    uact: tuple  # lattice-basis action matrices (tuples of rows)
    rmult: tuple[tuple[int, ...], ...]  # u * s_i (0-based finite generator i)
    inv_tab: tuple[int, ...]
    len_w0: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]  # reduced words, 0-based finite letters
    neg: tuple[tuple[bool, ...], ...]  # neg[u][a]: u^{-1}(alpha_a) < 0
    # affine node data: s_0 = t^{theta^vee} s_theta
    s0_lam: tuple[int, ...]
    s0_u: int
    # lattice <-> coroot-basis conversion (rows = lattice basis in coroot coords)
    lat_to_coroot: tuple[tuple[Fraction, ...], ...]
    # length-zero subgroup
    omega_elements: tuple[tuple[tuple[int, ...], int], ...] = ()
    omega_names: tuple[str, ...] = ()
    omega_node: tuple[int, ...] = ()  # minuscule node per element (0 = identity)
    omega_by_coset: dict = field(default_factory=dict)
    _arrays: dict = field(default_factory=dict, repr=False)

    def to_coroot(self, lam) -> tuple[Fraction, ...]:
        """Coroot-basis coordinates of a lattice vector."""
        return tuple(
            sum((Fraction(lam[i]) * self.lat_to_coroot[i][j] for i in range(self.rank)), Fraction(0))
            for j in range(self.rank)
        )

    def coset_key(self, lam) -> tuple:
        """Class of a lattice vector in X / (coroot lattice), as fractional parts."""
        return tuple(c - (c.numerator // c.denominator) for c in self.to_coroot(lam))

    def as_arrays(self):
        """Numpy views of the integer tables, consumed by the compiled kernel."""
        if not self._arrays:
            import numpy as np

            words_flat = [i for w in self.words for i in w]
            offsets = [0]
            for w in self.words:
                offsets.append(offsets[-1] + len(w))
            self._arrays = {
                "pairing": np.ascontiguousarray(self.pairing, dtype=np.int64).reshape(self.n_pos, self.rank),
                "uperm": np.ascontiguousarray(self.uperm, dtype=np.int64),
                "uact": np.ascontiguousarray(self.uact, dtype=np.int64).reshape(self.n_w0, self.rank, self.rank),
                "rmult": np.ascontiguousarray(self.rmult, dtype=np.int64).reshape(self.n_w0, self.rank),
                "inv_tab": np.ascontiguousarray(self.inv_tab, dtype=np.int64),
                "neg": np.ascontiguousarray(self.neg, dtype=np.uint8),
                "word_letters": np.ascontiguousarray(words_flat or [0], dtype=np.int64),
                "word_offsets": np.ascontiguousarray(offsets, dtype=np.int64),
                "simple_pos": np.ascontiguousarray(self.simple_pos, dtype=np.int64),
                "s0_lam": np.ascontiguousarray(self.s0_lam, dtype=np.int64),
            }
        return self._arrays


def build_tables(datum: CartanDatum, rs: RootSystem, w0_cap: int = W0_CAP) -> Tables:
    rank = datum.rank
    cmat = datum.cartan_matrix
    pos = rs.positive_roots
    n_pos = len(pos)
    index_of = {a: i for i, a in enumerate(pos)}
    simple_pos = tuple(index_of[rs.simple_roots[i]] for i in range(rank))
    theta_pos = index_of[rs.highest_root]

    def signed_index(vec):
        if all(x >= 0 for x in vec):
            return index_of[vec] + 1
        return -(index_of[tuple(-x for x in vec)] + 1)

    def reflect_root(i, a):
        h = sum(a[j] * cmat[i][j] for j in range(rank))
        out = list(a)
        out[i] -= h
        return tuple(out)

    sref_perm = [tuple(signed_index(reflect_root(i, a)) for a in pos) for i in range(rank)]

    # lattice-dependent data
    if datum.lattice == "coroot":
        pairing = tuple(tuple(sum(cmat[k][j] * a[j] for j in range(rank)) for k in range(rank)) for a in pos)
        coroot_in_lat = [tuple(int(k == i) for k in range(rank)) for i in range(rank)]
        lat_to_coroot = tuple(tuple(Fraction(int(i == j)) for j in range(rank)) for i in range(rank))
    else:  # basis = fundamental coweights, so <omega_k^vee, alpha_a> = a_k
        pairing = tuple(tuple(a) for a in pos)
        coroot_in_lat = [tuple(cmat[i]) for i in range(rank)]
        lat_to_coroot = tuple(tuple(row) for row in _invert_rational(cmat))

    # s_i on the lattice basis: basis_c -> basis_c - <basis_c, alpha_i> alpha_i^vee
    s_lat = []
    for i in range(rank):
        rows = [[int(k == c) for c in range(rank)] for k in range(rank)]
        for c in range(rank):
            h = pairing[simple_pos[i]][c]
            if h:
                for k in range(rank):
                    rows[k][c] -= h * coroot_in_lat[i][k]
        s_lat.append(tuple(tuple(r) for r in rows))

    # tabulate W0 by BFS over right multiplication by the simple reflections
    id_perm = tuple(a + 1 for a in range(n_pos))
    uperm = [id_perm]
    uact = [tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))]
    words: list[tuple[int, ...]] = [()]
    lookup = {id_perm: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(rank):
                new_perm = _compose_perm(uperm[u], sref_perm[i])
                if new_perm not in lookup:
                    if len(uperm) >= w0_cap:
                        raise ResourceCapError(
                            f"finite Weyl group of {datum.type_name} exceeds the tabulation cap {w0_cap}"
                        )
                    lookup[new_perm] = len(uperm)
                    uperm.append(new_perm)
                    uact.append(_matmul(uact[u], s_lat[i]))
                    words.append(words[u] + (i,))
                    nxt.append(lookup[new_perm])
        frontier = nxt
    n_w0 = len(uperm)

    rmult = tuple(tuple(lookup[_compose_perm(uperm[u], sref_perm[i])] for i in range(rank)) for u in range(n_w0))
    len_w0 = tuple(sum(1 for c in p if c < 0) for p in uperm)
    inv_tab = []
    for u in range(n_w0):
        v = 0
        for i in reversed(words[u]):
            v = rmult[v][i]
        inv_tab.append(v)
    neg = tuple(tuple(uperm[inv_tab[u]][a] < 0 for a in range(n_pos)) for u in range(n_w0))

    # affine node: s_0 = t^{theta^vee} s_theta
    theta = rs.highest_root
    theta_co = rs.positive_coroots[theta_pos]
    if datum.lattice == "coroot":
        s0_lam = tuple(theta_co)
    else:
        s0_lam = tuple(sum(theta_co[k] * cmat[k][j] for k in range(rank)) for j in range(rank))
    refl_theta = []
    for a in pos:
        h = sum(theta_co[k] * cmat[k][j] * a[j] for k in range(rank) for j in range(rank))
        refl_theta.append(signed_index(tuple(a[j] - h * theta[j] for j in range(rank))))
    s0_u = lookup[tuple(refl_theta)]

    tables = Tables(
        datum=datum,
        rootsystem=rs,
        rank=rank,
        n_pos=n_pos,
        pairing=pairing,
        simple_pos=simple_pos,
        theta_pos=theta_pos,
        n_w0=n_w0,
        uperm=tuple(uperm),
        uact=tuple(uact),
        rmult=rmult,
        inv_tab=tuple(inv_tab),
        len_w0=len_w0,
        words=tuple(words),
        neg=neg,
        s0_lam=s0_lam,
        s0_u=s0_u,
        lat_to_coroot=lat_to_coroot,
    )
    _attach_omega(tables)
    return tables


def _length_formula(t: Tables, lam, u) -> int:
    total = 0
    for a in range(t.n_pos):
        h = sum(lam[k] * t.pairing[a][k] for k in range(t.rank))
        if t.neg[u][a]:
            h -= 1
        total += h if h >= 0 else -h
    return total


def _attach_omega(t: Tables) -> None:
    """Enumerate the length-zero elements and index them by translation coset.

    For t^mu u of length zero, <mu, alpha_i> must be 1 at the simple roots
    inverted by u^{-1} and 0 elsewhere, so mu is zero or a single minuscule
    fundamental coweight; candidates are confirmed with the length formula
    and must exhaust X/Q^vee.
    """
    datum, rank = t.datum, t.rank
    cinv = _invert_rational(datum.cartan_matrix)
    found = []
    for u in range(t.n_w0):
        h = [1 if t.neg[u][t.simple_pos[j]] else 0 for j in range(rank)]
        if datum.lattice == "coweight":
            lam = tuple(h)
        else:
            coords = [sum(Fraction(h[i]) * cinv[i][j] for i in range(rank)) for j in range(rank)]
            if any(c.denominator != 1 for c in coords):
                continue  # mu not in the coroot lattice
            lam = tuple(int(c) for c in coords)
        if _length_formula(t, lam, u) != 0:
            continue
        nonzero = [j for j, v in enumerate(h) if v]
        if len(nonzero) > 1:
            raise AssertionError("length-zero element with non-minuscule translation part")
        node = nonzero[0] + 1 if nonzero else 0
        found.append((node, lam, u))
    found.sort()
    t.omega_elements = tuple((lam, u) for _, lam, u in found)
    t.omega_names = tuple("e" if node == 0 else f"pi{node}" for node, _, _ in found)
    t.omega_node = tuple(node for node, _, _ in found)
    t.omega_by_coset = {t.coset_key(lam): idx for idx, (lam, _) in enumerate(t.omega_elements)}
    expected = _int_det(datum.cartan_matrix) if datum.lattice == "coweight" else 1
    if len(t.omega_elements) != expected or len(t.omega_by_coset) != expected:
        raise AssertionError(
            f"found {len(t.omega_elements)} length-zero elements, expected {expected} for {datum.config_string()}"
        )


def _int_det(mat) -> int:
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return abs(int(det))
