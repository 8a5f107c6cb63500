"""The 0-Hecke algebra of the extended affine Weyl group and its twisted
cocenter: signed basis products and the image of a basis element.

The algebra has basis {t_w} with t_w t_{w'} = t_{w w'} when lengths add and
t_s^2 = -t_s; consequently t_x t_y = (-1)^{l(x)+l(y)-l(x*y)} t_{x*y} with *
the Demazure product.  In the twisted cocenter the image of t_w is, up to
sign, the basis element of a class of minimal-length elements; the sign and
a representative are computed by the same length reduction that drives
:func:`adlv.classes.generic_class`, flipping the sign once per reduction
step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import ClassInvariant, _level_search, class_invariant
from .demazure import dem_prod
from .errors import ResourceCapError
from .weyl import ExtAffElt, GroupAuto


def t_product(x: ExtAffElt, y: ExtAffElt) -> tuple[int, ExtAffElt]:
    """Product t_x t_y = sign . t_z in the 0-Hecke algebra.

    z is the Demazure product and the sign is (-1)^{l(x)+l(y)-l(z)}; the
    exponent counts the letters absorbed by the fold, each contributing one
    factor of t_s^2 = -t_s.
    """
    z = dem_prod(x, y)
    sign = -1 if (x.length() + y.length() - z.length()) % 2 else 1
    return sign, z


@dataclass(frozen=True)
class CocenterImage:
    """Image of a basis element t_w in the twisted cocenter: a sign and a
    minimal-length representative of the receiving basis class."""

    sign: int
    rep: ExtAffElt
    class_invariant: ClassInvariant

    def __str__(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"{s}t[{self.rep!r}]"


def tilde_class_closure(w: ExtAffElt, sigma: GroupAuto, cap: int = 100_000) -> frozenset[ExtAffElt]:
    """Closure of w under length-preserving conjugation moves and length-zero
    twists x -> tau . x . sigma(tau)^{-1}.

    For w of minimal length in its twisted-conjugacy class this is the full
    equivalence class indexing its cocenter basis element.  Spot-check
    equipment: quadratic in the class size, capped at ``cap`` visited
    elements.
    """
    g = w.group
    kern = g.kernel
    perm = sigma.affine_perm
    base = kern.length(*w.raw)
    twists = [(raw, kern.inv(*sigma._apply_raw(raw))) for raw in g.tables.omega_elements]
    seen = {w.raw}
    queue = [w.raw]
    while queue:
        cur = queue.pop()
        images = [
            kern.mul(*kern.mul(*g._gens[i], *cur), *g._gens[perm[i]]) for i in range(g.rank + 1)
        ] + [kern.mul(*kern.mul(*traw, *cur), *tinv) for traw, tinv in twists]
        for nxt in images:
            if nxt not in seen and kern.length(*nxt) == base:
                seen.add(nxt)
                queue.append(nxt)
                if len(seen) > cap:
                    raise ResourceCapError(f"tilde-class closure exceeded cap {cap}")
    return frozenset(g.element(*raw) for raw in seen)


def cocenter_image(w: ExtAffElt, sigma: GroupAuto, tie_break: str = "lex") -> CocenterImage:
    """Resolve t_w in the twisted cocenter.

    Mirrors the generic-class recursion: while the current element is not of
    minimal length in its twisted-conjugacy class, pick y in its level set
    with a decreasing move s y sigma(s) < y; then t_y rewrites to -t_{s y},
    flipping the accumulated sign.  The representative reached is minimal in
    its own class, and its invariant equals the generic invariant of w.
    """
    g = w.group
    raw = w.raw
    sign = 1
    while True:
        descent, _ = _level_search(g, raw, sigma, tie_break)
        if descent is None:
            rep = g.element(*raw)
            return CocenterImage(sign, rep, class_invariant(rep, sigma))
        y, i = descent
        raw = g.kernel.mul(*g._gens[i], *y)
        sign = -sign
