"""The four group classes studied here: SP, CH, CA and F, plus conjugate
rank.

Each predicate follows its literal definition over noncentral elements,
restricted to class representatives where conjugation equivariance makes
that sound.  The SP test is computed twice (primitivity of N(G) and the
centralizer-order pair scan) and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classgraph import is_primitive, n_set
from .errors import CapExceeded, InternalCheckError
from .groups import FiniteGroup

F_SCAN_CAP = 10_000


@dataclass(frozen=True)
class PredicateReport:
    """Flags plus a falsifying witness for each flag that is False.

    sp_witness is a pair of class sizes; ch/f witnesses are element
    pairs; the ca witness is a single element with nonabelian
    centralizer.  f is None when the group exceeded the F scan cap.
    """

    sp: bool
    ch: bool
    ca: bool
    f: bool | None
    rank: int
    sp_witness: tuple[int, int] | None = None
    ch_witness: tuple | None = None
    ca_witness: tuple | None = None
    f_witness: tuple | None = None


def rank(g: FiniteGroup) -> int:
    """Conjugate rank |N(G)|."""
    return len(n_set(g))


def is_sp(g: FiniteGroup):
    """(flag, witness): N(G) primitive, cross-checked against the
    divides-implies-equal scan over centralizer orders."""
    sizes = n_set(g)
    order = g.order()
    witness = None
    for i, a in enumerate(sizes):
        for b in sizes[i + 1:]:
            if b % a == 0:
                witness = (a, b)
                break
        if witness:
            break
    # Independent route: |C(x)| divides |C(y)| => equal, over class sizes.
    cents = sorted((order // s for s in sizes), reverse=True)
    pair_ok = not any(cents[i] % cents[j] == 0 and cents[i] != cents[j]
                      for i in range(len(cents)) for j in range(i + 1, len(cents)))
    primitive = is_primitive(sizes) if sizes else True
    if primitive != pair_ok:
        raise InternalCheckError(
            f"SP disagreement on N={sizes}: primitive={primitive}, pairs={pair_ok}")
    return primitive, witness


def _noncentral_reps(g: FiniteGroup):
    return [c for c in g.conjugacy_classes() if c.size > 1]


def is_ch(g: FiniteGroup):
    """(flag, witness): commuting noncentral elements have centralizers of
    equal order.  x runs over class representatives (sound by conjugation
    equivariance), y over the centralizer of x."""
    g.conjugacy_classes()
    for cls in _noncentral_reps(g):
        x = cls.representative
        cx = g.centralizer(x)
        for y in g._order_like(cx.members):
            ysize = g.class_size(y)
            if ysize > 1 and ysize != cls.size:
                return False, (x, y)
    return True, None


def is_ca(g: FiniteGroup):
    """(flag, witness): centralizers of noncentral elements are abelian."""
    for cls in _noncentral_reps(g):
        x = cls.representative
        if not g.centralizer(x).is_abelian():
            return False, (x,)
    return True, None


def is_f(g: FiniteGroup, cap: int = F_SCAN_CAP):
    """(flag, witness): containment between noncentral centralizers
    implies equality.  Quadratic scan with a divisibility pre-filter;
    x over class representatives is enough because a violating pair
    conjugates to one whose small side is a representative."""
    n = g.order()
    if n > cap:
        raise CapExceeded(f"F-scan on group of order {n}", cap)
    elements = g.elements()
    g.conjugacy_classes()
    class_of = g._class_of
    classes = g.conjugacy_classes()
    size_by_idx = [classes[class_of[e]].size for e in elements]
    mul = g.rep.mul
    for cls in _noncentral_reps(g):
        x = cls.representative
        cx_order = n // cls.size
        cx_members = None
        for pos, y in enumerate(elements):
            ysize = size_by_idx[pos]
            if ysize == 1 or ysize == cls.size:
                continue
            cy_order = n // ysize
            if cy_order % cx_order:
                continue
            if cx_members is None:
                cx_members = g.centralizer(x).members
            if all(mul(z, y) == mul(y, z) for z in cx_members):
                return False, (x, y)
    return True, None


def evaluate(g: FiniteGroup, f_cap: int = F_SCAN_CAP,
             skip_f_over_cap: bool = False) -> PredicateReport:
    """All four predicates plus rank in one report."""
    sp, sp_w = is_sp(g)
    ch, ch_w = is_ch(g)
    ca, ca_w = is_ca(g)
    if skip_f_over_cap and g.order() > f_cap:
        f, f_w = None, None
    else:
        f, f_w = is_f(g, cap=f_cap)
    return PredicateReport(sp=sp, ch=ch, ca=ca, f=f, rank=rank(g),
                           sp_witness=sp_w, ch_witness=ch_w,
                           ca_witness=ca_w, f_witness=f_w)
