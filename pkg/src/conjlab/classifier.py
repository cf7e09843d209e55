"""SP-group classification into the five structural types, with evidence.

The decision procedure mirrors the classification statement: abelian
groups and non-SP groups short-circuit; otherwise the five type checks
run in order I..V and the first match wins (the type classes overlap, so
the report also lists every type whose conditions pass).  Types IV and V
are recognized by fingerprint (order plus class-size multiset of G/Z and
of the derived subgroup) against reference projective linear groups
built on demand; that is weaker than an isomorphism test and the
evidence records it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from . import families
from .classgraph import n_set
from .errors import CapExceeded, ConjlabError
from .groups import FiniteGroup, Subgroup
from .intmath import factor
from .predicates import is_sp, rank

# Class sizes of the exceptional 6-fold cover of PSL(2, 9), order 2160.
SCHUR_COVER_PSL29_ORDER = 2160
SCHUR_COVER_PSL29_N = frozenset({72, 90, 120})

FINGERPRINT_NOTE = "order + class-size fingerprint (no isomorphism test)"


class MultipleKernelCandidates(ConjlabError):
    """More than one normal subgroup satisfies the Frobenius kernel test."""


class Verdict(str, Enum):
    ABELIAN = "Abelian"
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    TYPE_III = "TypeIII"
    TYPE_IV = "TypeIV"
    TYPE_V = "TypeV"
    NOT_SP = "NotSP"
    UNRECOGNIZED = "Unrecognized"


TYPE_VERDICTS = (Verdict.TYPE_I, Verdict.TYPE_II, Verdict.TYPE_III,
                 Verdict.TYPE_IV, Verdict.TYPE_V)


@dataclass(frozen=True)
class FrobeniusStructure:
    """Kernel (a normal subgroup of the quotient), complement order, and
    the complement itself when one is recoverable as a centralizer."""

    kernel: Subgroup
    complement_order: int
    complement: Subgroup | None


@dataclass(frozen=True)
class SPClassification:
    verdict: Verdict
    evidence: dict = field(default_factory=dict)
    witness: tuple[int, int] | None = None
    all_matching: tuple[str, ...] = ()


def find_frobenius_structure(q: FiniteGroup) -> FrobeniusStructure | None:
    """Scan the normal subgroups of a nonabelian group for the unique
    proper nontrivial N with centralizers of its nonidentity elements
    inside N and |N| coprime to the index."""
    if q.is_abelian():
        raise ValueError("Frobenius detection needs a nonabelian group")
    n = q.order()
    candidates = []
    classes = q.conjugacy_classes()
    for sub in q.normal_subgroups():
        m = len(sub)
        if m == 1 or m == n or gcd(m, n // m) != 1:
            continue
        ok = True
        for cls in classes:
            rep = cls.representative
            # a class is inside N or misses it entirely, so reps suffice
            if rep == q.identity or rep not in sub.members:
                continue
            if not q.centralizer(rep).members <= sub.members:
                ok = False
                break
        if ok:
            candidates.append(sub)
    if not candidates:
        return None
    if len(candidates) > 1:
        raise MultipleKernelCandidates(
            f"kernel candidates of orders {[len(c) for c in candidates]}")
    kernel = candidates[0]
    comp_order = n // len(kernel)
    complement = None
    for cls in classes:
        rep = cls.representative
        if rep in kernel.members:
            continue
        if n // cls.size == comp_order:
            # an abelian complement is the centralizer of any of its
            # nonidentity elements
            complement = q.centralizer(rep)
            break
    return FrobeniusStructure(kernel=kernel, complement_order=comp_order,
                              complement=complement)


# -- reference fingerprints for types IV / V --------------------------------

_ref_lock = threading.Lock()
_ref_cache: dict = {}


def _linear_reference(kind: str, q: int, max_order: int):
    """(quotient order, quotient class-size multiset) for PSL2(q)/PGL2(q),
    plus the enumerated N(SL2(q)); built once per (kind, q)."""
    key = (kind, q)
    with _ref_lock:
        if key in _ref_cache:
            return _ref_cache[key]
    base = families.sl2(q, max_order=max_order) if kind == "psl" \
        else families.gl2(q, max_order=max_order)
    quot = base.quotient(base.center())
    sl2_n = n_set(families.sl2(q, max_order=max_order))
    ref = {
        "quotient_order": quot.order(),
        "quotient_sizes": tuple(quot.class_sizes()),
        "sl2_order": q * (q * q - 1),
        "sl2_N": frozenset(sl2_n),
    }
    with _ref_lock:
        _ref_cache[key] = ref
    return ref


def _psl_pgl_candidates(quotient_order: int):
    """Prime powers q > 3 whose PSL2 or PGL2 has the given order."""
    out = []
    q = 4
    while q * (q * q - 1) // 2 <= quotient_order:
        if factor(q) and len(factor(q)) == 1:
            if q * (q * q - 1) == quotient_order:
                out.append((q, "pgl"))
                if q % 2 == 0:
                    out.append((q, "psl"))  # even q: PSL2 = PGL2 = SL2
            if q % 2 == 1 and q * (q * q - 1) // 2 == quotient_order:
                out.append((q, "psl"))
        q += 1
    return out


# -- the five type checks ----------------------------------------------------


def _try_type_i(g: FiniteGroup) -> dict | None:
    n = g.order()
    orders = g.element_orders()
    for p, _ in factor(n):
        sylow = g.normal_sylow(p)
        if sylow is None:
            continue
        t_elems = [x for x in g.elements() if orders[x] % p]
        t_sub = g.subgroup_from_elements(t_elems)
        if len(t_sub) != len(t_elems) or not t_sub.is_abelian():
            continue
        if len(t_sub) * len(sylow) != n:
            continue
        mul = g.rep.mul
        if not all(mul(a, b) == mul(b, a) for a in t_sub.gens for b in sylow.gens):
            continue
        if len(n_set(sylow.as_group())) != 1:
            continue
        return {"p": p, "sylow_order": len(sylow), "abelian_factor_order": len(t_sub)}
    return None


def _try_type_ii(g: FiniteGroup, frob: FrobeniusStructure | None,
                 quotient: FiniteGroup | None) -> dict | None:
    if frob is None or frob.complement is None:
        return None
    kernel_pre = quotient.preimage(frob.kernel)
    comp_pre = quotient.preimage(frob.complement)
    if not (kernel_pre.is_abelian() and comp_pre.is_abelian()):
        return None
    return {
        "kernel_image_order": len(frob.kernel),
        "complement_image_order": frob.complement_order,
        "kernel_preimage_order": len(kernel_pre),
        "complement_preimage_order": len(comp_pre),
    }


def _try_type_iii(g: FiniteGroup, frob: FrobeniusStructure | None,
                  quotient: FiniteGroup | None, center: Subgroup) -> dict | None:
    if frob is None or frob.complement is None:
        return None
    comp_pre = quotient.preimage(frob.complement)
    if not comp_pre.is_abelian():
        return None
    kernel_pre = quotient.preimage(frob.kernel)
    mul = g.rep.mul
    for p, _ in factor(len(frob.kernel)):
        sylow = g.normal_sylow(p) if g.order() % p == 0 else None
        if sylow is None:
            continue
        product = {mul(a, b) for a in sylow.members for b in center.members}
        if product != set(kernel_pre.members):
            continue
        sylow_group = sylow.as_group()
        if len(n_set(sylow_group)) != 1:
            continue
        if set(sylow_group.center().members) != sylow.members & center.members:
            continue
        return {
            "p": p,
            "sylow_order": len(sylow),
            "kernel_preimage_order": len(kernel_pre),
            "complement_preimage_order": len(comp_pre),
            "center_order": len(center),
        }
    return None


def _try_type_iv(g: FiniteGroup, quotient: FiniteGroup | None) -> dict | None:
    if quotient is None:
        return None
    qorder = quotient.order()
    qsizes = None
    for q, kind in _psl_pgl_candidates(qorder):
        try:
            ref = _linear_reference(kind, q, g.max_order)
        except (CapExceeded, ValueError):
            continue
        if ref["quotient_order"] != qorder:
            continue
        if qsizes is None:
            qsizes = tuple(quotient.class_sizes())
        if ref["quotient_sizes"] != qsizes:
            continue
        derived = g.derived_subgroup()
        if len(derived) != ref["sl2_order"]:
            continue
        if frozenset(n_set(derived.as_group())) != ref["sl2_N"]:
            continue
        return {
            "q": q,
            "quotient_kind": kind,
            "derived_order": len(derived),
            "derived_N": sorted(ref["sl2_N"]),
            "method": FINGERPRINT_NOTE,
        }
    return None


def _try_type_v(g: FiniteGroup, quotient: FiniteGroup | None) -> dict | None:
    if quotient is None:
        return None
    qorder = quotient.order()
    if qorder not in (360, 720):
        return None
    kind = "psl" if qorder == 360 else "pgl"
    try:
        ref = _linear_reference(kind, 9, g.max_order)
    except (CapExceeded, ValueError):
        return None
    if ref["quotient_order"] != qorder:
        return None
    if ref["quotient_sizes"] != tuple(quotient.class_sizes()):
        return None
    derived = g.derived_subgroup()
    if len(derived) != SCHUR_COVER_PSL29_ORDER:
        return None
    if frozenset(n_set(derived.as_group())) != SCHUR_COVER_PSL29_N:
        return None
    return {
        "quotient_kind": kind,
        "derived_order": len(derived),
        "derived_N": sorted(SCHUR_COVER_PSL29_N),
        "method": FINGERPRINT_NOTE,
    }


def classify(g: FiniteGroup) -> SPClassification:
    """Decide which type an SP group is, or report NotSP with a witness."""
    sizes = n_set(g)
    if not sizes:
        return SPClassification(verdict=Verdict.ABELIAN)
    sp, witness = is_sp(g)
    if not sp:
        return SPClassification(verdict=Verdict.NOT_SP, witness=witness)
    center = g.center()
    quotient = g.quotient(center)
    frob = None
    if not quotient.is_abelian():
        frob = find_frobenius_structure(quotient)
    attempts = (
        (Verdict.TYPE_I, lambda: _try_type_i(g)),
        (Verdict.TYPE_II, lambda: _try_type_ii(g, frob, quotient)),
        (Verdict.TYPE_III, lambda: _try_type_iii(g, frob, quotient, center)),
        (Verdict.TYPE_IV, lambda: _try_type_iv(g, quotient)),
        (Verdict.TYPE_V, lambda: _try_type_v(g, quotient)),
    )
    verdict = Verdict.UNRECOGNIZED
    evidence: dict = {}
    matching = []
    for name, attempt in attempts:
        result = attempt()
        if result is not None:
            matching.append(name.value)
            if verdict is Verdict.UNRECOGNIZED:
                verdict = name
                evidence = result
    return SPClassification(verdict=verdict, evidence=evidence,
                            all_matching=tuple(matching))


def check_corollary1(g: FiniteGroup) -> bool:
    """Rank-2 SP groups: G/Z has a Frobenius structure and is solvable."""
    sp, _ = is_sp(g)
    if not sp or rank(g) != 2:
        raise ValueError("corollary-1 check applies to SP groups of rank 2")
    quotient = g.quotient(g.center())
    if quotient.is_abelian():
        return False
    frob = find_frobenius_structure(quotient)
    return frob is not None and quotient.is_solvable()
