"""Deterministic constructors for every group family the verification
corpus needs: symmetric/alternating/dihedral/cyclic/elementary-abelian
permutation groups, the quaternion group, Heisenberg groups, SL2(q) and
GL2(q), AGL(1, q), the Heisenberg-kernel Frobenius family, the order
p^(p+1) wreath-style p-group, direct products, and the regular
permutation embedding.

Every constructor asserts its claimed order after enumeration; a
mismatch raises ConstructionError rather than returning a wrong group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, ConstructionError
from .gf import Field, make_field
from .groups import DEFAULT_MAX_ORDER, FiniteGroup, MatrixRep, PermutationRep
from .intmath import is_prime, prime_power

STANDARD_KINDS = ("sym", "alt", "dihedral", "cyclic", "elem_abelian")


def _checked(group: FiniteGroup, expected: int) -> FiniteGroup:
    n = group.order()
    if n != expected:
        raise ConstructionError(
            f"{group.name or 'group'} has order {n}, expected {expected}")
    return group


def _as_field(q, cap: int = DEFAULT_MAX_ORDER) -> Field:
    if isinstance(q, Field):
        return q
    pn = prime_power(q)
    if pn is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*pn)


def standard_group(kind: str, *params: int,
                   max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Dispatch for the classical permutation families."""
    if kind == "sym":
        return symmetric_group(*params, max_order=max_order)
    if kind == "alt":
        return alternating_group(*params, max_order=max_order)
    if kind == "dihedral":
        return dihedral_group(*params, max_order=max_order)
    if kind == "cyclic":
        return cyclic_group(*params, max_order=max_order)
    if kind == "elem_abelian":
        return elementary_abelian_group(*params, max_order=max_order)
    raise ValueError(f"unknown standard family {kind!r}")


def symmetric_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if not 2 <= n <= 9:
        raise ValueError("sym(n) supports 2 <= n <= 9")
    rep = PermutationRep(n)
    swap = tuple([1, 0] + list(range(2, n)))
    cycle = tuple(list(range(1, n)) + [0])
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    g = FiniteGroup(rep, (swap, cycle), name=f"sym_{n}", max_order=max_order)
    return _checked(g, fact)


def alternating_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if not 2 <= n <= 9:
        raise ValueError("alt(n) supports 2 <= n <= 9")
    rep = PermutationRep(n)
    gens = []
    for i in range(n - 2):
        images = list(range(n))
        images[i], images[i + 1], images[i + 2] = images[i + 1], images[i + 2], images[i]
        gens.append(tuple(images))
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    g = FiniteGroup(rep, tuple(gens), name=f"alt_{n}", max_order=max_order)
    return _checked(g, max(1, fact // 2))


def dihedral_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3")
    rep = PermutationRep(n)
    rotation = tuple(list(range(1, n)) + [0])
    reflection = tuple((n - i) % n for i in range(n))
    g = FiniteGroup(rep, (rotation, reflection), name=f"dihedral_{n}",
                    max_order=max_order)
    return _checked(g, 2 * n)


def cyclic_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    rep = PermutationRep(n)
    cycle = tuple(list(range(1, n)) + [0])
    g = FiniteGroup(rep, (cycle,), name=f"cyclic_{n}", max_order=max_order)
    return _checked(g, n)


def elementary_abelian_group(p: int, k: int,
                             max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1 or p ** k > max_order:
        raise CapExceeded(f"elementary abelian order {p}^{k}", max_order)
    degree = p * k
    rep = PermutationRep(degree)
    gens = []
    for block in range(k):
        images = list(range(degree))
        base = block * p
        for j in range(p):
            images[base + j] = base + (j + 1) % p
        gens.append(tuple(images))
    g = FiniteGroup(rep, tuple(gens), name=f"elem_abelian_{p}_{k}",
                    max_order=max_order)
    return _checked(g, p ** k)


def quaternion_group(max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Q8 as the matrix group <i, j> inside SL2(3)."""
    f = make_field(3, 1)
    rep = MatrixRep(f, 2)
    i = (0, 2, 1, 0)   # [[0, -1], [1, 0]]
    j = (1, 1, 1, 2)   # [[1, 1], [1, -1]]
    g = FiniteGroup(rep, (i, j), name="quaternion", max_order=max_order)
    return _checked(g, 8)


def heisenberg(p: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over GF(p), order p^3, exponent p."""
    if not is_prime(p) or p == 2:
        raise ValueError("heisenberg(p) needs an odd prime")
    if p ** 3 > max_order:
        raise CapExceeded(f"Heisenberg order {p}^3", max_order)
    f = make_field(p, 1)
    rep = MatrixRep(f, 3)
    x = (1, 1, 0, 0, 1, 0, 0, 0, 1)
    y = (1, 0, 0, 0, 1, 1, 0, 0, 1)
    g = FiniteGroup(rep, (x, y), name=f"heisenberg_{p}", max_order=max_order)
    return _checked(g, p ** 3)


def _transvections(f: Field) -> list[tuple]:
    """Upper and lower transvections with beta in {1, alpha}; beta = alpha
    is omitted over prime fields."""
    betas = [1] if f.n == 1 else [1, f.primitive_element]
    gens = []
    for b in betas:
        gens.append((1, b, 0, 1))
        gens.append((1, 0, b, 1))
    return gens


def sl2(q, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """SL2(q) from transvection generators; order q(q^2 - 1) is asserted."""
    f = _as_field(q)
    n = f.q * (f.q ** 2 - 1)
    if n > max_order:
        raise CapExceeded(f"|SL2({f.q})| = {n}", max_order)
    rep = MatrixRep(f, 2)
    g = FiniteGroup(rep, tuple(_transvections(f)), name=f"sl2_{f.q}",
                    max_order=max_order)
    return _checked(g, n)


def gl2(q, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """GL2(q): the SL2 generators plus diag(alpha, 1)."""
    f = _as_field(q)
    if f.q < 3:
        raise ValueError("gl2(q) needs q >= 3")
    n = (f.q ** 2 - 1) * (f.q ** 2 - f.q)
    if n > max_order:
        raise CapExceeded(f"|GL2({f.q})| = {n}", max_order)
    rep = MatrixRep(f, 2)
    gens = _transvections(f) + [(f.primitive_element, 0, 0, 1)]
    g = FiniteGroup(rep, tuple(gens), name=f"gl2_{f.q}", max_order=max_order)
    return _checked(g, n)


def agl1(q, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """AGL(1, q) acting on the q field elements: translations by a basis
    plus multiplication by a primitive element.  Frobenius of order q(q-1)."""
    f = _as_field(q)
    if f.q < 3:
        raise ValueError("agl1(q) needs q >= 3")
    n = f.q * (f.q - 1)
    if n > max_order:
        raise CapExceeded(f"|AGL(1, {f.q})| = {n}", max_order)
    rep = PermutationRep(f.q)
    gens = []
    for i in range(f.n):
        basis = f.p ** i
        gens.append(tuple(f.add(x, basis) for x in range(f.q)))
    alpha = f.primitive_element
    gens.append(tuple(f.mul(alpha, x) for x in range(f.q)))
    g = FiniteGroup(rep, tuple(gens), name=f"agl1_{f.q}", max_order=max_order)
    return _checked(g, n)


def type3_frobenius(p: int, d: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Heisenberg kernel with a diagonal order-d complement: the subgroup
    of GL3(p) generated by the Heisenberg generators and diag(1, 1/lam, 1),
    lam the canonical element of multiplicative order d.  Conjugation acts
    as (x, y, z) -> (lam x, y/lam, z) on Heisenberg coordinates, so the
    center stays pointwise fixed.  Order p^3 d."""
    if not is_prime(p) or p == 2:
        raise ValueError("type3_frobenius needs an odd prime p")
    if d <= 1 or (p - 1) % d:
        raise ValueError(f"d = {d} must be a nontrivial divisor of p - 1 = {p - 1}")
    n = p ** 3 * d
    if n > max_order:
        raise CapExceeded(f"type3 order {p}^3 * {d}", max_order)
    f = make_field(p, 1)
    lam = f.pow(f.primitive_element, (p - 1) // d)
    rep = MatrixRep(f, 3)
    x = (1, 1, 0, 0, 1, 0, 0, 0, 1)
    y = (1, 0, 0, 0, 1, 1, 0, 0, 1)
    t = (1, 0, 0, 0, f.inv(lam), 0, 0, 0, 1)
    g = FiniteGroup(rep, (x, y, t), name=f"type3_{p}_{d}", max_order=max_order)
    return _checked(g, n)


def remark_group(p: int, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Order p^(p+1) permutation group on p^2 points: p disjoint p-cycles
    (one per block) extended by a block shift.  N = {p, p^(p-1)}."""
    if not is_prime(p) or p == 2:
        raise ValueError("remark_group(p) needs an odd prime")
    if p ** (p + 1) > max_order:
        raise CapExceeded(f"remark group order {p}^{p + 1}", max_order)
    degree = p * p
    rep = PermutationRep(degree)
    cycle0 = list(range(degree))
    for j in range(p):
        cycle0[j] = (j + 1) % p
    shift = [((i // p + 1) % p) * p + (i % p) for i in range(degree)]
    g = FiniteGroup(rep, (tuple(cycle0), tuple(shift)),
                    name=f"remark_{p}", max_order=max_order)
    return _checked(g, p ** (p + 1))


def direct_product(a: FiniteGroup, b: FiniteGroup,
                   max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Direct product of two permutation groups on disjoint point sets."""
    if not (isinstance(a.rep, PermutationRep) and isinstance(b.rep, PermutationRep)):
        raise ValueError("direct_product needs permutation groups; "
                         "convert matrix groups with to_permutation first")
    n = a.order() * b.order()
    if n > max_order:
        raise CapExceeded(f"product order {a.order()} * {b.order()}", max_order)
    da, db = a.rep.degree, b.rep.degree
    rep = PermutationRep(da + db)
    idb = tuple(range(da, da + db))
    gens = [g + idb for g in a.generators]
    ida = tuple(range(da))
    gens += [ida + tuple(x + da for x in h) for h in b.generators]
    name = f"{a.name or 'A'}x{b.name or 'B'}"
    g = FiniteGroup(rep, tuple(gens), name=name, max_order=max_order)
    return _checked(g, n)


def to_permutation(g: FiniteGroup, cap: int = 5000) -> FiniteGroup:
    """Regular permutation representation on the enumerated element list."""
    n = g.order()
    if n > cap:
        raise CapExceeded(f"regular representation of order {n}", cap)
    elements = g.elements()
    index = {e: i for i, e in enumerate(elements)}
    mul = g.rep.mul
    rep = PermutationRep(n)
    gens = tuple(tuple(index[mul(x, gen)] for x in elements) for gen in g.generators)
    out = FiniteGroup(rep, gens, name=f"{g.name or 'group'}_reg",
                      max_order=g.max_order)
    return _checked(out, n)


@dataclass(frozen=True)
class FamilyRequest:
    """A family name plus integer parameters, as used by the CLI and corpus."""

    family: str
    params: tuple[int, ...] = ()

    def build(self, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
        return build_family(self.family, *self.params, max_order=max_order)


FAMILY_ARITY = {
    "sym": 1, "alt": 1, "dihedral": 1, "cyclic": 1, "elem_abelian": 2,
    "quaternion": 0, "heisenberg": 1, "sl2": 1, "gl2": 1, "agl1": 1,
    "type3": 2, "remark": 1,
}


def build_family(family: str, *params: int,
                 max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Construct a named family member; used by `conjlab construct`."""
    arity = FAMILY_ARITY.get(family)
    if arity is None:
        raise ValueError(f"unknown family {family!r}; know {sorted(FAMILY_ARITY)}")
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    if family in STANDARD_KINDS:
        return standard_group(family, *params, max_order=max_order)
    builder = {
        "quaternion": quaternion_group,
        "heisenberg": heisenberg,
        "sl2": sl2,
        "gl2": gl2,
        "agl1": agl1,
        "type3": type3_frobenius,
        "remark": remark_group,
    }[family]
    return builder(*params, max_order=max_order)
