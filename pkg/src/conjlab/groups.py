"""Finite groups given by generators: enumeration, conjugacy classes,
centralizers, centers, quotients, derived and normal subgroups.

Elements are canonical encodings: a permutation of [0, degree) is its
image tuple, a d x d matrix over GF(q) is the flat row-major tuple of
integer field codes (see conjlab.gf), and a coset in a quotient group is
the encoding of its minimal member in the parent.  Products compose left
to right: mul(a, b) applies a first, then b, and x ** g means g^-1 * x * g.

Everything is desk scale by design: enumeration is a breadth-first
closure under left multiplication by the generators, conjugacy classes
are conjugation orbits, and centralizers of class representatives come
from the orbit transversal via Schreier generators.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass, field


from .errors import CapExceeded, InternalCheckError
from .gf import Field
from .intmath import factor, is_power_of, p_part

DEFAULT_MAX_ORDER = 200_000


class PermutationRep:
    """Permutations of [0, degree) encoded as image tuples."""

    kind = "permutation"

    def __init__(self, degree: int):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        self.degree = degree
        self.identity = tuple(range(degree))

    def mul(self, a, b):
        return tuple(b[x] for x in a)

    def inv(self, a):
        out = [0] * len(a)
        for i, ai in enumerate(a):
            out[ai] = i
        return tuple(out)

    def validate(self, enc) -> None:
        if len(enc) != self.degree or sorted(enc) != list(range(self.degree)):
            raise ValueError(f"{enc} is not a bijection on [0, {self.degree})")

    def describe(self, enc):
        return list(enc)

    def __repr__(self):
        return f"PermutationRep(degree={self.degree})"


class MatrixRep:
    """Invertible dim x dim matrices over a Field, flat row-major encodings."""

    kind = "matrix"

    def __init__(self, field: Field, dim: int):
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        self.field = field
        self.dim = dim
        ident = [0] * (dim * dim)
        for i in range(dim):
            ident[i * dim + i] = 1
        self.identity = tuple(ident)

    def mul(self, a, b):
        f = self.field
        mul, add = f._mul, f._add
        d = self.dim
        if d == 2:
            a0, a1, a2, a3 = a
            b0, b1, b2, b3 = b
            return (add[mul[a0][b0]][mul[a1][b2]], add[mul[a0][b1]][mul[a1][b3]],
                    add[mul[a2][b0]][mul[a3][b2]], add[mul[a2][b1]][mul[a3][b3]])
        if d == 3:
            a0, a1, a2, a3, a4, a5, a6, a7, a8 = a
            b0, b1, b2, b3, b4, b5, b6, b7, b8 = b
            return (
                add[add[mul[a0][b0]][mul[a1][b3]]][mul[a2][b6]],
                add[add[mul[a0][b1]][mul[a1][b4]]][mul[a2][b7]],
                add[add[mul[a0][b2]][mul[a1][b5]]][mul[a2][b8]],
                add[add[mul[a3][b0]][mul[a4][b3]]][mul[a5][b6]],
                add[add[mul[a3][b1]][mul[a4][b4]]][mul[a5][b7]],
                add[add[mul[a3][b2]][mul[a4][b5]]][mul[a5][b8]],
                add[add[mul[a6][b0]][mul[a7][b3]]][mul[a8][b6]],
                add[add[mul[a6][b1]][mul[a7][b4]]][mul[a8][b7]],
                add[add[mul[a6][b2]][mul[a7][b5]]][mul[a8][b8]],
            )
        out = []
        for i in range(d):
            row = a[i * d:(i + 1) * d]
            for j in range(d):
                s = 0
                for k in range(d):
                    s = add[s][mul[row[k]][b[k * d + j]]]
                out.append(s)
        return tuple(out)

    def inv(self, a):
        inv = self._gauss_invert(a)
        if inv is None:
            raise ValueError("matrix is singular")
        return inv

    def _gauss_invert(self, a):
        """Gauss-Jordan inverse over the field; None when singular."""
        f, d = self.field, self.dim
        rows = [list(a[i * d:(i + 1) * d]) for i in range(d)]
        aug = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
        for col in range(d):
            pivot = next((r for r in range(col, d) if rows[r][col] != 0), None)
            if pivot is None:
                return None
            rows[col], rows[pivot] = rows[pivot], rows[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
            pinv = f.inv(rows[col][col])
            rows[col] = [f.mul(x, pinv) for x in rows[col]]
            aug[col] = [f.mul(x, pinv) for x in aug[col]]
            for r in range(d):
                if r != col and rows[r][col] != 0:
                    c = rows[r][col]
                    rows[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(rows[r], rows[col])]
                    aug[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(aug[r], aug[col])]
        return tuple(x for row in aug for x in row)

    def validate(self, enc) -> None:
        d = self.dim
        if len(enc) != d * d:
            raise ValueError(f"expected {d * d} entries, got {len(enc)}")
        for x in enc:
            if not 0 <= x < self.field.q:
                raise ValueError(f"entry code {x} outside GF({self.field.q})")
        if self._gauss_invert(enc) is None:
            raise ValueError("matrix is singular over its field")

    def describe(self, enc):
        d, f = self.dim, self.field
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                code = enc[i * d + j]
                row.append(code if f.n == 1 else list(f.coeffs(code)))
            rows.append(row)
        return rows

    def __repr__(self):
        return f"MatrixRep(GF({self.field.q}), dim={self.dim})"


class QuotientRep:
    """Cosets of a normal subgroup, encoded by their minimal member.

    Multiplication is representative product followed by coset lookup.
    """

    kind = "quotient"

    def __init__(self, parent: "FiniteGroup", coset_rep: dict):
        self.parent = parent
        self.coset_rep = coset_rep
        self.identity = coset_rep[parent.rep.identity]

    def mul(self, a, b):
        return self.coset_rep[self.parent.rep.mul(a, b)]

    def inv(self, a):
        return self.coset_rep[self.parent.rep.inv(a)]

    def project(self, enc):
        """Coset representative of a parent element."""
        return self.coset_rep[enc]

    def validate(self, enc) -> None:
        if self.coset_rep.get(enc) != enc:
            raise ValueError(f"{enc} is not a canonical coset representative")

    def describe(self, enc):
        return self.parent.rep.describe(enc)

    def __repr__(self):
        return f"QuotientRep(of {self.parent!r})"


@dataclass(frozen=True)
class ConjugacyClass:
    """One conjugation orbit: minimal-encoding representative, size, members."""

    representative: tuple
    size: int
    members: frozenset
    seed: tuple = field(repr=False, compare=False, default=None)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup handle: parent group, member set, and a generating subset."""

    group: "FiniteGroup"
    members: frozenset
    gens: tuple

    def __len__(self) -> int:
        return len(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, enc) -> bool:
        return enc in self.members

    def sorted_members(self) -> list:
        return sorted(self.members)

    def is_abelian(self) -> bool:
        g, gens = self.group, self.gens
        return all(g.mul(a, b) == g.mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def as_group(self) -> "FiniteGroup":
        gens = self.gens if self.gens else (self.group.rep.identity,)
        sub = FiniteGroup(self.group.rep, gens, max_order=self.group.max_order)
        sub._elements = self.group._order_like(self.members)
        sub._index = {e: i for i, e in enumerate(sub._elements)}
        return sub

    def __repr__(self):
        return f"Subgroup(order={len(self.members)} of {self.group!r})"


class FiniteGroup:
    """A finite group generated by permutation or matrix encodings.

    Caches (element list, conjugacy classes, center, ...) fill on demand
    under a per-group lock and are immutable afterwards, so frozen groups
    are safe for concurrent reads.
    """

    def __init__(self, rep, generators, name: str | None = None,
                 max_order: int = DEFAULT_MAX_ORDER):
        gens = tuple(generators) or (rep.identity,)
        for g in gens:
            rep.validate(g)
        self.rep = rep
        self.generators = gens
        self.name = name
        self.max_order = max_order
        self._lock = threading.RLock()
        self._elements: list | None = None
        self._index: dict | None = None
        self._classes: list[ConjugacyClass] | None = None
        self._class_of: dict | None = None
        self._transversal: dict | None = None
        self._center: Subgroup | None = None
        self._derived: Subgroup | None = None
        self._normals: list[Subgroup] | None = None
        self._orders: dict | None = None
        self._rep_centralizers: dict = {}

    # -- raw operations ------------------------------------------------

    def mul(self, a, b):
        return self.rep.mul(a, b)

    def inv(self, a):
        return self.rep.inv(a)

    def conj(self, x, g):
        """g^-1 * x * g."""
        r = self.rep
        return r.mul(r.mul(r.inv(g), x), g)

    def pow(self, a, k: int):
        r = self.rep
        if k < 0:
            a, k = r.inv(a), -k
        out = r.identity
        while k:
            if k & 1:
                out = r.mul(out, a)
            a = r.mul(a, a)
            k >>= 1
        return out

    @property
    def identity(self):
        return self.rep.identity

    # -- enumeration -----------------------------------------------------

    def elements(self) -> list:
        """Breadth-first closure of the generators, insertion-ordered."""
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    self._elements, self._index = self._enumerate()
        return self._elements

    def _enumerate(self):
        rep, cap = self.rep, self.max_order
        ident = rep.identity
        elements = [ident]
        index = {ident: 0}
        queue = deque([ident])
        mul = rep.mul
        gens = self.generators
        while queue:
            x = queue.popleft()
            for g in gens:
                y = mul(g, x)
                if y not in index:
                    if len(elements) >= cap:
                        raise CapExceeded("group order", cap)
                    index[y] = len(elements)
                    elements.append(y)
                    queue.append(y)
        return elements, index

    def order(self) -> int:
        return len(self.elements())

    def __len__(self) -> int:
        return self.order()

    def __contains__(self, enc) -> bool:
        self.elements()
        return enc in self._index

    def index_of(self, enc) -> int:
        self.elements()
        return self._index[enc]

    def _order_like(self, members) -> list:
        """Members sorted by parent insertion order (deterministic)."""
        idx = self._index
        if idx is None:
            self.elements()
            idx = self._index
        return sorted(members, key=idx.__getitem__)

    def _closure(self, gens, seed=None, cap=None) -> list:
        """Subgroup closure of gens (optionally seeded with known members)."""
        rep = self.rep
        cap = cap if cap is not None else self.max_order
        ident = rep.identity
        elements = [ident]
        seen = {ident}
        if seed:
            for x in seed:
                if x not in seen:
                    seen.add(x)
                    elements.append(x)
        queue = deque(elements)
        mul = rep.mul
        gens = [g for g in gens if g != ident]
        while queue:
            x = queue.popleft()
            for g in gens:
                y = mul(g, x)
                if y not in seen:
                    if len(elements) >= cap:
                        raise CapExceeded("subgroup closure size", cap)
                    seen.add(y)
                    elements.append(y)
                    queue.append(y)
        return elements

    # -- element facts -----------------------------------------------------

    def element_order(self, g) -> int:
        rep = self.rep
        ident = rep.identity
        k, x = 1, g
        while x != ident:
            x = rep.mul(x, g)
            k += 1
        return k

    def element_orders(self) -> dict:
        """Order of every element, via class representatives (orders are
        constant on conjugacy classes)."""
        if self._orders is None:
            with self._lock:
                if self._orders is None:
                    orders = {}
                    for cls in self.conjugacy_classes():
                        o = self.element_order(cls.representative)
                        for m in cls.members:
                            orders[m] = o
                    self._orders = orders
        return self._orders

    def primary_decomposition(self, g) -> list:
        """Split g into commuting power-of-g parts of coprime prime-power
        orders whose product is g; empty for the identity."""
        m = self.element_order(g)
        if m == 1:
            return []
        fact = factor(m)
        if len(fact) == 1:
            return [g]
        parts = []
        for p, e in fact:
            pe = p ** e
            rest = m // pe
            exponent = rest * pow(rest, -1, pe)
            parts.append(self.pow(g, exponent % m))
        return parts

    # -- conjugacy classes ---------------------------------------------

    def conjugacy_classes(self) -> list[ConjugacyClass]:
        """Conjugation-orbit partition, sorted by (size, representative)."""
        if self._classes is None:
            with self._lock:
                if self._classes is None:
                    self._compute_classes()
        return self._classes

    def _compute_classes(self):
        rep = self.rep
        mul, inv = rep.mul, rep.inv
        elements = self.elements()
        gens = [g for g in self.generators if g != rep.identity]
        ginv = [inv(g) for g in gens]
        transversal = {}
        assigned = set()
        classes = []
        for x in elements:
            if x in assigned:
                continue
            orbit = [x]
            transversal[x] = rep.identity
            assigned.add(x)
            i = 0
            while i < len(orbit):
                y = orbit[i]
                uy = transversal[y]
                i += 1
                for g, gi in zip(gens, ginv):
                    z = mul(mul(gi, y), g)
                    if z not in assigned:
                        assigned.add(z)
                        transversal[z] = mul(uy, g)
                        orbit.append(z)
            classes.append(ConjugacyClass(
                representative=min(orbit),
                size=len(orbit),
                members=frozenset(orbit),
                seed=x,
            ))
        classes.sort(key=lambda c: (c.size, c.representative))
        class_of = {}
        for i, cls in enumerate(classes):
            for m in cls.members:
                class_of[m] = i
        self._transversal = transversal
        self._class_of = class_of
        self._classes = classes

    def class_of(self, enc) -> ConjugacyClass:
        self.conjugacy_classes()
        return self._classes[self._class_of[enc]]

    def class_size(self, enc) -> int:
        return self.class_of(enc).size

    def class_sizes(self) -> list[int]:
        """Sorted multiset of class sizes (including the 1s)."""
        return sorted(c.size for c in self.conjugacy_classes())

    # -- centralizers ----------------------------------------------------

    def centralizer(self, x, within: Subgroup | None = None) -> Subgroup:
        """Elements commuting with x, in G or in a given subgroup."""
        if within is not None:
            mul = self.rep.mul
            members = [y for y in self._order_like(within.members)
                       if mul(x, y) == mul(y, x)]
            return self.subgroup_from_elements(members)
        self.conjugacy_classes()
        cls_idx = self._class_of[x]
        base = self._centralizer_of_seed(cls_idx)
        seed = self._classes[cls_idx].seed
        if x == seed:
            return base
        u = self._transversal[x]
        conj = self.conj
        return Subgroup(self, frozenset(conj(z, u) for z in base.members),
                        tuple(conj(z, u) for z in base.gens))

    def _centralizer_of_seed(self, cls_idx: int) -> Subgroup:
        """Centralizer of the orbit seed via Schreier generators."""
        cached = self._rep_centralizers.get(cls_idx)
        if cached is not None:
            return cached
        cls = self._classes[cls_idx]
        target = self.order() // cls.size
        rep = self.rep
        mul, inv = rep.mul, rep.inv
        if cls.size == 1:
            sub = Subgroup(self, frozenset(self.elements()), self.generators)
        else:
            transversal = self._transversal
            gens = [g for g in self.generators if g != rep.identity]
            found = []
            closure = {rep.identity}
            members = self._order_like(cls.members)
            for m in members:
                if len(closure) >= target:
                    break
                um = transversal[m]
                for g in gens:
                    m2 = mul(mul(inv(g), m), g)
                    s = mul(mul(um, g), inv(transversal[m2]))
                    if s not in closure:
                        found.append(s)
                        closure = set(self._closure(found))
                        if len(closure) >= target:
                            break
            if len(closure) != target:
                raise InternalCheckError(
                    f"Schreier centralizer has order {len(closure)}, expected {target}")
            sub = Subgroup(self, frozenset(closure), tuple(found))
        with self._lock:
            self._rep_centralizers[cls_idx] = sub
        return sub

    def index(self, x, within: Subgroup | None = None) -> int:
        """|N| / |C_N(x)|; with N = G this is the conjugacy class size."""
        if within is None:
            return self.class_size(x)
        return len(within) // len(self.centralizer(x, within=within))

    def center(self) -> Subgroup:
        """Elements commuting with every generator (= size-1 classes)."""
        if self._center is None:
            with self._lock:
                if self._center is None:
                    mul = self.rep.mul
                    gens = self.generators
                    members = [x for x in self.elements()
                               if all(mul(x, g) == mul(g, x) for g in gens)]
                    self._center = self.subgroup_from_elements(members)
        return self._center

    # -- subgroups -------------------------------------------------------

    def subgroup(self, gens) -> Subgroup:
        gens = tuple(gens)
        members = frozenset(self._closure(gens))
        return Subgroup(self, members, gens)

    def subgroup_from_elements(self, members) -> Subgroup:
        """Least subgroup containing the members, with a small greedy
        generating set (members must already form a subgroup for the
        generating set to reproduce them exactly; otherwise this is the
        generated closure)."""
        ident = self.rep.identity
        gens = []
        closure = {ident}
        for x in members:
            if x not in closure:
                gens.append(x)
                closure = set(self._closure(gens))
        return Subgroup(self, frozenset(closure), tuple(gens))

    def subgroup_generated(self, elements) -> Subgroup:
        """Least subgroup containing the given element set."""
        ordered = list(elements)
        return self.subgroup_from_elements(ordered)

    def derived_subgroup(self) -> Subgroup:
        """Normal closure of the generator commutators."""
        if self._derived is None:
            with self._lock:
                if self._derived is None:
                    self._derived = self._compute_derived()
        return self._derived

    def _compute_derived(self) -> Subgroup:
        rep = self.rep
        mul, inv = rep.mul, rep.inv
        gens = self.generators
        comms = []
        seen = set()
        for a in gens:
            for b in gens:
                c = mul(mul(mul(inv(a), inv(b)), a), b)
                if c not in seen:
                    seen.add(c)
                    comms.append(c)
        basis = [c for c in comms if c != rep.identity]
        closure = set(self._closure(basis))
        while True:
            new = []
            for t in basis:
                for g in gens:
                    c = self.conj(t, g)
                    if c not in closure:
                        new.append(c)
            if not new:
                break
            basis.extend(new)
            closure = set(self._closure(basis))
        members = frozenset(closure)
        small = self.subgroup_from_elements(self._order_like(members))
        return small

    def normal_subgroups(self) -> list[Subgroup]:
        """All normal subgroups, as join-closed unions of conjugacy classes,
        sorted by (order, member encodings)."""
        if self._normals is None:
            with self._lock:
                if self._normals is None:
                    self._normals = self._compute_normals()
        return self._normals

    def _compute_normals(self) -> list[Subgroup]:
        pool: dict[frozenset, Subgroup] = {}

        def add(sub: Subgroup) -> bool:
            if sub.members in pool:
                return False
            pool[sub.members] = sub
            return True

        for cls in self.conjugacy_classes():
            add(self.subgroup_from_elements(self._order_like(cls.members)))
        changed = True
        while changed:
            changed = False
            subs = list(pool.values())
            for i, a in enumerate(subs):
                for b in subs[i + 1:]:
                    if a.members <= b.members or b.members <= a.members:
                        continue
                    join = self.subgroup_from_elements(
                        self._order_like(a.members | b.members))
                    if add(join):
                        changed = True
        out = sorted(pool.values(), key=lambda s: (len(s), tuple(s.sorted_members())))
        return out

    def is_normal(self, sub: Subgroup) -> bool:
        return all(self.conj(t, g) in sub.members
                   for g in self.generators for t in sub.gens)

    def normal_sylow(self, p: int):
        """The unique Sylow p-subgroup when the p-elements are product
        closed, else None."""
        n = self.order()
        if n % p:
            raise ValueError(f"{p} does not divide the group order {n}")
        orders = self.element_orders()
        pelems = [x for x in self.elements() if is_power_of(orders[x], p)]
        sub = self.subgroup_from_elements(pelems)
        if len(sub) != len(pelems):
            return None
        if len(sub) != p_part(n, p):
            raise InternalCheckError(
                f"closed p-element set has order {len(sub)}, not the {p}-part of {n}")
        return sub

    # -- quotients -------------------------------------------------------

    def quotient(self, normal: Subgroup) -> "FiniteGroup":
        """G / N with cosets encoded by their minimal member."""
        if normal.group is not self:
            raise ValueError("subgroup does not belong to this group")
        if not self.is_normal(normal):
            raise ValueError("subgroup is not normal")
        mul = self.rep.mul
        nmembers = list(normal.members)
        coset_rep: dict = {}
        for g in self.elements():
            if g in coset_rep:
                continue
            coset = [mul(g, n) for n in nmembers]
            r = min(coset)
            for c in coset:
                coset_rep[c] = r
        qrep = QuotientRep(self, coset_rep)
        gens = tuple(dict.fromkeys(coset_rep[g] for g in self.generators))
        name = f"{self.name}/N{len(normal)}" if self.name else None
        q = FiniteGroup(qrep, gens, name=name, max_order=self.max_order)
        if q.order() * len(normal) != self.order():
            raise InternalCheckError("quotient order times subgroup order != group order")
        return q

    def preimage(self, sub: Subgroup) -> Subgroup:
        """Preimage in the parent of a subgroup of this quotient group."""
        if not isinstance(self.rep, QuotientRep):
            raise ValueError("preimage is only defined for quotient groups")
        parent = self.rep.parent
        project = self.rep.coset_rep
        members = [g for g in parent.elements() if project[g] in sub.members]
        return parent.subgroup_from_elements(members)

    # -- global predicates -------------------------------------------------

    def is_abelian(self) -> bool:
        mul = self.rep.mul
        gens = self.generators
        return all(mul(a, b) == mul(b, a)
                   for i, a in enumerate(gens) for b in gens[i + 1:])

    def is_solvable(self) -> bool:
        """Derived series reaches the trivial subgroup."""
        current = self
        size = self.order()
        while True:
            derived = current.derived_subgroup()
            dsize = len(derived)
            if dsize == 1:
                return True
            if dsize == size:
                return False
            size = dsize
            current = derived.as_group()

    def __repr__(self):
        label = self.name or "group"
        if self._elements is not None:
            return f"FiniteGroup({label}, order={len(self._elements)})"
        return f"FiniteGroup({label}, {len(self.generators)} generators)"
