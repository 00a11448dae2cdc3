"""Finite commutative unital rings with canonically enumerated carriers.

Every ring exposes its carrier as indices 0..order-1 with zero at index 0.
Structured kinds (products, quotients, trivial extensions, subrings) derive
their operation tables from their parts; the tables are materialized lazily
and feed the kernel backend for the hot scans.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from . import _kernels


class RingError(Exception):
    """Invalid ring construction or cross-ring misuse."""


class HomError(RingError):
    """A map table fails one of the ring homomorphism axioms."""


_ids = itertools.count(1)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int32)
    arr.setflags(write=False)
    return arr


class RingElem:
    """An element of a finite ring, identified by (ring id, carrier index)."""

    __slots__ = ("ring", "index")

    def __init__(self, ring: "FiniteRing", index: int):
        if not 0 <= index < ring.order:
            raise RingError(f"element index {index} out of range for {ring.name}")
        self.ring = ring
        self.index = index

    def __eq__(self, other):
        return (
            isinstance(other, RingElem)
            and self.ring.ring_id == other.ring.ring_id
            and self.index == other.index
        )

    def __hash__(self):
        return hash((self.ring.ring_id, self.index))

    def _same_ring(self, other: "RingElem") -> None:
        if not isinstance(other, RingElem) or other.ring.ring_id != self.ring.ring_id:
            raise RingError("elements belong to different rings")

    def __add__(self, other):
        self._same_ring(other)
        return RingElem(self.ring, self.ring.add_i(self.index, other.index))

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg_i(self.index))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._same_ring(other)
        return RingElem(self.ring, self.ring.mul_i(self.index, other.index))

    def __pow__(self, k: int):
        return elem_pow(self, k)

    def __repr__(self):
        return f"{self.ring.format_element(self.index)}"


class FiniteRing:
    """Base class; subclasses provide ``_build_tables`` and value formatting."""

    kind = "abstract"

    def __init__(self, order: int, name: str):
        if order < 2:
            raise RingError(f"ring order must be >= 2, got {order} (zero ring rejected)")
        self.order = order
        self.name = name
        self.ring_id = next(_ids)
        self.zero_index = 0

    # --- tables -----------------------------------------------------------

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        raise NotImplementedError

    @cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        add, mul, neg = self._build_tables()
        return _frozen(add), _frozen(mul), _frozen(neg)

    @property
    def add_table(self) -> np.ndarray:
        return self.tables[0]

    @property
    def mul_table(self) -> np.ndarray:
        return self.tables[1]

    @property
    def neg_table(self) -> np.ndarray:
        return self.tables[2]

    @cached_property
    def one_index(self) -> int:
        raise NotImplementedError

    # --- element-level operations ----------------------------------------

    def add_i(self, i: int, j: int) -> int:
        return int(self.add_table[i, j])

    def mul_i(self, i: int, j: int) -> int:
        return int(self.mul_table[i, j])

    def neg_i(self, i: int) -> int:
        return int(self.neg_table[i])

    def pow_i(self, i: int, k: int) -> int:
        if k < 0:
            raise RingError("negative exponent")
        return _kernels.pow_index(self.mul_table, i, k, self.one_index)

    def elem(self, i: int) -> RingElem:
        return RingElem(self, i)

    @property
    def zero(self) -> RingElem:
        return RingElem(self, 0)

    @property
    def one(self) -> RingElem:
        return RingElem(self, self.one_index)

    def elements(self) -> Iterator[RingElem]:
        for i in range(self.order):
            yield RingElem(self, i)

    # --- structural value <-> index --------------------------------------

    def value(self, i: int) -> object:
        """Structural value of the element, for display and literals."""
        raise NotImplementedError

    def resolve(self, literal: object) -> int:
        """Index of the element named by a structural literal."""
        raise NotImplementedError

    def format_element(self, i: int) -> str:
        return repr(self.value(i))

    def __repr__(self):
        return f"<{self.kind} ring {self.name}, order {self.order}>"


class ZModRing(FiniteRing):
    kind = "zmod"

    def __init__(self, n: int):
        super().__init__(n, f"Z/{n}")
        self.modulus = n

    def _build_tables(self):
        idx = np.arange(self.modulus)
        add = (idx[:, None] + idx[None, :]) % self.modulus
        mul = (idx[:, None] * idx[None, :]) % self.modulus
        neg = (-idx) % self.modulus
        return add, mul, neg

    @cached_property
    def one_index(self) -> int:
        return 1

    def value(self, i: int) -> int:
        return i

    def format_element(self, i: int) -> str:
        return str(i)

    def resolve(self, literal) -> int:
        if not isinstance(literal, int):
            raise RingError(f"{self.name} element literal must be an integer, got {literal!r}")
        return literal % self.modulus


class ProductRing(FiniteRing):
    kind = "product"

    def __init__(self, factors: Sequence[FiniteRing]):
        if not factors:
            raise RingError("product of zero rings is the zero ring; need >= 1 factor")
        order = 1
        for f in factors:
            order *= f.order
        name = " x ".join(f.name for f in factors)
        super().__init__(order, f"({name})" if len(factors) > 1 else name)
        self.factors = tuple(factors)

    @cached_property
    def _digits(self) -> list[np.ndarray]:
        """Per-factor component index of each carrier index (first factor most significant)."""
        idx = np.arange(self.order)
        digits = []
        rem = idx
        tail = self.order
        for f in self.factors:
            tail //= f.order
            digits.append(rem // tail)
            rem = rem % tail
        return digits

    def _recompose(self, parts: Sequence[np.ndarray]) -> np.ndarray:
        acc = np.zeros_like(parts[0])
        for f, p in zip(self.factors, parts):
            acc = acc * f.order + p
        return acc

    def _build_tables(self):
        digits = self._digits
        adds, muls, negs = [], [], []
        for f, d in zip(self.factors, digits):
            fa, fm, fn = f.tables
            adds.append(fa[d[:, None], d[None, :]])
            muls.append(fm[d[:, None], d[None, :]])
            negs.append(fn[d])
        return self._recompose(adds), self._recompose(muls), self._recompose(negs)

    @cached_property
    def one_index(self) -> int:
        acc = 0
        for f in self.factors:
            acc = acc * f.order + f.one_index
        return acc

    def value(self, i: int) -> tuple:
        return tuple(f.value(int(d[i])) for f, d in zip(self.factors, self._digits))

    def format_element(self, i: int) -> str:
        return "(" + ", ".join(f.format_element(int(d[i])) for f, d in zip(self.factors, self._digits)) + ")"

    def resolve(self, literal) -> int:
        if not isinstance(literal, tuple) or len(literal) != len(self.factors):
            raise RingError(
                f"{self.name} element literal must be a {len(self.factors)}-tuple, got {literal!r}"
            )
        acc = 0
        for f, lit in zip(self.factors, literal):
            acc = acc * f.order + f.resolve(lit)
        return acc


class QuotientRing(FiniteRing):
    """Coset ring R/I, cosets ordered by their minimal representative index."""

    kind = "quotient"

    def __init__(self, base: FiniteRing, ideal_elements: Sequence[int], ideal_name: str = "I"):
        elems = sorted(set(int(x) for x in ideal_elements))
        if len(elems) == base.order:
            raise RingError("quotient by the whole ring is the zero ring")
        badd = base.add_table
        coset_of = np.full(base.order, -1, dtype=np.int64)
        reps: list[int] = []
        for x in range(base.order):
            if coset_of[x] >= 0:
                continue
            c = len(reps)
            reps.append(x)
            for i in elems:
                coset_of[badd[x, i]] = c
        if base.order % len(reps) != 0 or len(reps) * len(elems) != base.order:
            raise RingError("ideal elements do not form a subgroup of the additive group")
        super().__init__(len(reps), f"{base.name}/({ideal_name})")
        self.base = base
        self.ideal_elements = tuple(elems)
        self.coset_of = coset_of
        self.reps = np.array(reps, dtype=np.int64)

    def _build_tables(self):
        r = self.reps
        add = self.coset_of[self.base.add_table[r[:, None], r[None, :]]]
        mul = self.coset_of[self.base.mul_table[r[:, None], r[None, :]]]
        neg = self.coset_of[self.base.neg_table[r]]
        return add, mul, neg

    @cached_property
    def one_index(self) -> int:
        return int(self.coset_of[self.base.one_index])

    def value(self, i: int):
        return self.base.value(int(self.reps[i]))

    def format_element(self, i: int) -> str:
        return f"[{self.base.format_element(int(self.reps[i]))}]"

    def resolve(self, literal) -> int:
        return int(self.coset_of[self.base.resolve(literal)])


class FiniteModule:
    """A finite module over a finite ring, given by tables.

    Supported shapes: an ideal of the base ring under multiplication, or a
    quotient of the base ring under the induced action.
    """

    def __init__(
        self,
        base_ring: FiniteRing,
        size: int,
        add: np.ndarray,
        neg: np.ndarray,
        action: np.ndarray,
        name: str,
        value_fn,
        resolve_fn,
    ):
        self.base_ring = base_ring
        self.size = size
        self.add = _frozen(add)
        self.neg = _frozen(neg)
        self.action = _frozen(action)  # shape (|R|, size)
        self.name = name
        self._value = value_fn
        self._resolve = resolve_fn
        self._validate()

    def _validate(self) -> None:
        R = self.base_ring
        act, madd = self.action, self.add
        if act.shape != (R.order, self.size):
            raise RingError("module action table has wrong shape")
        one_row = act[R.one_index]
        if not np.array_equal(one_row, np.arange(self.size)):
            raise RingError("module action violates 1*e = e")
        # (ab)*e == a*(b*e) and a*(e+e') == a*e + a*e', full check at desk scale
        ab = act[R.mul_table]  # (n, n, size): (a, b, e) -> (ab)e
        a_be = act[:, act]  # (a, b, e) -> a(be)
        if not np.array_equal(ab, a_be):
            raise RingError("module action is not associative over ring multiplication")
        lhs = act[:, madd]  # (a, e, e') -> a(e+e')
        rhs = madd[act[:, :, None], act[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise RingError("module action is not additive")

    def value(self, i: int):
        return self._value(i)

    def resolve(self, literal) -> int:
        return self._resolve(literal)


def module_from_ideal(R: FiniteRing, ideal_elements: Sequence[int], name: str = "I") -> FiniteModule:
    """The ideal as an R-module under ambient multiplication."""
    elems = sorted(set(int(x) for x in ideal_elements))
    pos = {x: p for p, x in enumerate(elems)}
    arr = np.array(elems, dtype=np.int64)
    add = np.array([[pos[int(R.add_table[x, y])] for y in elems] for x in elems])
    neg = np.array([pos[int(R.neg_table[x])] for x in elems])
    action = np.array([[pos[int(R.mul_table[r, x])] for x in elems] for r in range(R.order)])

    def resolve_fn(lit):
        x = R.resolve(lit)
        if x not in pos:
            raise RingError(f"literal {lit!r} does not lie in the module carrier")
        return pos[x]

    return FiniteModule(
        R,
        len(elems),
        add,
        neg,
        action,
        name=f"{name} as {R.name}-module",
        value_fn=lambda i: R.value(int(arr[i])),
        resolve_fn=resolve_fn,
    )


def module_from_quotient(R: FiniteRing, ideal_elements: Sequence[int], name: str = "I") -> FiniteModule:
    """The quotient R/I as an R-module under the induced action."""
    Q = QuotientRing(R, ideal_elements, ideal_name=name)
    qadd, _, qneg = Q.tables
    action = Q.coset_of[R.mul_table[:, Q.reps]]
    return FiniteModule(
        R,
        Q.order,
        qadd,
        qneg,
        action,
        name=f"{R.name}/({name}) as {R.name}-module",
        value_fn=Q.value,
        resolve_fn=Q.resolve,
    )


def module_self(R: FiniteRing) -> FiniteModule:
    """R as a module over itself."""
    return module_from_ideal(R, range(R.order), name=R.name)


class TrivialExtensionRing(FiniteRing):
    """A ∝ E with multiplication (a,e)(a',e') = (aa', a e' + a' e)."""

    kind = "trivial_extension"

    def __init__(self, A: FiniteRing, E: FiniteModule):
        if E.base_ring.ring_id != A.ring_id:
            raise RingError("module is over a different ring than the extension base")
        super().__init__(A.order * E.size, f"{A.name} prop {E.name}")
        self.base = A
        self.module = E

    def _build_tables(self):
        A, E = self.base, self.module
        m = E.size
        idx = np.arange(self.order)
        a, e = idx // m, idx % m
        aadd, amul, aneg = A.tables
        add = aadd[a[:, None], a[None, :]] * m + E.add[e[:, None], e[None, :]]
        cross = E.add[E.action[a[:, None], e[None, :]], E.action[a[None, :], e[:, None]]]
        mul = amul[a[:, None], a[None, :]] * m + cross
        neg = aneg[a] * m + E.neg[e]
        return add, mul, neg

    @cached_property
    def one_index(self) -> int:
        return self.base.one_index * self.module.size

    def value(self, i: int):
        m = self.module.size
        return (self.base.value(i // m), self.module.value(i % m))

    def format_element(self, i: int) -> str:
        m = self.module.size
        return f"({self.base.format_element(i // m)}, {self.module.value(i % m)!r})"

    def resolve(self, literal) -> int:
        if not isinstance(literal, tuple) or len(literal) != 2:
            raise RingError(f"{self.name} element literal must be a pair, got {literal!r}")
        a, e = literal
        return self.base.resolve(a) * self.module.size + self.module.resolve(e)


class SubringView(FiniteRing):
    """A subring of a parent ring, carried by a sorted list of parent indices."""

    kind = "subring"

    def __init__(self, parent: FiniteRing, member_indices: Sequence[int], name: str):
        members = sorted(set(int(x) for x in member_indices))
        if members[0] != 0:
            raise RingError("subring must contain 0")
        if parent.one_index not in members:
            raise RingError("subring must contain 1")
        super().__init__(len(members), name)
        self.parent = parent
        self.members = np.array(members, dtype=np.int64)
        lookup = np.full(parent.order, -1, dtype=np.int64)
        lookup[self.members] = np.arange(len(members))
        self.lookup = lookup

    def _build_tables(self):
        m = self.members
        add = self.lookup[self.parent.add_table[m[:, None], m[None, :]]]
        mul = self.lookup[self.parent.mul_table[m[:, None], m[None, :]]]
        neg = self.lookup[self.parent.neg_table[m]]
        if add.min() < 0 or mul.min() < 0 or neg.min() < 0:
            raise RingError(f"carrier of {self.name} is not closed under the parent operations")
        return add, mul, neg

    @cached_property
    def one_index(self) -> int:
        return int(self.lookup[self.parent.one_index])

    def value(self, i: int):
        return self.parent.value(int(self.members[i]))

    def format_element(self, i: int) -> str:
        return self.parent.format_element(int(self.members[i]))

    def resolve(self, literal) -> int:
        j = int(self.lookup[self.parent.resolve(literal)])
        if j < 0:
            raise RingError(f"literal {literal!r} does not lie in the subring {self.name}")
        return j


class RingHom:
    """A validated unital ring homomorphism, stored as a total index table."""

    def __init__(self, source: FiniteRing, target: FiniteRing, table: np.ndarray, name: str = "f"):
        self.source = source
        self.target = target
        self.table = _frozen(np.asarray(table))
        self.name = name
        self._validate()

    def _validate(self) -> None:
        s, t, T = self.source, self.target, self.table
        if T.shape != (s.order,):
            raise HomError(f"map table must be total on the {s.order}-element source carrier")
        if T.min() < 0 or T.max() >= t.order:
            raise HomError("map table contains indices outside the target carrier")
        if int(T[0]) != 0:
            raise HomError(f"map(0) = {t.format_element(int(T[0]))} != 0")
        if int(T[s.one_index]) != t.one_index:
            raise HomError(f"map(1) = {t.format_element(int(T[s.one_index]))} != 1 (non-unital map)")
        lhs = T[s.add_table]
        rhs = t.add_table[T[:, None], T[None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j = (int(v) for v in bad[0])
            raise HomError(
                f"additivity fails at ({s.format_element(i)}, {s.format_element(j)}): "
                f"map({s.format_element(i)}+{s.format_element(j)}) = "
                f"{t.format_element(int(lhs[i, j]))} != {t.format_element(int(rhs[i, j]))}"
            )
        lhs = T[s.mul_table]
        rhs = t.mul_table[T[:, None], T[None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j = (int(v) for v in bad[0])
            raise HomError(
                f"multiplicativity fails at ({s.format_element(i)}, {s.format_element(j)}): "
                f"{t.format_element(int(lhs[i, j]))} != {t.format_element(int(rhs[i, j]))}"
            )

    def apply(self, i: int) -> int:
        return int(self.table[i])

    def __call__(self, x: RingElem) -> RingElem:
        if x.ring.ring_id != self.source.ring_id:
            raise RingError("element is not in the homomorphism's source ring")
        return RingElem(self.target, self.apply(x.index))

    @cached_property
    def image_indices(self) -> tuple[int, ...]:
        return tuple(sorted(set(int(v) for v in self.table)))

    @cached_property
    def kernel_indices(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.nonzero(self.table == 0)[0])

    @property
    def is_surjective(self) -> bool:
        return len(self.image_indices) == self.target.order

    def __repr__(self):
        return f"<hom {self.name}: {self.source.name} -> {self.target.name}>"


# --- constructors ---------------------------------------------------------


def make_zmod(n: int) -> ZModRing:
    """Z/nZ with canonical representatives 0..n-1."""
    if not isinstance(n, int) or n < 2:
        raise RingError(f"make_zmod requires an integer n >= 2, got {n!r}")
    return ZModRing(n)


def make_product(factors: Sequence[FiniteRing]) -> ProductRing:
    return ProductRing(factors)


def make_quotient(R: FiniteRing, I) -> tuple[QuotientRing, RingHom]:
    """Coset ring R/I together with the canonical surjection."""
    if I.ring.ring_id != R.ring_id:
        raise RingError("ideal belongs to a different ring")
    Q = QuotientRing(R, I.elements, ideal_name=_gens_label(R, I))
    pi = RingHom(R, Q, Q.coset_of, name="pi")
    return Q, pi


def _gens_label(R: FiniteRing, I) -> str:
    gens = I.generators if I.generators is not None else I.elements
    return ",".join(str(R.value(g)) for g in gens) or "0"


def make_trivial_extension(A: FiniteRing, E: FiniteModule) -> TrivialExtensionRing:
    return TrivialExtensionRing(A, E)


def make_hom(source: FiniteRing, target: FiniteRing, table, name: str = "f") -> RingHom:
    """Validated homomorphism; raises HomError naming the first violated axiom."""
    return RingHom(source, target, np.asarray(table, dtype=np.int64), name=name)


def identity_hom(R: FiniteRing) -> RingHom:
    return RingHom(R, R, np.arange(R.order), name="id")


def elem_pow(x: RingElem, k: int) -> RingElem:
    """x**k by iterated multiplication; x**0 = 1."""
    return RingElem(x.ring, x.ring.pow_i(x.index, k))


# --- axiom verification ---------------------------------------------------


def verify_ring_axioms(
    R: FiniteRing, exhaustive_limit: int = 64, samples: int = 10000, seed: int = 0
) -> list[str]:
    """Check the commutative unital ring axioms on R's tables.

    Exhaustive for order <= exhaustive_limit; random triples above.  Returns
    a list of violation descriptions (empty when all checks pass).
    """
    n = R.order
    add, mul, neg = R.tables
    bad: list[str] = []
    if not np.array_equal(add, add.T):
        bad.append("addition is not commutative")
    if not np.array_equal(mul, mul.T):
        bad.append("multiplication is not commutative")
    if not np.array_equal(add[0], np.arange(n)):
        bad.append("0 is not an additive identity")
    if not np.array_equal(mul[R.one_index], np.arange(n)):
        bad.append("1 is not a multiplicative identity")
    if R.one_index == 0:
        bad.append("1 equals 0")
    if not np.all(add[np.arange(n), neg] == 0):
        bad.append("negation does not invert addition")
    if n <= exhaustive_limit:
        if not np.array_equal(add[add], add[:, add]):
            bad.append("addition is not associative")
        if not np.array_equal(mul[mul], mul[:, mul]):
            bad.append("multiplication is not associative")
        if not np.array_equal(mul[:, add], add[mul[:, :, None], mul[:, None, :]]):
            bad.append("multiplication does not distribute over addition")
    else:
        rng = np.random.default_rng(seed)
        i, j, k = rng.integers(0, n, size=(3, samples))
        if not np.array_equal(add[add[i, j], k], add[i, add[j, k]]):
            bad.append("addition is not associative (sampled)")
        if not np.array_equal(mul[mul[i, j], k], mul[i, mul[j, k]]):
            bad.append("multiplication is not associative (sampled)")
        if not np.array_equal(mul[i, add[j, k]], add[mul[i, j], mul[i, k]]):
            bad.append("multiplication does not distribute over addition (sampled)")
    return bad
