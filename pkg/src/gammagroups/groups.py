"""Finite matrix group engine.

Groups are generated by breadth-first closure over exact matrices, after
which every structural question (center, classes, subgroups, isomorphism)
is answered on the integer Cayley table alone. Element 0 is always the
identity.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Sequence

from gammagroups.exact import ExactMatrix, parse_matrix

DEFAULT_CAP = 4096


def generate_closure(
    generators: Sequence[ExactMatrix], *, cap: int = DEFAULT_CAP
) -> list[ExactMatrix]:
    """Multiplicative closure of the generators, identity first.

    Elements appear in breadth-first discovery order, so the generators
    themselves (deduplicated) come right after the identity. Raises
    ValueError when the closure grows past ``cap``.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    dim = gens[0].dim
    for gen in gens:
        if gen.dim != dim:
            raise ValueError("generators must share one dimension")
        try:
            gen.inverse()
        except ValueError:
            raise ValueError("generators must be invertible") from None
    identity = ExactMatrix.identity(dim)
    elements = [identity]
    index = {identity.key(): 0}
    queue = [identity]
    for current in queue:
        for gen in gens:
            product = current * gen
            key = product.key()
            if key in index:
                continue
            if len(elements) >= cap:
                raise ValueError(f"closure exceeded cap of {cap} elements")
            index[key] = len(elements)
            elements.append(product)
            queue.append(product)
    return elements


def generators_from_json(items: Iterable[object], *, expect_dim: int | None = None) -> list[ExactMatrix]:
    """Decode a JSON list of matrices (texts or nested entry lists)."""
    matrices = []
    for item in items:
        text = item if isinstance(item, str) else json.dumps(item)
        matrices.append(parse_matrix(text, expect_dim=expect_dim))
    return matrices


def _parity(value: int) -> int:
    return value.bit_count() & 1


class MatrixGroup:
    """A finite group of exact matrices with index-based structure queries."""

    def __init__(
        self,
        elements: Sequence[ExactMatrix],
        *,
        generator_indices: Sequence[int] = (),
        cayley: Sequence[Sequence[int]] | None = None,
    ):
        self._elements = tuple(elements)
        if not self._elements:
            raise ValueError("group needs at least one element")
        if not self._elements[0].is_identity():
            raise ValueError("elements[0] must be the identity matrix")
        self.dim = self._elements[0].dim
        self._index: dict[str, int] = {}
        for i, matrix in enumerate(self._elements):
            if matrix.dim != self.dim:
                raise ValueError("group elements must share one dimension")
            key = matrix.key()
            if key in self._index:
                raise ValueError("duplicate element in group")
            self._index[key] = i
        self.generator_indices = tuple(generator_indices)
        self._cayley: list[list[int]] | None = (
            [list(row) for row in cayley] if cayley is not None else None
        )
        self._inverse: list[int] | None = None
        self._orders: list[int] | None = None
        self._center: tuple[int, ...] | None = None
        self._classes: tuple[tuple[int, ...], ...] | None = None
        self._derived: frozenset[int] | None = None
        self._fingerprint: tuple | None = None

    @classmethod
    def from_generators(
        cls, generators: Sequence[ExactMatrix], *, cap: int = DEFAULT_CAP
    ) -> "MatrixGroup":
        elements = generate_closure(generators, cap=cap)
        index = {matrix.key(): i for i, matrix in enumerate(elements)}
        gen_indices = tuple(dict.fromkeys(index[g.key()] for g in generators))
        return cls(elements, generator_indices=gen_indices)

    @property
    def order(self) -> int:
        return len(self._elements)

    @property
    def elements(self) -> tuple[ExactMatrix, ...]:
        return self._elements

    def matrix(self, i: int) -> ExactMatrix:
        return self._elements[i]

    def index_of(self, matrix: ExactMatrix) -> int:
        i = self._index.get(matrix.key())
        if i is None:
            raise ValueError("matrix is not an element of this group")
        return i

    def __contains__(self, matrix: ExactMatrix) -> bool:
        return matrix.key() in self._index

    def cayley(self) -> list[list[int]]:
        """Full multiplication table; validates closure on first build."""
        if self._cayley is None:
            table = []
            for a in self._elements:
                row = []
                for b in self._elements:
                    i = self._index.get((a * b).key())
                    if i is None:
                        raise ValueError("element set is not closed under multiplication")
                    row.append(i)
                table.append(row)
            self._cayley = table
        return self._cayley

    def mul(self, a: int, b: int) -> int:
        return self.cayley()[a][b]

    def inv(self, a: int) -> int:
        if self._inverse is None:
            cay = self.cayley()
            inverse = []
            for x in range(self.order):
                row = cay[x]
                y = next((j for j in range(self.order) if row[j] == 0), None)
                if y is None:
                    raise ValueError("element set is not a group: missing inverse")
                inverse.append(y)
            self._inverse = inverse
        return self._inverse[a]

    def element_order(self, a: int) -> int:
        if self._orders is None:
            cay = self.cayley()
            orders = [1] * self.order
            for x in range(1, self.order):
                power = x
                count = 1
                while power != 0:
                    power = cay[power][x]
                    count += 1
                orders[x] = count
            self._orders = orders
        return self._orders[a]

    def order_histogram(self) -> dict[int, int]:
        histogram: dict[int, int] = {}
        for a in range(self.order):
            k = self.element_order(a)
            histogram[k] = histogram.get(k, 0) + 1
        return histogram

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(a) for a in range(self.order)))

    @property
    def is_abelian(self) -> bool:
        return len(self.center()) == self.order

    def center(self) -> tuple[int, ...]:
        if self._center is None:
            cay = self.cayley()
            n = self.order
            self._center = tuple(
                a for a in range(n) if all(cay[a][b] == cay[b][a] for b in range(n))
            )
        return self._center

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes as sorted index tuples, ordered by (size, smallest member)."""
        if self._classes is None:
            cay = self.cayley()
            n = self.order
            seen = [False] * n
            classes = []
            for a in range(n):
                if seen[a]:
                    continue
                orbit = set()
                for g in range(n):
                    orbit.add(cay[cay[self.inv(g)][a]][g])
                for x in orbit:
                    seen[x] = True
                classes.append(tuple(sorted(orbit)))
            classes.sort(key=lambda cls: (len(cls), cls[0]))
            self._classes = tuple(classes)
        return self._classes

    def class_of(self, a: int) -> tuple[int, ...]:
        for cls in self.conjugacy_classes():
            if a in cls:
                return cls
        raise ValueError(f"no class for index {a}")

    def closure_indices(self, seed: Iterable[int]) -> frozenset[int]:
        result = self._closure_limited(seed, None)
        assert result is not None
        return result

    def _closure_limited(self, seed: Iterable[int], limit: int | None) -> frozenset[int] | None:
        cay = self.cayley()
        gens = [s for s in dict.fromkeys(seed) if s != 0]
        members = {0}
        queue = [0]
        for x in queue:
            for g in gens:
                y = cay[x][g]
                if y in members:
                    continue
                if limit is not None and len(members) >= limit:
                    return None
                members.add(y)
                queue.append(y)
        return frozenset(members)

    def _commutator(self, a: int, b: int) -> int:
        cay = self.cayley()
        return cay[cay[cay[self.inv(a)][self.inv(b)]][a]][b]

    def derived_subgroup(self) -> "Subgroup":
        """Subgroup generated by all commutators."""
        if self._derived is None:
            n = self.order
            commutators = {self._commutator(a, b) for a in range(n) for b in range(n)}
            self._derived = self.closure_indices(commutators)
        return Subgroup(self, self._derived)

    def _squares_commutators_closure(self) -> frozenset[int]:
        cay = self.cayley()
        n = self.order
        seed = {cay[a][a] for a in range(n)}
        seed.update(self._commutator(a, b) for a in range(n) for b in range(n))
        return self.closure_indices(seed)

    def frattini_subgroup(self) -> "Subgroup":
        """Frattini subgroup, via the squares-and-commutators formula.

        That formula is specific to groups of 2-power order, so anything
        else is rejected.
        """
        if self.order & (self.order - 1):
            raise ValueError("Frattini computation requires a group of 2-power order")
        return Subgroup(self, self._squares_commutators_closure())

    def minimal_generator_count(self) -> int:
        """Size of a minimal generating set (groups of 2-power order only)."""
        quotient = self.order // self.frattini_subgroup().order
        return quotient.bit_length() - 1

    def _quotient(self, normal: frozenset[int]) -> tuple[list[int], list[list[int]]]:
        """Coset id per element and the coset multiplication table."""
        cay = self.cayley()
        n = self.order
        coset_of = [-1] * n
        reps: list[int] = []
        for a in range(n):
            if coset_of[a] >= 0:
                continue
            cid = len(reps)
            reps.append(a)
            for h in normal:
                coset_of[cay[a][h]] = cid
        table = [
            [coset_of[cay[ra][rb]] for rb in reps]
            for ra in reps
        ]
        return coset_of, table

    def abelian_invariants(self) -> tuple[int, ...]:
        """Elementary divisors of the abelianization, sorted ascending."""
        derived = self.derived_subgroup().indices
        coset_of, table = self._quotient(derived)
        q = len(table)
        if q == 1:
            return ()
        orders = [1] * q
        for x in range(1, q):
            power = x
            count = 1
            while power != 0:
                power = table[power][x]
                count += 1
            orders[x] = count
        invariants: list[int] = []
        for p in _prime_factors(q):
            # counts[k] = number of quotient elements x with x^(p^k) = identity
            counts = [
                sum(1 for d in orders if p**k % d == 0)
                for k in range(_max_p_exp(q, p) + 1)
            ]
            # layer[k-1] = number of cyclic factors of order at least p^k
            layer = [
                _int_log(counts[k] // counts[k - 1], p)
                for k in range(1, len(counts))
            ]
            for k in range(len(layer)):
                copies = layer[k] - (layer[k + 1] if k + 1 < len(layer) else 0)
                invariants.extend([p ** (k + 1)] * copies)
        return tuple(sorted(invariants))

    def subgroup(self, indices: Iterable[int]) -> "Subgroup":
        """Wrap an index set as a subgroup, verifying closure."""
        members = frozenset(indices)
        if 0 not in members:
            raise ValueError("subgroup must contain the identity (index 0)")
        cay = self.cayley()
        for a in members:
            for b in members:
                if cay[a][b] not in members:
                    raise ValueError("index set is not closed under multiplication")
        return Subgroup(self, members)

    def _index_two_subgroup_sets(self) -> list[frozenset[int]]:
        n = self.order
        normal = self._squares_commutators_closure()
        vectors, rank = self._elementary_quotient_vectors(normal)
        sets = []
        for mask in range(1, 1 << rank):
            sets.append(
                frozenset(a for a in range(n) if _parity(vectors[a] & mask) == 0)
            )
        return sets

    def _elementary_quotient_vectors(self, normal: frozenset[int]) -> tuple[list[int], int]:
        coset_of, table = self._quotient(normal)
        q = len(table)
        vec: dict[int, int] = {0: 0}
        rank = 0
        for c in range(q):
            if c in vec:
                continue
            bit = 1 << rank
            rank += 1
            for a, v in list(vec.items()):
                vec[table[a][c]] = v | bit
        if len(vec) != q:
            raise ValueError("quotient is not elementary abelian")
        return [vec[coset_of[a]] for a in range(self.order)], rank

    def subgroups_of_order(self, k: int) -> list["Subgroup"]:
        """All subgroups of the given order, sorted by their index tuples.

        Index-2 subgroups are read off as kernels of sign characters, which
        avoids any search; other orders fall back to a lattice walk that
        extends known subgroups one generator at a time.
        """
        n = self.order
        if k <= 0 or n % k:
            return []
        if k == 1:
            return [Subgroup(self, frozenset({0}))]
        if k == n:
            return [Subgroup(self, frozenset(range(n)))]
        if k * 2 == n:
            sets = self._index_two_subgroup_sets()
        else:
            sets = [s for s in self._subgroup_sets_up_to(k) if len(s) == k]
        subs = [Subgroup(self, s) for s in sets]
        subs.sort(key=lambda sub: sub.sorted_indices())
        return subs

    def _subgroup_sets_up_to(self, limit: int) -> set[frozenset[int]]:
        trivial = frozenset({0})
        found = {trivial}
        frontier = [trivial]
        while frontier:
            next_frontier = []
            for current in frontier:
                for g in range(1, self.order):
                    if g in current:
                        continue
                    grown = self._closure_limited(tuple(current) + (g,), limit)
                    if grown is None or grown in found:
                        continue
                    found.add(grown)
                    next_frontier.append(grown)
            frontier = next_frontier
        return found

    def fingerprint(self) -> tuple:
        """Cheap isomorphism invariants, used to reject mismatches early."""
        if self._fingerprint is None:
            self._fingerprint = (
                self.order,
                tuple(sorted(self.order_histogram().items())),
                tuple(len(cls) for cls in self.conjugacy_classes()),
                len(self.center()),
                self.derived_subgroup().order,
                self.abelian_invariants(),
                self.exponent(),
            )
        return self._fingerprint

    def _greedy_generator_indices(self) -> list[int]:
        gens: list[int] = []
        closure = frozenset({0})
        for a in range(self.order):
            if len(closure) == self.order:
                break
            if a in closure:
                continue
            gens.append(a)
            closure = self.closure_indices(gens)
        return gens

    def isomorphism_map(self, other: "MatrixGroup") -> list[int] | None:
        """An isomorphism onto ``other`` as an image list, or None.

        The returned map is fully verified against both multiplication
        tables before being handed back.
        """
        if self.fingerprint() != other.fingerprint():
            return None
        n = self.order
        if n == 1:
            return [0]
        gens = self._greedy_generator_indices()
        prefix_sizes = [
            len(self.closure_indices(gens[: j + 1])) for j in range(len(gens))
        ]
        self_profile = [self._element_profile(a) for a in range(n)]
        other_profile = [other._element_profile(a) for a in range(n)]
        candidates = [
            [b for b in range(1, n) if other_profile[b] == self_profile[g]]
            for g in gens
        ]

        cay_s = self.cayley()
        cay_o = other.cayley()

        def verify(images: list[int]) -> list[int] | None:
            mapping: list[int | None] = [None] * n
            mapping[0] = 0
            queue = [0]
            for a in queue:
                for g, image in zip(gens, images):
                    b = cay_s[a][g]
                    target = cay_o[mapping[a]][image]
                    if mapping[b] is None:
                        mapping[b] = target
                        queue.append(b)
                    elif mapping[b] != target:
                        return None
            if any(v is None for v in mapping) or len(set(mapping)) != n:
                return None
            for a in range(n):
                for b in range(n):
                    if mapping[cay_s[a][b]] != cay_o[mapping[a]][mapping[b]]:
                        return None
            return mapping  # type: ignore[return-value]

        def extend(depth: int, images: list[int]) -> list[int] | None:
            if depth == len(gens):
                return verify(images)
            for b in candidates[depth]:
                if b in images:
                    continue
                grown = other._closure_limited(images + [b], prefix_sizes[depth] + 1)
                if grown is None or len(grown) != prefix_sizes[depth]:
                    continue
                result = extend(depth + 1, images + [b])
                if result is not None:
                    return result
            return None

        return extend(0, [])

    def _element_profile(self, a: int) -> tuple[int, int, bool]:
        return (
            self.element_order(a),
            len(self.class_of(a)),
            a in self.center(),
        )

    def is_isomorphic(self, other: "MatrixGroup") -> bool:
        return self.isomorphism_map(other) is not None

    def __repr__(self) -> str:
        return f"MatrixGroup(order={self.order}, dim={self.dim})"


class Subgroup:
    """A subgroup of a MatrixGroup, held as a frozen set of element indices."""

    def __init__(self, parent: MatrixGroup, indices: frozenset[int]):
        self.parent = parent
        self.indices = frozenset(indices)
        self._sorted = tuple(sorted(self.indices))

    @property
    def order(self) -> int:
        return len(self.indices)

    def sorted_indices(self) -> tuple[int, ...]:
        return self._sorted

    def matrices(self) -> tuple[ExactMatrix, ...]:
        return tuple(self.parent.matrix(i) for i in self._sorted)

    def is_normal(self) -> bool:
        cay = self.parent.cayley()
        for g in range(self.parent.order):
            g_inv = self.parent.inv(g)
            for h in self.indices:
                if cay[cay[g_inv][h]][g] not in self.indices:
                    return False
        return True

    def as_group(self) -> MatrixGroup:
        """Standalone group over the same matrices, reusing the parent table."""
        local_order = [0] + [i for i in self._sorted if i != 0]
        local_of = {parent_i: j for j, parent_i in enumerate(local_order)}
        parent_cay = self.parent.cayley()
        cayley = [
            [local_of[parent_cay[a][b]] for b in local_order]
            for a in local_order
        ]
        return MatrixGroup(
            [self.parent.matrix(i) for i in local_order], cayley=cayley
        )

    def __contains__(self, item: int | ExactMatrix) -> bool:
        if isinstance(item, ExactMatrix):
            if item not in self.parent:
                return False
            return self.parent.index_of(item) in self.indices
        return item in self.indices

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.indices == other.indices

    def __hash__(self) -> int:
        return hash((id(self.parent), self.indices))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.order})"


def _prime_factors(n: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def _max_p_exp(n: int, p: int) -> int:
    exp = 0
    while n % p == 0:
        exp += 1
        n //= p
    return exp


def _int_log(n: int, p: int) -> int:
    exp = 0
    while n > 1:
        n //= p
        exp += 1
    return exp
