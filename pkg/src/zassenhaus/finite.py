"""Brute-force oracle on finite p-groups of unitriangular matrices.

Groups are sets of unit upper-triangular matrices over F_p supported on a
fixed family of strictly-upper positions that is closed under multiplication
(full triangles, and block-diagonal unions of them for direct products).
Elements are indexed by mixed-radix encoding of the supported entries, so the
index itself is the canonical interned form; multiplication stays on demand
as batched matrix products instead of a stored composition table.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

DEFAULT_ELEMENT_CAP = 1 << 20
ENV_CAP = "ZASS_MAX_ELEMENTS"

# pair count per decode/matmul chunk; keeps intermediates in the tens of MB
_CHUNK_PAIRS = 1 << 21


class TooLarge(ValueError):
    """Requested group exceeds the configured element cap."""


def element_cap(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_CAP)
    return int(env) if env else DEFAULT_ELEMENT_CAP


class FiniteGroup:
    """Matrix p-group with elements addressed by integer index; index 0 = 1."""

    def __init__(self, p: int, size: int, positions, max_elements: int | None = None):
        self.p = p
        self.size = size
        self.positions = tuple(positions)
        order = p ** len(self.positions)
        cap = element_cap(max_elements)
        if order > cap:
            raise TooLarge(f"group would have {order} elements, cap is {cap}")
        if order > 1 << 62:
            raise TooLarge("element indices would overflow 64-bit integers")
        self.order = order
        self.identity = 0
        self._rows = np.array([i for i, _ in self.positions], dtype=np.intp)
        self._cols = np.array([j for _, j in self.positions], dtype=np.intp)
        self._weights = np.array(
            [p ** k for k in range(len(self.positions))], dtype=np.int64
        )
        # uint8 is safe when a single dot product cannot wrap around 256
        self._dtype = np.uint8 if size * (p - 1) ** 2 < 256 else np.int64

    # -- element codec -------------------------------------------------

    def matrices(self, idx) -> np.ndarray:
        """Decode indices (any shape) to matrices of shape idx.shape + (m, m)."""
        idx = np.asarray(idx, dtype=np.int64)
        digits = (idx[..., None] // self._weights) % self.p
        mats = np.zeros(idx.shape + (self.size, self.size), dtype=self._dtype)
        diag = np.arange(self.size)
        mats[..., diag, diag] = 1
        mats[..., self._rows, self._cols] = digits.astype(self._dtype)
        return mats

    def index_of(self, mats) -> np.ndarray:
        digits = np.asarray(mats)[..., self._rows, self._cols].astype(np.int64)
        return (digits * self._weights).sum(axis=-1)

    # -- group operations ----------------------------------------------

    def mult(self, a, b) -> np.ndarray:
        """Elementwise (broadcasting) product of index arrays."""
        ma = self.matrices(a)
        mb = self.matrices(b)
        return self.index_of((ma @ mb) % self.p)

    def _inverse_mats(self, mats: np.ndarray) -> np.ndarray:
        # (1 + N)^-1 = 1 - N + N^2 - ... with N nilpotent of index <= size
        eye = np.eye(self.size, dtype=np.int64)
        nil = (mats.astype(np.int64) - eye) % self.p
        acc = np.broadcast_to(eye, mats.shape).copy()
        term = acc.copy()
        for k in range(1, self.size):
            term = (term @ nil) % self.p
            sign = 1 if k % 2 == 0 else self.p - 1
            acc = (acc + sign * term) % self.p
        return acc.astype(self._dtype)

    def inverse(self, a) -> np.ndarray:
        return self.index_of(self._inverse_mats(self.matrices(a)))

    def power(self, a, e: int) -> np.ndarray:
        """Elementwise e-th power of an index array, e >= 0."""
        if e < 0:
            raise ValueError("exponent must be >= 0")
        a = np.asarray(a, dtype=np.int64)
        result = np.zeros_like(a)
        base = a
        while e:
            if e & 1:
                result = self.mult(result, base)
            base = self.mult(base, base)
            e >>= 1
        return result

    # -- batched pair scans ----------------------------------------------

    def _pair_scan(self, a, b, combine) -> np.ndarray:
        """Unique indices of combine(x, y) over the full a x b rectangle."""
        a = np.asarray(a, dtype=np.int64).ravel()
        b = np.asarray(b, dtype=np.int64).ravel()
        if a.size == 0 or b.size == 0:
            return np.empty(0, dtype=np.int64)
        mb = self.matrices(b)
        mbi = self._inverse_mats(mb)
        chunk = max(1, _CHUNK_PAIRS // b.size)
        pieces = []
        for lo in range(0, a.size, chunk):
            ma = self.matrices(a[lo : lo + chunk])
            mai = self._inverse_mats(ma)
            prod = combine(ma[:, None], mai[:, None], mb[None, :], mbi[None, :])
            pieces.append(np.unique(self.index_of(prod)))
        return np.unique(np.concatenate(pieces))

    def commutators(self, a, b) -> np.ndarray:
        """Unique [x, y] = x^-1 y^-1 x y over all x in a, y in b."""

        def combine(ma, mai, mb, mbi):
            t = (mai @ mbi) % self.p
            t = (t @ ma) % self.p
            return (t @ mb) % self.p

        return self._pair_scan(a, b, combine)

    def conjugates(self, a, b) -> np.ndarray:
        """Unique x^-1 y x over all x in a, y in b."""

        def combine(ma, mai, mb, mbi):
            t = (mai @ mb) % self.p
            return (t @ ma) % self.p

        return self._pair_scan(a, b, combine)

    def products(self, a, b) -> np.ndarray:
        """Unique x y over all x in a, y in b."""

        def combine(ma, mai, mb, mbi):
            return (ma @ mb) % self.p

        return self._pair_scan(a, b, combine)

    def __repr__(self) -> str:
        return (
            f"FiniteGroup(p={self.p}, size={self.size}, "
            f"order={self.order}, positions={len(self.positions)})"
        )


def unitriangular_group(m: int, p: int, max_elements: int | None = None) -> FiniteGroup:
    """Full group of m x m unit upper-triangular matrices over F_p."""
    if m < 1:
        raise ValueError(f"matrix size must be >= 1, got {m}")
    positions = [(i, j) for i in range(m) for j in range(i + 1, m)]
    return FiniteGroup(p, m, positions, max_elements)


def cyclic_group(p: int, max_elements: int | None = None) -> FiniteGroup:
    """Cyclic group of order p, realized as 2 x 2 unitriangular matrices."""
    return unitriangular_group(2, p, max_elements)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product as block-diagonal matrices; both factors share p."""
    if g1.p != g2.p:
        raise ValueError(f"factors live over different primes: {g1.p} and {g2.p}")
    shifted = [(i + g1.size, j + g1.size) for i, j in g2.positions]
    return FiniteGroup(
        g1.p,
        g1.size + g2.size,
        list(g1.positions) + shifted,
        max_elements=g1.order * g2.order,
    )


def subgroup_closure(group: FiniteGroup, gens) -> frozenset[int]:
    """Breadth-first closure of a generator set under multiplication."""
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    known = {int(group.identity)}
    known.update(int(g) for g in gens)
    frontier = np.array(sorted(known), dtype=np.int64)
    gen_arr = np.array(sorted(known), dtype=np.int64)
    while frontier.size:
        prods = group.products(frontier, gen_arr)
        fresh = [int(i) for i in prods if int(i) not in known]
        known.update(fresh)
        frontier = np.array(fresh, dtype=np.int64)
    return frozenset(known)


@dataclass(frozen=True)
class FiltrationResult:
    """Descending chain of element-index sets and the subquotient dimensions.

    subgroups holds the chain for degrees 1..depth+1; dims[i] is
    log_p([G_(i+1) : G_(i+2)]) for i in 0..depth-1.
    """

    subgroups: tuple[frozenset[int], ...]
    dims: tuple[int, ...]


def _log_p_exact(ratio: int, p: int) -> int:
    e = 0
    while ratio > 1:
        if ratio % p:
            raise ArithmeticError(f"subgroup index {ratio} is not a power of {p}")
        ratio //= p
        e += 1
    return e


def zassenhaus_filtration_finite(group: FiniteGroup, depth: int) -> FiltrationResult:
    """Filtration computed literally from its recursive definition:

        G_(1) = G,
        G_(n) = < p-th powers of G_(ceil(n/p)),  [G_(i), G_(j)] for i + j = n >.

    All commutator pairs are scanned; no structure of the group is assumed.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    chain_sets: list[frozenset[int]] = [frozenset(range(group.order))]
    chain_arrs: list[np.ndarray] = [np.arange(group.order, dtype=np.int64)]
    for n in range(2, depth + 2):
        parts = [group.power(chain_arrs[-(-n // group.p) - 1], group.p)]
        for i in range(1, n):
            j = n - i
            if j < 1:
                continue
            parts.append(group.commutators(chain_arrs[i - 1], chain_arrs[j - 1]))
        gens = np.unique(np.concatenate(parts))
        closure = subgroup_closure(group, gens)
        chain_sets.append(closure)
        chain_arrs.append(np.array(sorted(closure), dtype=np.int64))
    dims = []
    for n in range(depth):
        top, bottom = len(chain_sets[n]), len(chain_sets[n + 1])
        if top % bottom:
            raise ArithmeticError("chain member is not a subgroup of its predecessor")
        dims.append(_log_p_exact(top // bottom, group.p))
    return FiltrationResult(subgroups=tuple(chain_sets), dims=tuple(dims))


def row_echelon_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Nonzero rows of a row-echelon form over F_p."""
    m = np.array(mat, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError("matrix expected")
    rank = 0
    rows, cols = m.shape
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(m[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + int(pivots[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        m[rank] = (m[rank] * pow(int(m[rank, col]), -1, p)) % p
        below = m[rank + 1 :, col]
        hits = np.nonzero(below)[0]
        if hits.size:
            m[rank + 1 + hits] = (m[rank + 1 + hits] - np.outer(below[hits], m[rank])) % p
        rank += 1
    return m[:rank]


def group_algebra_aug_dims(group: FiniteGroup, depth: int) -> list[int]:
    """Dimensions a_n of I^n / I^(n+1) for the augmentation ideal I of F_p[G].

    Returns a_0..a_depth; once I^n vanishes the remaining entries are 0.
    Vectors live in F_p^|G| indexed by group elements; right multiplication
    by g permutes coordinates, so I^(n+1) is spanned by b g - b over basis
    vectors b of I^n and all g.
    """
    n_el = group.order
    p = group.p
    all_idx = np.arange(n_el, dtype=np.int64)
    # column permutation for right multiplication by g: (v g)[h g] = v[h]
    perms = [group.mult(all_idx, np.int64(g)) for g in range(n_el)]

    basis = np.zeros((n_el - 1, n_el), dtype=np.int64)
    for g in range(1, n_el):
        basis[g - 1, g] = 1
        basis[g - 1, group.identity] = p - 1
    basis = row_echelon_mod_p(basis, p)

    ranks = [n_el, basis.shape[0]]
    while basis.shape[0] and len(ranks) <= depth:
        stacked = []
        for g in range(1, n_el):
            moved = np.zeros_like(basis)
            moved[:, perms[g]] = basis
            stacked.append((moved - basis) % p)
        basis = row_echelon_mod_p(np.vstack(stacked), p)
        ranks.append(basis.shape[0])
    while len(ranks) <= depth + 1:
        ranks.append(0)
    return [ranks[k] - ranks[k + 1] for k in range(depth + 1)]
