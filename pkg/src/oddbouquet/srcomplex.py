"""Simplicial complex attached to the initial ideal of a bouquet.

The complex lives on the flat edge-variable indices; its faces are the
squarefree monomials outside the initial ideal.  Facets come in two ways:

* a closed-form enumeration: for a pivot cycle j the facet keeps cycle j
  whole, drops exactly one odd-position edge from every earlier cycle and
  exactly one even-position edge from every later cycle;
* a brute-force search straight from the monomial generators, kept cheap
  enough for ground sets up to ~18 so it can serve as an oracle.

The f-vector, the f-to-h transform (the Hilbert series numerator of the
face ring over (1-t)^d), and a structural decomposition check for growing
one cycle by two edges complete the module.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, product

from .composition import OddCycleComposition, build_from_k, cycle_parts
from .polyarith import IntPoly, ONE_MINUS_T, T
from .toric import Monomial


@dataclass(frozen=True)
class SimplicialComplex:
    """Ground set 0..ground_size-1 plus a list of inclusion-maximal facets."""

    ground_size: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for f in self.facets:
            if any(v < 0 or v >= self.ground_size for v in f):
                raise ValueError("facet element outside ground set")
        for a in self.facets:
            for b in self.facets:
                if a is not b and a <= b:
                    raise ValueError("facet contained in another facet")

    @property
    def facet_sets(self) -> set[frozenset[int]]:
        return set(self.facets)


@dataclass(frozen=True)
class FVector:
    """counts[c] is the number of faces of cardinality c (so counts[0] = 1)."""

    counts: tuple[int, ...]

    @property
    def max_cardinality(self) -> int:
        return len(self.counts) - 1


def facets_closed_form(c: OddCycleComposition) -> SimplicialComplex:
    """All facets, one family per pivot cycle j = 1..n.

    The family for pivot j consists of the unions

        zeta_1 .. zeta_{j-1}  +  even parts of cycles 2..j
        + odd parts of cycles j..n-1  +  omega_{j+1} .. omega_n
        + odd part of cycle n  +  even part of cycle 1,

    where zeta_i runs over the odd part of cycle i minus one edge and
    omega_i over the even part of cycle i minus one edge (empty for a
    triangle).  The last line is shared by every facet.  Duplicates across
    families are not expected; they are removed and flagged if ever seen.
    """
    n = c.n
    parts = [cycle_parts(c, i) for i in range(1, n + 1)]
    seen: dict[frozenset[int], None] = {}
    raw = 0
    for j in range(1, n + 1):
        fixed: set[int] = set(parts[0].even) | set(parts[n - 1].odd)
        for i in range(2, j + 1):
            fixed |= parts[i - 1].even
        for i in range(j, n):
            fixed |= parts[i - 1].odd
        choice_lists = []
        for i in range(1, j):
            ki = c.k[i - 1]
            choice_lists.append([frozenset(z) for z in combinations(sorted(parts[i - 1].odd), ki)])
        for i in range(j + 1, n + 1):
            ki = c.k[i - 1]
            choice_lists.append([frozenset(w) for w in combinations(sorted(parts[i - 1].even), ki - 1)])
        for combo in product(*choice_lists):
            facet = frozenset(fixed.union(*combo)) if combo else frozenset(fixed)
            raw += 1
            seen.setdefault(facet, None)
    if len(seen) != raw:
        warnings.warn("closed-form facet families overlapped; result deduplicated")
    return SimplicialComplex(ground_size=c.edge_count, facets=tuple(seen))


def facets_brute_force(
    monomials: list[Monomial],
    ground_size: int,
    cap: int = 18,
) -> SimplicialComplex:
    """Maximal subsets of the ground set containing no monomial's support.

    Exhaustive scan of all subsets as bitmasks; a set is a face iff it fully
    contains no support, and a face is a facet iff no one-element extension
    is again a face.  Only feasible for small ground sets, hence the cap.
    """
    if ground_size > cap:
        raise ValueError("instance too large for oracle")
    for m in monomials:
        if not m.is_squarefree():
            raise ValueError("oracle needs squarefree monomials")
    support_masks = []
    for m in monomials:
        mask = 0
        for v in m.support:
            mask |= 1 << v
        support_masks.append(mask)
    faces = set()
    for mask in range(1 << ground_size):
        if all(mask & s != s for s in support_masks):
            faces.add(mask)
    facets = []
    for mask in faces:
        maximal = True
        for v in range(ground_size):
            if not mask & (1 << v) and (mask | (1 << v)) in faces:
                maximal = False
                break
        if maximal:
            facets.append(frozenset(v for v in range(ground_size) if mask & (1 << v)))
    facets.sort(key=lambda f: sorted(f))
    return SimplicialComplex(ground_size=ground_size, facets=tuple(facets))


def f_vector(cx: SimplicialComplex) -> FVector:
    """Count faces of each cardinality by enumerating facet subsets, deduplicated."""
    seen: set[int] = set()
    for facet in cx.facets:
        mask = 0
        for v in facet:
            mask |= 1 << v
        sub = mask
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & mask
    top = max((f.bit_count() for f in seen), default=0)
    counts = [0] * (top + 1)
    for f in seen:
        counts[f.bit_count()] += 1
    return FVector(counts=tuple(counts))


def h_from_f(fv: FVector, d: int) -> IntPoly:
    """Hilbert series numerator over (1-t)^d: sum of counts[i] * t^i * (1-t)^(d-i)."""
    if d < fv.max_cardinality:
        raise ValueError("dimension mismatch")
    acc = IntPoly(())
    for i, fi in enumerate(fv.counts):
        if fi:
            acc = acc + IntPoly((fi,)) * (T ** i) * (ONE_MINUS_T ** (d - i))
    return acc


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of the two-edge extension decomposition check."""

    union_ok: bool
    intersection_ok: bool
    facet_count: int
    cone_family_size: int
    join_family_size: int

    @property
    def ok(self) -> bool:
        return self.union_ok and self.intersection_ok


def _maximal(sets: set[frozenset[int]]) -> set[frozenset[int]]:
    return {s for s in sets if not any(s < t for t in sets)}


def verify_decomposition(c: OddCycleComposition) -> DecompositionReport:
    """Check that growing cycle 1 by two edges splits the complex as expected.

    Write the bouquet as an extension of the bouquet with cycle 1 two edges
    shorter.  Its complex must be the union of two families:

    * cone family: facets of the shorter bouquet joined with the two new
      edges x = x_{1,2k_1+1} and y = x_{1,2k_1};
    * join family: facets of the bouquet with cycle 1 deleted, joined with
      all of cycle 1 except x.

    The intersection of the two families (as complexes) must be exactly the
    shorter bouquet's facets coned with y alone.
    """
    k = c.k
    if k[0] < 2:
        raise ValueError("cycle 1 not extendable; choose an ordering with k1 >= 2")
    n = c.n
    k1 = k[0]
    x = c.flat_index(1, 2 * k1 + 1)
    y = c.flat_index(1, 2 * k1)

    target = facets_closed_form(c).facet_sets

    shorter = build_from_k((k1 - 1,) + k[1:])
    relabel_shorter = [c.flat_index(i, j) for (i, j) in shorter.edge_labels]
    cone_family = {
        frozenset(relabel_shorter[v] for v in f) | {x, y}
        for f in facets_closed_form(shorter).facets
    }

    if n >= 2:
        dropped = build_from_k(k[1:])
        relabel_dropped = [c.flat_index(i + 1, j) for (i, j) in dropped.edge_labels]
        dropped_facets = [
            frozenset(relabel_dropped[v] for v in f)
            for f in facets_closed_form(dropped).facets
        ]
    else:
        dropped_facets = [frozenset()]  # no remaining cycles: just the empty face
    cycle1 = cycle_parts(c, 1)
    rest_of_cycle1 = (cycle1.odd - {x}) | cycle1.even
    join_family = {f | rest_of_cycle1 for f in dropped_facets}

    union_ok = _maximal(cone_family | join_family) == target
    if n >= 2:
        # both families consist of full-size facets, so demand exact equality
        union_ok = union_ok and (cone_family | join_family) == target

    expected_intersection = {f - {x} for f in cone_family}
    pairwise = {a & b for a in cone_family for b in join_family}
    intersection_ok = _maximal(pairwise) == expected_intersection

    return DecompositionReport(
        union_ok=union_ok,
        intersection_ok=intersection_ok,
        facet_count=len(target),
        cone_family_size=len(cone_family),
        join_family_size=len(join_family),
    )
