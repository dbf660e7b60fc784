"""Exact F2 homology of 2-complexes, and the 0-1 edge functions behind it.

beta0 is reported as (components - 1) so that "vanishes" means 0.  A
complex is homologically connected when its shadow graph is connected on
all n vertices and beta1 = 0.  beta1 > 0 is witnessed concretely by a bad
edge function: one that is even on the boundary of every face yet not
induced by any 0-1 function on the vertices, equivalently one that sums
to an odd value around some shadow-graph cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Complex, Edge, connected_components
from .gf2 import EdgeFunction, Gf2Matrix, RankAccumulator

__all__ = [
    "HomologyReport",
    "SearchBudgetExceeded",
    "boundary_matrix_d2",
    "coboundary_matrix_d0",
    "betti_numbers",
    "betti1_via_cochains",
    "is_hom_connected",
    "find_bad_function",
    "verify_bad_function",
    "is_coboundary",
    "minimal_bad_support",
    "homology_report",
    "support_edges",
]


def _face_masks(c: Complex) -> list[int]:
    masks = []
    eids = c.edge_ids
    for (a, b, cc) in c.faces:
        masks.append((1 << eids[(a, b)]) | (1 << eids[(a, cc)]) | (1 << eids[(b, cc)]))
    return masks


def boundary_matrix_d2(c: Complex) -> Gf2Matrix:
    """Face-boundary matrix: one row per face, three 1-bits at its edge ids."""
    return Gf2Matrix(_face_masks(c), len(c.edges))


def coboundary_matrix_d0(c: Complex) -> Gf2Matrix:
    """Vertex-to-edge coboundary: one row per edge, 1-bits at its endpoints."""
    rows = [(1 << (u - 1)) | (1 << (v - 1)) for (u, v) in c.edges]
    return Gf2Matrix(rows, c.n)


def betti1_via_cochains(c: Complex) -> int:
    """beta1 as dim ker(edge->face coboundary) - rank(vertex->edge coboundary).

    Both ranks come from their own eliminations (the edge->face map is
    eliminated in transposed form), independent of the boundary-rank
    identity used by betti_numbers.
    """
    e = len(c.edges)
    ker_d1 = e - boundary_matrix_d2(c).transpose().rank()
    rank_d0 = coboundary_matrix_d0(c).rank()
    return ker_d1 - rank_d0


def betti_numbers(c: Complex) -> tuple[int, int]:
    """(beta0, beta1) over F2, with beta0 = components - 1.

    beta1 = E - n + components - rank(face boundary matrix).  The
    cochain-side computation is run as well and any disagreement raises,
    so a silent rank bug cannot slip through.
    """
    ncomp, _ = connected_components(c)
    e = len(c.edges)
    r2 = boundary_matrix_d2(c).rank()
    b0 = max(ncomp - 1, 0)
    b1 = e - c.n + ncomp - r2
    b1_co = betti1_via_cochains(c)
    if b1 != b1_co or b1 < 0:
        raise RuntimeError(f"inconsistent beta1: boundary-rank route {b1}, cochain route {b1_co}")
    return b0, b1


def is_hom_connected(c: Complex) -> bool:
    """True iff beta0 = 0 and beta1 = 0 (shadow graph connected on all n vertices)."""
    b0, b1 = betti_numbers(c)
    return b0 == 0 and b1 == 0


def _spanning_forest(c: Complex) -> tuple[list[int], list[int], list[int]]:
    """BFS forest (parent, depth, visit order), roots = lowest vertex per component."""
    n = c.n
    parent = [0] * (n + 1)
    depth = [0] * (n + 1)
    order: list[int] = []
    seen = [False] * (n + 1)
    for root in range(1, n + 1):
        if seen[root]:
            continue
        seen[root] = True
        parent[root] = root
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            order.append(v)
            for w in c.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
    return parent, depth, order


def _potentials(c: Complex, bits: int) -> list[int]:
    """Vertex 0-1 potentials whose coboundary matches the function on tree edges."""
    parent, _, order = _spanning_forest(c)
    pot = [0] * (c.n + 1)
    eids = c.edge_ids
    for v in order:
        u = parent[v]
        if u != v:
            e = (u, v) if u < v else (v, u)
            pot[v] = pot[u] ^ ((bits >> eids[e]) & 1)
    return pot


def is_coboundary(c: Complex, f: EdgeFunction) -> bool:
    """Whether f is induced by a 0-1 vertex function."""
    pot = _potentials(c, f.bits)
    for eid, (u, v) in enumerate(c.edges):
        if ((f.bits >> eid) & 1) != (pot[u] ^ pot[v]):
            return False
    return True


def find_bad_function(c: Complex) -> EdgeFunction | None:
    """Some bad 0-1 edge function, or None when every cocycle is a coboundary.

    Scans a basis of the cocycle space (functions even on every face) and
    returns the first member that no vertex potential induces; a witness
    exists exactly when beta1 > 0.
    """
    e = len(c.edges)
    if e == 0:
        return None
    for z in boundary_matrix_d2(c).nullspace_basis():
        f = EdgeFunction(z, e)
        if not is_coboundary(c, f):
            return f
    return None


def verify_bad_function(c: Complex, f: EdgeFunction) -> tuple[bool, list[Edge] | None]:
    """Check badness and, when bad, produce an odd cycle as a witness.

    Returns (ok, odd_cycle): ok iff every face boundary carries an even
    number of 1s and some shadow-graph cycle has odd value sum.  The cycle
    comes from the BFS spanning forest (roots at the lowest vertex of each
    component): the first non-tree edge, in edge-id order, whose endpoint
    potentials disagree with f closes it.
    """
    e = len(c.edges)
    if f.length != e:
        raise ValueError(f"edge function has length {f.length}, complex has {e} edges")
    for mask in _face_masks(c):
        if (mask & f.bits).bit_count() & 1:
            return False, None

    parent, depth, order = _spanning_forest(c)
    pot = [0] * (c.n + 1)
    eids = c.edge_ids
    for v in order:
        u = parent[v]
        if u != v:
            key = (u, v) if u < v else (v, u)
            pot[v] = pot[u] ^ ((f.bits >> eids[key]) & 1)

    for eid, (u, v) in enumerate(c.edges):
        if parent[v] == u or parent[u] == v:
            continue
        if ((f.bits >> eid) & 1) != (pot[u] ^ pot[v]):
            cycle = [(u, v)]
            x, y = u, v
            while depth[x] > depth[y]:
                cycle.append((min(x, parent[x]), max(x, parent[x])))
                x = parent[x]
            while depth[y] > depth[x]:
                cycle.append((min(y, parent[y]), max(y, parent[y])))
                y = parent[y]
            while x != y:
                cycle.append((min(x, parent[x]), max(x, parent[x])))
                cycle.append((min(y, parent[y]), max(y, parent[y])))
                x, y = parent[x], parent[y]
            return True, cycle
    return False, None


class SearchBudgetExceeded(RuntimeError):
    """Minimal-support search refused: quotient dimension above the budget."""


def _cut_space_basis(c: Complex) -> list[int]:
    """Independent vertex-star masks spanning the coboundary space."""
    acc = RankAccumulator()
    basis = []
    eids = c.edge_ids
    stars = [0] * (c.n + 1)
    for (u, v) in c.edges:
        bit = 1 << eids[(u, v)]
        stars[u] |= bit
        stars[v] |= bit
    for v in range(1, c.n + 1):
        if stars[v] and acc.insert(stars[v]):
            basis.append(stars[v])
    return basis


def minimal_bad_support(
    c: Complex, k_max: int, budget: int = 24
) -> tuple[EdgeFunction, int] | None:
    """Bad function of minimum support size, if that minimum is <= k_max.

    Enumerates the cocycle space as cosets of the coboundary space: every
    non-zero combination of quotient representatives, shifted through the
    whole coboundary space, with the minimum weight tracked per coset.
    This is a brute-force oracle for tiny instances; when the quotient
    dimension (= beta1) exceeds ``budget`` the search refuses with
    SearchBudgetExceeded rather than returning None.
    """
    e = len(c.edges)
    if e == 0:
        return None
    kernel = boundary_matrix_d2(c).nullspace_basis()
    image = _cut_space_basis(c)
    acc = RankAccumulator()
    for b in image:
        acc.insert(b)
    quotient = [k for k in kernel if acc.insert(k)]
    q = len(quotient)
    if q == 0:
        return None
    if q > budget:
        raise SearchBudgetExceeded(
            f"quotient dimension {q} exceeds search budget {budget}")

    best_bits = -1
    best_w = e + 1
    cur = 0
    gray_q = 0
    for i in range(1, 1 << q):
        g = i ^ (i >> 1)
        cur ^= quotient[(g ^ gray_q).bit_length() - 1]
        gray_q = g
        w = cur.bit_count()
        if w < best_w or (w == best_w and cur < best_bits):
            best_bits, best_w = cur, w
        shifted = cur
        gray_i = 0
        for j in range(1, 1 << len(image)):
            h = j ^ (j >> 1)
            shifted ^= image[(h ^ gray_i).bit_length() - 1]
            gray_i = h
            w = shifted.bit_count()
            if w < best_w or (w == best_w and shifted < best_bits):
                best_bits, best_w = shifted, w
    if best_w > k_max:
        return None
    return EdgeFunction(best_bits, e), best_w


def support_edges(c: Complex, f: EdgeFunction) -> list[Edge]:
    """Edges where f is 1, as vertex pairs."""
    return [c.edges[i] for i in f.support()]


@dataclass
class HomologyReport:
    """Betti numbers plus a concrete witness when beta1 > 0."""

    beta0: int
    beta1: int
    hom_connected: bool
    witness_support: list[Edge] | None
    odd_cycle: list[Edge] | None

    def to_dict(self) -> dict:
        return {
            "beta0": self.beta0,
            "beta1": self.beta1,
            "hom_connected": self.hom_connected,
            "witness_support": ([list(e) for e in self.witness_support]
                                if self.witness_support is not None else None),
            "odd_cycle": ([list(e) for e in self.odd_cycle]
                          if self.odd_cycle is not None else None),
        }


def homology_report(c: Complex) -> HomologyReport:
    b0, b1 = betti_numbers(c)
    hom = b0 == 0 and b1 == 0
    witness_support = odd_cycle = None
    if b1 > 0:
        f = find_bad_function(c)
        if f is None:
            raise RuntimeError("beta1 > 0 but no bad function found")
        ok, cycle = verify_bad_function(c, f)
        if not ok:
            raise RuntimeError("constructed bad function failed verification")
        witness_support = support_edges(c, f)
        odd_cycle = cycle
    return HomologyReport(b0, b1, hom, witness_support, odd_cycle)
