"""Two-dimensional simplicial complexes generated by 3-uniform hypergraphs.

A set of vertex triples (the faces) generates a 2-complex by downward
closure: every pair inside a face becomes an edge, and all vertices are
kept even when isolated.  The vertices-and-edges graph is the shadow
graph.  Vertices are 1-indexed throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Face = tuple[int, int, int]
Edge = tuple[int, int]

__all__ = [
    "Face",
    "Edge",
    "Complex",
    "ComplexParseError",
    "ModelKind",
    "triple_rank",
    "triple_unrank",
    "pair_rank",
    "downward_closure",
    "generate",
    "connected_components",
    "count_isolated_vertices",
    "serialize",
    "parse",
]


def triple_rank(a: int, b: int, c: int, n: int) -> int:
    """Colexicographic rank of the triple a<b<c among all triples of [n].

    Ranks are stable under growing n: a triple keeps its rank when
    vertices are added, so tables indexed by rank never need remapping.
    """
    if not (1 <= a < b < c <= n):
        raise ValueError(f"need 1 <= a < b < c <= n, got ({a},{b},{c}) with n={n}")
    return math.comb(c - 1, 3) + math.comb(b - 1, 2) + (a - 1)


def triple_unrank(index: int, n: int) -> Face:
    """Inverse of triple_rank."""
    total = math.comb(n, 3)
    if not (0 <= index < total):
        raise ValueError(f"triple index {index} out of range [0, {total})")
    c = 3
    while math.comb(c, 3) <= index:
        c += 1
    rem = index - math.comb(c - 1, 3)
    b = 2
    while math.comb(b, 2) <= rem:
        b += 1
    a = rem - math.comb(b - 1, 2) + 1
    return (a, b, c)


def _unrank_triples(ranks: np.ndarray, n: int) -> list[Face]:
    """Vectorized triple_unrank for an array of ranks."""
    if len(ranks) == 0:
        return []
    ks = np.arange(n + 1, dtype=np.int64)
    binom3 = ks * (ks - 1) * (ks - 2) // 6
    binom2 = ks * (ks - 1) // 2
    r = np.asarray(ranks, dtype=np.int64)
    c = np.searchsorted(binom3, r, side="right")  # smallest k with binom3[k] > r
    rem = r - binom3[c - 1]
    b = np.searchsorted(binom2, rem, side="right")
    a = rem - binom2[b - 1] + 1
    return list(zip(a.tolist(), b.tolist(), c.tolist()))


def pair_rank(u: int, v: int) -> int:
    """Colexicographic rank of the pair u<v (independent of n)."""
    if not (1 <= u < v):
        raise ValueError(f"need 1 <= u < v, got ({u},{v})")
    return (v - 1) * (v - 2) // 2 + (u - 1)


class Complex:
    """Immutable 2-complex: faces plus the edges they induce.

    Edges receive dense ids in order of first appearance while faces are
    scanned (sub-pairs of each face in the order ab, ac, bc).  With
    ``full_skeleton`` all remaining vertex pairs are appended afterwards
    in lexicographic order, modelling complexes built on a complete
    1-skeleton.
    """

    __slots__ = ("n", "faces", "edges", "edge_ids", "edge_faces",
                 "full_skeleton", "_adj_bits")

    def __init__(self, n: int, faces: Sequence[Face], full_skeleton: bool = False):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        face_list: list[Face] = []
        seen: set[Face] = set()
        for f in faces:
            a, b, c = f
            if not (1 <= a < b < c <= n):
                raise ValueError(f"invalid face {f!r} for n={n}")
            t = (a, b, c)
            if t in seen:
                raise ValueError(f"duplicate face {t!r}")
            seen.add(t)
            face_list.append(t)

        edge_ids: dict[Edge, int] = {}
        edges: list[Edge] = []
        edge_faces: list[list[int]] = []
        for fi, (a, b, c) in enumerate(face_list):
            for e in ((a, b), (a, c), (b, c)):
                eid = edge_ids.get(e)
                if eid is None:
                    eid = len(edges)
                    edge_ids[e] = eid
                    edges.append(e)
                    edge_faces.append([])
                edge_faces[eid].append(fi)
        if full_skeleton:
            for v in range(1, n + 1):
                for u in range(1, v):
                    e = (u, v)
                    if e not in edge_ids:
                        edge_ids[e] = len(edges)
                        edges.append(e)
                        edge_faces.append([])

        self.n = n
        self.faces: tuple[Face, ...] = tuple(face_list)
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.edge_ids = edge_ids
        self.edge_faces: tuple[tuple[int, ...], ...] = tuple(tuple(fs) for fs in edge_faces)
        self.full_skeleton = full_skeleton
        self._adj_bits: list[int] | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return (self.n == other.n
                and self.full_skeleton == other.full_skeleton
                and set(self.faces) == set(other.faces))

    def __repr__(self) -> str:
        skel = ", full_skeleton" if self.full_skeleton else ""
        return f"Complex(n={self.n}, faces={len(self.faces)}, edges={len(self.edges)}{skel})"

    def edge_id(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        eid = self.edge_ids.get(e)
        if eid is None:
            raise ValueError(f"edge {e!r} not in complex")
        return eid

    def adjacency_bits(self) -> list[int]:
        """Per-vertex neighbor bitsets over the shadow graph (index = vertex)."""
        if self._adj_bits is None:
            adj = [0] * (self.n + 1)
            for (u, v) in self.edges:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            self._adj_bits = adj
        return self._adj_bits

    def neighbors(self, v: int) -> list[int]:
        """Shadow-graph neighbors of v in ascending order."""
        bits = self.adjacency_bits()[v]
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out


def downward_closure(faces: Sequence[Face], n: int) -> Complex:
    """Build the 2-complex generated by the given faces on n vertices."""
    return Complex(n, faces)


@dataclass(frozen=True)
class ModelKind:
    """Random model selector: which faces, and whether the 1-skeleton is full."""

    kind: str  # "binomial" | "uniform" | "lm" | "lm-uniform"
    p: float | None = None
    m: int | None = None

    def __post_init__(self):
        if self.kind in ("binomial", "lm"):
            if self.p is None or not (0.0 <= self.p <= 1.0):
                raise ValueError(f"model {self.kind!r} needs p in [0,1], got {self.p!r}")
            if self.m is not None:
                raise ValueError(f"model {self.kind!r} takes p, not m")
        elif self.kind in ("uniform", "lm-uniform"):
            if self.m is None or self.m < 0:
                raise ValueError(f"model {self.kind!r} needs m >= 0, got {self.m!r}")
            if self.p is not None:
                raise ValueError(f"model {self.kind!r} takes m, not p")
        else:
            raise ValueError(f"unknown model kind {self.kind!r}")

    @property
    def full_skeleton(self) -> bool:
        return self.kind in ("lm", "lm-uniform")

    @staticmethod
    def binomial(p: float) -> "ModelKind":
        return ModelKind("binomial", p=p)

    @staticmethod
    def uniform(m: int) -> "ModelKind":
        return ModelKind("uniform", m=m)

    @staticmethod
    def linial_meshulam(p: float) -> "ModelKind":
        return ModelKind("lm", p=p)

    @staticmethod
    def linial_meshulam_uniform(m: int) -> "ModelKind":
        return ModelKind("lm-uniform", m=m)


def generate(n: int, model: ModelKind, seed: int) -> Complex:
    """Sample a random complex; a pure function of (n, model, seed)."""
    total = math.comb(n, 3)
    rng = np.random.default_rng(seed)
    if model.kind in ("binomial", "lm"):
        if total == 0:
            ranks = np.empty(0, dtype=np.int64)
        else:
            ranks = np.flatnonzero(rng.random(total) < model.p)
    else:
        m = model.m
        assert m is not None
        if m > total:
            raise ValueError(f"m={m} exceeds number of triples {total}")
        ranks = np.sort(rng.choice(total, size=m, replace=False))
    faces = _unrank_triples(ranks, n)
    return Complex(n, faces, full_skeleton=model.full_skeleton)


def connected_components(c: Complex) -> tuple[int, list[int]]:
    """Component count and per-vertex labels of the shadow graph.

    Isolated vertices form their own (trivial) components.  Labels are
    dense 0-based ids assigned by smallest vertex in each component.
    """
    parent = list(range(c.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v) in c.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            # keep the smaller vertex as the root
            if ru > rv:
                ru, rv = rv, ru
            parent[rv] = ru

    labels = [0] * c.n
    label_of_root: dict[int, int] = {}
    for v in range(1, c.n + 1):
        r = find(v)
        if r not in label_of_root:
            label_of_root[r] = len(label_of_root)
        labels[v - 1] = label_of_root[r]
    return len(label_of_root), labels


def count_isolated_vertices(c: Complex) -> int:
    """Vertices contained in no edge."""
    adj = c.adjacency_bits()
    return sum(1 for v in range(1, c.n + 1) if adj[v] == 0)


def serialize(c: Complex) -> str:
    """Text form: header "n F" then one "a b c" line per face.

    Complexes with a full 1-skeleton carry a third header token "full" so
    the round-trip preserves them; plain downward closures use the bare
    two-token header.
    """
    header = f"{c.n} {len(c.faces)}"
    if c.full_skeleton:
        header += " full"
    lines = [header]
    lines.extend(f"{a} {b} {c_}" for (a, b, c_) in c.faces)
    return "\n".join(lines) + "\n"


class ComplexParseError(ValueError):
    """Malformed complex file; message carries the offending line number."""


def parse(text: str) -> Complex:
    """Inverse of serialize; raises ComplexParseError with a line number."""
    lines = text.splitlines()
    if not lines:
        raise ComplexParseError("line 1: empty input")
    head = lines[0].split()
    full_skeleton = False
    if len(head) == 3 and head[2] == "full":
        full_skeleton = True
        head = head[:2]
    if len(head) != 2:
        raise ComplexParseError(f"line 1: expected 'n F', got {lines[0]!r}")
    try:
        n, nfaces = int(head[0]), int(head[1])
    except ValueError:
        raise ComplexParseError(f"line 1: non-integer header {lines[0]!r}") from None
    if n < 0 or nfaces < 0:
        raise ComplexParseError("line 1: negative header values")
    if len(lines) < nfaces + 1:
        raise ComplexParseError(f"line {len(lines) + 1}: expected {nfaces} face lines, "
                                f"found {len(lines) - 1}")
    for j, extra in enumerate(lines[nfaces + 1:], start=nfaces + 2):
        if extra.strip():
            raise ComplexParseError(f"line {j}: trailing content after {nfaces} faces")

    faces: list[Face] = []
    seen: set[Face] = set()
    for i in range(nfaces):
        lineno = i + 2
        parts = lines[i + 1].split()
        if len(parts) != 3:
            raise ComplexParseError(f"line {lineno}: expected 3 vertices, got {lines[i + 1]!r}")
        try:
            a, b, c = (int(x) for x in parts)
        except ValueError:
            raise ComplexParseError(f"line {lineno}: non-integer vertex") from None
        if not (1 <= a < b < c <= n):
            raise ComplexParseError(f"line {lineno}: need 1 <= a < b < c <= {n}, "
                                    f"got ({a},{b},{c})")
        if (a, b, c) in seen:
            raise ComplexParseError(f"line {lineno}: duplicate face ({a},{b},{c})")
        seen.add((a, b, c))
        faces.append((a, b, c))
    return Complex(n, faces, full_skeleton=full_skeleton)
