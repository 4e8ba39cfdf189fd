"""Lattice polytopes: V- and H-representations, face lattice, enumeration.

Polytopes are always full-dimensional with vertices in Z^n; the lattice is
fixed as Z^n.  Facet enumeration works by an exhaustive supporting
hyperplane scan over n-point subsets, which is exact and entirely adequate
at the scale this package targets (dimension at most ~4, a few dozen
vertices).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .linalg import (affine_rank, det, mat_rank, nullspace_vector,
                     primitive_integer)


@dataclass(frozen=True)
class HalfSpace:
    """Inward halfspace <x, normal> + offset >= 0 with primitive normal."""

    normal: tuple[int, ...]
    offset: int

    def value(self, point, dilation: int = 1):
        return sum(a * b for a, b in zip(point, self.normal)) + dilation * self.offset


@dataclass(frozen=True)
class Face:
    """A face of a polytope, identified by its vertex set.

    The empty face has ``dim == -1`` and an empty vertex set; the polytope
    itself appears as the top face.  ``containing_facets`` indexes into the
    polytope's halfspace list.
    """

    vertex_indices: frozenset[int]
    dim: int
    containing_facets: frozenset[int]

    @property
    def rank(self) -> int:
        return self.dim + 1


class FaceLattice:
    """All faces of a polytope as a ranked poset ordered by inclusion."""

    def __init__(self, polytope: Polytope, faces: list[Face]):
        self.polytope = polytope
        self.faces = tuple(faces)
        self._by_vertices = {f.vertex_indices: i for i, f in enumerate(self.faces)}
        self.empty_index = self._by_vertices[frozenset()]
        self.top_index = max(range(len(self.faces)), key=lambda i: self.faces[i].dim)

    def __len__(self):
        return len(self.faces)

    def index_of(self, vertex_indices) -> int:
        return self._by_vertices[frozenset(vertex_indices)]

    def leq(self, i: int, j: int) -> bool:
        return self.faces[i].vertex_indices <= self.faces[j].vertex_indices

    def faces_of_dim(self, dim: int) -> list[int]:
        return [i for i, f in enumerate(self.faces) if f.dim == dim]

    def nonempty(self) -> list[int]:
        return [i for i, f in enumerate(self.faces) if f.dim >= 0]

    def interval(self, low: int, high: int) -> list[int]:
        return [i for i in range(len(self.faces)) if self.leq(low, i) and self.leq(i, high)]

    def f_vector(self) -> tuple[int, ...]:
        """Face counts (f_0, ..., f_n) including the polytope itself."""
        n = self.faces[self.top_index].dim
        counts = [0] * (n + 1)
        for f in self.faces:
            if f.dim >= 0:
                counts[f.dim] += 1
        return tuple(counts)

    def maximal_proper_subfaces(self, i: int) -> list[int]:
        f = self.faces[i]
        return [j for j in self.faces_of_dim(f.dim - 1)
                if self.faces[j].vertex_indices < f.vertex_indices]


class Polytope:
    """Full-dimensional lattice polytope with derived H-representation."""

    def __init__(self, vertices, halfspaces):
        self.vertices: tuple[tuple[int, ...], ...] = tuple(tuple(v) for v in vertices)
        self.halfspaces: tuple[HalfSpace, ...] = tuple(halfspaces)
        self.ambient_dim = len(self.vertices[0])

    @property
    def dim(self) -> int:
        return self.ambient_dim

    @cached_property
    def face_lattice(self) -> FaceLattice:
        return face_lattice(self)

    @cached_property
    def simple(self) -> bool:
        return is_simple(self)

    def top_face(self) -> Face:
        lat = self.face_lattice
        return lat.faces[lat.top_index]

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, obj: dict) -> Polytope:
        return build_polytope(obj["vertices"])

    def __repr__(self):
        return f"Polytope(dim={self.ambient_dim}, vertices={len(self.vertices)}, facets={len(self.halfspaces)})"


def build_polytope(points) -> Polytope:
    """Build a lattice polytope from integer points.

    Duplicates and non-extreme points are dropped.  The H-representation is
    found by scanning every hyperplane spanned by an affinely independent
    n-subset of the input and keeping those with all points on one closed
    side; normals are made primitive and inward.
    """
    pts = []
    for p in points:
        tp = tuple(p)
        for x in tp:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError("vertices must be lattice points")
        if tp not in pts:
            pts.append(tp)
    if not pts:
        raise ValueError("polytope not full-dimensional")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("vertices must share one ambient dimension")
    if affine_rank(pts) != n:
        raise ValueError("polytope not full-dimensional")

    halfspaces: set[HalfSpace] = set()
    for subset in combinations(range(len(pts)), n):
        base = pts[subset[0]]
        diffs = [[pts[i][k] - base[k] for k in range(n)] for i in subset[1:]]
        if n > 1:
            if mat_rank(diffs) != n - 1:
                continue
            normal = nullspace_vector(diffs)
            if normal is None:
                continue
        else:
            normal = [Fraction(1)]
        u = primitive_integer(normal)
        c = sum(a * b for a, b in zip(base, u))
        sides = [sum(a * b for a, b in zip(p, u)) - c for p in pts]
        if all(s >= 0 for s in sides):
            halfspaces.add(HalfSpace(u, -c))
        elif all(s <= 0 for s in sides):
            neg = tuple(-x for x in u)
            halfspaces.add(HalfSpace(neg, c))

    facets = sorted(halfspaces, key=lambda h: (h.normal, h.offset))
    vertices = []
    for p in pts:
        active = [h.normal for h in facets if h.value(p) == 0]
        if len(active) >= n and mat_rank(active) == n:
            vertices.append(p)
    vertices.sort()
    return Polytope(vertices, facets)


def face_lattice(P: Polytope) -> FaceLattice:
    """Faces as intersections of facet vertex sets, closed under meet."""
    facet_sets = [frozenset(i for i, v in enumerate(P.vertices) if h.value(v) == 0)
                  for h in P.halfspaces]
    top = frozenset(range(len(P.vertices)))
    found = {top}
    queue = [top]
    while queue:
        current = queue.pop()
        for fs in facet_sets:
            meet = current & fs
            if meet not in found:
                found.add(meet)
                queue.append(meet)
    found.add(frozenset())

    faces = []
    for vset in found:
        if vset:
            dim = affine_rank([P.vertices[i] for i in vset])
        else:
            dim = -1
        containing = frozenset(i for i, fs in enumerate(facet_sets) if vset <= fs and vset)
        faces.append(Face(vset, dim, containing))
    faces.sort(key=lambda f: (f.dim, sorted(f.vertex_indices)))
    return FaceLattice(P, faces)


def is_simple(P: Polytope) -> bool:
    """True when every vertex lies on exactly n facets."""
    n = P.ambient_dim
    lat = P.face_lattice
    return all(len(lat.faces[i].containing_facets) == n for i in lat.faces_of_dim(0))


def _box_for_face(P: Polytope, face: Face, q: int):
    verts = [P.vertices[i] for i in face.vertex_indices]
    lo = [q * min(v[k] for v in verts) for k in range(P.ambient_dim)]
    hi = [q * max(v[k] for v in verts) for k in range(P.ambient_dim)]
    return lo, hi


def iter_lattice_points(P: Polytope, face: Face, q: int, interior: bool = False):
    """Yield the lattice points of the dilate q*face.

    Closed mode: equality on the facets containing the face, >= 0 on the
    rest.  Interior mode (relative interior): equality on containing
    facets, strict inequality on all others.  The scan walks an integer
    bounding box with per-coordinate interval pruning.
    """
    if not isinstance(q, int) or q <= 0:
        raise ValueError("dilation must be positive")
    if face.dim < 0:
        raise ValueError("the empty face has no dilates")
    n = P.ambient_dim
    lo, hi = _box_for_face(P, face, q)
    constraints = []
    for idx, h in enumerate(P.halfspaces):
        mode = "eq" if idx in face.containing_facets else ("gt" if interior else "ge")
        constraints.append((h.normal, q * h.offset, mode))

    # extreme possible contribution of coordinates d..n-1 to each normal
    suffix_min = [[0] * (n + 1) for _ in constraints]
    suffix_max = [[0] * (n + 1) for _ in constraints]
    for ci, (u, _, _) in enumerate(constraints):
        for d in range(n - 1, -1, -1):
            a, b = u[d] * lo[d], u[d] * hi[d]
            suffix_min[ci][d] = suffix_min[ci][d + 1] + min(a, b)
            suffix_max[ci][d] = suffix_max[ci][d + 1] + max(a, b)

    point = [0] * n

    def scan(d, partial):
        if d == n:
            yield tuple(point)
            return
        for x in range(lo[d], hi[d] + 1):
            nxt = [p + u[d] * x for p, (u, _, _) in zip(partial, constraints)]
            feasible = True
            for ci, (_, _, mode) in enumerate(constraints):
                low = nxt[ci] + suffix_min[ci][d + 1]
                high = nxt[ci] + suffix_max[ci][d + 1]
                if mode == "eq":
                    if low > 0 or high < 0:
                        feasible = False
                        break
                elif mode == "ge":
                    if high < 0:
                        feasible = False
                        break
                else:
                    if high <= 0:
                        feasible = False
                        break
            if feasible:
                point[d] = x
                yield from scan(d + 1, nxt)
        point[d] = 0

    yield from scan(0, [c for _, c, _ in constraints])


def lattice_points(P: Polytope, face: Face, q: int, interior: bool = False):
    """All m in Z^n lying in the dilate q*face (or its relative interior)."""
    return list(iter_lattice_points(P, face, q, interior))


def pulling_triangulation(P: Polytope, anchor: str = "min"):
    """Triangulate combinatorially by pulling at one vertex per face.

    Each face is coned from its lowest-indexed vertex (or highest, with
    ``anchor="max"``) over the triangulations of its facets missing that
    vertex.  The result is a list of vertex-index tuples of length n+1.
    Only the face lattice is consulted, so the same triangulation is valid
    for any small deformation of the facets.
    """
    lat = P.face_lattice
    pick = min if anchor == "min" else max
    memo: dict[int, list[tuple[int, ...]]] = {}

    def simplices_of(face_index: int):
        if face_index in memo:
            return memo[face_index]
        face = lat.faces[face_index]
        if len(face.vertex_indices) == face.dim + 1:
            memo[face_index] = [tuple(sorted(face.vertex_indices))]
            return memo[face_index]
        v0 = pick(face.vertex_indices)
        out = []
        for sub in lat.maximal_proper_subfaces(face_index):
            if v0 not in lat.faces[sub].vertex_indices:
                for s in simplices_of(sub):
                    out.append((v0,) + s)
        memo[face_index] = out
        return out

    return simplices_of(lat.top_index)


def volume(P: Polytope) -> Fraction:
    """Lebesgue volume (fundamental domain of Z^n has volume 1)."""
    n = P.ambient_dim
    total = Fraction(0)
    for simplex in pulling_triangulation(P):
        base = P.vertices[simplex[0]]
        rows = [[P.vertices[i][k] - base[k] for k in range(n)] for i in simplex[1:]]
        total += abs(det(rows))
    return total / math.factorial(n)


def euler_characteristic(P: Polytope) -> int:
    """Alternating face count over nonempty faces; equals 1 for polytopes."""
    return sum((-1) ** P.face_lattice.faces[i].dim for i in P.face_lattice.nonempty())
