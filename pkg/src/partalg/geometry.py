"""Integer alcove geometry for branching-graph vertices.

A vertex (lam, k) embeds at parameter n as the staircase point

    x_0 = n - |lam|          (k even)      x_i = lam_i - i   (i >= 1),
    x_0 = n - 1 - |lam|      (k odd)

so the coordinates x_1 > x_2 > ... decrease strictly and settle at -i.  The
point lies on wall j when x_0 = x_j, and in alcove j when x_{j-1} > x_0 > x_j
(alcove 1 means x_0 > x_1); exactly one of these holds.

Swapping x_0 with x_j is the reflection s_{0,j}.  Applied to an embedded
vertex it lands back in the image of the embedding exactly when the rows read
off from the swapped coordinates form a partition that fits the level; the
head coordinate is consistent automatically.  These swaps generate everything
the block and decomposition machinery needs.

Branching edges move the embedded point by one unit in one coordinate: into
an even level the step adds epsilon_j, into an odd level it subtracts it.
The residue of the step is x_j at the target when epsilon_j was added and
n - 1 - x_j when it was subtracted; the resulting residue sequence matches
the path's content vector evaluated at z = n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .branching import Path, Vertex, check_path, is_vertex
from .partitions import Partition, check_partition, row

SAME_ALCOVE = "same_alcove"
WALL_J = "wall_j"
WALL_J_MINUS_1 = "wall_j_minus_1"


@dataclass(frozen=True)
class EmbeddedPoint:
    """phi_n of a vertex: head coordinate plus the staircase of the shape."""

    head: int
    shape: Partition
    level: int
    n: int

    def coord(self, i: int) -> int:
        if i < 0:
            raise ValueError("coordinate index must be nonnegative")
        if i == 0:
            return self.head
        return row(self.shape, i) - i

    @property
    def extent(self) -> int:
        """Beyond this index every coordinate equals -i."""
        return len(self.shape)

    def coords(self, upto: int) -> tuple[int, ...]:
        return tuple(self.coord(i) for i in range(upto + 1))

    def __str__(self):
        upto = max(self.extent + 1, 2)
        body = ",".join(str(self.coord(i)) for i in range(1, upto + 1))
        return f"({self.coord(0)} | {body},...)"


def embed(v: Vertex, n: int) -> EmbeddedPoint:
    lam, k = v
    if n < 0:
        raise ValueError("parameter n must be a nonnegative integer")
    head = (n if k % 2 == 0 else n - 1) - sum(lam)
    return EmbeddedPoint(head, lam, k, n)


class AlcovePosition(NamedTuple):
    kind: str  # "alcove" or "wall"
    index: int

    def __str__(self):
        return f"{self.kind} {self.index}"


def classify(x: EmbeddedPoint) -> AlcovePosition:
    """Locate x on a wall or in an alcove; exactly one applies.

    The scan terminates because the staircase coordinates eventually drop
    below any fixed head value.
    """
    j = 1
    while True:
        xj = x.coord(j)
        if x.head == xj:
            return AlcovePosition("wall", j)
        if x.head > xj:
            return AlcovePosition("alcove", j)
        j += 1


def reflect(x: EmbeddedPoint, j: int) -> tuple[int, ...]:
    """Coordinates of s_{0,j}(x), as a prefix; beyond it coordinates are -i."""
    if j < 1:
        raise ValueError("reflection index must be at least 1")
    upto = max(x.extent, j) + 1
    coords = list(x.coords(upto))
    coords[0], coords[j] = coords[j], coords[0]
    return tuple(coords)


def vertex_from_coords(coords: tuple[int, ...], level: int, n: int) -> Vertex | None:
    """Read a vertex back off raw coordinates, or None when they leave the
    embedded image (rows must form a partition that fits the level).

    The trailing coordinates are implicitly -i, so the prefix must carry any
    nonzero rows.
    """
    parts = [coords[i] + i for i in range(1, len(coords))]
    if any(p < 0 for p in parts):
        return None
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return None
    lam = tuple(p for p in parts if p)  # zeros form a suffix by the check above
    if not is_vertex(lam, level):
        return None
    expected_head = (n if level % 2 == 0 else n - 1) - sum(lam)
    if coords[0] != expected_head:
        return None
    return Vertex(lam, level)


def reflected_vertex(v: Vertex, n: int, j: int) -> Vertex | None:
    """Apply s_{0,j} to phi_n(v) and convert back, if possible."""
    return vertex_from_coords(reflect(embed(v, n), j), v.level, n)


def _reflected_coord(x: EmbeddedPoint, j: int, i: int) -> int:
    """Coordinate i of s_{0,j}(x)."""
    if i == 0:
        return x.coord(j)
    if i == j:
        return x.coord(0)
    return x.coord(i)


def reflection_equal(x: EmbeddedPoint, y: EmbeddedPoint, j: int) -> bool:
    """True when y = s_{0,j}(x)."""
    upto = max(x.extent, y.extent, j) + 1
    return all(_reflected_coord(x, j, i) == y.coord(i) for i in range(upto + 1))


def points_equal(x: EmbeddedPoint, y: EmbeddedPoint) -> bool:
    upto = max(x.extent, y.extent)
    return x.coords(upto) == y.coords(upto)


def reflection_index(v: Vertex, w: Vertex, n: int) -> int | None:
    """The j with phi_n(w) = s_{0,j}(phi_n(v)), if one exists."""
    if v.level != w.level:
        raise ValueError("vertices on different levels")
    x, y = embed(v, n), embed(w, n)
    for j in range(1, max(x.extent, y.extent) + 2):
        if reflection_equal(x, y, j):
            return j
    return None


def npair_reflection_equiv(v: Vertex, w: Vertex, n: int) -> bool:
    """True when the embedded points differ by a head-row swap s_{0,j}."""
    return reflection_index(v, w, n) is not None


def is_n_pair(lam: Partition, mu: Partition, n: int) -> bool:
    """True when mu is lam plus one horizontal strip whose last node has
    content n - |lam|."""
    lam, mu = check_partition(lam), check_partition(mu)
    if n < 0:
        raise ValueError("parameter n must be a nonnegative integer")
    if lam == mu:
        return False
    rows = max(len(lam), len(mu))
    diff_rows = [i for i in range(1, rows + 1) if row(lam, i) != row(mu, i)]
    if len(diff_rows) != 1:
        return False
    i = diff_rows[0]
    if row(mu, i) < row(lam, i):
        return False
    last = (i, row(mu, i))
    return last[1] - last[0] == n - sum(lam)


class EdgeCase(NamedTuple):
    """Diagnosis of a branching edge seen from an alcove-j target."""

    case: str            # SAME_ALCOVE, WALL_J or WALL_J_MINUS_1
    delta: int           # +1 or -1: the source is target -/+ nothing, i.e.
    coordinate: int      # source = target + delta * epsilon_coordinate


def _step(x: EmbeddedPoint, y: EmbeddedPoint) -> tuple[int, int]:
    """Return (delta, i) with y = x + delta*epsilon_i, else raise."""
    upto = max(x.extent, y.extent) + 1
    diffs = [(i, y.coord(i) - x.coord(i))
             for i in range(upto + 1) if y.coord(i) != x.coord(i)]
    if len(diffs) != 1 or abs(diffs[0][1]) != 1:
        raise ValueError("points do not differ by a single unit step")
    i, delta = diffs[0]
    return delta, i


def edge_case(x: EmbeddedPoint, y: EmbeddedPoint) -> EdgeCase:
    """Classify the source y of an edge y -> x whose target lies in an alcove.

    The source sits in the same alcove, on the wall bounding it with the
    previous alcove, or on the wall bounding it with the next one; no other
    position occurs.
    """
    kind, j = classify(x)
    if kind != "alcove":
        raise ValueError("edge classification needs an alcove target")
    if y.level != x.level - 1 or y.n != x.n:
        raise ValueError("not a branching edge")
    delta, i = _step(x, y)
    pos = classify(y)
    if pos == ("alcove", j):
        return EdgeCase(SAME_ALCOVE, delta, i)
    if pos == ("wall", j):
        return EdgeCase(WALL_J, delta, i)
    if j > 1 and pos == ("wall", j - 1):
        return EdgeCase(WALL_J_MINUS_1, delta, i)
    raise ValueError(f"edge source at {pos} breaks the alcove-{j} trichotomy")


def embedded_path(t: Path, n: int) -> list[EmbeddedPoint]:
    return [embed(Vertex(shape, i), n) for i, shape in enumerate(t)]


def step_residues(t: Path, n: int) -> tuple[int, ...]:
    """Residue of each step of the path, read off the embedded points.

    A step into an even level adds epsilon_j and contributes the new x_j; a
    step into an odd level subtracts epsilon_j and contributes n - 1 - x_j.
    """
    pts = embedded_path(check_path(t), n)
    out = []
    for i in range(1, len(pts)):
        delta, j = _step(pts[i - 1], pts[i])
        xj = pts[i].coord(j)
        out.append(xj if delta == 1 else n - 1 - xj)
    return tuple(out)


def geometric_residue_equivalent(s: Path, t: Path, n: int) -> bool:
    """Decide residue equality of two same-length paths by alcove geometry.

    The paths must agree outside disagreement runs; each run is governed by a
    single wall j: it opens after an agreement point on wall j, the two paths
    are point-by-point head-row swaps s_{0,j} of each other inside (hence sit
    in alcoves j and j+1 in some order), and if the run closes before the top
    level the closing agreement point lies on wall j again.
    """
    s, t = check_path(s), check_path(t)
    if len(s) != len(t):
        raise ValueError("paths of different lengths")
    xs = embedded_path(s, n)
    ys = embedded_path(t, n)
    top = len(s) - 1
    i = 1
    while i <= top:
        if s[i] == t[i]:
            i += 1
            continue
        a = i - 1  # s and t agree here (level 0 and 1 always agree)
        pos = classify(xs[a])
        if pos.kind != "wall":
            return False
        j = pos.index
        while i <= top and s[i] != t[i]:
            if not reflection_equal(xs[i], ys[i], j):
                return False
            i += 1
        if i < top:
            # closing agreement point, interior to the pair of paths
            if classify(xs[i]) != ("wall", j):
                return False
    return True
