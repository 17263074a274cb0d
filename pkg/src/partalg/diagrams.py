"""Set-partition diagrams and the tower of partition algebras.

A diagram on m dots is a set partition of {1, ..., m, 1', ..., m'}.  The
unprimed points form the southern boundary, the primed points the northern
boundary; a primed point i' is encoded as the negative integer -i.  Points
order as 1 < 2 < ... < m < 1' < 2' < ... < m', and a diagram is stored
canonically as a tuple of blocks, each block sorted, blocks sorted by their
least element.

Levels of the tower: level k = 2m is the full diagram algebra on m dots;
level k = 2m-1 is the subalgebra of diagrams whose block containing m also
contains m'.  Multiplication stacks x on top of y, identifying the southern
row of x with the northern row of y; each connected component lying entirely
in the identified middle row is deleted and contributes one factor of z.

Coefficients live in ZPoly (integer polynomials in z), so all products are
exact.
"""

from __future__ import annotations

from .errors import ResourceLimitError
from .zpoly import ZPoly, parse_zpoly

DEFAULT_MAX_LEVEL = 14

Point = int  # i for southern i, -i for northern i'


def point_key(p: Point) -> tuple[int, int]:
    return (0, p) if p > 0 else (1, -p)


def dots_for_level(k: int) -> int:
    if k < 0:
        raise ValueError("level must be nonnegative")
    return (k + 1) // 2


class Diagram:
    """A set partition of the 2m boundary points, in canonical form."""

    __slots__ = ("dots", "blocks")

    def __init__(self, dots: int, blocks):
        seen: set[Point] = set()
        canon = []
        for block in blocks:
            block = tuple(sorted(block, key=point_key))
            if not block:
                raise ValueError("empty block")
            for p in block:
                if not isinstance(p, int) or p == 0 or abs(p) > dots:
                    raise ValueError(f"point {p} out of range for {dots} dots")
                if p in seen:
                    raise ValueError(f"point {p} repeated")
                seen.add(p)
            canon.append(block)
        if len(seen) != 2 * dots:
            raise ValueError("blocks do not cover all points")
        canon.sort(key=lambda b: point_key(b[0]))
        object.__setattr__(self, "dots", dots)
        object.__setattr__(self, "blocks", tuple(canon))

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    def __eq__(self, other):
        return (isinstance(other, Diagram)
                and self.dots == other.dots and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.dots, self.blocks))

    def sort_key(self):
        return tuple(tuple(point_key(p) for p in b) for b in self.blocks)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def involute(self) -> "Diagram":
        """Flip the diagram: swap primed and unprimed points."""
        return Diagram(self.dots, [[-p for p in b] for b in self.blocks])

    def has_joined_last_dot(self) -> bool:
        """True when m and m' share a block (membership in the odd level)."""
        m = self.dots
        if m == 0:
            return True
        for b in self.blocks:
            if m in b:
                return -m in b
        raise AssertionError("unreachable")

    def __str__(self):
        return format_diagram(self)

    __repr__ = __str__


def format_diagram(d: Diagram) -> str:
    """Render like [[1,2'],[2],[1']]; primes mark northern points."""
    def fmt(p):
        return str(p) if p > 0 else f"{-p}'"
    return "[" + ",".join("[" + ",".join(fmt(p) for p in b) + "]"
                          for b in d.blocks) + "]"


def parse_diagram(text: str, dots: int | None = None) -> Diagram:
    text = text.strip().replace(" ", "")
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"malformed diagram {text!r}")
    inner = text[1:-1]
    blocks: list[list[int]] = []
    points: set[int] = set()
    if inner:
        if not (inner.startswith("[") and inner.endswith("]")):
            raise ValueError(f"malformed diagram {text!r}")
        for chunk in inner[1:-1].split("],["):
            block = []
            for tok in chunk.split(","):
                if not tok:
                    raise ValueError(f"malformed diagram {text!r}")
                if tok.endswith("'"):
                    p = -int(tok[:-1])
                else:
                    p = int(tok)
                block.append(p)
            blocks.append(block)
            points.update(block)
    if dots is None:
        dots = max((abs(p) for p in points), default=0)
    return Diagram(dots, blocks)


def identity_diagram(m: int) -> Diagram:
    return Diagram(m, [[i, -i] for i in range(1, m + 1)])


def compose(x: Diagram, y: Diagram) -> tuple[Diagram, int]:
    """Stack x over y; return the resulting diagram and the number of
    deleted middle components."""
    if x.dots != y.dots:
        raise ValueError("diagrams on different dot counts")
    m = x.dots
    # slots 0..m-1 north, m..2m-1 middle, 2m..3m-1 south
    parent = list(range(3 * m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for block in x.blocks:
        slots = [(-p - 1) if p < 0 else (m + p - 1) for p in block]
        for s in slots[1:]:
            union(slots[0], s)
    for block in y.blocks:
        slots = [(m + (-p) - 1) if p < 0 else (2 * m + p - 1) for p in block]
        for s in slots[1:]:
            union(slots[0], s)

    components: dict[int, list[int]] = {}
    for slot in range(3 * m):
        components.setdefault(find(slot), []).append(slot)

    blocks = []
    deleted = 0
    for slots in components.values():
        pts = []
        for s in slots:
            if s < m:
                pts.append(-(s + 1))
            elif s >= 2 * m:
                pts.append(s - 2 * m + 1)
        if pts:
            blocks.append(pts)
        else:
            deleted += 1
    return Diagram(m, blocks), deleted


def _set_partitions(items):
    """All set partitions of items, blocks built left to right."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [sub[i] + [first]] + sub[i + 1:]
        yield [[first]] + sub


def enumerate_diagrams(k: int, max_level: int = DEFAULT_MAX_LEVEL) -> list[Diagram]:
    """Diagram basis of the level-k algebra, canonically sorted.

    Counts are Bell numbers: Bell(k) diagrams at level k, for both parities.
    """
    if k < 0:
        raise ValueError("level must be nonnegative")
    if k > max_level:
        raise ResourceLimitError(
            f"diagram enumeration at level {k} exceeds bound {max_level}")
    m = dots_for_level(k)
    if m == 0:
        return [Diagram(0, [])]
    points = [i for i in range(1, m + 1)] + [-i for i in range(1, m + 1)]
    out = []
    if k % 2 == 0:
        for blocks in _set_partitions(points):
            out.append(Diagram(m, blocks))
    else:
        # fuse m and m' into one super-point, then expand
        fused = [p for p in points if p not in (m, -m)]
        for blocks in _set_partitions(fused + [m]):
            expanded = [b + [-m] if m in b else b for b in blocks]
            out.append(Diagram(m, expanded))
    out.sort()
    return out


class AlgebraElement:
    """A ZPoly-linear combination of diagrams at a fixed level."""

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms=None):
        m = dots_for_level(level)
        clean: dict[Diagram, ZPoly] = {}
        for d, c in (terms or {}).items():
            if isinstance(c, int):
                c = ZPoly.const(c)
            if d.dots != m:
                raise ValueError(f"diagram {d} has wrong dot count for level {level}")
            if level % 2 == 1 and not d.has_joined_last_dot():
                raise ValueError(f"diagram {d} not in the odd level {level}")
            if c:
                clean[d] = clean.get(d, ZPoly()) + c
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "terms",
                           {d: clean[d] for d in sorted(clean) if clean[d]})

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def from_diagram(cls, d: Diagram, level: int) -> "AlgebraElement":
        return cls(level, {d: ZPoly.const(1)})

    @classmethod
    def zero(cls, level: int) -> "AlgebraElement":
        return cls(level, {})

    @classmethod
    def one(cls, level: int) -> "AlgebraElement":
        return cls.from_diagram(identity_diagram(dots_for_level(level)), level)

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.level == other.level and self.terms == other.terms)

    def __hash__(self):
        return hash((self.level, tuple(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, ZPoly()) + c
        return AlgebraElement(self.level, terms)

    def __sub__(self, other):
        return self + other.scale(ZPoly.const(-1))

    def scale(self, c) -> "AlgebraElement":
        if isinstance(c, int):
            c = ZPoly.const(c)
        return AlgebraElement(self.level, {d: c * v for d, v in self.terms.items()})

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an AlgebraElement")
        if self.level != other.level:
            raise ValueError("elements at different levels")

    def __mul__(self, other):
        self._check(other)
        terms: dict[Diagram, ZPoly] = {}
        for dx, cx in self.terms.items():
            for dy, cy in other.terms.items():
                d, t = compose(dx, dy)
                contrib = (cx * cy).shifted(t)
                terms[d] = terms.get(d, ZPoly()) + contrib
        return AlgebraElement(self.level, terms)

    def star(self) -> "AlgebraElement":
        """The involution: flip every diagram, keep coefficients."""
        return AlgebraElement(self.level,
                              {d.involute(): c for d, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for d, c in self.terms.items():
            cs = str(c)
            if cs == "1":
                pieces.append(format_diagram(d))
            else:
                if "+" in cs[1:] or "-" in cs[1:]:
                    cs = f"({cs})"
                pieces.append(f"{cs}*{format_diagram(d)}")
        return " + ".join(pieces)

    __repr__ = __str__


def parse_element(text: str, level: int) -> AlgebraElement:
    """Parse sums like "[[1,1']] + z*[[1],[1']]" at the given level."""
    m = dots_for_level(level)
    terms: dict[Diagram, ZPoly] = {}
    for chunk in text.split(" + "):
        chunk = chunk.strip()
        if not chunk or chunk == "0":
            continue
        if "*" in chunk:
            coef_text, diag_text = chunk.split("*", 1)
            coef_text = coef_text.strip()
            if coef_text.startswith("(") and coef_text.endswith(")"):
                coef_text = coef_text[1:-1]
            coef = parse_zpoly(coef_text)
        else:
            coef, diag_text = ZPoly.const(1), chunk
        d = parse_diagram(diag_text.strip(), m)
        terms[d] = terms.get(d, ZPoly()) + coef
    return AlgebraElement(level, terms)


def embed_up(a: AlgebraElement) -> AlgebraElement:
    """Include level k into level k+1.

    Odd to even is the identity on diagrams; even to odd adds a fresh dot
    joined to its own primed partner.
    """
    k = a.level
    if k % 2 == 1:
        return AlgebraElement(k + 1, dict(a.terms))
    m = dots_for_level(k)
    terms = {}
    for d, c in a.terms.items():
        blocks = list(d.blocks) + [(m + 1, -(m + 1))]
        terms[Diagram(m + 1, blocks)] = c
    return AlgebraElement(k + 1, terms)
