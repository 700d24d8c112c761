"""Two independent models of the (21)_5 configuration, and graph isomorphism.

pg24: points and lines of the projective plane over F_4.
p2p2: the 42 lines on the surface x0 y0^2 + x1 y1^2 + x2 y2^2 = 0,
      x0^2 y0 + x1^2 y1 + x2^2 y2 = 0 in P^2 x P^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
import itertools
import json

from .gf2k import FieldElement, GF, format_element

SCHEMA_VERSION = 1


def _f4():
    return GF(2)


def _elements() -> tuple[FieldElement, ...]:
    return tuple(_f4().elements())


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[FieldElement, FieldElement, FieldElement]

    @classmethod
    def canonical(cls, coords) -> ProjPoint:
        coords = tuple(coords)
        lead = next((c for c in coords if c.value), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        inv = lead.inverse()
        return cls(tuple(c * inv for c in coords))

    def __str__(self):
        return "(" + ":".join(format_element(c) for c in self.coords) + ")"


@cache
def projective_points() -> tuple[ProjPoint, ...]:
    """The 21 points of P^2(F_4), canonical form, deterministic order."""
    out = []
    seen = set()
    for v in itertools.product(_elements(), repeat=3):
        if not any(c.value for c in v):
            continue
        p = ProjPoint.canonical(v)
        if p not in seen:
            seen.add(p)
            out.append(p)
    return tuple(out)


def _dot(a, b) -> FieldElement:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _sq(a):
    return tuple(c * c for c in a)


@dataclass
class BipartiteGraph:
    left: tuple[str, ...]
    right: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]  # left x right

    def neighbours_left(self, i: int) -> list[int]:
        return [j for j, v in enumerate(self.matrix[i]) if v]

    def neighbours_right(self, j: int) -> list[int]:
        return [i for i in range(len(self.left)) if self.matrix[i][j]]

    def edge_count(self) -> int:
        return sum(map(sum, self.matrix))

    def is_regular(self, d: int = 5) -> bool:
        return all(sum(r) == d for r in self.matrix) and all(
            sum(self.matrix[i][j] for i in range(len(self.left))) == d for j in range(len(self.right))
        )

    def swapped(self) -> BipartiteGraph:
        return BipartiteGraph(self.right, self.left, tuple(zip(*self.matrix)))

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "left": list(self.left),
            "right": list(self.right),
            "edges": [[self.left[i], self.right[j]] for i in range(len(self.left)) for j in self.neighbours_left(i)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_dot(self, name: str = "config") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  "{n}" [shape=ellipse];' for n in self.left]
        lines += [f'  "{n}" [shape=box];' for n in self.right]
        lines += [f'  "{a}" -- "{b}";' for a, b in self.to_dict()["edges"]]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        return "source,target,weight\n" + "".join(f"{a},{b},1\n" for a, b in self.to_dict()["edges"])


@cache
def pg24() -> BipartiteGraph:
    """Points versus lines of P^2(F_4); line [l] is {x : l.x = 0}."""
    pts = projective_points()
    M = tuple(tuple(int(_dot(p.coords, l.coords).value == 0) for l in pts) for p in pts)
    return BipartiteGraph(
        tuple(f"p{p}" for p in pts),
        tuple(f"L{p}" for p in pts),
        M,
    )


def on_surface(x, y) -> bool:
    """Both bidegree equations at the point (x, y) of P^2 x P^2."""
    return _dot(x, _sq(y)).value == 0 and _dot(_sq(x), y).value == 0


@cache
def p2p2_lines() -> BipartiteGraph:
    """A-lines {x = a, sum a_i^2 y_i = 0} and B-lines {y = b, sum x_i b_i^2 = 0}.

    A(a) and B(b) meet exactly when the point (a, b) lies on both lines, i.e.
    on the surface.
    """
    pts = projective_points()
    M = tuple(
        tuple(
            int(_dot(_sq(a.coords), b.coords).value == 0 and _dot(a.coords, _sq(b.coords)).value == 0)
            for b in pts
        )
        for a in pts
    )
    return BipartiteGraph(tuple(f"A{p}" for p in pts), tuple(f"B{p}" for p in pts), M)


def frobenius_twin_agrees() -> bool:
    """sum a_i^2 b_i = 0 iff sum a_i b_i^2 = 0, on all 441 pairs over F_4."""
    pts = projective_points()
    return all(
        (_dot(_sq(a.coords), b.coords).value == 0) == (_dot(a.coords, _sq(b.coords)).value == 0)
        for a in pts
        for b in pts
    )


def involution_swap(g: BipartiteGraph | None = None) -> dict[str, str]:
    """The map A(a) <-> B(a), checked to be an incidence-preserving involution."""
    g = g or p2p2_lines()
    n = len(g.left)
    mapping = {}
    for k in range(n):
        mapping[g.left[k]] = g.right[k]
        mapping[g.right[k]] = g.left[k]
    if any(mapping[mapping[v]] != v for v in mapping):
        raise AssertionError("swap is not an involution")
    for i, j in itertools.product(range(n), repeat=2):
        # edge A_i - B_j goes to B_i - A_j
        if g.matrix[i][j] != g.matrix[j][i]:
            raise AssertionError("swap does not preserve incidence")
    return mapping


def fixed_points() -> list[ProjPoint]:
    """Diagonal points (a, a) on the surface."""
    return [p for p in projective_points() if on_surface(p.coords, p.coords)]


def fixed_curve_count() -> int:
    pts = fixed_points()
    for p in pts:
        cube = sum((c * c * c for c in p.coords), _f4().zero)
        if cube.value:
            raise AssertionError(f"{p} is on the surface but off the Fermat cubic")
    return len(pts)


# --- isomorphism search ---------------------------------------------------------


def _as_adjacency(g: BipartiteGraph) -> list[set[int]]:
    n = len(g.left)
    adj = [set() for _ in range(n + len(g.right))]
    for i in range(n):
        for j in g.neighbours_left(i):
            adj[i].add(n + j)
            adj[n + j].add(i)
    return adj


def _search(adj1, adj2, side1, side2) -> dict[int, int] | None:
    """Backtracking isomorphism adj1 -> adj2 sending side1[v] to side2[image].

    Adjacency is held as bitmasks.  At each step the unmapped vertex with the
    fewest remaining candidates is branched on; candidates are cut down by
    adjacency to every mapped neighbour and non-adjacency to every mapped
    non-neighbour, so a wrong choice is detected as soon as some domain empties.
    """
    n = len(adj1)
    if n != len(adj2):
        return None
    profile1 = sorted((side1[v], len(adj1[v])) for v in range(n))
    profile2 = sorted((side2[w], len(adj2[w])) for w in range(n))
    if profile1 != profile2:
        return None
    full = (1 << n) - 1
    a1 = [sum(1 << u for u in adj) for adj in adj1]
    a2 = [sum(1 << u for u in adj) for adj in adj2]
    init = []
    for v in range(n):
        dom = 0
        for w in range(n):
            if side2[w] == side1[v] and len(adj2[w]) == len(adj1[v]):
                dom |= 1 << w
        init.append(dom)

    def go(domains, mapping):
        if len(mapping) == n:
            return mapping
        best, best_count = None, n + 1
        for v in range(n):
            if v in mapping:
                continue
            c = domains[v].bit_count()
            if c < best_count:
                best, best_count = v, c
                if c <= 1:
                    break
        if best_count == 0:
            return None
        v = best
        dom = domains[v]
        while dom:
            low = dom & -dom
            w = low.bit_length() - 1
            dom ^= low
            new = list(domains)
            ok = True
            for u in range(n):
                if u in mapping or u == v:
                    continue
                mask = a2[w] if (a1[v] >> u) & 1 else full & ~a2[w]
                d = new[u] & mask & ~low
                if not d:
                    ok = False
                    break
                new[u] = d
            if ok:
                mapping[v] = w
                res = go(new, mapping)
                if res is not None:
                    return res
                del mapping[v]
        return None

    result = go(init, {})
    return dict(result) if result is not None else None


@dataclass
class Isomorphism:
    mapping: dict[str, str]
    swaps_families: bool

    def to_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "swaps_families": self.swaps_families, "mapping": self.mapping}


def graph_iso(g1: BipartiteGraph, g2: BipartiteGraph) -> Isomorphism | None:
    """An isomorphism g1 -> g2, family-preserving if possible, else family-swapping."""
    if (len(g1.left), len(g1.right)) != (len(g2.left), len(g2.right)):
        if (len(g1.left), len(g1.right)) != (len(g2.right), len(g2.left)):
            return None
    adj1, adj2 = _as_adjacency(g1), _as_adjacency(g2)
    names1 = list(g1.left) + list(g1.right)
    names2 = list(g2.left) + list(g2.right)
    n1, n2 = len(g1.left), len(g2.left)
    side1 = [0] * n1 + [1] * len(g1.right)
    side2 = [0] * n2 + [1] * len(g2.right)
    for swap in (False, True):
        target = [s ^ 1 for s in side2] if swap else side2
        m = _search(adj1, adj2, side1, target)
        if m is not None:
            return Isomorphism({names1[v]: names2[w] for v, w in sorted(m.items())}, swap)
    return None


def check_isomorphism(g1: BipartiteGraph, g2: BipartiteGraph, iso: Isomorphism) -> bool:
    """Verify that ``iso`` is a bijection carrying edges to edges and non-edges to non-edges."""
    e1 = {frozenset(e) for e in g1.to_dict()["edges"]}
    e2 = {frozenset(e) for e in g2.to_dict()["edges"]}
    names1 = list(g1.left) + list(g1.right)
    names2 = set(g2.left) | set(g2.right)
    m = iso.mapping
    if sorted(m) != sorted(names1) or set(m.values()) != names2:
        return False
    return {frozenset(m[v] for v in e) for e in e1} == e2


def from_config(g) -> BipartiteGraph:
    """View a ConfigGraph as a bipartite graph First x Second."""
    from .catalog import FIRST, SECOND

    idx = {c.name: n for n, c in enumerate(g.nodes)}
    left = tuple(g.names(FIRST))
    right = tuple(g.names(SECOND))
    M = tuple(tuple(g.incidence[idx[a]][idx[b]] for b in right) for a in left)
    return BipartiteGraph(left, right, M)
