"""Crystallograph predicates, component classification, and Weyl normalisation.

A bichromatic graph is a crystallograph when its edge set is closed the way
a root subsystem is closed under its own reflections:

  1. two straight edges sharing exactly one node force the straight edge
     closing the triangle, red if the two agree in colour and green
     otherwise;
  2. a loop edge next to a straight edge forces the parallel straight edge
     of the opposite colour, and the same-colour loop at the far end.

Quasi-crystallographs weaken rule 2 for green loops only: the straight edge
still doubles but the green loop need not propagate.  Projective
crystallographs are the trichromatic analogue where blue is the unique loop
colour and propagates like a red loop.

Every graph passing these predicates decomposes into connected components
drawn from a short list of models; `classify_components` finds the
decomposition and raises if a component matches nothing, which would mean
the classification itself is broken.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .classical import (
    graph_a,
    graph_b,
    graph_bc,
    graph_c,
    graph_d,
)
from .graphs import (
    BICHROMATIC,
    BLUE,
    GREEN,
    RED,
    TRICHROMATIC,
    ColouredGraph,
    Edge,
    connected_components,
    disjoint_union,
    empty_graph,
    flip_colour,
    graph_from_roots,
    graph_to_json,
    loop,
    roots_from_graph,
    straight,
    weyl_act_graph,
)
from .rootsys import (
    Root,
    SignedPermutation,
    enumeration_limit,
    reflection_permutation,
    weyl_apply,
    weyl_group,
)


class InconsistencyError(RuntimeError):
    """A component of a (quasi-)crystallograph matched no model.

    This cannot happen if the classification theorems hold; reaching it from
    a graph that passes the predicates is a falsification signal, not a
    recoverable input error.
    """


# ---------------------------------------------------------------------------
# closure predicates


def _edge_index(g: ColouredGraph):
    straights: dict[tuple[int, int], set[str]] = {}
    loops: dict[int, set[str]] = {}
    incident: dict[int, list[tuple[int, str]]] = {}
    for e in g.edges:
        if e.is_loop:
            loops.setdefault(e.ends[0], set()).add(e.colour)
        else:
            i, j = e.ends
            straights.setdefault((i, j), set()).add(e.colour)
            incident.setdefault(i, []).append((j, e.colour))
            incident.setdefault(j, []).append((i, e.colour))
    return straights, loops, incident


_NONE: set[str] = set()


def _closure_holds(g: ColouredGraph, propagating: frozenset[str]) -> bool:
    """Check both closure rules; loop colours in `propagating` must spread."""
    straights, loops, incident = _edge_index(g)
    for inc in incident.values():
        for (a, ca), (b, cb) in combinations(inc, 2):
            if a == b:
                continue
            need = RED if ca == cb else GREEN
            key = (a, b) if a < b else (b, a)
            if need not in straights.get(key, _NONE):
                return False
    for k, loop_cols in loops.items():
        for b, cs in incident.get(k, ()):
            key = (k, b) if k < b else (b, k)
            if flip_colour(cs) not in straights[key]:
                return False
            far = loops.get(b, _NONE)
            for lc in loop_cols:
                if lc in propagating and lc not in far:
                    return False
    return True


def is_crystallograph(g: ColouredGraph) -> bool:
    """Whether the graph of a symmetric subset is closed under reflections."""
    if g.palette != BICHROMATIC:
        raise ValueError("is_crystallograph needs a bichromatic graph")
    return _closure_holds(g, frozenset((RED, GREEN)))


def is_quasi_crystallograph(g: ColouredGraph) -> bool:
    """Crystallograph rules with green loops exempt from propagating."""
    if g.palette != BICHROMATIC:
        raise ValueError("is_quasi_crystallograph needs a bichromatic graph")
    return _closure_holds(g, frozenset((RED,)))


def is_projective_crystallograph(g: ColouredGraph) -> bool:
    """Trichromatic closure: all loops blue, blue propagating like red."""
    if g.palette != TRICHROMATIC:
        raise ValueError("is_projective_crystallograph needs a trichromatic graph")
    if any(e.is_loop and e.colour != BLUE for e in g.edges):
        return False
    return _closure_holds(g, frozenset((BLUE,)))


# ---------------------------------------------------------------------------
# component classification


@dataclass(frozen=True)
class Component:
    """One connected component with its model tag.

    `detail` records the designated node subsets a model needs beyond its
    parameters: the two parts for Bipartite, the green- or blue-looped nodes
    for the exotic tags.
    """

    nodes: tuple[int, ...]
    type: str
    params: tuple[int, ...]
    detail: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[Component, ...]

    def tags(self) -> list[str]:
        return [c.type for c in self.components]

    def has_bipartite(self) -> bool:
        return any(c.type == "Bipartite" for c in self.components)

    def by_type(self, tag: str) -> list[Component]:
        return [c for c in self.components if c.type == tag]

    def to_json_obj(self) -> dict:
        return {
            "components": [
                {"nodes": list(c.nodes), "type": c.type, "params": list(c.params)}
                for c in self.components
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def model_edges(comp: Component, palette: str = BICHROMATIC) -> frozenset[Edge]:
    """The exact edge set of a component's model graph on its own node labels."""
    nodes = comp.nodes
    pairs = list(combinations(nodes, 2))
    red_clique = {straight(i, j, RED) for i, j in pairs}
    both = red_clique | {straight(i, j, GREEN) for i, j in pairs}
    tag = comp.type
    if tag == "A":
        return frozenset(red_clique)
    if tag == "D":
        return frozenset(both)
    if tag == "B":
        return frozenset(both | {loop(k, RED) for k in nodes})
    if tag == "C":
        return frozenset(both | {loop(k, GREEN) for k in nodes})
    if tag == "BC":
        return frozenset(both | {loop(k, RED) for k in nodes} | {loop(k, GREEN) for k in nodes})
    if tag == "Bipartite":
        part1, part2 = comp.detail
        edges = {straight(i, j, RED) for i, j in combinations(part1, 2)}
        edges |= {straight(i, j, RED) for i, j in combinations(part2, 2)}
        edges |= {straight(i, j, GREEN) for i in part1 for j in part2}
        return frozenset(edges)
    if tag == "BplusC":
        (green_nodes,) = comp.detail
        return frozenset(
            both | {loop(k, RED) for k in nodes} | {loop(k, GREEN) for k in green_nodes}
        )
    if tag == "CplusD":
        (green_nodes,) = comp.detail
        return frozenset(both | {loop(k, GREEN) for k in green_nodes})
    if tag == "BorC":
        return frozenset(both | {loop(k, BLUE) for k in nodes})
    if tag == "ExoticBD":
        (blue_nodes,) = comp.detail
        return frozenset(both | {loop(k, BLUE) for k in blue_nodes})
    raise ValueError(f"unknown component tag: {tag!r}")


def _component_edges(g: ColouredGraph, nodes: tuple[int, ...]) -> frozenset[Edge]:
    node_set = set(nodes)
    return frozenset(e for e in g.edges if set(e.ends) <= node_set)


def _bipartite_parts(g: ColouredGraph, nodes: tuple[int, ...]) -> list[tuple[int, ...]] | None:
    """Red-connectivity parts of a loopless component, or None if not two parts."""
    parent = {v: v for v in nodes}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    node_set = set(nodes)
    for e in g.edges:
        if not e.is_loop and e.colour == RED and set(e.ends) <= node_set:
            parent[find(e.ends[0])] = find(e.ends[1])
    buckets: dict[int, list[int]] = {}
    for v in nodes:
        buckets.setdefault(find(v), []).append(v)
    if len(buckets) != 2:
        return None
    parts = [tuple(sorted(p)) for p in buckets.values()]
    parts.sort(key=lambda p: (len(p), p[0]))
    return parts


def _match_component(
    g: ColouredGraph, nodes: tuple[int, ...], loop_palette: str
) -> Component:
    """Identify the model of one connected component, verifying edge-exactness.

    loop_palette is BICHROMATIC for quasi-crystallograph components or
    TRICHROMATIC for projectified ones (blue loops).
    """
    m = len(nodes)
    actual = _component_edges(g, nodes)
    red_loops = {v for v in nodes if loop(v, RED) in actual}
    green_loops = {v for v in nodes if loop(v, GREEN) in actual}
    blue_loops = {v for v in nodes if loop(v, BLUE) in actual}
    any_green_straight = any(
        not e.is_loop and e.colour == GREEN for e in actual
    )

    candidate: Component | None = None
    if loop_palette == TRICHROMATIC and (red_loops or green_loops):
        raise ValueError(f"component {nodes} carries non-blue loops")

    looped = red_loops | green_loops | blue_loops
    all_nodes = set(nodes)
    if not looped:
        if m == 1:
            candidate = Component(nodes, "A", (1,))
        elif not any_green_straight:
            candidate = Component(nodes, "A", (m,))
        elif all(
            {RED, GREEN} <= g.straight_colours(i, j) for i, j in combinations(nodes, 2)
        ):
            candidate = Component(nodes, "D", (m,))
        else:
            parts = _bipartite_parts(g, nodes)
            if parts is not None:
                candidate = Component(
                    nodes, "Bipartite", (len(parts[0]), len(parts[1])), tuple(parts)
                )
    elif loop_palette == BICHROMATIC:
        if red_loops == all_nodes:
            if green_loops == all_nodes:
                candidate = Component(nodes, "BC", (m,))
            elif not green_loops:
                candidate = Component(nodes, "B", (m,))
            else:
                r = len(green_loops)
                candidate = Component(
                    nodes, "BplusC", (r, m - r), (tuple(sorted(green_loops)),)
                )
        elif not red_loops and green_loops:
            if green_loops == all_nodes:
                candidate = Component(nodes, "C", (m,))
            else:
                r = len(green_loops)
                candidate = Component(
                    nodes, "CplusD", (r, m - r), (tuple(sorted(green_loops)),)
                )
    else:
        if blue_loops == all_nodes:
            candidate = Component(nodes, "BorC", (m,))
        else:
            r = len(blue_loops)
            candidate = Component(
                nodes, "ExoticBD", (r, m - r), (tuple(sorted(blue_loops)),)
            )

    if candidate is not None and model_edges(candidate, loop_palette) == actual:
        return candidate
    raise InconsistencyError(
        f"component {nodes} matches no model graph (classification falsified?)"
    )


def classify_components(g: ColouredGraph) -> ComponentReport:
    """Decompose a quasi-crystallograph into typed components.

    Degenerate exotic parameters collapse to their classical tags, so
    BplusC/CplusD are only ever emitted with 0 < r < r + s.
    """
    if not is_quasi_crystallograph(g):
        raise ValueError("classify_components needs a quasi-crystallograph")
    parts = connected_components(g)
    return ComponentReport(tuple(_match_component(g, p, BICHROMATIC) for p in parts))


def classify_projective_components(g: ColouredGraph) -> ComponentReport:
    """Decompose a projectified quasi-crystallograph into typed components."""
    if g.palette != TRICHROMATIC:
        raise ValueError("classify_projective_components needs a trichromatic graph")
    parts = connected_components(g)
    out = []
    for p in parts:
        try:
            out.append(_match_component(g, p, TRICHROMATIC))
        except InconsistencyError:
            raise ValueError(
                f"component {p} matches no projective model; "
                "not a projectification of a quasi-crystallograph"
            ) from None
    return ComponentReport(tuple(out))


def red_components(g: ColouredGraph) -> list[tuple[int, ...]]:
    """Node sets of the type-A components (singletons included), by least node."""
    report = classify_components(g)
    return [c.nodes for c in report.components if c.type == "A"]


# ---------------------------------------------------------------------------
# Weyl normalisation of bipartite components


@dataclass(frozen=True)
class WeylWord:
    """An ordered word of generator reflections together with its product."""

    word: tuple[Root, ...]
    element: SignedPermutation

    @classmethod
    def from_word(cls, word: tuple[Root, ...], n: int) -> WeylWord:
        element = SignedPermutation.identity(n)
        for alpha in word:
            element = element.compose(reflection_permutation(alpha))
        return cls(tuple(word), element)


def bipartite_normalize(g: ColouredGraph) -> tuple[ColouredGraph, WeylWord]:
    """Sign-flip every bipartite component onto its complete red equivalent.

    Flipping all nodes of the smaller part turns the green cross edges red
    while every edge inside a part is flipped twice or never; the word lists
    the flips by increasing node index.  Non-bipartite components are
    untouched.
    """
    if not is_crystallograph(g):
        raise ValueError("bipartite_normalize needs a crystallograph")
    report = classify_components(g)
    flips: list[int] = []
    for comp in report.by_type("Bipartite"):
        flips.extend(comp.detail[0])
    word = []
    for node in sorted(flips):
        alpha = [0] * g.n
        alpha[node - 1] = 1
        word.append(tuple(alpha))
    ww = WeylWord.from_word(tuple(word), g.n)
    gstar = graph_from_roots(weyl_apply(ww.element, roots_from_graph(g)), g.n)
    return gstar, ww


def rank(g: ColouredGraph) -> int:
    """Dimension of the span of the encoded roots, by exact elimination."""
    if g.palette != BICHROMATIC:
        raise ValueError("rank needs a bichromatic graph")
    return linalg.rank(sorted(roots_from_graph(g)))


# ---------------------------------------------------------------------------
# enumeration


def all_edge_slots(n: int) -> list[Edge]:
    """The n^2 + n possible bichromatic edges on n nodes, in a fixed order."""
    slots: list[Edge] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            slots.append(straight(i, j, RED))
            slots.append(straight(i, j, GREEN))
    for k in range(1, n + 1):
        slots.append(loop(k, RED))
        slots.append(loop(k, GREEN))
    return slots


def all_bichromatic_graphs(n: int):
    """Every bichromatic graph on n nodes (2^(n^2+n) of them), mask order."""
    slots = all_edge_slots(n)
    for mask in range(1 << len(slots)):
        edges = frozenset(slots[b] for b in range(len(slots)) if mask >> b & 1)
        yield ColouredGraph(n, edges)


def _classical_component_menu(m: int) -> list[tuple[str, ColouredGraph]]:
    """Classical connected models on m nodes, keyed for deterministic order."""
    menu = [("A", graph_a(m)), ("B", graph_b(m)), ("BC", graph_bc(m)), ("C", graph_c(m))]
    if m >= 2:
        menu.append(("D", graph_d(m)))
    return sorted(menu)


def _orbit_canonical(g: ColouredGraph) -> tuple[str, ColouredGraph]:
    """Lexicographically minimal serialisation over the Weyl orbit, with graph."""
    best: tuple[str, ColouredGraph] | None = None
    for w in weyl_group(g.n):
        image = weyl_act_graph(w, g)
        key = graph_to_json(image)
        if best is None or key < best[0]:
            best = (key, image)
    assert best is not None
    return best


def _weyl_orbit_representatives(n: int) -> list[ColouredGraph]:
    """One representative per Weyl orbit of crystallographs on n nodes.

    Orbits are indexed by multisets of classical component types: bipartite
    components normalise to type A and signed permutations preserve the
    per-component root counts and length multisets, so distinct multisets
    are inequivalent.
    """
    results: list[tuple[str, ColouredGraph]] = []

    def build(sizes_left: int, min_key: tuple, assembled: ColouredGraph) -> None:
        if sizes_left == 0:
            results.append(_orbit_canonical(assembled))
            return
        for m in range(1, sizes_left + 1):
            for key, model in _classical_component_menu(m):
                if (m, key) < min_key:
                    continue
                build(sizes_left - m, (m, key), disjoint_union(assembled, model))

    build(n, (0, ""), empty_graph(0))
    results.sort(key=lambda pair: pair[0])
    return [g for _, g in results]


def enumerate_crystallographs(n: int, mode: str = "all"):
    """Stream graphs on n nodes passing the requested predicate.

    mode "all" / "quasi" filter every bichromatic graph (limit n <= 4);
    "up_to_weyl" yields one canonical representative per Weyl orbit of
    crystallographs (limit n <= 5), built from the classification rather
    than by scanning.  Output is sorted by canonical serialisation.
    """
    if mode not in ("all", "quasi", "up_to_weyl"):
        raise ValueError(f"unknown mode: {mode!r}")
    if mode == "up_to_weyl":
        if n > enumeration_limit(5):
            raise ValueError(f"n={n} exceeds the up_to_weyl limit {enumeration_limit(5)}")
        yield from _weyl_orbit_representatives(n)
        return
    if n > enumeration_limit(4):
        raise ValueError(f"n={n} exceeds the enumeration limit {enumeration_limit(4)}")
    predicate = is_crystallograph if mode == "all" else is_quasi_crystallograph
    found = [g for g in all_bichromatic_graphs(n) if predicate(g)]
    found.sort(key=graph_to_json)
    yield from found
