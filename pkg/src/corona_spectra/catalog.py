"""Small catalog of regular graphs and the equienergetic base-pair search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    cartesian_product,
    circulant,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    petersen,
    regularity_and_components,
)
from .invariants import charpoly, energies_equal, graph_energy


def regular_catalog(max_order: int = 10) -> list[tuple[str, Graph]]:
    """Named regular graphs of order ``<= max_order``, deduplicated by edge set.

    Circulants on every jump set, complete and complete bipartite graphs,
    prisms, Petersen, disjoint unions of same-degree members, and the
    complements of all of these.
    """
    base: list[tuple[str, Graph]] = []
    for n in range(1, max_order + 1):
        base.append((f"complete:{n}", complete(n)))
        base.append((f"empty:{n}", empty(n)))
    for n in range(3, max_order + 1):
        half = n // 2
        for k in range(1, half + 1):
            for jumps in combinations(range(1, half + 1), k):
                base.append((f"circulant:{n}:{','.join(map(str, jumps))}", circulant(n, jumps)))
    for a in range(1, max_order // 2 + 1):
        base.append((f"bipartite:{a}:{a}", complete_bipartite(a, a)))
    for k in range(3, max_order // 2 + 1):
        base.append((f"prism:{k}", cartesian_product(cycle(k), complete(2))))
    if max_order >= 10:
        base.append(("petersen", petersen()))

    connected = [(name, g) for name, g in base
                 if g.order > 1 and regularity_and_components(g)[1] == 1]
    unions = []
    for (na, ga), (nb, gb) in combinations(connected, 2):
        if ga.order + gb.order <= max_order and ga.degrees()[0] == gb.degrees()[0]:
            unions.append((f"{na}+{nb}", disjoint_union(ga, gb)))
    for name, g in connected:
        if 2 * g.order <= max_order:
            unions.append((f"{name}+{name}", disjoint_union(g, g)))

    everything = base + unions
    everything += [(f"complement({name})", complement(g)) for name, g in everything]

    seen = set()
    out = []
    for name, g in everything:
        key = (g.order, g.edges)
        if key not in seen:
            seen.add(key)
            out.append((name, g))
    return out


@dataclass(frozen=True)
class BasePair:
    name_a: str
    name_b: str
    graph_a: Graph
    graph_b: Graph
    energy: float


def find_equienergetic_base_pairs(catalog: list[tuple[str, Graph]]) -> list[BasePair]:
    """Same-order, same-degree catalog pairs with equal energy and different charpolys."""
    groups: dict[tuple[int, int], list[tuple[str, Graph]]] = {}
    for name, g in catalog:
        r, _ = regularity_and_components(g)
        if r is not None:
            groups.setdefault((g.order, r), []).append((name, g))

    pairs = []
    for key in sorted(groups):
        members = groups[key]
        # one representative per characteristic polynomial
        reps: dict = {}
        for name, g in members:
            reps.setdefault(charpoly(g).coeffs, (name, g))
        entries = [(name, g, graph_energy(g)) for name, g in reps.values()]
        for (na, ga, ea), (nb, gb, eb) in combinations(entries, 2):
            if energies_equal(ea, eb):
                pairs.append(BasePair(na, nb, ga, gb, ea))
    return pairs
