"""Deterministic generators for the named hypergraph families.

Ring-based families follow a fixed labeling so tests can address
vertices by role: ring vertices first (``0..m-1``), then the filler
vertices of each ring edge in (edge, slot) order, then pendant-edge
vertices in attachment order.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, NamedTuple

import numpy as np

from .hypercore import (
    FamilyLabeling,
    Hypergraph,
    HypergraphError,
    degrees,
    uniformity,
    VACUOUS,
)


class FamilyGrammarError(ValueError):
    """Malformed family description string."""


def complete_uniform(n: int, k: int) -> Hypergraph:
    """All k-subsets of n vertices."""
    if not 2 <= k <= n:
        raise HypergraphError(f"complete family needs 2 <= k <= n, got k={k}, n={n}")
    return Hypergraph(n, combinations(range(n), k))


def edgeless(n: int) -> Hypergraph:
    """n vertices, no edges."""
    return Hypergraph(n, [])


def cycle(m: int, k: int) -> tuple[Hypergraph, FamilyLabeling]:
    """k-uniform ring of m edges; edge i joins ring vertices i and i+1 (mod m).

    The order is m*(k-1).  A ring of two 2-vertex edges would repeat an
    edge, so m=2 requires k >= 3 (DuplicateEdgeError otherwise).
    """
    if m < 2 or k < 2:
        raise HypergraphError(f"ring needs m >= 2 and k >= 2, got m={m}, k={k}")
    n = m * (k - 1)
    aux = {(i, j): m + i * (k - 2) + j for i in range(m) for j in range(k - 2)}
    edges = []
    for i in range(m):
        edges.append([i, (i + 1) % m] + [aux[i, j] for j in range(k - 2)])
    h = Hypergraph(n, edges)
    return h, FamilyLabeling(cycle_vertices=tuple(range(m)), auxiliary=aux)


def _attach_pendants(
    h: Hypergraph, attach_counts: list[tuple[int, int]], k: int
) -> tuple[Hypergraph, dict[int, tuple[tuple[int, ...], ...]]]:
    """Attach pendant edges: for each (vertex, count), add count fresh edges
    of k-1 new vertices plus the vertex.  Returns the grown hypergraph and
    the map vertex -> attached edges."""
    nxt = h.n
    edges = list(h.edges)
    pendant_map: dict[int, list[tuple[int, ...]]] = {}
    for v, count in attach_counts:
        for _ in range(count):
            e = tuple(sorted([v] + list(range(nxt, nxt + k - 1))))
            nxt += k - 1
            edges.append(e)
            pendant_map.setdefault(v, []).append(e)
    grown = Hypergraph(nxt, edges)
    return grown, {v: tuple(es) for v, es in pendant_map.items()}


def unicyclic_cm(k: int, pendants: list[int]) -> tuple[Hypergraph, FamilyLabeling]:
    """Ring of m = len(pendants) edges with pendants[i] pendant edges at
    ring vertex i.  Order is (k-1) * (m + sum(pendants))."""
    m = len(pendants)
    if m < 2:
        raise HypergraphError(f"need at least 2 ring edges, got {m}")
    if any(p < 0 for p in pendants):
        raise HypergraphError(f"pendant counts must be >= 0, got {pendants}")
    base, labeling = cycle(m, k)
    grown, pendant_map = _attach_pendants(
        base, [(i, pendants[i]) for i in range(m)], k
    )
    return grown, FamilyLabeling(
        cycle_vertices=labeling.cycle_vertices,
        auxiliary=labeling.auxiliary,
        pendant_map=pendant_map,
    )


def x_n(n: int, k: int) -> tuple[Hypergraph, FamilyLabeling]:
    """The two-edge-ring family with all pendants on one ring vertex:
    ring of 2 edges plus n/(k-1) - 2 pendant edges at ring vertex 0."""
    if k < 2 or n % (k - 1) != 0:
        raise HypergraphError(f"order {n} is not a multiple of k-1 = {k - 1}")
    q = n // (k - 1)
    if q < 2:
        raise HypergraphError(f"order {n} is too small for a ring with k={k}")
    return unicyclic_cm(k, [q - 2, 0])


def hyperstar(k: int, s: int) -> Hypergraph:
    """s edges of size k sharing exactly one common center vertex (vertex 0)."""
    if s < 1 or k < 2:
        raise HypergraphError(f"hyperstar needs s >= 1 and k >= 2, got s={s}, k={k}")
    edges = []
    nxt = 1
    for _ in range(s):
        edges.append([0] + list(range(nxt, nxt + k - 1)))
        nxt += k - 1
    return Hypergraph(nxt, edges)


@dataclass(frozen=True)
class PathLabeling:
    """Vertex roles for the three-edge path: ``ends`` are the two outer
    degree-1 vertices, ``cuts`` the two shared vertices, and
    ``interior[(i, j)]`` the j-th inner filler vertex of edge i."""

    ends: tuple[int, int]
    cuts: tuple[int, int]
    interior: dict[tuple[int, int], int]


def path_p3(k: int) -> tuple[Hypergraph, PathLabeling]:
    """Three k-edges chained through two cut vertices; order 3(k-1)+1.

    Needs k >= 3 so every edge has interior filler vertices.
    """
    if k < 3:
        raise HypergraphError(f"three-edge path needs k >= 3, got {k}")
    # chain layout: end0, fill(1,*), cut0, fill(2,*), cut1, fill(3,*), end1
    interior = {(i, j): 1 + i * (k - 1) + j for i in range(3) for j in range(k - 2)}
    cut0 = k - 1
    cut1 = 2 * (k - 1)
    end1 = 3 * (k - 1)
    edges = [
        [0] + [interior[0, j] for j in range(k - 2)] + [cut0],
        [cut0] + [interior[1, j] for j in range(k - 2)] + [cut1],
        [cut1] + [interior[2, j] for j in range(k - 2)] + [end1],
    ]
    h = Hypergraph(3 * (k - 1) + 1, edges)
    return h, PathLabeling(ends=(0, end1), cuts=(cut0, cut1), interior=interior)


def g_star_star(k: int) -> Hypergraph:
    """Two-edge ring plus one pendant edge at a filler vertex of the ring;
    order 3(k-1)."""
    if k < 3:
        raise HypergraphError(f"needs k >= 3, got {k}")
    base, labeling = cycle(2, k)
    grown, _ = _attach_pendants(base, [(labeling.auxiliary[0, 0], 1)], k)
    return grown


def fano_plane() -> Hypergraph:
    """The 7-point, 7-block, pairwise-balanced triple system."""
    blocks = [
        (0, 1, 2),
        (0, 3, 4),
        (0, 5, 6),
        (1, 3, 5),
        (1, 4, 6),
        (2, 3, 6),
        (2, 4, 5),
    ]
    return Hypergraph(7, blocks)


@dataclass(frozen=True)
class BIBDCertificate:
    """Witness that a hypergraph is a pairwise-balanced block design:
    n points, b blocks of size k, every pair in exactly beta blocks,
    every point in exactly r blocks."""

    n: int
    b: int
    k: int
    beta: int
    r: int

    def __post_init__(self):
        if self.beta * (self.n - 1) != self.r * (self.k - 1):
            raise ValueError("replication count does not match beta*(n-1)/(k-1)")
        if self.b * self.k != self.n * self.r:
            raise ValueError("block/point incidence totals disagree")


def bibd_validate(h: Hypergraph) -> BIBDCertificate | None:
    """Certificate if every vertex pair lies in the same number beta >= 1
    of edges; None otherwise.

    Only uniform hypergraphs qualify (non-uniform input raises), and the
    block size must sit strictly below the point count, so edgeless input
    and n <= k return None.
    """
    k = uniformity(h)
    if k is None:
        raise HypergraphError("design validation requires a uniform hypergraph")
    if k is VACUOUS:
        return None
    if not h.n > k >= 2:
        return None
    pair_counts: dict[tuple[int, int], int] = {}
    for e in h.edges:
        for p in combinations(e, 2):
            pair_counts[p] = pair_counts.get(p, 0) + 1
    covered = set(pair_counts.values())
    if len(pair_counts) != math.comb(h.n, 2) or len(covered) != 1:
        return None
    beta = covered.pop()
    if beta < 1:
        return None
    r_num = beta * (h.n - 1)
    if r_num % (k - 1) != 0:
        return None
    r = r_num // (k - 1)
    degs = degrees(h)
    if not bool(np.all(degs == r)):
        # balanced pair coverage forces the replication count; reaching
        # here means the pair counting above is broken
        raise AssertionError("pair-balanced design with unequal degrees")
    return BIBDCertificate(n=h.n, b=h.m, k=k, beta=beta, r=r)


def random_uniform(n: int, k: int, m: int, rng: random.Random) -> Hypergraph:
    """m distinct k-subsets of n vertices sampled without replacement."""
    if not 2 <= k <= n:
        raise HypergraphError(f"need 2 <= k <= n, got k={k}, n={n}")
    pool = list(combinations(range(n), k))
    if not 0 <= m <= len(pool):
        raise HypergraphError(f"need 0 <= m <= {len(pool)}, got m={m}")
    return Hypergraph(n, rng.sample(pool, m))


# --- unicyclic catalog ------------------------------------------------------


class CatalogEntry(NamedTuple):
    label: str
    hypergraph: Hypergraph


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`,
    in lexicographic order."""
    if parts <= 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def _ring_with_slot_pendants(m: int, k: int, slot_counts: tuple[int, ...]) -> Hypergraph:
    """Ring of m k-edges with slot_counts[v] pendant edges at ring-graph
    vertex v (vertex order: ring vertices then fillers)."""
    base, _ = cycle(m, k)
    grown, _ = _attach_pendants(
        base, [(v, c) for v, c in enumerate(slot_counts) if c], k
    )
    return grown


def unicyclic_catalog(n_over: int, k: int) -> list[CatalogEntry]:
    """Deterministic catalog of unicyclic shapes of order (k-1)*n_over.

    Covers, in order: rings with pendant edges distributed over the ring
    vertices (``cm:...`` labels); placements that also use the ring filler
    vertices (``cmx:...``); and depth-2 chains where one extra pendant edge
    hangs off a pendant-edge vertex (``...+deep@i``).  Isomorphic shapes
    may repeat under different labels; they carry equal statistics.
    """
    if n_over < 2:
        raise HypergraphError(f"need n_over >= 2, got {n_over}")
    if k < 2:
        raise HypergraphError(f"need k >= 2, got {k}")
    entries: list[CatalogEntry] = []
    min_m = 3 if k == 2 else 2
    for m in range(min_m, n_over + 1):
        for comp in compositions(n_over - m, m):
            label = f"cm:{k}:" + ",".join(map(str, comp))
            entries.append(CatalogEntry(label, unicyclic_cm(k, list(comp))[0]))
    if k > 2:
        for m in range(min_m, n_over + 1):
            slots = m * (k - 1)
            for comp in compositions(n_over - m, slots):
                if not any(comp[m:]):
                    continue  # pure ring-vertex placements already emitted
                label = f"cmx:{k}:{m}:" + ",".join(map(str, comp))
                entries.append(CatalogEntry(label, _ring_with_slot_pendants(m, k, comp)))
    for m in range(min_m, n_over):
        for comp in compositions(n_over - m - 1, m):
            if not any(comp):
                continue
            base_label = f"cm:{k}:" + ",".join(map(str, comp))
            h, labeling = unicyclic_cm(k, list(comp))
            for i in range(m):
                if comp[i] == 0:
                    continue
                first_edge = labeling.pendant_map[i][0]
                outer = min(v for v in first_edge if v != i)
                grown, _ = _attach_pendants(h, [(outer, 1)], k)
                entries.append(CatalogEntry(f"{base_label}+deep@{i}", grown))
    return entries


# --- declarative family descriptions ----------------------------------------

FAMILY_KINDS = (
    "complete",
    "edgeless",
    "cycle",
    "unicyclic_cm",
    "x_n",
    "hyperstar",
    "path_p3",
    "g_star_star",
    "explicit",
)


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of one generated family instance."""

    kind: str
    k: int | None = None
    counts: tuple[int, ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise FamilyGrammarError(f"unknown family kind {self.kind!r}")


def _ints(text: str, where: str) -> tuple[int, ...]:
    parts = text.split(",") if text else []
    out = []
    for i, tok in enumerate(parts):
        try:
            out.append(int(tok))
        except ValueError:
            raise FamilyGrammarError(
                f"{where}: expected an integer at position {i + 1}, got {tok!r}"
            ) from None
    return tuple(out)


def parse_family(text: str) -> FamilySpec:
    """Parse a family description string.

    Grammar: ``complete:n,k`` | ``edgeless:n`` | ``cycle:m,k`` |
    ``cm:k:n1,n2,...`` | ``xn:n,k`` | ``star:k,s`` | ``p3:k`` |
    ``gss:k`` | ``fano``.
    """
    head, _, rest = text.strip().partition(":")
    if head == "fano":
        if rest:
            raise FamilyGrammarError("fano takes no parameters")
        return FamilySpec(kind="explicit", k=3, name="fano")
    simple = {
        "complete": ("complete", 2, (1,)),  # (kind, arity, k position(s))
        "edgeless": ("edgeless", 1, ()),
        "cycle": ("cycle", 2, (1,)),
        "xn": ("x_n", 2, (1,)),
        "star": ("hyperstar", 2, (0,)),
        "p3": ("path_p3", 1, (0,)),
        "gss": ("g_star_star", 1, (0,)),
    }
    if head in simple:
        kind, arity, k_pos = simple[head]
        values = _ints(rest, text)
        if len(values) != arity:
            raise FamilyGrammarError(
                f"{text}: {head} takes {arity} integer parameter(s), got {len(values)}"
            )
        k = values[k_pos[0]] if k_pos else None
        counts = tuple(v for i, v in enumerate(values) if i not in k_pos)
        return FamilySpec(kind=kind, k=k, counts=counts)
    if head == "cm":
        k_text, sep, pendant_text = rest.partition(":")
        if not sep:
            raise FamilyGrammarError(f"{text}: expected cm:k:n1,n2,...")
        k = _ints(k_text, text)
        if len(k) != 1:
            raise FamilyGrammarError(f"{text}: cm needs a single k before the pendant list")
        pendants = _ints(pendant_text, text)
        if len(pendants) < 2:
            raise FamilyGrammarError(f"{text}: cm needs at least two pendant counts")
        return FamilySpec(kind="unicyclic_cm", k=k[0], counts=pendants)
    raise FamilyGrammarError(f"unknown family {head!r} at position 1 of {text!r}")


def build_family(spec: FamilySpec) -> Hypergraph:
    """Instantiate a family description."""
    if spec.kind == "complete":
        return complete_uniform(spec.counts[0], spec.k)
    if spec.kind == "edgeless":
        return edgeless(spec.counts[0])
    if spec.kind == "cycle":
        return cycle(spec.counts[0], spec.k)[0]
    if spec.kind == "unicyclic_cm":
        return unicyclic_cm(spec.k, list(spec.counts))[0]
    if spec.kind == "x_n":
        return x_n(spec.counts[0], spec.k)[0]
    if spec.kind == "hyperstar":
        return hyperstar(spec.k, spec.counts[0])
    if spec.kind == "path_p3":
        return path_p3(spec.k)[0]
    if spec.kind == "g_star_star":
        return g_star_star(spec.k)
    if spec.kind == "explicit" and spec.name == "fano":
        return fano_plane()
    raise FamilyGrammarError(f"cannot build family spec {spec!r}")
