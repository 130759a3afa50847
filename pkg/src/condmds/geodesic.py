"""Geodesic preprocessing: neighborhood graphs and shortest-path distances.

Replacing raw dissimilarities with shortest-path distances over a sparse
neighborhood graph lets the embedding respect a curved manifold rather
than chord distances across it. The conditional fit itself is unchanged;
``cond_isomap`` just composes graph construction, all-pairs Dijkstra, and
``cond_smacof``.
"""

import heapq
from dataclasses import dataclass

import numpy as np

from condmds.exceptions import GraphDisconnectedError, InputValidationError
from condmds.smacof import FitReport, cond_smacof
from condmds.validation import check_auxiliary, check_dissimilarity

__all__ = [
    "NeighborhoodGraph",
    "IsomapFitReport",
    "neighborhood_graph",
    "connected_components",
    "shortest_path_matrix",
    "cond_isomap",
]


@dataclass(frozen=True)
class NeighborhoodGraph:
    """Undirected weighted graph over N points.

    ``edges`` is a sorted tuple of (i, j, weight) with i < j; the weight of
    an edge is the dissimilarity between its endpoints.
    """

    n: int
    edges: tuple

    def adjacency(self):
        """Neighbor lists: for each node a list of (neighbor, weight)."""
        adj = [[] for _ in range(self.n)]
        for i, j, w in self.edges:
            adj[i].append((j, w))
            adj[j].append((i, w))
        return adj

    def degrees(self):
        deg = np.zeros(self.n, dtype=int)
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


def neighborhood_graph(delta, k=None, epsilon=None, mutual=False):
    """Build the neighborhood graph of a dissimilarity matrix.

    Exactly one of ``k`` and ``epsilon`` must be given. In k-mode, node i
    selects its k nearest neighbors (ties broken by ascending index); an
    edge (i, j) exists when either endpoint selects the other, or when both
    do if ``mutual=True``. In epsilon-mode, an edge exists whenever
    delta_ij <= epsilon.
    """
    d = np.asarray(delta, dtype=float)
    n = d.shape[0]
    if (k is None) == (epsilon is None):
        raise InputValidationError("specify exactly one of k or epsilon")
    pairs = set()
    if k is not None:
        if not 1 <= k <= n - 1:
            raise InputValidationError(f"k must be in [1, {n - 1}], got {k}")
        selected = np.zeros((n, n), dtype=bool)
        for i in range(n):
            order = [j for j in range(n) if j != i]
            order.sort(key=lambda j: d[i, j])  # stable: ties go to the lower index
            for j in order[:k]:
                selected[i, j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if mutual:
                    keep = selected[i, j] and selected[j, i]
                else:
                    keep = selected[i, j] or selected[j, i]
                if keep:
                    pairs.add((i, j))
    else:
        if epsilon <= 0:
            raise InputValidationError(f"epsilon must be positive, got {epsilon}")
        for i in range(n):
            for j in range(i + 1, n):
                if d[i, j] <= epsilon:
                    pairs.add((i, j))
    edges = tuple(sorted((i, j, float(d[i, j])) for i, j in pairs))
    return NeighborhoodGraph(n=n, edges=edges)


def connected_components(graph):
    """Connected components as a list of sorted node-index lists."""
    adj = graph.adjacency()
    seen = [False] * graph.n
    components = []
    for start in range(graph.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            node = stack.pop()
            comp.append(node)
            for nbr, _ in adj[node]:
                if not seen[nbr]:
                    seen[nbr] = True
                    stack.append(nbr)
        components.append(sorted(comp))
    return components


def _dijkstra(adj, source, n):
    dist = np.full(n, np.inf)
    dist[source] = 0.0
    heap = [(0.0, source)]
    done = [False] * n
    while heap:
        du, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            nd = du + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def shortest_path_matrix(graph):
    """Exact all-pairs shortest-path distances of a neighborhood graph.

    Runs Dijkstra from every source (edge weights are nonnegative by
    construction). Raises GraphDisconnectedError, listing the components,
    when any pair is unreachable.
    """
    comps = connected_components(graph)
    if len(comps) > 1:
        sizes = ", ".join(str(len(c)) for c in comps)
        raise GraphDisconnectedError(
            f"neighborhood graph has {len(comps)} connected components "
            f"(sizes {sizes}); increase k or epsilon, or restrict to the "
            "largest component",
            components=comps,
        )
    adj = graph.adjacency()
    n = graph.n
    dg = np.zeros((n, n))
    for src in range(n):
        dg[src] = _dijkstra(adj, src, n)
    # Forward and reverse traversals of one path can differ by an ulp;
    # taking the pairwise minimum restores exact symmetry.
    return np.minimum(dg, dg.T)


@dataclass
class IsomapFitReport(FitReport):
    """FitReport plus the graph distances the embedding was fitted to.

    ``kept_indices`` lists the original point indices that survived a
    largest-component restriction; it covers all points when the graph was
    connected.
    """

    graph_distances: np.ndarray = None
    kept_indices: np.ndarray = None


def cond_isomap(delta, aux, weights="uniform", *, k=None, epsilon=None,
                mutual=False, on_disconnect="error", allow_zero_weights=False,
                **fit_kwargs):
    """Conditional ISOMAP: conditional MDS on graph shortest-path distances.

    Builds the neighborhood graph of ``delta``, replaces dissimilarities by
    exact shortest-path distances, and fits ``cond_smacof`` on the result.
    Data-dependent weight schemes (Sammon) are recomputed on the graph
    distances, not on the raw input.

    ``on_disconnect`` selects the behavior for a disconnected graph:
    "error" (default) raises GraphDisconnectedError; "largest" drops every
    point outside the largest component (ties to the component containing
    the lowest index) and records the survivors in ``kept_indices``.

    Remaining keyword arguments are passed to ``cond_smacof``.
    """
    delta = check_dissimilarity(delta)
    aux = check_auxiliary(aux, delta.shape[0])
    if on_disconnect not in ("error", "largest"):
        raise InputValidationError(
            f"on_disconnect must be 'error' or 'largest', got {on_disconnect!r}"
        )
    graph = neighborhood_graph(delta, k=k, epsilon=epsilon, mutual=mutual)
    kept = np.arange(delta.shape[0])
    if on_disconnect == "largest":
        comps = connected_components(graph)
        if len(comps) > 1:
            comps.sort(key=lambda c: (-len(c), c[0]))
            kept = np.asarray(comps[0])
            delta = delta[np.ix_(kept, kept)]
            aux = aux[kept]
            if not isinstance(weights, str):
                weights = np.asarray(weights)[np.ix_(kept, kept)]
            graph = _subgraph(graph, kept)
    dg = shortest_path_matrix(graph)
    report = cond_smacof(
        dg, aux, weights, validate=False,
        allow_zero_weights=allow_zero_weights, **fit_kwargs,
    )
    return IsomapFitReport(
        embedding=report.embedding,
        b_matrix=report.b_matrix,
        stress_trace=report.stress_trace,
        n_iter=report.n_iter,
        termination=report.termination,
        seed=report.seed,
        restart_stresses=report.restart_stresses,
        graph_distances=dg,
        kept_indices=kept,
    )


def _subgraph(graph, kept):
    """Restrict a graph to ``kept`` node indices, renumbering from zero."""
    index = {node: pos for pos, node in enumerate(kept)}
    edges = tuple(
        (index[i], index[j], w)
        for i, j, w in graph.edges
        if i in index and j in index
    )
    return NeighborhoodGraph(n=len(kept), edges=edges)
