"""Brute-force ground truth on the commuting graph of M_n(F_p) for tiny n, p.

Vertices are encoded as integers: the n*n entries read row-major as base-p
digits, first entry most significant, so increasing codes enumerate the
matrices lexicographically.  Adjacency is decided by forming AB and BA for
every candidate B; nothing here relies on the linear solvers used by the
path constructor.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Union

import numpy as np

from .errors import BudgetExceeded, CentralInput, DimensionMismatch, FieldMismatch
from .fields import GF, PrimeField, is_prime
from .matrix import Mat, is_central, rank
from .witness import WitnessFailure, find_witness

DEFAULT_BUDGET = 2**24

INF = math.inf


def _check_budget(n: int, p: int, budget: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be positive")
    total = p ** (n * n)
    if total > budget:
        raise BudgetExceeded(f"p^(n^2) = {p}^{n * n} = {total} exceeds the budget {budget}")
    return total


def encode(m: Mat) -> int:
    p = m.field.p
    code = 0
    for x in m.flat:
        code = code * p + int(x)
    return code


def decode(code: int, n: int, p: int) -> Mat:
    digits = []
    for _ in range(n * n):
        code, r = divmod(code, p)
        digits.append(r)
    return Mat.from_flat(GF(p), n, digits[::-1])


def _scalar_codes(n: int, p: int) -> List[int]:
    return [encode(Mat.scalar(GF(p), n, lam)) for lam in range(p)]


def enumerate_vertices(n: int, p: int, budget: int = DEFAULT_BUDGET) -> Iterator[Mat]:
    """Every non-scalar matrix of M_n(F_p) once, in lexicographic entry order."""
    _check_budget(n, p, budget)
    field_ = GF(p)
    for flat in product(range(p), repeat=n * n):
        m = Mat.from_flat(field_, n, flat)
        if not is_central(m):
            yield m


class CommutingGraph:
    """Vertex table plus on-demand neighbour scans for Gamma(M_n(F_p))."""

    def __init__(self, n: int, p: int, budget: int = DEFAULT_BUDGET):
        _check_budget(n, p, budget)
        self.n, self.p = n, p
        total = p ** (n * n)
        scalars = set(_scalar_codes(n, p))
        self.codes = np.array([c for c in range(total) if c not in scalars], dtype=np.int64)
        weights = p ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
        digits = (self.codes[:, None] // weights[None, :]) % p
        self._weights = weights
        # float64 is exact here: every partial sum stays far below 2^53
        self._flat = digits.astype(np.float64)
        self._mats = self._flat.reshape(-1, n, n)
        self._adj: Optional[List[List[int]]] = None
        self._table: Optional[np.ndarray] = None

    @property
    def _offset(self) -> int:
        bound = self.n * self.n * self.p * self.p
        return self.p * (bound // self.p + 1)

    def _nonzero_table(self) -> np.ndarray:
        if getattr(self, "_table", None) is None:
            self._table = (np.arange(2 * self._offset + 1) % self.p) != 0
        return self._table

    def _commutator_maps(self, idxs) -> np.ndarray:
        # vec(AB - BA) = (A (x) I - I (x) A^T) vec(B), B flattened row-major
        n = self.n
        eye = np.eye(n)
        return np.stack([np.kron(self._mats[i], eye) - np.kron(eye, self._mats[i].T) for i in idxs])

    @property
    def vertex_count(self) -> int:
        return len(self.codes)

    def index_of(self, m: Mat) -> int:
        if not isinstance(m.field, PrimeField) or m.field.p != self.p:
            raise FieldMismatch(f"expected a matrix over GF({self.p})")
        if m.n != self.n:
            raise DimensionMismatch(f"expected n = {self.n}")
        if is_central(m):
            raise CentralInput("scalar matrices are not vertices")
        return int(np.searchsorted(self.codes, encode(m)))

    def matrix(self, idx: int) -> Mat:
        return decode(int(self.codes[idx]), self.n, self.p)

    def _neighbor_batch(self, idxs) -> List[List[int]]:
        maps = self._commutator_maps(idxs)  # (k, N, N)
        k, N = len(idxs), self.n * self.n
        comm = self._flat @ maps.transpose(2, 0, 1).reshape(N, k * N)
        # |entries| <= N p^2; shift into range and look up "nonzero mod p"
        nonzero_mod_p = self._nonzero_table()
        shifted = comm.astype(np.int64) + self._offset
        zero = ~np.any(nonzero_mod_p[shifted].reshape(-1, k, N), axis=2)
        out = []
        for col, idx in enumerate(idxs):
            hits = zero[:, col].copy()
            hits[idx] = False
            out.append(np.flatnonzero(hits).tolist())
        return out

    def neighbors(self, idx: int) -> List[int]:
        return self._neighbor_batch([idx])[0]

    def adjacency(self, batch: int = 64) -> List[List[int]]:
        if self._adj is None:
            adj: List[List[int]] = []
            for start in range(0, self.vertex_count, batch):
                adj.extend(self._neighbor_batch(range(start, min(start + batch, self.vertex_count))))
            self._adj = adj
        return self._adj

    def bfs(self, src: int) -> Dict[int, int]:
        adj = self.adjacency()
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in adj[u]:
                if w not in dist:
                    dist[w] = du
                    queue.append(w)
        return dist

    def distance(self, src: int, dst: int) -> Union[int, float]:
        """BFS with neighbours generated on the fly; stops as soon as dst is reached."""
        if src == dst:
            return 0
        nbrs = self._adj.__getitem__ if self._adj is not None else self.neighbors
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in nbrs(u):
                if w not in dist:
                    if w == dst:
                        return dist[u] + 1
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return INF

    def components(self) -> List[List[int]]:
        adj = self.adjacency()
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(comp)
        return comps

    def similarity_classes(self) -> List[List[int]]:
        """Vertex indices grouped into GL_n(F_p) conjugacy classes."""
        n, p = self.n, self.p
        field_ = GF(p)
        gl, gl_inv = [], []
        for flat in product(range(p), repeat=n * n):
            g = Mat.from_flat(field_, n, flat)
            if rank(g) == n:
                gl.append(flat)
                gl_inv.append((g ** -1).flat)
        G = np.array(gl, dtype=np.int64).reshape(-1, n, n)
        Gi = np.array(gl_inv, dtype=np.int64).reshape(-1, n, n)
        cls = np.full(self.vertex_count, -1, dtype=np.int64)
        classes = []
        for idx in range(self.vertex_count):
            if cls[idx] >= 0:
                continue
            a = self._mats[idx].astype(np.int64)
            conj = np.mod(np.mod(G @ a, p) @ Gi, p).reshape(len(G), -1)
            members = np.unique(np.searchsorted(self.codes, conj @ self._weights))
            cls[members] = len(classes)
            classes.append(members.tolist())
        return classes


@dataclass
class GraphReport:
    n: int
    p: int
    vertex_count: int
    edge_count: int
    connected: bool
    component_count: int
    component_sizes: List[int]
    diameter: Union[int, float]
    eccentricity_histogram: Dict[int, int]
    witness_failure_count: Optional[int]
    component_diameters: List[int]
    similarity_classes: Optional[int] = None


def bfs_distance(a: Mat, b: Mat, n: int, p: int, budget: int = DEFAULT_BUDGET) -> Union[int, float]:
    """Exact distance in Gamma(M_n(F_p)); ``math.inf`` when unreachable."""
    graph = CommutingGraph(n, p, budget)
    return graph.distance(graph.index_of(a), graph.index_of(b))


def full_report(n: int, p: int, budget: int = DEFAULT_BUDGET, use_classes: bool = False,
                count_witness_failures: bool = True) -> GraphReport:
    """Connectivity, diameter and eccentricity histogram by exhaustive BFS.

    Eccentricities are taken inside each vertex's component.  With
    ``use_classes`` one BFS per conjugacy class is run and weighted by the
    class size; conjugation is a graph automorphism so the result is equal.
    """
    graph = CommutingGraph(n, p, budget)
    adj = graph.adjacency()
    comps = graph.components()
    ecc: Dict[int, int] = {}
    hist: Counter = Counter()
    classes = None
    if use_classes:
        classes = graph.similarity_classes()
        for members in classes:
            e = max(graph.bfs(members[0]).values())
            hist[e] += len(members)
            ecc.update((m, e) for m in members)
    else:
        for s in range(graph.vertex_count):
            ecc[s] = max(graph.bfs(s).values())
            hist[ecc[s]] += 1
    comps.sort(key=len, reverse=True)
    connected = len(comps) == 1
    failures = None
    if count_witness_failures and n >= 3:
        failures = sum(isinstance(find_witness(graph.matrix(i)), WitnessFailure)
                       for i in range(graph.vertex_count))
    return GraphReport(
        n=n,
        p=p,
        vertex_count=graph.vertex_count,
        edge_count=sum(len(x) for x in adj) // 2,
        connected=connected,
        component_count=len(comps),
        component_sizes=[len(c) for c in comps],
        component_diameters=[max(ecc[v] for v in c) for c in comps],
        diameter=max(hist) if connected else INF,
        eccentricity_histogram=dict(sorted(hist.items())),
        witness_failure_count=failures,
        similarity_classes=len(classes) if classes is not None else None,
    )
