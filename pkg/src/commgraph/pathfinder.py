"""Explicit commuting paths of length at most four.

Common neighbours are found by solving the joint commutant
{X : AX = XA, BX = XB} exactly.  The long route is
A - W_A - M - W_B - B with W_A, W_B witnesses and M a non-central element of
their joint commutant, followed by one greedy shortcut pass.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import CentralInput, DimensionTooSmall, IdenticalInputs
from .fields import PrimeField
from .matrix import Mat, commutes, is_central, mat_mul, nullspace
from .witness import MIN_DIM, Witness, WitnessFailure, find_witness

MAX_PATH_LENGTH = 4


@dataclass(frozen=True)
class CentralizerBasis:
    sources: Tuple[Mat, ...]
    basis: Tuple[Mat, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


class Role(str, enum.Enum):
    ENDPOINT = "endpoint"
    WITNESS = "witness"
    MIDPOINT = "midpoint"


@dataclass(frozen=True)
class CommutingPath:
    vertices: Tuple[Mat, ...]
    annotations: Tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class PathFailure:
    reason: str  # "witness_failure" or "no_midpoint"
    detail: str
    failed_endpoints: Tuple[str, ...] = ()


# -- commutants ------------------------------------------------------------


def _commutator_rows(a: Mat) -> List[List]:
    """Rows of the n^2 x n^2 system vec(AX - XA) = 0, X flattened row-major."""
    n = a.n
    field = a.field
    red = field.reduce
    zero = field.zero
    A = a.rows
    rows = []
    for i in range(n):
        for j in range(n):
            row = [zero] * (n * n)
            # (AX)_ij = sum_r A_ir X_rj
            for r in range(n):
                row[r * n + j] += A[i][r]
            # (XA)_ij = sum_c X_ic A_cj
            for c in range(n):
                row[i * n + c] -= A[c][j]
            rows.append([red(x) for x in row])
    return rows


def _solve_commutant(mats: Sequence[Mat]) -> CentralizerBasis:
    first = mats[0]
    for m in mats[1:]:
        first._check(m)
    field, n = first.field, first.n
    rows = []
    for m in mats:
        rows.extend(_commutator_rows(m))
    vecs = nullspace(rows, n * n, field)
    return CentralizerBasis(tuple(mats), tuple(Mat.from_flat(field, n, v) for v in vecs))


def centralizer_basis(a: Mat) -> CentralizerBasis:
    return _solve_commutant([a])


def joint_commutant(a: Mat, b: Mat) -> CentralizerBasis:
    return _solve_commutant([a, b])


def _candidates(cb: CentralizerBasis) -> Iterable[Mat]:
    basis = cb.basis
    yield from basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield basis[i] + basis[j]
    if basis:
        field, n = basis[0].field, basis[0].n
        shifts = range(1, field.p) if isinstance(field, PrimeField) else range(1, 3)
        for b in basis:
            for s in shifts:
                yield b + Mat.scalar(field, n, s)


def pick_noncentral(cb: CentralizerBasis, exclude: Iterable[Mat] = ()) -> Optional[Mat]:
    """First non-central candidate not in ``exclude``; None when nothing qualifies.

    Candidates are the basis elements in order, then pairwise sums, then
    scalar shifts of basis elements.
    """
    excluded = set(exclude)
    for cand in _candidates(cb):
        if not is_central(cand) and cand not in excluded:
            return cand
    return None


# -- paths -----------------------------------------------------------------


def _compress(vertices: List[Mat], roles: List[str]) -> Tuple[List[Mat], List[str]]:
    """Single greedy pass: from each vertex jump to the farthest later vertex it is adjacent to."""
    out_v, out_r = [vertices[0]], [roles[0]]
    i = 0
    last = len(vertices) - 1
    while i < last:
        cur = vertices[i]
        nxt = i + 1
        for j in range(last, i, -1):
            if vertices[j] == cur:
                nxt = j
                break
            if commutes(cur, vertices[j]):
                nxt = j
                break
        if vertices[nxt] == cur:
            # duplicate: keep the later copy's role only if it is the endpoint
            out_r[-1] = roles[nxt] if nxt == last else out_r[-1]
        else:
            out_v.append(vertices[nxt])
            out_r.append(roles[nxt])
        i = nxt
    return out_v, out_r


def _validate_pair(a: Mat, b: Mat) -> None:
    a._check(b)
    if a.n < MIN_DIM:
        raise DimensionTooSmall(f"n = {a.n}; commuting graphs need n >= {MIN_DIM}")
    if is_central(a) or is_central(b):
        raise CentralInput("path endpoints must be non-central")
    if a == b:
        raise IdenticalInputs("a path query needs two distinct matrices")


def find_path(a: Mat, b: Mat) -> Union[CommutingPath, PathFailure]:
    _validate_pair(a, b)
    end = Role.ENDPOINT.value
    if commutes(a, b):
        return CommutingPath((a, b), (end, end))
    mid = pick_noncentral(joint_commutant(a, b), exclude=(a, b))
    if mid is not None:
        return CommutingPath((a, mid, b), (end, Role.MIDPOINT.value, end))

    wa, wb = find_witness(a), find_witness(b)
    failed = tuple(name for name, w in (("a", wa), ("b", wb)) if isinstance(w, WitnessFailure))
    if failed:
        return PathFailure("witness_failure", "no witness for endpoint(s) " + ", ".join(failed), failed)
    assert isinstance(wa, Witness) and isinstance(wb, Witness)
    tag_a = f"{Role.WITNESS.value}:{wa.branch.value}"
    tag_b = f"{Role.WITNESS.value}:{wb.branch.value}"
    ma, mb = wa.matrix, wb.matrix
    if ma == mb or commutes(ma, mb):
        verts, roles = [a, ma, mb, b], [end, tag_a, tag_b, end]
    else:
        mid = pick_noncentral(joint_commutant(ma, mb), exclude=(ma, mb))
        if mid is None:
            return PathFailure("no_midpoint", "joint commutant of the witnesses is scalar")
        verts, roles = [a, ma, mid, mb, b], [end, tag_a, Role.MIDPOINT.value, tag_b, end]
    verts, roles = _compress(verts, roles)
    return CommutingPath(tuple(verts), tuple(roles))


def path_violations(path: CommutingPath, a: Optional[Mat] = None, b: Optional[Mat] = None) -> List[str]:
    """Every broken path invariant, rechecked from scratch with products only."""
    v = path.vertices
    problems = []
    if len(v) < 2:
        problems.append("path needs at least two vertices")
    if len(v) - 1 > MAX_PATH_LENGTH:
        problems.append(f"length {len(v) - 1} exceeds {MAX_PATH_LENGTH}")
    if path.annotations and len(path.annotations) != len(v):
        problems.append("annotation count does not match vertex count")
    for k, m in enumerate(v):
        if m.field != v[0].field or m.n != v[0].n:
            problems.append(f"vertex {k} has a different field or size")
            return problems
    for k, m in enumerate(v):
        if is_central(m):
            problems.append(f"central vertex at index {k}")
    for k in range(len(v) - 1):
        x, y = v[k], v[k + 1]
        if x == y:
            problems.append(f"repeated vertex on edge {k}-{k + 1}")
        elif mat_mul(x, y) != mat_mul(y, x):
            problems.append(f"non-commuting edge {k}-{k + 1}")
    if a is not None and v and v[0] != a:
        problems.append("first vertex is not the requested start")
    if b is not None and v and v[-1] != b:
        problems.append("last vertex is not the requested end")
    return problems


def verify_path(path: CommutingPath, a: Optional[Mat] = None, b: Optional[Mat] = None) -> bool:
    return not path_violations(path, a, b)
