"""Ground truth by exhaustive enumeration over small prime fields.

Builds explicit matrix pairs realizing a module descriptor and counts
submodules of a given dimension vector directly: enumerate the vertex-2
subspace, then count compatible vertex-1 subspaces with a single Gaussian
coefficient.  Everything here is deliberately independent of the closed
formulas and the recursion engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations, product

from .model import KroneckerDescriptor, Preinjective, Preprojective
from .qbinom import gauss_int

__all__ = [
    "MatrixRep",
    "PointCapacityError",
    "build_rep",
    "count_submodules",
    "count_submodules_naive",
    "submodule_table",
    "enumerate_subspaces",
    "hom_dim_numeric",
    "fixture_records",
]

_SUBSPACE_PRIMES = (2, 3, 5)
_MAX_SUBSPACE_DIM = 6


class PointCapacityError(ValueError):
    """The prime field is too small to host the requested points."""


@dataclass(frozen=True)
class MatrixRep:
    """A pair of dim1 x dim2 matrices over F_p (maps vertex 2 -> vertex 1)."""

    p: int
    dim1: int
    dim2: int
    alpha: tuple[tuple[int, ...], ...]
    beta: tuple[tuple[int, ...], ...]


# -- small GF(p) linear algebra --------------------------------------------


def _rank(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _matvec(mat, vec, p):
    return tuple(sum(r * v for r, v in zip(row, vec)) % p for row in mat)


# -- subspace enumeration ---------------------------------------------------


@cache
def _subspace_bases(n: int, k: int, p: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All k-dimensional subspaces of F_p^n as reduced-row-echelon bases,
    in deterministic order (pivot pattern, then free entries)."""
    if k == 0:
        return ((),)
    out = []
    for pivots in combinations(range(n), k):
        pivset = set(pivots)
        free_pos = [
            (i, j)
            for i, c in enumerate(pivots)
            for j in range(c + 1, n)
            if j not in pivset
        ]
        for fill in product(range(p), repeat=len(free_pos)):
            rows = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), v in zip(free_pos, fill):
                rows[i][j] = v
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def enumerate_subspaces(n: int, k: int, p: int):
    """Canonical RREF representatives of all k-subspaces of F_p^n.

    Guarded to desk scale: 0 <= k <= n <= 6 and small primes only.
    """
    if not 0 <= k <= n <= _MAX_SUBSPACE_DIM:
        raise ValueError(f"need 0 <= k <= n <= {_MAX_SUBSPACE_DIM}, got k={k}, n={n}")
    if p not in _SUBSPACE_PRIMES:
        raise ValueError(f"p must be one of {_SUBSPACE_PRIMES}, got {p}")
    return list(_subspace_bases(n, k, p))


# -- representation builder --------------------------------------------------


@cache
def _monic_irreducibles(d: int, p: int) -> tuple[tuple[int, ...], ...]:
    """Monic irreducible polynomials of degree d over F_p, as ascending
    coefficient tuples without the leading 1, in lexicographic order."""
    if d == 1:
        return tuple((c,) for c in range(p))
    found = []
    for tail in product(range(p), repeat=d):
        # x^d + tail; irreducible iff no monic factor of degree <= d//2
        if tail[0] == 0:
            continue
        reducible = False
        for e in range(1, d // 2 + 1):
            for ftail in product(range(p), repeat=e):
                # trial divide by x^e + ftail
                rem = list(tail)
                rem += [0] * (d - len(rem))
                rem.append(1)  # degree-d monic dividend
                div = list(ftail) + [1]
                for i in range(d, e - 1, -1):
                    c = rem[i]
                    if c:
                        for j in range(e + 1):
                            rem[i - e + j] = (rem[i - e + j] - c * div[j]) % p
                if not any(rem[:e]):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            found.append(tuple(tail))
    return tuple(found)


def _companion(tail: tuple[int, ...], p: int) -> list[list[int]]:
    d = len(tail)
    mat = [[0] * d for _ in range(d)]
    for i in range(1, d):
        mat[i][i - 1] = 1
    for i in range(d):
        mat[i][d - 1] = (-tail[i]) % p
    return mat


def _regular_blocks(param, degree: int, t: int, p: int):
    """alpha/beta blocks for one uniserial of length t at a point.

    Degree 1: alpha = identity, beta = Jordan block at the parameter; the
    extra point 'inf' swaps the roles.  Higher degree: beta is a block
    Jordan matrix whose diagonal blocks are the companion matrix of an
    irreducible polynomial.
    """
    if degree == 1:
        size = t
        ident = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        jordan = [[0] * size for _ in range(size)]
        for i in range(size):
            if param != "inf":
                jordan[i][i] = param % p
            if i + 1 < size:
                jordan[i][i + 1] = 1
        if param == "inf":
            return jordan, ident
        return ident, jordan
    size = t * degree
    ident = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    comp = _companion(param, p)
    jordan = [[0] * size for _ in range(size)]
    for blk in range(t):
        off = blk * degree
        for i in range(degree):
            for j in range(degree):
                jordan[off + i][off + j] = comp[i][j]
        if blk + 1 < t:
            for i in range(degree):
                jordan[off + i][off + degree + i] = 1
    return ident, jordan


def build_rep(
    module: KroneckerDescriptor, p: int, parameter_shift: int = 0
) -> MatrixRep:
    """Block-diagonal matrix model of a descriptor over F_p.

    Distinct labels receive distinct points; ``parameter_shift`` rotates the
    parameter pools, which must not change any submodule count.  Raises
    :class:`PointCapacityError` when F_p has too few points of some degree.
    """
    dim = module.dim_vector()
    alpha = [[0] * dim.b for _ in range(dim.a)]
    beta = [[0] * dim.b for _ in range(dim.a)]

    # assign concrete points per degree
    degree_labels: dict[int, list[str]] = {}
    for label, deg, _ in module.regular:
        degree_labels.setdefault(deg, []).append(label)
    assignment = {}
    for deg, labels in degree_labels.items():
        if deg == 1:
            pool = [c for c in range(p)] + ["inf"]
        else:
            pool = list(_monic_irreducibles(deg, p))
        if len(labels) > len(pool):
            raise PointCapacityError(
                f"F_{p} has only {len(pool)} points of degree {deg}; "
                f"descriptor needs {len(labels)}"
            )
        shift = parameter_shift % len(pool)
        pool = pool[shift:] + pool[:shift]
        for label, param in zip(sorted(labels), pool):
            assignment[label] = param

    def paste(block, target, r0, c0):
        for i, row in enumerate(block):
            for j, v in enumerate(row):
                if v:
                    target[r0 + i][c0 + j] = v

    r0 = c0 = 0
    for s in module.summands():
        if isinstance(s, Preprojective):
            n = s.n
            a_blk = [[1 if i == j else 0 for j in range(n)] for i in range(n + 1)]
            b_blk = [[1 if i == j + 1 else 0 for j in range(n)] for i in range(n + 1)]
            paste(a_blk, alpha, r0, c0)
            paste(b_blk, beta, r0, c0)
            r0 += n + 1
            c0 += n
        elif isinstance(s, Preinjective):
            n = s.n
            a_blk = [[1 if i == j else 0 for j in range(n + 1)] for i in range(n)]
            b_blk = [[1 if i + 1 == j else 0 for j in range(n + 1)] for i in range(n)]
            paste(a_blk, alpha, r0, c0)
            paste(b_blk, beta, r0, c0)
            r0 += n
            c0 += n + 1
        else:
            a_blk, b_blk = _regular_blocks(assignment[s.point], s.degree, s.length, p)
            paste(a_blk, alpha, r0, c0)
            paste(b_blk, beta, r0, c0)
            size = s.degree * s.length
            r0 += size
            c0 += size
    return MatrixRep(
        p,
        dim.a,
        dim.b,
        tuple(tuple(r) for r in alpha),
        tuple(tuple(r) for r in beta),
    )


# -- counting ----------------------------------------------------------------


def count_submodules(rep: MatrixRep, a: int, b: int) -> int:
    """Pairs of subspaces (U1, U2) of dimensions (a, b) with both images of
    U2 inside U1; 0 for out-of-range dimensions."""
    if a < 0 or b < 0 or a > rep.dim1 or b > rep.dim2:
        return 0
    total = 0
    for basis in _subspace_bases(rep.dim2, b, rep.p):
        images = [_matvec(rep.alpha, v, rep.p) for v in basis]
        images += [_matvec(rep.beta, v, rep.p) for v in basis]
        w = _rank([list(v) for v in images], rep.p) if images else 0
        if w <= a:
            total += gauss_int(a - w, rep.dim1 - w, rep.p)
    return total


def submodule_table(rep: MatrixRep) -> dict[tuple[int, int], int]:
    """Counts for every (a, b) in one pass per vertex-2 dimension."""
    out = {}
    for b in range(rep.dim2 + 1):
        hist: dict[int, int] = {}
        for basis in _subspace_bases(rep.dim2, b, rep.p):
            images = [_matvec(rep.alpha, v, rep.p) for v in basis]
            images += [_matvec(rep.beta, v, rep.p) for v in basis]
            w = _rank([list(v) for v in images], rep.p) if images else 0
            hist[w] = hist.get(w, 0) + 1
        for a in range(rep.dim1 + 1):
            out[(a, b)] = sum(
                cnt * gauss_int(a - w, rep.dim1 - w, rep.p)
                for w, cnt in hist.items()
                if w <= a
            )
    return out


def _in_span(vec, basis, p):
    # basis rows are RREF; reduce vec against them
    v = list(vec)
    for row in basis:
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is not None and v[piv]:
            f = v[piv]
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return not any(v)


def count_submodules_naive(rep: MatrixRep, a: int, b: int) -> int:
    """Fully naive double enumeration; cross-check for small instances."""
    if a < 0 or b < 0 or a > rep.dim1 or b > rep.dim2:
        return 0
    total = 0
    for u2 in _subspace_bases(rep.dim2, b, rep.p):
        images = [_matvec(rep.alpha, v, rep.p) for v in u2]
        images += [_matvec(rep.beta, v, rep.p) for v in u2]
        for u1 in _subspace_bases(rep.dim1, a, rep.p):
            if all(_in_span(img, u1, rep.p) for img in images):
                total += 1
    return total


def hom_dim_numeric(rep_x: MatrixRep, rep_y: MatrixRep) -> int:
    """Dimension of the space of pairs (f1, f2) intertwining both maps."""
    if rep_x.p != rep_y.p:
        raise ValueError("representations live over different primes")
    p = rep_x.p
    n1 = rep_y.dim1 * rep_x.dim1  # unknowns in f1
    n2 = rep_y.dim2 * rep_x.dim2  # unknowns in f2
    rows = []
    for mat_x, mat_y in ((rep_x.alpha, rep_y.alpha), (rep_x.beta, rep_y.beta)):
        # f1 . mat_x - mat_y . f2 = 0, one equation per (i, j)
        for i in range(rep_y.dim1):
            for j in range(rep_x.dim2):
                row = [0] * (n1 + n2)
                for k in range(rep_x.dim1):
                    row[i * rep_x.dim1 + k] = mat_x[k][j] % p
                for k in range(rep_y.dim2):
                    row[n1 + k * rep_x.dim2 + j] = (-mat_y[i][k]) % p
                rows.append(row)
    if not rows:
        return n1 + n2
    return n1 + n2 - _rank(rows, p)


def fixture_records(module: KroneckerDescriptor, p: int) -> list[dict]:
    """JSON-ready oracle records for every (a, b) of a descriptor."""
    rep = build_rep(module, p)
    table = submodule_table(rep)
    return [
        {"module": str(module), "p": p, "a": a, "b": b, "count": count}
        for (a, b), count in sorted(table.items())
    ]
