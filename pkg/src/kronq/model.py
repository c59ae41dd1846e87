"""Formal descriptors of Kronecker modules.

A module is recorded by its direct-sum decomposition into indecomposables:
preprojectives P_n (dimension vector (n+1, n)), preinjectives I_n (dimension
(n, n+1)) and regular summands R_p(lambda) attached to points p of given
degree, where lambda is a partition and R_p(lambda) means the direct sum of
the uniserials R_p(lambda_i).  Descriptors are immutable and hashable, with
a canonical ordering of entries so they can serve as cache keys.

Text grammar (CLI and fixtures):

    summand := 'P' nat | 'I' nat | 'R(' label ['@' nat] ',' '[' nat (',' nat)* ']' ')'
    module  := '0' | [nat '*'] summand (' + ' [nat '*'] summand)*

A point degree of 1 may be omitted: ``R(p1,[2,1])`` is a degree-1 point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Union

__all__ = [
    "DimVector",
    "Partition",
    "Preprojective",
    "Preinjective",
    "Regular",
    "KroneckerDescriptor",
    "ModuleParseError",
    "parse_module",
    "preprojective",
    "preinjective",
    "regular",
    "zero_module",
    "hom_dim",
    "ext_dim",
    "euler_form",
]


class DimVector(NamedTuple):
    """Dimension pair (vertex 1, vertex 2); may go negative in guard logic."""

    a: int
    b: int

    def __add__(self, other):
        return DimVector(self.a + other[0], self.b + other[1])

    def scaled(self, k: int) -> "DimVector":
        return DimVector(k * self.a, k * self.b)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def n_stat(self) -> int:
        """sum of (i-1) * parts[i], the classical n(lambda) statistic."""
        return sum(i * p for i, p in enumerate(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        out = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                out[j] += 1
        return Partition(tuple(out))

    def contains(self, other: "Partition") -> bool:
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class Preprojective:
    n: int

    def dim_vector(self) -> DimVector:
        return DimVector(self.n + 1, self.n)


@dataclass(frozen=True)
class Preinjective:
    n: int

    def dim_vector(self) -> DimVector:
        return DimVector(self.n, self.n + 1)


@dataclass(frozen=True)
class Regular:
    """One uniserial regular summand R_point(length)."""

    point: str
    degree: int
    length: int

    def dim_vector(self) -> DimVector:
        d = self.degree * self.length
        return DimVector(d, d)


Summand = Union[Preprojective, Preinjective, Regular]


class ModuleParseError(ValueError):
    """Descriptor string rejected, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class KroneckerDescriptor:
    """Multiset of indecomposable summands in canonical order.

    ``preprojective`` and ``preinjective`` hold (index, multiplicity) pairs
    sorted by index; ``regular`` holds (label, degree, partition) triples
    sorted by label, one per point.
    """

    preprojective: tuple[tuple[int, int], ...] = ()
    preinjective: tuple[tuple[int, int], ...] = ()
    regular: tuple[tuple[str, int, Partition], ...] = ()

    # -- construction ------------------------------------------------------

    @staticmethod
    def build(preproj=None, preinj=None, reg=None) -> "KroneckerDescriptor":
        """Normalize dict/iterable inputs into canonical tuples."""
        pp = tuple(sorted((int(n), int(m)) for n, m in dict(preproj or {}).items() if m))
        pi = tuple(sorted((int(n), int(m)) for n, m in dict(preinj or {}).items() if m))
        rg = []
        for label, degree, partition in reg or ():
            if not isinstance(partition, Partition):
                partition = Partition(tuple(partition))
            if partition:
                rg.append((str(label), int(degree), partition))
        rg.sort(key=lambda t: t[0])
        labels = [t[0] for t in rg]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate point labels: {labels}")
        if any(m <= 0 for _, m in pp) or any(m <= 0 for _, m in pi):
            raise ValueError("multiplicities must be positive")
        if any(n < 0 for n, _ in pp) or any(n < 0 for n, _ in pi):
            raise ValueError("summand indices must be nonnegative")
        if any(d <= 0 for _, d, _ in rg):
            raise ValueError("point degrees must be positive")
        return KroneckerDescriptor(pp, pi, tuple(rg))

    def __add__(self, other: "KroneckerDescriptor") -> "KroneckerDescriptor":
        """Direct sum; same-label regular points merge their partitions."""
        pp = dict(self.preprojective)
        for n, m in other.preprojective:
            pp[n] = pp.get(n, 0) + m
        pi = dict(self.preinjective)
        for n, m in other.preinjective:
            pi[n] = pi.get(n, 0) + m
        reg: dict[str, tuple[int, list[int]]] = {
            label: (deg, list(part.parts)) for label, deg, part in self.regular
        }
        for label, deg, part in other.regular:
            if label in reg:
                d0, parts = reg[label]
                if d0 != deg:
                    raise ValueError(
                        f"point {label!r} used with degrees {d0} and {deg}"
                    )
                parts.extend(part.parts)
            else:
                reg[label] = (deg, list(part.parts))
        rg = [
            (label, deg, Partition(tuple(sorted(parts, reverse=True))))
            for label, (deg, parts) in reg.items()
        ]
        return KroneckerDescriptor(
            tuple(sorted(pp.items())), tuple(sorted(pi.items())), tuple(sorted(rg))
        )

    # -- structure ----------------------------------------------------------

    def dim_vector(self) -> DimVector:
        a = b = 0
        for n, m in self.preprojective:
            a += m * (n + 1)
            b += m * n
        for n, m in self.preinjective:
            a += m * n
            b += m * (n + 1)
        for _, deg, part in self.regular:
            k = deg * part.weight
            a += k
            b += k
        return DimVector(a, b)

    def summands(self) -> Iterator[Summand]:
        """Expanded indecomposable summands (regulars one per part)."""
        for n, m in self.preprojective:
            for _ in range(m):
                yield Preprojective(n)
        for label, deg, part in self.regular:
            for t in part.parts:
                yield Regular(label, deg, t)
        for n, m in self.preinjective:
            for _ in range(m):
                yield Preinjective(n)

    @property
    def is_zero(self) -> bool:
        return not (self.preprojective or self.preinjective or self.regular)

    @property
    def is_regular_only(self) -> bool:
        return not self.preprojective and not self.preinjective

    def single_indecomposable(self) -> Summand | None:
        """The unique summand when the module is indecomposable, else None."""
        found = None
        for s in self.summands():
            if found is not None:
                return None
            found = s
        return found

    def counting_key(self):
        """Canonical key for memoized counting.

        Point labels do not affect cardinalities, so regular entries are
        normalized to a sorted multiset of (degree, parts).
        """
        reg = tuple(sorted((deg, part.parts) for _, deg, part in self.regular))
        return (self.preprojective, self.preinjective, reg)

    # -- socle splitting and reflections -------------------------------------

    def split_socle(self) -> tuple[int, "KroneckerDescriptor", int]:
        """Return (s, M', t) where M = s*P0 + M' + t*I0 and M' has neither."""
        s = t = 0
        pp = []
        for n, m in self.preprojective:
            if n == 0:
                s = m
            else:
                pp.append((n, m))
        pi = []
        for n, m in self.preinjective:
            if n == 0:
                t = m
            else:
                pi.append((n, m))
        return s, KroneckerDescriptor(tuple(pp), tuple(pi), self.regular), t

    def reflect_plus(self) -> "KroneckerDescriptor":
        """P_n -> P_{n-1}, I_n -> I_{n+1}, regular points kept.

        Requires no P_0 summand; sends dimension (m, n) to (n, 2n - m).
        """
        if any(n == 0 for n, _ in self.preprojective):
            raise ValueError("reflection undefined on modules with a P0 summand")
        pp = tuple(sorted((n - 1, m) for n, m in self.preprojective))
        pi = tuple(sorted((n + 1, m) for n, m in self.preinjective))
        return KroneckerDescriptor(pp, pi, self.regular)

    def reflect_minus(self) -> "KroneckerDescriptor":
        """P_n -> P_{n+1}, I_n -> I_{n-1}; inverse of :meth:`reflect_plus`.

        Requires no I_0 summand; sends dimension (m, n) to (2m - n, m).
        """
        if any(n == 0 for n, _ in self.preinjective):
            raise ValueError("reflection undefined on modules with an I0 summand")
        pp = tuple(sorted((n + 1, m) for n, m in self.preprojective))
        pi = tuple(sorted((n - 1, m) for n, m in self.preinjective))
        return KroneckerDescriptor(pp, pi, self.regular)

    # -- display -------------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        chunks = []
        for n, m in self.preprojective:
            chunks.append(f"P{n}" if m == 1 else f"{m}*P{n}")
        for label, deg, part in self.regular:
            at = "" if deg == 1 else f"@{deg}"
            chunks.append(f"R({label}{at},{part})")
        for n, m in self.preinjective:
            chunks.append(f"I{n}" if m == 1 else f"{m}*I{n}")
        return " + ".join(chunks)


def zero_module() -> KroneckerDescriptor:
    return KroneckerDescriptor()


def preprojective(n: int, mult: int = 1) -> KroneckerDescriptor:
    return KroneckerDescriptor.build({n: mult})


def preinjective(n: int, mult: int = 1) -> KroneckerDescriptor:
    return KroneckerDescriptor.build({}, {n: mult})


def regular(parts, point: str = "p", degree: int = 1) -> KroneckerDescriptor:
    if isinstance(parts, int):
        parts = (parts,)
    return KroneckerDescriptor.build({}, {}, [(point, degree, tuple(parts))])


# -- descriptor grammar ---------------------------------------------------


def parse_module(text: str) -> KroneckerDescriptor:
    """Parse the descriptor grammar, e.g. ``2*P0 + P3 + R(p1,[2,1]) + I1``."""
    s = text
    i, n = 0, len(s)

    def skip_ws(i):
        while i < n and s[i].isspace():
            i += 1
        return i

    def read_nat(i, what):
        j = i
        while j < n and s[j].isdigit():
            j += 1
        if j == i:
            raise ModuleParseError(f"expected {what}", i)
        return int(s[i:j]), j

    i = skip_ws(i)
    if i < n and s[i] == "0" and skip_ws(i + 1) == n:
        return KroneckerDescriptor()

    out = KroneckerDescriptor()
    first = True
    while i < n:
        if not first:
            if s[i] != "+":
                raise ModuleParseError("expected '+' between summands", i)
            i = skip_ws(i + 1)
        mult = 1
        if i < n and s[i].isdigit():
            mult, i = read_nat(i, "multiplicity")
            i = skip_ws(i)
            if i == n or s[i] != "*":
                raise ModuleParseError("expected '*' after multiplicity", i)
            i = skip_ws(i + 1)
        if i == n:
            raise ModuleParseError("expected a summand", i)
        kind = s[i]
        if kind in ("P", "I"):
            idx, i = read_nat(i + 1, "summand index")
            piece = preprojective(idx, mult) if kind == "P" else preinjective(idx, mult)
        elif kind == "R":
            i += 1
            if i == n or s[i] != "(":
                raise ModuleParseError("expected '(' after 'R'", i)
            i = skip_ws(i + 1)
            j = i
            while j < n and (s[j].isalnum() or s[j] == "_"):
                j += 1
            if j == i:
                raise ModuleParseError("expected a point label", i)
            label = s[i:j]
            i = skip_ws(j)
            degree = 1
            if i < n and s[i] == "@":
                degree, i = read_nat(i + 1, "point degree")
                i = skip_ws(i)
            if i == n or s[i] != ",":
                raise ModuleParseError("expected ',' before the partition", i)
            i = skip_ws(i + 1)
            if i == n or s[i] != "[":
                raise ModuleParseError("expected '['", i)
            i = skip_ws(i + 1)
            parts = []
            while True:
                p, i = read_nat(i, "partition part")
                parts.append(p)
                i = skip_ws(i)
                if i < n and s[i] == ",":
                    i = skip_ws(i + 1)
                    continue
                break
            if i == n or s[i] != "]":
                raise ModuleParseError("expected ']'", i)
            i = skip_ws(i + 1)
            if i == n or s[i] != ")":
                raise ModuleParseError("expected ')'", i)
            i += 1
            try:
                part = Partition(tuple(sorted(parts, reverse=True)))
            except ValueError as exc:
                raise ModuleParseError(str(exc), i) from None
            piece = KroneckerDescriptor.build({}, {}, [(label, degree, part)])
            for _ in range(mult - 1):
                piece = piece + KroneckerDescriptor.build(
                    {}, {}, [(label, degree, part)]
                )
        else:
            raise ModuleParseError(f"unknown summand kind {kind!r}", i)
        try:
            out = out + piece
        except ValueError as exc:
            raise ModuleParseError(str(exc), i) from None
        first = False
        i = skip_ws(i)
    if first:
        raise ModuleParseError("empty module descriptor", 0)
    return out


# -- morphism and extension dimensions ------------------------------------


def _pair_dims(x: Summand, y: Summand) -> tuple[int, int]:
    """(hom, ext) dimensions between two indecomposables."""
    if isinstance(x, Preprojective) and isinstance(y, Preprojective):
        if x.n <= y.n:
            return y.n - x.n + 1, 0
        return 0, x.n - y.n - 1
    if isinstance(x, Preinjective) and isinstance(y, Preinjective):
        if x.n >= y.n:
            return x.n - y.n + 1, 0
        return 0, y.n - x.n - 1
    if isinstance(x, Preprojective) and isinstance(y, Preinjective):
        return x.n + y.n, 0
    if isinstance(x, Preinjective) and isinstance(y, Preprojective):
        return 0, x.n + y.n + 2
    if isinstance(x, Preprojective) and isinstance(y, Regular):
        return y.degree * y.length, 0
    if isinstance(x, Regular) and isinstance(y, Preprojective):
        return 0, x.degree * x.length
    if isinstance(x, Regular) and isinstance(y, Preinjective):
        return x.degree * x.length, 0
    if isinstance(x, Preinjective) and isinstance(y, Regular):
        return 0, y.degree * y.length
    # regular vs regular: zero across distinct tubes
    if x.point != y.point:
        return 0, 0
    d = x.degree * min(x.length, y.length)
    return d, d


def _expand(x) -> list[Summand]:
    if isinstance(x, KroneckerDescriptor):
        return list(x.summands())
    return [x]


def hom_dim(x, y) -> int:
    """dim Hom(x, y); summands or whole descriptors (additive)."""
    return sum(_pair_dims(s, t)[0] for s in _expand(x) for t in _expand(y))


def ext_dim(x, y) -> int:
    """dim Ext^1(x, y); summands or whole descriptors (additive)."""
    return sum(_pair_dims(s, t)[1] for s in _expand(x) for t in _expand(y))


def euler_form(d1: DimVector, d2: DimVector) -> int:
    """Bilinear form whose value is hom minus ext for this quiver."""
    return d1.a * d2.a + d1.b * d2.b - 2 * d1.b * d2.a
