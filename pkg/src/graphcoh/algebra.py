"""Finite-rank commutative graded integer algebras via structure constants.

An algebra is a free abelian group with a chosen basis b_0..b_{m-1},
a degree for each basis element, and integer structure constants
c[i][j][k] with b_i * b_j = sum_k c[i][j][k] b_k.  The unit, when there
is one, is stored as a coordinate vector; non-unital algebras are
allowed (the pendant-edge machinery then refuses to run).
"""

from __future__ import annotations

import json
import math
from typing import NamedTuple, Sequence

from .errors import InputError
from .polynomial import IntPolynomial


class AlgebraSpecError(InputError):
    pass


class Violation(NamedTuple):
    axiom: str                 # commutativity | associativity | degree | unit | shape | multiplicative
    witness: tuple[int, ...]   # offending basis indices
    message: str


class ValidationReport(NamedTuple):
    ok: bool
    violations: tuple[Violation, ...]

    def __str__(self):
        if self.ok:
            return "pass"
        return "; ".join(v.message for v in self.violations)


class GradedAlgebra:
    """Structure-constant presentation of a commutative graded Z-algebra."""

    def __init__(self, degrees: Sequence[int], mult, unit: Sequence[int] | None = None,
                 name: str | None = None):
        self.degrees: tuple[int, ...] = tuple(int(d) for d in degrees)
        m = len(self.degrees)
        if m == 0:
            raise AlgebraSpecError("algebra needs at least one basis element")
        if any(d < 0 for d in self.degrees):
            raise AlgebraSpecError("basis degrees must be non-negative")
        try:
            self.mult: tuple[tuple[tuple[int, ...], ...], ...] = tuple(
                tuple(tuple(int(c) for c in row) for row in plane) for plane in mult
            )
        except (TypeError, ValueError):
            raise AlgebraSpecError("mult must be an m x m x m nested integer array") from None
        if len(self.mult) != m or any(
            len(plane) != m or any(len(row) != m for row in plane) for plane in self.mult
        ):
            raise AlgebraSpecError(f"mult must have shape {m}x{m}x{m}")
        if unit is None:
            self.unit: tuple[int, ...] | None = None
        else:
            self.unit = tuple(int(c) for c in unit)
            if len(self.unit) != m:
                raise AlgebraSpecError(f"unit vector must have length {m}")
        self.name = name or f"algebra(dim={m})"
        # nonzero terms of b_i * b_j, precomputed for the cube assembly
        self._terms: tuple[tuple[tuple[tuple[int, int], ...], ...], ...] = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(row) if c)
                for row in plane
            )
            for plane in self.mult
        )

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def product_terms(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        """Nonzero (k, coefficient) pairs of b_i * b_j."""
        return self._terms[i][j]

    def multiply(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        """Bilinear extension of the structure constants."""
        m = self.dim
        if len(u) != m or len(v) != m:
            raise AlgebraSpecError(f"coordinate vectors must have length {m}")
        out = [0] * m
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in self._terms[i][j]:
                    out[k] += ab * c
        return tuple(out)

    def q_dim(self) -> IntPolynomial:
        """Graded dimension: sum of q^deg over the basis."""
        counts = [0] * (max(self.degrees) + 1)
        for d in self.degrees:
            counts[d] += 1
        return IntPolynomial(counts)

    def __eq__(self, other):
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (self.degrees, self.mult, self.unit) == (other.degrees, other.mult, other.unit)

    def __hash__(self):
        return hash((self.degrees, self.mult, self.unit))

    def __repr__(self):
        return f"GradedAlgebra({self.name!r}, dim={self.dim})"

    def to_json_dict(self) -> dict:
        doc = {"dim": self.dim, "degrees": list(self.degrees),
               "mult": [[list(row) for row in plane] for plane in self.mult]}
        if self.unit is not None:
            doc["unit"] = list(self.unit)
        return doc


class Endomorphism:
    """Degree-preserving multiplicative self-map, column i = image of b_i.

    f(1) = 1 is not required; the zero map is a legal endomorphism.
    """

    def __init__(self, matrix, name: str | None = None):
        self.matrix: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(v) for v in row) for row in matrix
        )
        m = len(self.matrix)
        if any(len(row) != m for row in self.matrix):
            raise AlgebraSpecError("endomorphism matrix must be square")
        self.name = name or "twist"

    @classmethod
    def identity(cls, dim: int) -> "Endomorphism":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)),
                   name="identity")

    @classmethod
    def zero(cls, dim: int) -> "Endomorphism":
        return cls(tuple((0,) * dim for _ in range(dim)), name="zero")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.matrix)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.dim:
            raise AlgebraSpecError("vector length mismatch")
        return tuple(sum(row[i] * vec[i] for i in range(self.dim)) for row in self.matrix)

    def is_identity(self) -> bool:
        return all(v == (1 if r == c else 0)
                   for r, row in enumerate(self.matrix) for c, v in enumerate(row))

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Endomorphism({self.name!r}, dim={self.dim})"


def verify_algebra(A: GradedAlgebra) -> ValidationReport:
    """Check commutativity, associativity, degree preservation and the unit.

    The check is total: it collects every violated axiom with a witness
    instead of stopping at the first failure.
    """
    m = A.dim
    bad: list[Violation] = []
    for i in range(m):
        for j in range(i + 1, m):
            if A.mult[i][j] != A.mult[j][i]:
                bad.append(Violation("commutativity", (i, j),
                                     f"b{i}*b{j} != b{j}*b{i}"))
    for i in range(m):
        for j in range(m):
            for k, c in enumerate(A.mult[i][j]):
                if c and A.degrees[k] != A.degrees[i] + A.degrees[j]:
                    bad.append(Violation("degree", (i, j, k),
                                         f"b{i}*b{j} hits b{k} of degree {A.degrees[k]}, "
                                         f"expected {A.degrees[i] + A.degrees[j]}"))
    basis = [tuple(1 if t == s else 0 for t in range(m)) for s in range(m)]
    for i in range(m):
        for j in range(m):
            ij = A.multiply(basis[i], basis[j])
            for k in range(m):
                left = A.multiply(ij, basis[k])
                right = A.multiply(basis[i], A.multiply(basis[j], basis[k]))
                if left != right:
                    bad.append(Violation("associativity", (i, j, k),
                                         f"(b{i}*b{j})*b{k} != b{i}*(b{j}*b{k})"))
    if A.unit is not None:
        for i in range(m):
            if A.multiply(A.unit, basis[i]) != basis[i]:
                bad.append(Violation("unit", (i,), f"unit * b{i} != b{i}"))
        for k, c in enumerate(A.unit):
            if c and A.degrees[k] != 0:
                bad.append(Violation("unit", (k,),
                                     f"unit has support on b{k} of degree {A.degrees[k]}"))
    return ValidationReport(not bad, tuple(bad))


def verify_endomorphism(A: GradedAlgebra, F: Endomorphism) -> ValidationReport:
    m = A.dim
    if F.dim != m:
        return ValidationReport(False, (Violation("shape", (),
                                                  f"matrix is {F.dim}x{F.dim}, algebra has dim {m}"),))
    bad: list[Violation] = []
    for i in range(m):
        for k, v in enumerate(F.column(i)):
            if v and A.degrees[k] != A.degrees[i]:
                bad.append(Violation("degree", (i, k),
                                     f"f(b{i}) has a degree-{A.degrees[k]} component"))
    basis = [tuple(1 if t == s else 0 for t in range(m)) for s in range(m)]
    for i in range(m):
        for j in range(i, m):
            lhs = F.apply(A.multiply(basis[i], basis[j]))
            rhs = A.multiply(F.column(i), F.column(j))
            if lhs != rhs:
                bad.append(Violation("multiplicative", (i, j),
                                     f"f(b{i}*b{j}) != f(b{i})*f(b{j})"))
    return ValidationReport(not bad, tuple(bad))


class UnitComplement(NamedTuple):
    """Basis change exhibiting the algebra as Z*1 (+) complement.

    columns[0] is the unit's coordinate vector; columns 1..m-1 are
    homogeneous and span the complement.  The matrix is unimodular.
    """

    columns: tuple[tuple[int, ...], ...]
    complement_degrees: tuple[int, ...]


def unit_complement(A: GradedAlgebra) -> UnitComplement:
    """Complete the unit to a basis with homogeneous complement vectors.

    A true unit of a free finite-rank ring is always a primitive vector;
    a non-primitive one means the algebra data is corrupted.
    """
    if A.unit is None:
        raise AlgebraSpecError("algebra has no unit")
    u = list(A.unit)
    support = [i for i, c in enumerate(u) if c]
    if not support:
        raise AlgebraSpecError("unit vector is zero")
    if any(A.degrees[i] != 0 for i in support):
        raise AlgebraSpecError("unit vector is not supported on degree 0")
    if math.gcd(*(abs(u[i]) for i in support)) != 1:
        raise AlgebraSpecError("unit vector is not primitive; algebra data is corrupted")

    m = A.dim
    # columns of B, maintained so that B . vec stays equal to the unit
    cols = [[1 if r == i else 0 for r in range(m)] for i in range(m)]
    vec = u[:]
    while True:
        nz = [i for i in support if vec[i]]
        if len(nz) == 1 and abs(vec[nz[0]]) == 1:
            break
        nz.sort(key=lambda i: abs(vec[i]))
        j, i = nz[0], nz[1]  # reduce entry i by the smallest entry j
        q = vec[i] // vec[j]
        vec[i] -= q * vec[j]
        # compensate: col_j += q * col_i keeps B . vec fixed
        cj, ci = cols[j], cols[i]
        for r in range(m):
            cj[r] += q * ci[r]
    p = nz[0]
    if vec[p] == -1:
        cols[p] = [-x for x in cols[p]]
    cols[0], cols[p] = cols[p], cols[0]
    degrees = []
    for col in cols[1:]:
        supp = [i for i, c in enumerate(col) if c]
        degs = {A.degrees[i] for i in supp}
        if len(degs) != 1:
            raise AssertionError("complement vector is not homogeneous")
        degrees.append(degs.pop())
    return UnitComplement(tuple(tuple(c) for c in cols), tuple(degrees))


# ---------------------------------------------------------------------------
# built-in families

def _truncated_poly(n: int) -> GradedAlgebra:
    """Z[x]/(x^n) with deg(x^i) = i."""
    if n < 1:
        raise AlgebraSpecError("zxn:<n> needs n >= 1")
    mult = [[[1 if (i + j == k and i + j < n) else 0 for k in range(n)]
             for j in range(n)] for i in range(n)]
    unit = [1] + [0] * (n - 1)
    return GradedAlgebra(range(n), mult, unit, name=f"zxn:{n}" if n > 3 else f"zx{n}" if n > 1 else "z")


def _rank2(a: int, b: int) -> GradedAlgebra:
    """Basis {1, x} in degree 0 with x*x = a*1 + b*x."""
    mult = [
        [[1, 0], [0, 1]],
        [[0, 1], [a, b]],
    ]
    return GradedAlgebra((0, 0), mult, (1, 0), name=f"rank2:{a},{b}")


def _nilpotent_line() -> GradedAlgebra:
    """Non-unital algebra with basis {x}, deg x = 1, x*x = 0."""
    return GradedAlgebra((1,), (((0,),),), None, name="zx-nilpotent")


def builtin(name: str) -> GradedAlgebra:
    """Look up a named algebra: z, zx2, zx3, zxn:<n>, rank2:<a>,<b>, zx-nilpotent."""
    if name == "z":
        return _truncated_poly(1)
    if name == "zx2":
        return _truncated_poly(2)
    if name == "zx3":
        return _truncated_poly(3)
    if name == "zx-nilpotent":
        return _nilpotent_line()
    if name.startswith("zxn:"):
        try:
            n = int(name[4:])
        except ValueError:
            raise AlgebraSpecError(f"bad parameter in {name!r}") from None
        return _truncated_poly(n)
    if name.startswith("rank2:"):
        params = name[6:].split(",")
        if len(params) != 2:
            raise AlgebraSpecError(f"expected rank2:<a>,<b>, got {name!r}")
        try:
            a, b = int(params[0]), int(params[1])
        except ValueError:
            raise AlgebraSpecError(f"bad parameters in {name!r}") from None
        return _rank2(a, b)
    raise AlgebraSpecError(f"unknown algebra name {name!r}")


def algebra_from_json_dict(doc: dict, name: str | None = None) -> tuple[GradedAlgebra, Endomorphism | None]:
    """Build (algebra, optional twist) from the JSON spec document."""
    if not isinstance(doc, dict):
        raise AlgebraSpecError("algebra spec must be a JSON object")
    for field in ("dim", "degrees", "mult"):
        if field not in doc:
            raise AlgebraSpecError(f"algebra spec is missing {field!r}")
    dim = doc["dim"]
    degrees = doc["degrees"]
    if not isinstance(dim, int) or dim < 1:
        raise AlgebraSpecError("'dim' must be a positive integer")
    if not isinstance(degrees, list) or len(degrees) != dim:
        raise AlgebraSpecError("'degrees' must be an array of length dim")
    A = GradedAlgebra(degrees, doc["mult"], doc.get("unit"), name=name)
    twist = None
    if doc.get("twist") is not None:
        twist = Endomorphism(doc["twist"], name="file twist")
        if twist.dim != dim:
            raise AlgebraSpecError("'twist' must be a dim x dim matrix")
    return A, twist


def load_algebra(source: str) -> tuple[GradedAlgebra, Endomorphism | None]:
    """Resolve a builtin name or read a JSON algebra spec file."""
    try:
        return builtin(source), None
    except AlgebraSpecError:
        pass
    try:
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise AlgebraSpecError(
            f"{source!r} is not a builtin algebra name and cannot be read as a file: {exc}"
        ) from None
    except json.JSONDecodeError as exc:
        raise AlgebraSpecError(f"bad JSON in {source}: {exc}") from None
    return algebra_from_json_dict(doc, name=str(source))


# ---------------------------------------------------------------------------
# rank-2 ring classification

class RingParams(NamedTuple):
    """The ring on Z + Zx with x*x = a*1 + b*x."""

    a: int
    b: int


def ring_invariant(p: RingParams) -> tuple[int, int]:
    """Complete isomorphism invariant (b^2 + 4a, b mod 2)."""
    return (p.b * p.b + 4 * p.a, p.b % 2)


def rings_isomorphic(p: RingParams, q: RingParams) -> bool:
    return ring_invariant(p) == ring_invariant(q)
