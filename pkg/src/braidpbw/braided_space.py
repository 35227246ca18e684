"""Finite abelian groups, skew-symmetric bicharacters, and braidings.

Diagonal braidings come from bicharacters on a finite abelian group;
generic braidings are sparse rank-4 structure tensors.  Validators cover
the braid equation, symmetry, and compatibility of subspaces with the
braiding ("categorical" subspaces).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .linalg import Subspace, sparse_of
from .multilinear import braid_at, vec_equal
from .reporting import ValidationReport
from .scalars import ONE, Scalar

Atom = int
PairVec = dict


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct product of cyclic groups; elements are residue tuples."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        if any(n < 2 for n in self.invariant_factors):
            raise ValueError("invariant factors must be >= 2")

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def identity(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def normalize(self, element) -> tuple[int, ...]:
        if len(element) != self.rank:
            raise ValueError("element length does not match group rank")
        return tuple(int(e) % n for e, n in zip(element, self.invariant_factors))

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.invariant_factors))


@dataclass(eq=False)
class Bicharacter:
    """Pairing G x G -> scalars stored on generators, extended bimultiplicatively."""

    group: FiniteAbelianGroup
    table: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        r = self.group.rank
        if len(self.table) != r or any(len(row) != r for row in self.table):
            raise ValueError("bicharacter table does not match group rank")

    def value(self, a, b) -> Scalar:
        a = self.group.normalize(a)
        b = self.group.normalize(b)
        out = ONE
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out = out * self.table[i][j] ** (x * y)
        return out


@dataclass(frozen=True)
class GradedBasis:
    """Ordered generators with group degrees; declaration order is the well-order."""

    names: tuple[str, ...]
    degrees: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees must align")

    @property
    def dim(self) -> int:
        return len(self.names)


@dataclass(eq=False)
class GenericBraiding:
    """Sparse rank-4 structure tensor: rows[(i, j)] maps (k, l) to the coefficient
    of e_k x e_l in the image of e_i x e_j."""

    dim: int
    rows: dict[tuple[int, int], dict[tuple[int, int], Scalar]]

    def braid_pair(self, i: Atom, j: Atom) -> PairVec:
        return self.rows.get((i, j), {})

    apply_pair = braid_pair

    @staticmethod
    def flip(dim: int) -> "GenericBraiding":
        rows = {(i, j): {(j, i): ONE} for i in range(dim) for j in range(dim)}
        return GenericBraiding(dim, rows)

    @staticmethod
    def diagonal(q: list[list[Scalar]]) -> "GenericBraiding":
        d = len(q)
        rows = {}
        for i in range(d):
            for j in range(d):
                if not q[i][j].is_zero():
                    rows[(i, j)] = {(j, i): q[i][j]}
        return GenericBraiding(d, rows)

    @staticmethod
    def from_dense(tensor) -> "GenericBraiding":
        d = len(tensor)
        rows: dict[tuple[int, int], dict[tuple[int, int], Scalar]] = {}
        for i in range(d):
            for j in range(d):
                entry = {}
                for k in range(d):
                    for l in range(d):
                        c = tensor[i][j][k][l]
                        if not c.is_zero():
                            entry[(k, l)] = c
                if entry:
                    rows[(i, j)] = entry
        return GenericBraiding(d, rows)

    def to_dense(self) -> list:
        from .scalars import ZERO

        d = self.dim
        out = [[[[ZERO for _ in range(d)] for _ in range(d)] for _ in range(d)] for _ in range(d)]
        for (i, j), entry in self.rows.items():
            for (k, l), c in entry.items():
                out[i][j][k][l] = c
        return out

    def diagonal_coefficients(self) -> list[list[Scalar]] | None:
        """The q-matrix when every row is a scalar multiple of the flip, else None."""
        from .scalars import ZERO

        q = [[ZERO for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), entry in self.rows.items():
            for (k, l), c in entry.items():
                if (k, l) != (j, i):
                    return None
                q[i][j] = c
        return q


def validate_bicharacter(chi: Bicharacter) -> ValidationReport:
    """Check order constraints and skew-symmetry on the generator table."""
    report = ValidationReport("bicharacter")
    factors = chi.group.invariant_factors
    r = chi.group.rank
    for i in range(r):
        for j in range(r):
            g = gcd(factors[i], factors[j])
            report.checked += 1
            if not (chi.table[i][j] ** g).is_one():
                report.record("value-order", (i, j), str(chi.table[i][j] ** g), "1")
    for i in range(r):
        for j in range(r):
            report.checked += 1
            prod = chi.table[i][j] * chi.table[j][i]
            if not prod.is_one():
                report.record("skew-symmetry", (i, j), str(prod), "1")
    return report


def diagonal_braiding(chi: Bicharacter, basis: GradedBasis) -> GenericBraiding:
    """c(x_i x x_j) = chi(deg x_i, deg x_j) x_j x x_i as a structure tensor."""
    report = validate_bicharacter(chi)
    if not report.ok:
        raise ValueError("invalid bicharacter:\n" + report.summary())
    d = basis.dim
    q = [[chi.value(basis.degrees[i], basis.degrees[j]) for j in range(d)] for i in range(d)]
    return GenericBraiding.diagonal(q)


def braid_check(c: GenericBraiding) -> bool:
    """Exhaustive check of the braid equation on all basis triples."""
    d = c.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                w = {(i, j, k): ONE}
                lhs = braid_at(c, braid_at(c, braid_at(c, w, 0), 1), 0)
                rhs = braid_at(c, braid_at(c, braid_at(c, w, 1), 0), 1)
                if not vec_equal(lhs, rhs):
                    return False
    return True


def is_symmetric(c: GenericBraiding) -> bool:
    """True iff applying the braiding twice is the identity on all basis pairs."""
    d = c.dim
    for i in range(d):
        for j in range(d):
            w = {(i, j): ONE}
            if not vec_equal(braid_at(c, braid_at(c, w, 0), 0), w):
                return False
    return True


def is_categorical(c: GenericBraiding, x: Subspace) -> bool:
    """True iff c(X x V) lies in V x X and c(V x X) lies in X x V, exactly."""
    funcs = [sparse_of(f) for f in x.functionals()]
    d = c.dim
    xrows = [sparse_of(r) for r in x.rows]
    for xv in xrows:
        for i in range(d):
            left = {}
            right = {}
            for a, ca in xv.items():
                for (k, l), s in c.braid_pair(a, i).items():
                    key = (k, l)
                    prev = left.get(key)
                    val = ca * s if prev is None else prev + ca * s
                    left[key] = val
                for (k, l), s in c.braid_pair(i, a).items():
                    key = (k, l)
                    prev = right.get(key)
                    val = ca * s if prev is None else prev + ca * s
                    right[key] = val
            for f in funcs:
                acc_left = None
                for (k, l), v in left.items():
                    fl = f.get(l)
                    if fl is not None:
                        acc_left = v * fl if acc_left is None else acc_left + v * fl
                if acc_left is not None and not acc_left.is_zero():
                    return False
                acc_right = None
                for (k, l), v in right.items():
                    fk = f.get(k)
                    if fk is not None:
                        acc_right = v * fk if acc_right is None else acc_right + v * fk
                if acc_right is not None and not acc_right.is_zero():
                    return False
    return True
