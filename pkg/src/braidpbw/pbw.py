"""PBW verdicts for connected graded braided bialgebras.

The indecomposables of the augmentation ideal carry an induced braiding;
the canonical graded algebra map from the braided symmetric algebra on
them into the target sends each standard monomial to the ordered product
of representatives.  The verdict is positive exactly when that map is
degreewise bijective, kills the braided symmetrising ideal, and
intertwines the braidings on generators; the first degree where any of
these fails is recorded, and a monomial basis is emitted whenever the
induced braiding is diagonal and symmetric.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .braided_space import GenericBraiding, braid_check, is_symmetric
from .coinvariants import CoinvariantAlgebra
from .findim_hopf import StructureBialgebra, Vec
from .linalg import Subspace, dense_of, rank
from .multilinear import braid_at, lift, tensor, vadd_into, vec_equal
from .scalars import ONE, ZERO, Scalar
from .symmetric_algebra import tensor_ideal_complement, weighted_words

PBW_TYPE_TRUE = "PBW_TYPE_TRUE"
PBW_TYPE_FALSE = "PBW_TYPE_FALSE"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class QSpace:
    """Indecomposable generators: homogeneous representatives inside the
    target with their degrees and the braiding induced on the quotient."""

    reps: list[Vec]
    degrees: list[int]
    names: list[str]
    braiding: GenericBraiding

    @property
    def dim(self) -> int:
        return len(self.reps)


@dataclass
class PBWReport:
    verdict: str
    degreewise_dims: list[tuple[int, int]]  # (target dim, symmetric-algebra dim)
    requested_degree: int
    verified_degree: int
    first_failure_degree: int | None = None
    witness: dict[int, list[list[str]]] | None = None
    monomial_basis: list[str] | None = None
    braiding_diagonal: bool = False
    braiding_symmetric: bool = False
    intertwines_generators: bool = True
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "dims": [list(p) for p in self.degreewise_dims],
            "requested_degree": self.requested_degree,
            "verified_degree": self.verified_degree,
            "first_failure_degree": self.first_failure_degree,
            "witness": self.witness,
            "basis": self.monomial_basis,
            "braiding_diagonal": self.braiding_diagonal,
            "braiding_symmetric": self.braiding_symmetric,
            "intertwines_generators": self.intertwines_generators,
            "notes": self.notes,
        }


@dataclass
class PBWBasisResult:
    monomials: list[str] | None
    refusal: str | None


def _target_algebra(target) -> StructureBialgebra:
    if isinstance(target, CoinvariantAlgebra):
        return target.algebra
    return target


def _require_connected_graded(h: StructureBialgebra) -> None:
    if h.grading is None:
        raise ValueError("PBW analysis needs a graded bialgebra")
    zero = h.degree_indices(0)
    if len(zero) != 1 or not vec_equal(h.unit_vec(), {zero[0]: ONE}):
        raise ValueError("PBW analysis needs a connected target "
                         "(degree-0 part spanned by the unit)")


def compute_Q(target) -> QSpace:
    """The augmentation ideal modulo its square, with induced braiding.

    Degreewise canonical complement: standard basis vectors at the
    non-pivot columns of the span of products of positive-degree elements.
    """
    h = _target_algebra(target)
    _require_connected_graded(h)
    d = h.dim
    for i in range(d):
        if h.degree(i) > 0 and not h.counit[i].is_zero():
            raise ValueError("counit does not vanish in positive degree")
    positive = [i for i in range(d) if h.degree(i) > 0]
    square_rows = []
    for i in positive:
        for j in positive:
            if not h.gate_ok(i, j):
                continue
            prod = h.multiply(h.basis_vec(i), h.basis_vec(j))
            if prod:
                square_rows.append(dense_of(prod, d))
    square = Subspace.span(d, square_rows, ambient=h)
    pivset = set(square.pivots)
    q_indices = [i for i in positive if i not in pivset]
    q_index_set = set(q_indices)

    def project(vec: Vec) -> Vec:
        vec = {i: c for i, c in vec.items() if h.degree(i) > 0}
        residual = square.reduce(dense_of(vec, d))
        return {i: c for i, c in enumerate(residual)
                if not c.is_zero() and i in q_index_set}

    reps = [h.basis_vec(i) for i in q_indices]
    degrees = [h.degree(i) for i in q_indices]
    names = [h.names[i] for i in q_indices]
    pos = {i: t for t, i in enumerate(q_indices)}

    rows: dict[tuple[int, int], dict[tuple[int, int], Scalar]] = {}
    for a, ia in enumerate(q_indices):
        for b, ib in enumerate(q_indices):
            entry: dict = {}
            for (u, v), s in h.braid_pair(ia, ib).items():
                pu = project({u: ONE})
                pv = project({v: ONE})
                for x, cx in pu.items():
                    for y, cy in pv.items():
                        vadd_into(entry, {(pos[x], pos[y]): s * cx * cy})
            if entry:
                rows[(a, b)] = entry
    braiding = GenericBraiding(len(q_indices), rows)
    if not braid_check(braiding):
        raise ValueError("induced braiding on the generator space fails the braid equation")
    return QSpace(reps=reps, degrees=degrees, names=names, braiding=braiding)


def canonical_map(q: QSpace, target, n_max: int):
    """Per-degree data of the canonical graded algebra map.

    For each degree: the standard-monomial basis surviving in the braided
    symmetric algebra, the matrix of ordered products of representatives
    over the target's graded slice, and whether the symmetrising ideal
    maps to zero.
    """
    h = _target_algebra(target)
    _require_connected_graded(h)
    out = {}
    product_cache: dict[tuple[int, ...], Vec] = {(): h.unit_vec()}

    def product_of(word: tuple[int, ...]) -> Vec:
        if word in product_cache:
            return product_cache[word]
        head = product_of(word[:-1])
        vec = h.multiply(head, q.reps[word[-1]])
        product_cache[word] = vec
        return vec

    for n in range(1, n_max + 1):
        words, _, complement = tensor_ideal_complement(q.braiding, q.degrees, n)
        cols = h.degree_indices(n)
        col_pos = {i: t for t, i in enumerate(cols)}
        matrix = []
        for w in complement:
            vec = product_of(w)
            row = [ZERO] * len(cols)
            for i, c in vec.items():
                if i not in col_pos:
                    raise ValueError("product of representatives is not homogeneous")
                row[col_pos[i]] = c
            matrix.append(row)
        ideal_ok = True
        for w in words:
            for p in range(len(w) - 1):
                img: Vec = dict(product_of(w))
                for (k, l), s in q.braiding.braid_pair(w[p], w[p + 1]).items():
                    other = w[:p] + (k, l) + w[p + 2:]
                    vadd_into(img, product_of(other), -s)
                if img:
                    ideal_ok = False
                    break
            if not ideal_ok:
                break
        out[n] = {
            "words": words,
            "monomials": complement,
            "matrix": matrix,
            "target_dim": len(cols),
            "sq_dim": len(complement),
            "ideal_maps_to_zero": ideal_ok,
        }
    return out


def _generators_intertwine(q: QSpace, h: StructureBialgebra) -> bool:
    """The braiding of the target restricted to representative pairs equals
    the induced braiding expressed through representatives."""
    for a in range(q.dim):
        for b in range(q.dim):
            ambient = braid_at(h, tensor(lift(q.reps[a]), lift(q.reps[b])), 0)
            induced: dict = {}
            for (x, y), s in q.braiding.braid_pair(a, b).items():
                vadd_into(induced, tensor(lift(q.reps[x]), lift(q.reps[y])), s)
            if not vec_equal(ambient, induced):
                return False
    return True


def pbw_verdict(target, n_max: int) -> PBWReport:
    """Is the target isomorphic, as a braided graded algebra, to the braided
    symmetric algebra on its indecomposables?  Verified degree by degree
    through the canonical map."""
    h = _target_algebra(target)
    q = compute_Q(target)
    qmat = q.braiding.diagonal_coefficients()
    diag = qmat is not None
    sym = is_symmetric(q.braiding)
    verified = n_max
    notes = []
    if h.truncation is not None and h.truncation < n_max:
        verified = h.truncation
        notes.append(f"target truncated at degree {h.truncation}; "
                     f"degrees above it are unverifiable")
    data = canonical_map(q, h, verified)
    dims: list[tuple[int, int]] = [(1, 1)]
    first_failure = None
    witness: dict[int, list[list[str]]] = {}
    for n in range(1, verified + 1):
        entry = data[n]
        dims.append((entry["target_dim"], entry["sq_dim"]))
        if first_failure is None:
            bijective = (entry["target_dim"] == entry["sq_dim"]
                         and rank(entry["matrix"]) == entry["sq_dim"]
                         and entry["ideal_maps_to_zero"])
            if bijective:
                witness[n] = [[str(c) for c in row] for row in entry["matrix"]]
            else:
                first_failure = n
    intertwines = _generators_intertwine(q, h)
    if first_failure is None and not intertwines:
        first_failure = 1
        notes.append("the canonical map does not intertwine the braidings on generators")
    if first_failure is not None:
        verdict = PBW_TYPE_FALSE
        witness = {}
    elif verified < n_max:
        verdict = INCONCLUSIVE
    else:
        verdict = PBW_TYPE_TRUE
    basis = None
    if verdict == PBW_TYPE_TRUE and diag and sym:
        basis = _monomial_basis_strings(q, qmat, verified)
    return PBWReport(
        verdict=verdict,
        degreewise_dims=dims,
        requested_degree=n_max,
        verified_degree=verified,
        first_failure_degree=first_failure,
        witness=witness or None,
        monomial_basis=basis,
        braiding_diagonal=diag,
        braiding_symmetric=sym,
        intertwines_generators=intertwines,
        notes=notes,
    )


def _monomial_basis_strings(q: QSpace, qmat, n_max: int) -> list[str]:
    from .symmetric_algebra import SymmetricAlgebra

    sym = SymmetricAlgebra(q.names, qmat)
    out = ["1"]
    for n in range(1, n_max + 1):
        for w in weighted_words(q.dim, q.degrees, n):
            if all(w[t] <= w[t + 1] for t in range(len(w) - 1)) and \
               all(not (w[t] == w[t + 1] and sym.nilpotent[w[t]]) for t in range(len(w) - 1)):
                out.append(sym.monomial_str(w))
    return out


def pbw_basis(q: QSpace, report: PBWReport) -> PBWBasisResult:
    """Monomial basis for a positive verdict with diagonal symmetric braiding
    on the generators; an explicit refusal otherwise."""
    if report.verdict != PBW_TYPE_TRUE:
        return PBWBasisResult(None, f"verdict is {report.verdict}; no basis is claimed")
    qmat = q.braiding.diagonal_coefficients()
    if qmat is None:
        return PBWBasisResult(None, "braiding on the generator space is not diagonal "
                                    "in the declared basis; no monomial basis is guaranteed")
    if not is_symmetric(q.braiding):
        return PBWBasisResult(None, "braiding on the generator space is not symmetric; "
                                    "no monomial basis is guaranteed")
    return PBWBasisResult(_monomial_basis_strings(q, qmat, report.verified_degree), None)
