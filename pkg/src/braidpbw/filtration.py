"""Subspace ladders inside a structure-constant bialgebra.

Wedge preimages under the coproduct build two kinds of ladders: the
filtration induced by a braided Hopf subalgebra, and the coradical
filtration of a connected graded bialgebra.  An exhaustive validated
ladder yields the associated graded bialgebra with induced product,
coproduct, braiding, and antipode, computed through canonical pivot
complements.
"""
from __future__ import annotations

from dataclasses import dataclass

from .findim_hopf import StructureBialgebra, Vec, render_tensor
from .braided_space import GenericBraiding, is_categorical
from .linalg import (
    Subspace,
    dense_of,
    invert_matrix,
    kron_rows,
    matrix_kernel,
    sparse_of,
    zero_row,
)
from .multilinear import vadd_into
from .reporting import ValidationReport
from .scalars import ONE, ZERO, Scalar


class FiltrationError(ValueError):
    pass


@dataclass
class FiltrationLadder:
    bialgebra: StructureBialgebra
    steps: list[Subspace]
    exhaustive: bool
    categorical_steps: bool
    antipode_stable: bool

    @property
    def dims(self) -> list[int]:
        return [s.dim for s in self.steps]

    @property
    def top(self) -> Subspace:
        return self.steps[-1]


def subspace_from_indices(h: StructureBialgebra, indices) -> Subspace:
    rows = []
    for i in indices:
        row = zero_row(h.dim)
        row[i] = ONE
        rows.append(row)
    return Subspace.span(h.dim, rows, ambient=h)


def wedge(k: Subspace, w: Subspace) -> Subspace:
    """Preimage under the coproduct of K (x) H + H (x) W, exactly.

    Coordinate subspaces short-circuit to sparse support constraints;
    the general case eliminates against the kron row space.
    """
    h: StructureBialgebra = k.ambient or w.ambient
    if h is None:
        raise ValueError("wedge needs subspaces attached to a bialgebra")
    d = h.dim
    kcols = k.coordinate_columns()
    wcols = w.coordinate_columns()
    if kcols is not None and wcols is not None:
        constraints: dict[tuple[int, int], dict[int, Scalar]] = {}
        for i in range(d):
            for (a, b), c in h.comult[i].items():
                if a in kcols or b in wcols:
                    continue
                constraints.setdefault((a, b), {})[i] = c
        rows = [dense_of(row, d) for row in constraints.values()]
        kernel = matrix_kernel(rows, d)
        return Subspace.span(d, kernel, ambient=h)
    eye = [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]
    big = kron_rows([list(r) for r in k.rows], eye) + kron_rows(eye, [list(r) for r in w.rows])
    allowed = Subspace.span(d * d, big)
    funcs = allowed.functionals()
    rows = []
    for f in funcs:
        row = zero_row(d)
        touched = False
        for i in range(d):
            acc = ZERO
            for (a, b), c in h.comult[i].items():
                fv = f[a * d + b]
                if not fv.is_zero():
                    acc = acc + c * fv
            if not acc.is_zero():
                row[i] = acc
                touched = True
        if touched:
            rows.append(row)
    kernel = matrix_kernel(rows, d)
    return Subspace.span(d, kernel, ambient=h)


def validate_hopf_subalgebra(h: StructureBialgebra, k: Subspace) -> ValidationReport:
    """K must be closed under product, coproduct, and antipode, contain the
    unit, and be compatible with the braiding."""
    report = ValidationReport("braided Hopf subalgebra")
    report.checked += 1
    if not k.contains_vector(dense_of(h.unit, h.dim)):
        report.record("unit-membership", (), "unit", "in K")
    rows = [sparse_of(r) for r in k.rows]
    funcs = [sparse_of(f) for f in k.functionals()]

    def in_k(vec: Vec) -> bool:
        for f in funcs:
            acc = ZERO
            for i, c in vec.items():
                fv = f.get(i)
                if fv is not None:
                    acc = acc + c * fv
            if not acc.is_zero():
                return False
        return True

    for a, u in enumerate(rows):
        for b, v in enumerate(rows):
            report.checked += 1
            if not in_k(h.multiply(u, v)):
                report.record("product-closure", (a, b), "K.K", "in K")
    for a, u in enumerate(rows):
        cu = h.comultiply(u)
        report.checked += 1
        left_ok = right_ok = True
        for f in funcs:
            lacc: dict[int, Scalar] = {}
            racc: dict[int, Scalar] = {}
            for (i, j), c in cu.items():
                fi = f.get(i)
                if fi is not None:
                    vadd_into(racc, {j: c * fi})
                fj = f.get(j)
                if fj is not None:
                    vadd_into(lacc, {i: c * fj})
            if lacc:
                left_ok = False
            if racc:
                right_ok = False
        if not (left_ok and right_ok):
            report.record("coproduct-closure", (a,), "Delta(K)", "in K(x)K")
        if h.antipode is not None:
            report.checked += 1
            if not in_k(h.apply_antipode(u)):
                report.record("antipode-closure", (a,), "S(K)", "in K")
    report.checked += 1
    if not is_categorical(h.braiding, k):
        report.record("categorical", (), "c(K(x)H)", "in H(x)K (and symmetric condition)")
    return report


def hopf_filtration(h: StructureBialgebra, k: Subspace) -> FiltrationLadder:
    """The ladder of wedge powers of a validated braided Hopf subalgebra."""
    validation = validate_hopf_subalgebra(h, k)
    if not validation.ok:
        raise FiltrationError("K is not a categorical braided Hopf subalgebra:\n"
                              + validation.summary())
    return _wedge_ladder(h, k, k)


def coradical_filtration_connected(h: StructureBialgebra) -> FiltrationLadder:
    """Coradical filtration of a connected graded bialgebra: iterated wedge
    powers of the span of the unit."""
    if h.grading is None:
        raise FiltrationError("coradical filtration needs a graded bialgebra")
    zero_indices = h.degree_indices(0)
    if len(zero_indices) != 1:
        raise FiltrationError(
            f"not connected: degree-0 component has dimension {len(zero_indices)}")
    base = Subspace.span(h.dim, [dense_of(h.unit, h.dim)], ambient=h)
    if not base.contains_vector(dense_of({zero_indices[0]: ONE}, h.dim)):
        raise FiltrationError("not connected: degree-0 component differs from the unit line")
    return _wedge_ladder(h, base, base)


def _wedge_ladder(h: StructureBialgebra, k: Subspace, start: Subspace) -> FiltrationLadder:
    steps = [start]
    while True:
        nxt = wedge(k, steps[-1])
        if not nxt.contains(steps[-1]):
            raise FiltrationError("wedge step is not increasing")
        if nxt.dim == steps[-1].dim:
            break
        steps.append(nxt)
        if nxt.dim == h.dim:
            break
    categorical = all(is_categorical(h.braiding, s) for s in steps)
    stable = True
    if h.antipode is not None:
        for s in steps:
            for r in s.rows:
                if not s.contains_vector(dense_of(h.apply_antipode(sparse_of(r)), h.dim)):
                    stable = False
    return FiltrationLadder(
        bialgebra=h,
        steps=steps,
        exhaustive=steps[-1].dim == h.dim,
        categorical_steps=categorical,
        antipode_stable=stable,
    )


@dataclass
class AdaptedBasis:
    """Canonical complements along a ladder: representatives and the change
    of basis between the ambient coordinates and the adapted ones."""

    h: StructureBialgebra
    reps: list[list[Scalar]]
    fil_degrees: list[int]
    inverse: list[list[Scalar]]
    gate_degrees: list[int]

    @staticmethod
    def from_ladder(h: StructureBialgebra, ladder: FiltrationLadder) -> "AdaptedBasis":
        if not ladder.exhaustive:
            raise FiltrationError("filtration does not exhaust the bialgebra; "
                                  "the associated graded object is not defined on all of H")
        entries: list[tuple[int, int, list[Scalar]]] = []
        seen: set[int] = set()
        for n, step in enumerate(ladder.steps):
            for j, p in enumerate(step.pivots):
                if p not in seen:
                    seen.add(p)
                    entries.append((n, p, list(step.rows[j])))
        entries.sort(key=lambda e: (e[0], e[1]))
        reps = [e[2] for e in entries]
        degrees = [e[0] for e in entries]
        inverse = invert_matrix(reps)
        gate = []
        for r in reps:
            if h.trunc_grading is not None:
                gate.append(max(h.gate_degree(i) for i, c in enumerate(r) if not c.is_zero()))
            else:
                gate.append(0)
        return AdaptedBasis(h, reps, degrees, inverse, gate)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def expand(self, vec: Vec) -> dict[int, Scalar]:
        """Coordinates of an ambient sparse vector over the representatives."""
        out: dict[int, Scalar] = {}
        for i, c in vec.items():
            row = self.inverse[i]
            for r, m in enumerate(row):
                if not m.is_zero():
                    vadd_into(out, {r: c * m})
        return out

    def expand_pair(self, vec) -> dict[tuple[int, int], Scalar]:
        out: dict[tuple[int, int], Scalar] = {}
        for (i, j), c in vec.items():
            rowi = self.inverse[i]
            rowj = self.inverse[j]
            for r, mi in enumerate(rowi):
                if mi.is_zero():
                    continue
                for s, mj in enumerate(rowj):
                    if not mj.is_zero():
                        vadd_into(out, {(r, s): c * mi * mj})
        return out

    def rep_vec(self, r: int) -> Vec:
        return sparse_of(self.reps[r])


def validate_bialgebra_filtration(h: StructureBialgebra, ladder: FiltrationLadder,
                                  adapted: AdaptedBasis | None = None) -> ValidationReport:
    """Products land in the summed step, coproducts respect the ladder
    degreewise, the antipode preserves steps, and steps are categorical."""
    report = ValidationReport("bialgebra filtration")
    ab = adapted or AdaptedBasis.from_ladder(h, ladder)
    top = len(ladder.steps) - 1
    report.checked += 1
    zero_reps = [r for r in range(ab.dim) if ab.fil_degrees[r] == 0]
    unit_exp = ab.expand(h.unit)
    if any(r not in zero_reps for r in unit_exp):
        report.record("unit-degree", (), "unit", "in bottom step")
    t_cap = h.truncation
    for a in range(ab.dim):
        for b in range(ab.dim):
            if t_cap is not None and ab.gate_degrees[a] + ab.gate_degrees[b] > t_cap:
                report.skipped += 1
                continue
            report.checked += 1
            target = min(ab.fil_degrees[a] + ab.fil_degrees[b], top)
            prod = ab.expand(h.multiply(ab.rep_vec(a), ab.rep_vec(b)))
            if any(ab.fil_degrees[r] > target for r in prod):
                report.record("product-degree", (a, b), "deg product", f"<= {target}")
    for a in range(ab.dim):
        report.checked += 1
        n = ab.fil_degrees[a]
        cop = ab.expand_pair(h.comultiply(ab.rep_vec(a)))
        if any(ab.fil_degrees[r] + ab.fil_degrees[s] > n for (r, s) in cop):
            report.record("coproduct-degree", (a,), "split degrees", f"sum <= {n}")
        if h.antipode is not None:
            report.checked += 1
            sv = ab.expand(h.apply_antipode(ab.rep_vec(a)))
            if any(ab.fil_degrees[r] > n for r in sv):
                report.record("antipode-degree", (a,), "deg S", f"<= {n}")
    report.checked += 1
    if not ladder.categorical_steps:
        report.record("categorical-steps", (), "steps", "categorical")
    return report


def _dedupe_names(names: list[str]) -> list[str]:
    seen: dict[str, int] = {}
    out = []
    for nm in names:
        if nm in seen:
            seen[nm] += 1
            out.append(f"{nm}'{seen[nm]}")
        else:
            seen[nm] = 0
            out.append(nm)
    return out


@dataclass
class AssociatedGraded:
    algebra: StructureBialgebra
    adapted: AdaptedBasis
    ladder: FiltrationLadder


def associated_graded(h: StructureBialgebra, ladder: FiltrationLadder) -> AssociatedGraded:
    """The graded bialgebra on the ladder quotients, by structure constants.

    Representatives are the new-pivot rows of each step; every structure
    tensor is the degree-homogeneous part of the expansion of the parent
    operation in the adapted basis.
    """
    ab = AdaptedBasis.from_ladder(h, ladder)
    report = validate_bialgebra_filtration(h, ladder, ab)
    if not report.ok:
        raise FiltrationError("not a bialgebra filtration:\n" + report.summary())
    d = ab.dim
    degrees = ab.fil_degrees
    t_cap = h.truncation

    names = []
    for r in range(d):
        vec = ab.rep_vec(r)
        if len(vec) == 1:
            (i, c), = vec.items()
            if c.is_one():
                names.append(h.names[i])
                continue
        names.append(f"f{degrees[r]}_{r}")
    names = _dedupe_names(names)

    mult_rows = []
    for a in range(d):
        row = []
        for b in range(d):
            if t_cap is not None and ab.gate_degrees[a] + ab.gate_degrees[b] > t_cap:
                row.append({})
                continue
            target = degrees[a] + degrees[b]
            if target > len(ladder.steps) - 1:
                row.append({})
                continue
            prod = ab.expand(h.multiply(ab.rep_vec(a), ab.rep_vec(b)))
            row.append({r: c for r, c in prod.items() if degrees[r] == target})
        mult_rows.append(tuple(row))

    comult = []
    for a in range(d):
        n = degrees[a]
        cop = ab.expand_pair(h.comultiply(ab.rep_vec(a)))
        comult.append({(r, s): c for (r, s), c in cop.items()
                       if degrees[r] + degrees[s] == n})

    braid_rows: dict[tuple[int, int], dict[tuple[int, int], Scalar]] = {}
    for a in range(d):
        for b in range(d):
            w: dict = {}
            for i, ci in ab.rep_vec(a).items():
                for j, cj in ab.rep_vec(b).items():
                    for (x, y), s in h.braid_pair(i, j).items():
                        vadd_into(w, {(x, y): ci * cj * s})
            exp = ab.expand_pair(w)
            entry = {(r, s): c for (r, s), c in exp.items()
                     if degrees[r] + degrees[s] == degrees[a] + degrees[b]}
            if entry:
                braid_rows[(a, b)] = entry

    unit = {r: c for r, c in ab.expand(h.unit).items()}
    counit = tuple(h.counit_of(ab.rep_vec(r)) if degrees[r] == 0 else ZERO for r in range(d))

    antipode = None
    if h.antipode is not None:
        antipode = []
        for a in range(d):
            sv = ab.expand(h.apply_antipode(ab.rep_vec(a)))
            antipode.append({r: c for r, c in sv.items() if degrees[r] == degrees[a]})
        antipode = tuple(antipode)

    gr = StructureBialgebra(
        names=tuple(names),
        unit=unit,
        mult=tuple(mult_rows),
        counit=counit,
        comult=tuple(comult),
        braiding=GenericBraiding(d, braid_rows),
        antipode=antipode,
        grading=tuple(degrees),
        truncation=t_cap,
        trunc_grading=tuple(ab.gate_degrees) if t_cap is not None else None,
    )
    return AssociatedGraded(algebra=gr, adapted=ab, ladder=ladder)


def check_commutator_filtration(h: StructureBialgebra, ladder: FiltrationLadder) -> ValidationReport:
    """Commutators drop one filtration level: the bottom-step hypothesis and
    the general statement, verified on representative pairs by membership."""
    from .braided_space import is_symmetric

    report = ValidationReport("commutator filtration")
    if not is_symmetric(h.braiding):
        report.record("symmetric-braiding", (), "braiding", "symmetric")
        return report
    ab = AdaptedBasis.from_ladder(h, ladder)
    top = len(ladder.steps) - 1
    t_cap = h.truncation
    for a in range(ab.dim):
        for b in range(ab.dim):
            if t_cap is not None and ab.gate_degrees[a] + ab.gate_degrees[b] > t_cap:
                report.skipped += 1
                continue
            report.checked += 1
            m, n = ab.fil_degrees[a], ab.fil_degrees[b]
            target = min(m + n - 1, top)
            comm = ab.expand(h.commutator(ab.rep_vec(a), ab.rep_vec(b)))
            if any(ab.fil_degrees[r] > target for r in comm):
                report.record("commutator-level", (m, n),
                              render_tensor(h, {(k,): v for k, v in h.commutator(ab.rep_vec(a), ab.rep_vec(b)).items()}),
                              f"inside step {target}")
    return report
