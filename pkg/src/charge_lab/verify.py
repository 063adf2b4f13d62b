"""Exhaustive small-rank verification suites.

Each check sweeps a full finite domain and reports a VerifyResult; the CLI
`verify` command and the acceptance tests are thin wrappers around these.
The edge_test parameter lets a harness inject a mutated graph-edge test to
confirm the suites actually detect errors.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .chains import mu_chain
from .charge import charge
from .fillings import (
    arm_statistic,
    enumerate_bmu,
    filling_map,
    inverse_filling_map,
    ord_filling,
    reconstruct_sigma,
)
from .foldings import enumerate_admissible, level_of
from .kn import (
    condition_r1,
    condition_r2,
    condition_r3,
    is_kn_column,
    maxcol,
    maxcol_formulas_hold,
    split_candidates_equal,
    split_column,
)
from .poly import (
    charge_formula_t0,
    is_invariant,
    ram_yip_t0,
    specialize_q,
    sum_coefficients,
    weyl_character,
)
from .qbg import edge_by_criterion, edge_by_length
from .weyl import LieType, ValidationError, all_elements, letter_key, letters, positive_roots


@dataclass(frozen=True)
class VerifyResult:
    name: str
    ok: bool
    detail: str


def partitions_up_to(max_size: int, max_parts: int):
    """All partitions (including the empty one) of size <= max_size with at
    most max_parts parts."""
    out = [()]

    def grow(prefix, remaining, cap):
        for part in range(min(remaining, cap), 0, -1):
            nxt = prefix + (part,)
            out.append(nxt)
            if len(nxt) < max_parts:
                grow(nxt, remaining - part, part)

    if max_parts:
        grow((), max_size, max_size)
    return out


def scope_weights(lt: LieType, max_size: int):
    max_parts = lt.n - 1 if lt.variant == "A" else lt.n
    return partitions_up_to(max_size, max_parts)


def check_qbg(lt: LieType, edge_test=None) -> VerifyResult:
    """The circular-order edge criterion agrees with the length-based test
    on every (element, root) pair."""
    test = edge_test if edge_test is not None else edge_by_criterion
    bad = []
    total = 0
    for w in all_elements(lt):
        for r in positive_roots(lt):
            total += 1
            if test(lt, w, r) is not edge_by_length(lt, w, r):
                bad.append((w, r))
    detail = f"{lt.variant} n={lt.n}: {total} pairs, {len(bad)} disagreements"
    return VerifyResult(f"{lt.variant}-qbg", not bad, detail)


def check_bijection(lt: LieType, weights, edge_test=None) -> VerifyResult:
    """Admissible pairs biject with the column tensor product: equal
    cardinality, sorted images are distinct and exhaust the target, and the
    inverse map round-trips."""
    failures = []
    pairs_total = 0
    for mu in weights:
        chain = mu_chain(lt, mu)
        pairs = list(enumerate_admissible(chain, edge_test=edge_test))
        pairs_total += len(pairs)
        images = set()
        for w, J in pairs:
            sigma = filling_map(chain, w, J)
            images.add(ord_filling(sigma).columns)
            if reconstruct_sigma(ord_filling(sigma)).columns != sigma.columns:
                failures.append(f"mu={mu}: sorted-image reconstruction fails at {w},{J}")
            if inverse_filling_map(chain, sigma) != (w, J):
                failures.append(f"mu={mu}: round trip fails at {w},{J}")
        target = {f.columns for f in enumerate_bmu(lt, mu)}
        if len(images) != len(pairs):
            failures.append(f"mu={mu}: sorted filling map not injective")
        if images != target:
            failures.append(f"mu={mu}: image has {len(images)} fillings, target {len(target)}")
    detail = f"{lt.variant} n={lt.n}: {len(weights)} weights, {pairs_total} pairs"
    if failures:
        detail += "; " + "; ".join(failures[:5])
    return VerifyResult(f"{lt.variant}-bijection", not failures, detail)


def check_statistics(lt: LieType, weights, edge_test=None) -> VerifyResult:
    """level = charge of the sorted filling = arm sum over descents, for
    every admissible pair."""
    mismatches = []
    total = 0
    for mu in weights:
        chain = mu_chain(lt, mu)
        for w, J in enumerate_admissible(chain, edge_test=edge_test):
            total += 1
            sigma = filling_map(chain, w, J)
            trio = (level_of(chain, w, J), charge(ord_filling(sigma)), arm_statistic(sigma))
            if len(set(trio)) != 1:
                mismatches.append(f"mu={mu} {w} {J}: level/charge/arm = {trio}")
    detail = f"{lt.variant} n={lt.n}: {total} pairs, {len(mismatches)} mismatches"
    if mismatches:
        detail += "; " + "; ".join(mismatches[:5])
    return VerifyResult(f"{lt.variant}-statistics", not mismatches, detail)


def check_poly(lt: LieType, weights) -> VerifyResult:
    """The two polynomial constructions agree termwise; q=0 gives the
    character; the result is Weyl-invariant with nonnegative coefficients
    and total mass |B_mu| at q=1, x=1."""
    failures = []
    for mu in weights:
        p = ram_yip_t0(lt, mu)
        if p != charge_formula_t0(lt, mu):
            failures.append(f"mu={mu}: formulas disagree")
            continue
        if specialize_q(p, 0) != weyl_character(lt, mu):
            failures.append(f"mu={mu}: q=0 is not the character")
        if not is_invariant(lt, p):
            failures.append(f"mu={mu}: not Weyl-invariant")
        if any(c <= 0 for c in p.values()):
            failures.append(f"mu={mu}: nonpositive coefficient")
        if sum_coefficients(specialize_q(p, 1)) != len(enumerate_bmu(lt, mu)):
            failures.append(f"mu={mu}: total mass differs from the index set size")
    detail = f"{lt.variant} n={lt.n}: {len(weights)} weights"
    if failures:
        detail += "; " + "; ".join(failures[:5])
    return VerifyResult(f"{lt.variant}-poly", not failures, detail)


def distinct_abs_columns(lt: LieType):
    """Sorted columns over the signed alphabet with distinct absolute values."""
    key = lambda x: letter_key(lt, x)
    out = []
    for k in range(1, lt.n + 1):
        for absv in combinations(range(1, lt.n + 1), k):
            for signs in product((1, -1), repeat=k):
                out.append(tuple(sorted((s * a for s, a in zip(signs, absv)), key=key)))
    return out


def maxcol_decomposition_holds(A, B):
    """maxcol(A, B) = (A \\ B) joined with maxcol(A n B, A u B), whenever the
    left side stays positive; returns None outside that domain."""
    A, B = set(A), set(B)
    lhs = maxcol(sorted(A), B)
    if not lhs or min(lhs) < 1:
        return None
    rhs = tuple(sorted(list(A - B) + list(maxcol(sorted(A & B), A | B))))
    return lhs == rhs


def check_kn(lt: LieType) -> VerifyResult:
    """KN-column machinery: the two column definitions coincide, the maxcol
    decomposition holds, and the three splitting characterizations agree on
    columns with distinct absolute values."""
    failures = []
    for c in (c for k in range(1, lt.n + 1) for c in combinations(letters(lt), k)):
        try:
            split_column(lt, c)
            splittable = True
        except ValidationError:
            splittable = False
        if splittable != is_kn_column(lt, c):
            failures.append(f"column definitions disagree at {c}")
    universe = range(1, lt.n + 1)
    subsets = [set(s) for r in range(lt.n + 1) for s in combinations(universe, r)]
    for A in subsets:
        if not A:
            continue
        for B in subsets:
            if maxcol_decomposition_holds(A, B) is False:
                failures.append(f"maxcol decomposition fails at {sorted(A)}, {sorted(B)}")
    cols = distinct_abs_columns(lt)
    pairs = 0
    for Dp in cols:
        for D in cols:
            if len(D) != len(Dp):
                continue
            pairs += 1
            e1 = condition_r1(lt, D, Dp) and condition_r2(lt, D, Dp) and condition_r3(lt, D, Dp)
            e2 = maxcol_formulas_hold(lt, Dp, D)
            e3 = split_candidates_equal(lt, Dp, D)
            if not e1 == e2 == e3:
                failures.append(f"splitting characterizations disagree at {Dp}, {D}")
    detail = f"C n={lt.n}: {pairs} column pairs"
    if failures:
        detail += "; " + "; ".join(failures[:5])
    return VerifyResult("kn", not failures, detail)


def run_scope(scope: str, n: int | None = None, edge_test=None) -> list[VerifyResult]:
    """Run one named suite, or the full default set for scope 'all'."""
    if scope == "all":
        out = []
        for name in ("A-qbg", "C-qbg", "A-bijection", "C-bijection",
                     "A-statistics", "C-statistics", "A-poly", "C-poly", "kn"):
            out.extend(run_scope(name, edge_test=edge_test))
        return out
    if scope == "A-qbg":
        return [check_qbg(LieType("A", n or 4), edge_test=edge_test)]
    if scope == "C-qbg":
        return [check_qbg(LieType("C", n or 3), edge_test=edge_test)]
    if scope == "kn":
        return [check_kn(LieType("C", n or 3))]
    kind, _, suite = scope.partition("-")
    if kind in ("A", "C") and suite in ("bijection", "statistics", "poly"):
        lt = LieType(kind, n or (3 if kind == "A" else 2))
        weights = scope_weights(lt, 4 if kind == "A" else 3)
        if suite == "bijection":
            return [check_bijection(lt, weights, edge_test=edge_test)]
        if suite == "statistics":
            return [check_statistics(lt, weights, edge_test=edge_test)]
        return [check_poly(lt, weights)]
    raise ValidationError(f"unknown verification scope {scope!r}")
