"""Fillings of Young diagrams attached to folding pairs, and the inverse
algorithms realizing the bijection with tensor products of columns.

Columns are displayed left to right from shortest to tallest; the column
labels run from mu_1 (leftmost) down to 1 (rightmost). In type C every
logical column is a pair (right column, left column) and the diagram has
shape 2*mu, the right column of each pair sitting to the LEFT of its left
column in the display, mirroring the order in which the chain segments
act.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .chains import MuChain
from .kn import condition_1, enumerate_kn_columns, split_candidates_equal, split_column
from .weyl import (
    LieType,
    ValidationError,
    Window,
    apply_root,
    check_window,
    circ_between,
    circ_offset,
    conjugate,
    identity,
    letter_key,
    letter_str,
    root_for_positions,
    value_at,
)

Column = tuple[int, ...]


@dataclass(frozen=True)
class Filling:
    """A list of columns, leftmost first; split=True marks the doubled
    type C shape."""

    lt: LieType
    columns: tuple[Column, ...]
    split: bool = False

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    @property
    def mu1(self) -> int:
        return len(self.columns) // 2 if self.split else len(self.columns)

    def col(self, j: int, side: str = "") -> Column:
        """Column labeled j (1 = tallest, rightmost); side 'r'/'l' in split
        fillings."""
        if not self.split:
            return self.columns[self.mu1 - j]
        d = 2 * (self.mu1 - j)
        return self.columns[d if side == "r" else d + 1]

    def mu_conjugate(self) -> tuple[int, ...]:
        hs = self.heights
        if self.split:
            hs = hs[::2]
        return tuple(reversed(hs))


def check_filling(f: Filling) -> Filling:
    hs = f.heights
    if any(a > b for a, b in zip(hs, hs[1:])):
        raise ValidationError("column heights must weakly increase left to right")
    if f.split:
        if f.lt.variant != "C" or len(f.columns) % 2:
            raise ValidationError("split fillings are type C with paired columns")
        if any(hs[d] != hs[d + 1] for d in range(0, len(hs), 2)):
            raise ValidationError("paired columns must have equal heights")
    for c in f.columns:
        for x in c:
            letter_key(f.lt, x)
        vals = [abs(x) for x in c] if f.lt.variant == "C" else list(c)
        if len(set(vals)) != len(vals):
            raise ValidationError(f"column {c} repeats a value")
    return f


def filling_str(f: Filling) -> str:
    """Row-by-row tableau rendering."""
    height = max(f.heights, default=0)
    width = [max((len(letter_str(x)) for x in c), default=1) for c in f.columns]
    rows = []
    for i in range(height):
        cells = [
            (letter_str(c[i]) if i < len(c) else "").rjust(w)
            for c, w in zip(f.columns, width)
        ]
        rows.append(" ".join(cells).rstrip())
    return "\n".join(rows)


def filling_json(f: Filling) -> dict:
    return {
        "schema": "charge-lab/filling/1",
        "type": f.lt.variant,
        "n": f.lt.n,
        "shape": list(conjugate(f.mu_conjugate())),
        "columns": [list(c) for c in f.columns],
        "split": f.split,
    }


def filling_from_json(data: dict) -> Filling:
    lt = LieType(data["type"], data["n"])
    cols = tuple(tuple(c) for c in data["columns"])
    return check_filling(Filling(lt, cols, bool(data.get("split", False))))


def filling_map(chain: MuChain, w: Window, J) -> Filling:
    """The filling of shape mu (type A) or 2*mu (type C) read off from the
    window prefixes of the intermediate elements."""
    lt = chain.lt
    if chain.mu1 and not chain.seg_of_j:
        raise ValidationError("chain carries no segment structure")
    v = check_window(lt, w)
    J = sorted(set(J))
    cols = []

    def apply_range(v, lo, hi):
        for j in J:
            if lo < j <= hi:
                v = apply_root(lt, v, chain.root_at(j))
        return v

    mup = chain.mu_conj
    for j in range(chain.mu1, 0, -1):
        k = mup[j - 1]
        start, end = chain.seg_of_j[j]
        if lt.variant == "A":
            cols.append(v[:k])
            v = apply_range(v, start, end)
        else:
            mid = chain.rl_split[j]
            cols.append(v[:k])
            v = apply_range(v, start, mid)
            cols.append(v[:k])
            v = apply_range(v, mid, end)
    return Filling(lt, tuple(cols), split=(lt.variant == "C"))


def content(f: Filling) -> tuple[int, ...]:
    n = f.lt.n
    counts = [0] * (2 * n + 1)
    for c in f.columns:
        for x in c:
            counts[x] += 1
    if f.lt.variant == "A":
        return tuple(counts[1 : n + 1])
    out = []
    for i in range(1, n + 1):
        diff = counts[i] - counts[-i]
        if diff % 2:
            raise ValidationError(f"odd count difference for letter {i}")
        out.append(diff // 2)
    return tuple(out)


def ord_filling(f: Filling) -> Filling:
    key = lambda x: letter_key(f.lt, x)
    return Filling(f.lt, tuple(tuple(sorted(c, key=key)) for c in f.columns), f.split)


def descents(f: Filling) -> list[tuple[int, int, int]]:
    """Descent cells of an image filling as (column label j, row i, arm).

    Arm counts the cells strictly to the left in the displayed row. In
    type C only the right column of each pair can host a descent,
    against the left column of the next pair.
    """
    key = lambda x: letter_key(f.lt, x)
    cols, hs = f.columns, f.heights
    out = []
    step = 2 if f.split else 1
    for d in range(step, len(cols), step):
        label = f.mu1 - d // step
        for i in range(1, len(cols[d - 1]) + 1):
            if key(cols[d][i - 1]) > key(cols[d - 1][i - 1]):
                arm = sum(1 for dd in range(d) if hs[dd] >= i)
                out.append((label, i, arm))
    return out


def arm_statistic(f: Filling) -> int:
    """Sum of arms over descents; halved in type C (arms there are even)."""
    total = sum(arm for _, _, arm in descents(f))
    if f.split:
        if total % 2:
            raise ValidationError("odd arm sum on a doubled shape")
        return total // 2
    return total


def reconstruct_sigma(tau: Filling) -> Filling:
    """The unique preimage of a sorted filling under per-column sorting,
    subject to the adjacency conditions.

    Built right to left: each new column takes, row by row, the remaining
    entry that is circularly minimal from the neighbor's entry in that
    row.
    """
    check_filling(tau)
    lt = tau.lt
    cols = list(tau.columns)
    if not cols:
        return tau
    key = lambda x: letter_key(lt, x)
    out = [tuple(sorted(cols[-1], key=key))]
    for d in range(len(cols) - 2, -1, -1):
        right = out[0]
        remaining = list(cols[d])
        built = []
        for i in range(len(remaining)):
            a = right[i]
            x = min(remaining, key=lambda y: circ_offset(lt, a, y))
            remaining.remove(x)
            built.append(x)
        out.insert(0, tuple(built))
    return Filling(lt, tuple(out), tau.split)


def path_A(lt: LieType, u: Window, i: int, c: int, L) -> tuple[tuple, Window]:
    """Greedy transposition path moving the value c into position i.

    Scans the positions in L once; takes (i, m) whenever the current value
    there sits circularly between the value at i and c, and stops on c
    itself. The value at position i strictly increases in the circular
    order along the way.
    """
    if value_at(u, i) == c:
        return (), u
    S = []
    v = u
    for m in L:
        vm = value_at(v, m)
        take_final = vm == c
        if take_final or circ_between(lt, value_at(v, i), vm, c):
            r = root_for_positions(lt, i, m)
            S.append(r)
            v = apply_root(lt, v, r)
            if take_final:
                return tuple(S), v
    raise ValidationError(f"value {letter_str(c)} not reachable into position {i}")


def circ_max(lt: LieType, u: Window, i: int, Cp: Column) -> int:
    """M(u, i, C'): circular maximum, from u(i), of u(i) and the values in
    positions above the column height that lie on the arc up to C'(i)."""
    k = len(Cp)
    a = value_at(u, i)
    hi = circ_offset(lt, a, Cp[i - 1])
    cands = [a]
    for l in range(k + 1, lt.n + 1):
        if 0 < circ_offset(lt, a, u[l - 1]) <= hi:
            cands.append(u[l - 1])
    return max(cands, key=lambda x: circ_offset(lt, a, x))


def path_C(lt: LieType, u: Window, i: int, Cp: Column):
    """Signed analogue of the greedy path, in up to four stages.

    Stage I walks the unbarred tail positions toward the circular maximum
    M(u, i, C'); a sign flip at i is inserted exactly on sign mismatch
    with the target; the remaining stages walk the barred positions.
    Returns ((T_A, T_C), v).
    """
    k = len(Cp)
    n = lt.n
    M = circ_max(lt, u, i, Cp)
    T_A, u_A = path_A(lt, u, i, M, list(range(k + 1, n + 1)))
    T_C = []
    if (value_at(u_A, i) > 0) != (Cp[i - 1] > 0):
        r = (i, -i)
        T_C.append(r)
        u_A = apply_root(lt, u_A, r)
    L2 = [-m for m in range(n, k, -1)] + [-m for m in range(i - 1, 0, -1)]
    S, v = path_A(lt, u_A, i, Cp[i - 1], L2)
    return (tuple(T_A), tuple(T_C) + S), v


def _positions_for(chain: MuChain, lo: int, hi: int, roots) -> list[int]:
    lookup = {}
    for idx in range(lo, hi):
        lookup[chain.roots[idx]] = idx + 1
    try:
        return [lookup[r] for r in roots]
    except KeyError as exc:
        raise ValidationError(f"reflection {exc.args[0]} falls outside its chain segment")


def inverse_filling_map(chain: MuChain, sigma: Filling) -> tuple[Window, tuple[int, ...]]:
    """The unique folding pair mapped to sigma by the filling map.

    Validates the image characterization first (tallest column increasing,
    adjacency condition on neighbors, and in type C the KN-splitting
    condition on each sorted pair), then replays the greedy paths to
    recover the fold positions.
    """
    lt = chain.lt
    check_filling(sigma)
    if sigma.split != (lt.variant == "C"):
        raise ValidationError("filling shape does not match the chain's type")
    if sigma.mu_conjugate() != chain.mu_conj:
        raise ValidationError("filling shape does not match the chain's weight")
    cols = sigma.columns
    key = lambda x: letter_key(lt, x)
    if cols and list(cols[-1]) != sorted(cols[-1], key=key):
        raise ValidationError("rightmost column must be increasing")
    for d in range(len(cols) - 1):
        if not condition_1(lt, cols[d], cols[d + 1]):
            raise ValidationError(f"adjacency condition fails between columns {d} and {d + 1}")
    if lt.variant == "C":
        srt = lambda c: tuple(sorted(c, key=key))
        for j in range(1, sigma.mu1 + 1):
            if not split_candidates_equal(lt, srt(sigma.col(j, "r")), srt(sigma.col(j, "l"))):
                raise ValidationError(f"column pair {j} does not sort to a split KN column")

    u = identity(lt)
    positions: list[int] = []
    mup = chain.mu_conj
    for j in range(1, chain.mu1 + 1):
        k = mup[j - 1]
        if lt.variant == "A":
            Cj = sigma.col(j)
            for i in range(k, 0, -1):
                S, u = path_A(lt, u, i, Cj[i - 1], list(range(k + 1, lt.n + 1)))
                lo, hi = chain.a_rows[(j, i)]
                positions += _positions_for(chain, lo, hi, reversed(S))
        else:
            Cl, Cr = sigma.col(j, "l"), sigma.col(j, "r")
            for i in range(k, 0, -1):
                (T_A, T_C), u = path_C(lt, u, i, Cl)
                lo, hi = chain.l_sub[(j, i)]
                positions += _positions_for(chain, lo, hi, reversed(T_A + T_C))
            for i in range(k, 0, -1):
                (T_A, T_C), u = path_C(lt, u, i, Cr)
                if T_A or any(r[1] != -i or r[0] >= i for r in T_C):
                    raise ValidationError("right-column path left its chain segment")
                lo, hi = chain.r_sub[(j, i)]
                positions += _positions_for(chain, lo, hi, reversed(T_C))
    return u, tuple(sorted(positions))


def enumerate_bmu(lt: LieType, mu) -> list[Filling]:
    """All tensor products of columns for the shape mu: sorted column
    fillings in type A, split KN column pairs in type C."""
    from .weyl import check_dominant

    mu = check_dominant(lt, mu)
    mup = conjugate(mu)
    mu1 = mu[0] if mu else 0
    per_column = []
    for j in range(mu1, 0, -1):
        k = mup[j - 1]
        if lt.variant == "A":
            per_column.append([(c,) for c in combinations(range(1, lt.n + 1), k)])
        else:
            per_column.append([split_column(lt, c) for c in enumerate_kn_columns(lt, k)])
    out = []
    for combo in product(*per_column):
        cols = tuple(c for pair in combo for c in pair)
        out.append(Filling(lt, cols, split=(lt.variant == "C")))
    return out
