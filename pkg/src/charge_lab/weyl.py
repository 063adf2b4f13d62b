"""Root-system constants and Weyl-group arithmetic for types A and C.

Elements are plain tuples (window notation): a permutation of 1..n in
type A, or signed integers with distinct absolute values 1..n in type C,
where -i stands for the barred letter i-bar.  The full alphabet in type C
is ordered 1 < 2 < ... < n < n-bar < ... < 1-bar, i.e. barred letters sit
above the unbarred ones, with n-bar smallest among them.

Positive roots are encoded as pairs (i, j):

    (i, j)  with 0 < i < j <= n   -> e_i - e_j   (both types)
    (i, -j) with 0 < i < j <= n   -> e_i + e_j   (type C)
    (i, -i)                       -> 2 e_i       (type C)

The same pair also names the corresponding reflection.
"""

from dataclasses import dataclass
from itertools import permutations, product

Window = tuple[int, ...]
Root = tuple[int, int]


class ValidationError(ValueError):
    """Malformed input (bad weight, bad filling, bad element)."""


@dataclass(frozen=True)
class LieType:
    """Type A_{n-1} on S_n (variant 'A') or type C_n on B_n (variant 'C')."""

    variant: str
    n: int

    def __post_init__(self):
        if self.variant not in ("A", "C"):
            raise ValidationError(f"unknown type {self.variant!r}")
        if self.n < 1 or (self.variant == "A" and self.n < 2):
            raise ValidationError(f"rank {self.n} too small for type {self.variant}")

    @property
    def is_signed(self) -> bool:
        return self.variant == "C"


def bar(x: int) -> int:
    """The bar involution on letters; bar(i) = i-bar, bar(i-bar) = i."""
    return -x


def letter_key(lt: LieType, x: int) -> int:
    """Rank of a letter in the alphabet order 1 < ... < n < n-bar < ... < 1-bar."""
    n = lt.n
    if x > 0:
        if x > n:
            raise ValidationError(f"letter {x} out of range for n={n}")
        return x - 1
    if lt.variant == "A" or x < -n:
        raise ValidationError(f"letter {x} out of range for type {lt.variant}, n={n}")
    return 2 * n + x


def letters(lt: LieType) -> list[int]:
    """The alphabet in increasing order: [n] or [n-bar]."""
    if lt.variant == "A":
        return list(range(1, lt.n + 1))
    return list(range(1, lt.n + 1)) + list(range(-lt.n, 0))


def letter_cmp(lt: LieType, x: int, y: int) -> int:
    kx, ky = letter_key(lt, x), letter_key(lt, y)
    return (kx > ky) - (kx < ky)


def letter_str(x: int) -> str:
    """Render a letter; barred letters get a trailing tilde, e.g. 2~ for 2-bar."""
    return str(x) if x > 0 else f"{-x}~"


def circ_between(lt: LieType, a: int, b: int, c: int) -> bool:
    """True iff a < b < c strictly in the circular order starting at a.

    The alphabet is arranged clockwise on a circle in its linear order;
    the circular order <_a starts the reading at a.
    """
    if a == c:
        raise ValidationError("circ_between requires a != c")
    size = lt.n if lt.variant == "A" else 2 * lt.n
    ka = letter_key(lt, a)
    kb = (letter_key(lt, b) - ka) % size
    kc = (letter_key(lt, c) - ka) % size
    return 0 < kb < kc


def circ_offset(lt: LieType, a: int, b: int) -> int:
    """Position of b in the circular order starting at a (a itself is 0)."""
    size = lt.n if lt.variant == "A" else 2 * lt.n
    return (letter_key(lt, b) - letter_key(lt, a)) % size


def circ_le(lt: LieType, a: int, b: int, c: int) -> bool:
    """True iff b precedes-or-equals c in the circular order starting at a."""
    return circ_offset(lt, a, b) <= circ_offset(lt, a, c)


def identity(lt: LieType) -> Window:
    return tuple(range(1, lt.n + 1))


def check_window(lt: LieType, w: Window) -> Window:
    w = tuple(w)
    if len(w) != lt.n:
        raise ValidationError(f"window {w} has wrong length for n={lt.n}")
    if lt.variant == "A":
        if sorted(w) != list(range(1, lt.n + 1)):
            raise ValidationError(f"{w} is not a permutation of 1..{lt.n}")
    else:
        if sorted(abs(x) for x in w) != list(range(1, lt.n + 1)):
            raise ValidationError(f"{w} is not a signed permutation window")
    return w


def window_str(w: Window) -> str:
    return "".join(letter_str(x) for x in w)


def value_at(w: Window, pos: int) -> int:
    """w(pos) on the full one-line notation; pos < 0 means the barred position."""
    if pos > 0:
        return w[pos - 1]
    return -w[-pos - 1]


def all_elements(lt: LieType) -> list[Window]:
    """Every element of the Weyl group, as windows."""
    if lt.variant == "A":
        return [tuple(p) for p in permutations(range(1, lt.n + 1))]
    out = []
    for p in permutations(range(1, lt.n + 1)):
        for signs in product((1, -1), repeat=lt.n):
            out.append(tuple(s * x for s, x in zip(signs, p)))
    return out


def positive_roots(lt: LieType) -> list[Root]:
    n = lt.n
    roots = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if lt.variant == "C":
        roots += [(i, -j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        roots += [(i, -i) for i in range(1, n + 1)]
    return roots


def check_root(lt: LieType, r: Root) -> Root:
    i, j = r
    ok = 0 < i <= abs(j) <= lt.n and (abs(j) > i or j == -i)
    if lt.variant == "A":
        ok = ok and j > 0
    if not ok:
        raise ValidationError(f"bad root label {r} for type {lt.variant}, n={lt.n}")
    return r


def root_str(r: Root) -> str:
    i, j = r
    return f"({i},{j})" if j > 0 else f"({i},{-j}~)"


def apply_root(lt: LieType, w: Window, r: Root) -> Window:
    """Right multiplication w * s_r; an involution in r."""
    i, j = check_root(lt, r)
    out = list(w)
    if j > 0:
        out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    elif j == -i:
        out[i - 1] = -out[i - 1]
    else:
        # (i, j-bar) swaps positions i <-> j-bar and j <-> i-bar
        out[i - 1], out[-j - 1] = -out[-j - 1], -out[i - 1]
    return tuple(out)


def root_for_positions(lt: LieType, i: int, m: int) -> Root:
    """The root whose reflection transposes one-line positions i and m (i in [n])."""
    if m > 0:
        return check_root(lt, (i, m))
    a = -m
    if a == i:
        return check_root(lt, (i, -i))
    if a > i:
        return check_root(lt, (i, -a))
    return check_root(lt, (a, -i))


def root_vector(lt: LieType, r: Root) -> tuple[int, ...]:
    """The root as a coordinate vector in Z^n."""
    i, j = check_root(lt, r)
    v = [0] * lt.n
    if j > 0:
        v[i - 1], v[j - 1] = 1, -1
    elif j == -i:
        v[i - 1] = 2
    else:
        v[i - 1], v[-j - 1] = 1, 1
    return tuple(v)


def coroot_pairing(lt: LieType, lam: tuple[int, ...], r: Root) -> int:
    """<lam, alpha-check> for the root labelled r."""
    i, j = check_root(lt, r)
    if j > 0:
        return lam[i - 1] - lam[j - 1]
    if j == -i:
        return lam[i - 1]
    return lam[i - 1] + lam[-j - 1]


def rho(lt: LieType) -> tuple[int, ...]:
    n = lt.n
    if lt.variant == "A":
        return tuple(range(n - 1, -1, -1))
    return tuple(range(n, 0, -1))


def rho_pairing(lt: LieType, r: Root) -> int:
    """<rho, alpha-check>; positive for every positive root."""
    return coroot_pairing(lt, rho(lt), r)


def length(lt: LieType, w: Window) -> int:
    """Coxeter length: inversions (type A) or the signed-inversion count (type C)."""
    w = check_window(lt, w)
    n = lt.n
    if lt.variant == "A":
        return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    key = lambda x: letter_key(lt, x)
    total = 0
    for k in range(1, n + 1):
        for l in letters(lt):
            if k <= abs(l) and key(value_at(w, k)) > key(value_at(w, l)):
                total += 1
    return total


def sign_det(lt: LieType, w: Window) -> int:
    """Determinant of w as a linear map on Z^n."""
    w = check_window(lt, w)
    perm = [abs(x) for x in w]
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    flips = sum(1 for x in w if x < 0)
    return -1 if (inv + flips) % 2 else 1


def act_on_weight(lt: LieType, w: Window, lam: tuple[int, ...]) -> tuple[int, ...]:
    """w(lam): permute coordinates (with sign changes in type C)."""
    out = [0] * lt.n
    for pos, x in enumerate(w):
        out[abs(x) - 1] = lam[pos] if x > 0 else -lam[pos]
    return tuple(out)


def normalize_weight(lt: LieType, lam: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical representative of a weight; type A works modulo (1,...,1)."""
    if lt.variant == "A":
        return tuple(x - lam[-1] for x in lam)
    return tuple(lam)


def weights_equal(lt: LieType, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return normalize_weight(lt, a) == normalize_weight(lt, b)


def check_dominant(lt: LieType, mu) -> tuple[int, ...]:
    """Validate and pad a partition to a length-n dominant weight."""
    mu = tuple(mu)
    if any(m < 0 for m in mu) or any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValidationError(f"{mu} is not a partition")
    if len(mu) > lt.n:
        raise ValidationError(f"partition {mu} longer than rank {lt.n}")
    mu = mu + (0,) * (lt.n - len(mu))
    if lt.variant == "A" and mu[-1] != 0:
        mu = tuple(m - mu[-1] for m in mu)
    return mu


def conjugate(mu: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate partition (column heights of the Young diagram)."""
    mu = tuple(m for m in mu if m > 0)
    if not mu:
        return ()
    return tuple(sum(1 for m in mu if m >= i) for i in range(1, mu[0] + 1))


def longest_element(lt: LieType) -> Window:
    if lt.variant == "A":
        return tuple(range(lt.n, 0, -1))
    return tuple(-i for i in range(1, lt.n + 1))
