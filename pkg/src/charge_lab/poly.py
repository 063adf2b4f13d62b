"""Exact Laurent polynomials in q and x_1..x_n over the integers, plus the
two independent ways to build the t=0 symmetric Macdonald polynomial: the
alcove-walk sum over admissible folding pairs, and the charge-graded sum
over tensor products of columns.
"""

import json

from .chains import mu_chain
from .charge import charge
from .fillings import content, enumerate_bmu, filling_map
from .foldings import enumerate_admissible, level_of, weight_of
from .weyl import (
    LieType,
    ValidationError,
    act_on_weight,
    all_elements,
    check_dominant,
    rho,
    sign_det,
    weights_equal,
)


class InternalError(Exception):
    """An invariant the code relies on failed; not a user input problem."""


# Poly: dict mapping (qdeg, exps) -> integer coefficient, exps a tuple
Poly = dict


def poly_term(coeff: int, qdeg: int, exps) -> Poly:
    return {(qdeg, tuple(exps)): coeff} if coeff else {}


def poly_add(p: Poly, other: Poly) -> Poly:
    out = dict(p)
    for key, c in other.items():
        out[key] = out.get(key, 0) + c
        if not out[key]:
            del out[key]
    return out


def poly_scale(p: Poly, c: int) -> Poly:
    return {key: c * v for key, v in p.items()} if c else {}


def poly_mul(p: Poly, other: Poly) -> Poly:
    out: Poly = {}
    for (qa, ea), ca in p.items():
        for (qb, eb), cb in other.items():
            key = (qa + qb, tuple(x + y for x, y in zip(ea, eb)))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def poly_sub(p: Poly, other: Poly) -> Poly:
    return poly_add(p, poly_scale(other, -1))


def _lead(p: Poly):
    return max(p, key=lambda key: (key[0],) + key[1])


def poly_div_exact(num: Poly, den: Poly) -> Poly:
    """Exact division; leading terms in lex order on (qdeg, exps).

    Each step cancels the current leading term, which strictly decreases,
    so an exact quotient is reached; inexact input raises. An iteration cap
    guards against a non-terminating remainder.
    """
    if not den:
        raise ValidationError("division by the zero polynomial")
    dlead = _lead(den)
    dcoeff = den[dlead]
    work = dict(num)
    out: Poly = {}
    for _ in range(100_000):
        if not work:
            return out
        lead = _lead(work)
        if work[lead] % dcoeff:
            raise ValidationError("division is not exact")
        c = work[lead] // dcoeff
        t = (lead[0] - dlead[0], tuple(a - b for a, b in zip(lead[1], dlead[1])))
        out[t] = out.get(t, 0) + c
        work = poly_sub(work, poly_mul(poly_term(c, *t), den))
    raise InternalError("exact division did not terminate")


def specialize_q(p: Poly, q0: int) -> Poly:
    out: Poly = {}
    for (qdeg, exps), c in p.items():
        if qdeg < 0:
            raise ValidationError("negative q-degree cannot be specialized")
        key = (0, exps)
        out[key] = out.get(key, 0) + c * q0**qdeg
    return {k: v for k, v in out.items() if v}


def sum_coefficients(p: Poly) -> int:
    return sum(p.values())


def act_on_poly(lt: LieType, w, p: Poly) -> Poly:
    """Apply a Weyl group element to the x-variables."""
    out: Poly = {}
    for (qdeg, exps), c in p.items():
        key = (qdeg, act_on_weight(lt, w, exps))
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def is_invariant(lt: LieType, p: Poly) -> bool:
    return all(act_on_poly(lt, w, p) == p for w in all_elements(lt))


def weyl_character(lt: LieType, mu) -> Poly:
    """The character of the highest-weight mu module, as an alternant
    quotient; no q-variable appears."""
    mu = check_dominant(lt, mu)
    r = rho(lt)

    def alternant(lam):
        out: Poly = {}
        for w in all_elements(lt):
            key = (0, act_on_weight(lt, w, lam))
            out[key] = out.get(key, 0) + sign_det(lt, w)
        return {k: v for k, v in out.items() if v}

    num = alternant(tuple(a + b for a, b in zip(mu, r)))
    return poly_div_exact(num, alternant(r))


def ram_yip_t0(lt: LieType, mu) -> Poly:
    """Alcove-walk sum: q^level x^weight over admissible folding pairs.

    The exponent is taken from the filling's content, which agrees with
    the folding weight (in type A up to the determinant direction)."""
    mu = check_dominant(lt, mu)
    chain = mu_chain(lt, mu)
    out: Poly = {}
    for w, J in enumerate_admissible(chain):
        f = filling_map(chain, w, J)
        exps = content(f)
        if not weights_equal(lt, weight_of(chain, w, J), exps):
            raise InternalError(f"weight mismatch for pair {w}, {J}")
        key = (level_of(chain, w, J), exps)
        out[key] = out.get(key, 0) + 1
    return out


def charge_formula_t0(lt: LieType, mu) -> Poly:
    """Charge-graded sum: q^charge x^content over the column tensor product."""
    mu = check_dominant(lt, mu)
    out: Poly = {}
    for tau in enumerate_bmu(lt, mu):
        key = (charge(tau), content(tau))
        out[key] = out.get(key, 0) + 1
    return out


def _sorted_terms(p: Poly):
    return sorted(p.items(), key=lambda kv: (kv[0][0], tuple(-e for e in kv[0][1])))


def render_text(p: Poly) -> str:
    """Human rendering: ascending q-degree, then descending lex in the x's."""
    if not p:
        return "0"
    parts = []
    for (qdeg, exps), c in _sorted_terms(p):
        bits = []
        if qdeg == 1:
            bits.append("q")
        elif qdeg:
            bits.append(f"q^{qdeg}")
        for i, e in enumerate(exps, start=1):
            if e == 1:
                bits.append(f"x{i}")
            elif e:
                bits.append(f"x{i}^{e}")
        body = " ".join(bits)
        if abs(c) != 1 or not body:
            body = f"{abs(c)}*{body}" if body else str(abs(c))
        parts.append((c < 0, body))
    first_neg, first = parts[0]
    text = ("-" if first_neg else "") + first
    for neg, body in parts[1:]:
        text += (" - " if neg else " + ") + body
    return text


def poly_json(p: Poly) -> dict:
    return {
        "schema": "charge-lab/polynomial/1",
        "terms": [
            {"q": qdeg, "exps": list(exps), "coeff": c}
            for (qdeg, exps), c in _sorted_terms(p)
        ],
    }


def poly_json_str(p: Poly) -> str:
    return json.dumps(poly_json(p), indent=2)
