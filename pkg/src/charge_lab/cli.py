"""Command-line surface.

Subcommands: chain (print a mu-chain), poly (compute the graded polynomial
by either construction), charge (charge of a filling, with optional
trace), qbg (export the quantum Bruhat graph), verify (run the exhaustive
small-rank suites).

Exit codes: 0 success, 1 validation error, 2 verification failure,
3 internal assertion failure.
"""

import argparse
import json
import os
import sys

from .chains import chain_str, mu_chain
from .charge import charge_of_word, charge_word, alphabet, label_str
from .fillings import filling_from_json, filling_str
from .poly import (
    InternalError,
    charge_formula_t0,
    poly_json_str,
    ram_yip_t0,
    render_text,
)
from .qbg import graph_dot, graph_json_str
from .verify import run_scope
from .weyl import LieType, ValidationError, root_str


def parse_mu(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise ValidationError(f"cannot parse partition {text!r}")


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="variant", choices=("A", "C"), default="A")
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("CHARGE_LAB_JOBS", "1")),
        help="worker count; results are deterministic regardless",
    )

    p = argparse.ArgumentParser(prog="charge-lab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("chain", parents=[common], help="print the mu-chain")
    sp.add_argument("--mu", required=True)

    sp = sub.add_parser("poly", parents=[common], help="graded polynomial at t=0")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--method", choices=("ramyip", "charge", "both"), default="ramyip")

    sp = sub.add_parser("charge", parents=[common], help="charge of a filling")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--filling", help="filling as an inline JSON object")
    group.add_argument("--filling-file", help="path to a filling JSON file")
    sp.add_argument("--trace", action="store_true")

    sub.add_parser("qbg", parents=[common], help="export the quantum Bruhat graph")

    sp = sub.add_parser("verify", parents=[common], help="run verification suites")
    sp.add_argument("--scope", default="all")
    return p


def _lie_type(args) -> LieType:
    return LieType(args.variant, args.n if args.n is not None else 3)


def cmd_chain(args) -> int:
    lt = _lie_type(args)
    chain = mu_chain(lt, parse_mu(args.mu))
    if args.format == "json":
        print(json.dumps(
            {
                "schema": "charge-lab/mu-chain/1",
                "type": lt.variant,
                "n": lt.n,
                "mu": list(chain.mu),
                "roots": [root_str(r) for r in chain.roots],
                "levels": list(chain.levels),
            },
            indent=2,
        ))
    else:
        print(chain_str(chain))
    return 0


def cmd_poly(args) -> int:
    lt = _lie_type(args)
    mu = parse_mu(args.mu)
    if args.method == "ramyip":
        p = ram_yip_t0(lt, mu)
    elif args.method == "charge":
        p = charge_formula_t0(lt, mu)
    else:
        p = ram_yip_t0(lt, mu)
        other = charge_formula_t0(lt, mu)
        if p != other:
            print("the two constructions disagree", file=sys.stderr)
            return 2
        print("both constructions agree", file=sys.stderr)
    print(poly_json_str(p) if args.format == "json" else render_text(p))
    return 0


def cmd_charge(args) -> int:
    if args.filling_file:
        with open(args.filling_file) as fh:
            data = json.load(fh)
    else:
        data = json.loads(args.filling)
    f = filling_from_json(data)
    biword = charge_word(f)
    cw2 = [lab for _, lab in biword]
    total, passes = charge_of_word(cw2, alphabet(f.mu1, primed=f.split), trace=True)
    if args.format == "json":
        print(json.dumps(
            {
                "schema": "charge-lab/charge/1",
                "charge": total,
                "word": [[x, label_str(lab)] for x, lab in biword],
                "passes": [
                    {
                        "selected": [[pos + 1, label_str(lab)] for pos, lab in ps["selected"]],
                        "wraps": [label_str(lab) for lab in ps["wraps"]],
                        "contribution": ps["contribution"],
                    }
                    for ps in passes
                ],
            },
            indent=2,
        ))
        return 0
    print(filling_str(f))
    if args.trace:
        from .weyl import letter_str

        print("word:", " ".join(f"{letter_str(x)}/{label_str(lab)}" for x, lab in biword))
        for it, ps in enumerate(passes, start=1):
            picks = " ".join(f"{pos + 1}:{label_str(lab)}" for pos, lab in ps["selected"])
            wraps = ",".join(label_str(lab) for lab in ps["wraps"]) or "-"
            print(f"pass {it}: picks {picks}; wraps {wraps}; adds {ps['contribution']}")
    print(f"charge: {total}")
    return 0


def cmd_qbg(args) -> int:
    lt = _lie_type(args)
    if args.format == "dot":
        print(graph_dot(lt))
    else:
        print(graph_json_str(lt))
    return 0


def cmd_verify(args) -> int:
    results = run_scope(args.scope, n=args.n)
    failed = False
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}")
        failed = failed or not r.ok
    return 2 if failed else 0


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    handler = {
        "chain": cmd_chain,
        "poly": cmd_poly,
        "charge": cmd_charge,
        "qbg": cmd_qbg,
        "verify": cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
