"""Command line interface.

Exit status is 0 on success, 2 for bad input and 1 if an internal
consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .affine import (AffinePermutation, CyclicRankMatrix, affine_of_rank_matrix, bound_covers,
                     cyclic_rank_matrix, enumerate_bound, format_siteswap, from_decorated,
                     from_juggling_states, from_siteswap, juggling_states, parse_affine,
                     parse_decorated, parse_siteswap, to_decorated, to_siteswap)
from .complexes import f_vector, hilbert_dimension, interval_complex, shelling_order
from .perms import format_ksubset, format_window, parse_ksubset, parse_permutation
from .positroid import (affine_of_necklace, bounded_affine_permutation_of_matrix, envelope,
                        matroid_of_matrix, necklace_of_affine, necklace_of_matroid)
from .qposet import canonicalize, f_of_pair, pair_of_f
from .quantum import expected_length, f_of_quantum, gromov_witten, quantum_fixed_points
from .symfunc import box_partitions, positroid_class

FORMATS = ["affine", "siteswap", "states", "necklace", "decorated", "rankmatrix", "pair"]


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _parse_terms(text: str) -> list[tuple[int, ...]]:
    text = text.strip()
    sep = ";" if ";" in text else None
    return [parse_ksubset(t) for t in text.split(sep) if t.strip()]


def _format_terms(terms, n: int) -> str:
    return (" " if n <= 9 else ";").join(format_ksubset(t, n) for t in terms)


def _parse_rank_matrix(text: str, k: int | None) -> CyclicRankMatrix:
    text = text.strip()
    if text.startswith("["):
        rows = json.loads(text)
    else:
        rows = [[int(x) for x in r.split(",")] for r in text.split(";") if r.strip()]
    return formats.rank_matrix_from_json(rows, k)


def parse_value(kind: str, text: str, n: int | None, k: int | None) -> AffinePermutation:
    if kind == "affine":
        f = parse_affine(text)
    elif kind == "siteswap":
        f = from_siteswap(parse_siteswap(text))
    elif kind == "states":
        f = from_juggling_states(_parse_terms(text), n)
    elif kind == "necklace":
        f = affine_of_necklace(_parse_terms(text), n)
    elif kind == "decorated":
        f = from_decorated(parse_decorated(text), k)
    elif kind == "rankmatrix":
        f = affine_of_rank_matrix(_parse_rank_matrix(text, k))
    elif kind == "pair":
        if k is None:
            raise InputError("--k is required for pair input")
        parts = text.replace(";", " ").split()
        if len(parts) != 2:
            raise InputError("pair input is \"u w\"")
        f = f_of_pair(canonicalize(parse_permutation(parts[0]), parse_permutation(parts[1]), k))
    else:
        raise InputError(f"unknown format {kind}")
    if n is not None and f.n != n:
        raise InputError(f"input has n={f.n}, not {n}")
    if k is not None and f.ball_number != k:
        raise InputError(f"input has k={f.ball_number}, not {k}")
    return f


def format_value(kind: str, f: AffinePermutation) -> str:
    if kind == "affine":
        return ",".join(map(str, f.window))
    if kind == "siteswap":
        return format_siteswap(to_siteswap(f))
    if kind == "states":
        return _format_terms(juggling_states(f), f.n)
    if kind == "necklace":
        return _format_terms(necklace_of_affine(f), f.n)
    if kind == "decorated":
        return str(to_decorated(f))
    if kind == "rankmatrix":
        return ";".join(",".join(map(str, r)) for r in cyclic_rank_matrix(f).rows)
    if kind == "pair":
        q = pair_of_f(f)
        return f"{format_window(q.u.window)} {format_window(q.w.window)}"
    raise InputError(f"unknown format {kind}")


def cmd_convert(args) -> str:
    f = parse_value(args.source, args.value, args.n, args.k)
    return format_value(args.target, f)


def cmd_enumerate(args) -> str:
    elements = enumerate_bound(args.k, args.n)
    if args.count_only:
        return str(len(elements))
    if args.format == "json":
        return json.dumps([formats.affine_to_json(f) for f in elements])
    return "\n".join(",".join(map(str, f.window)) for f in elements)


def cmd_poset(args) -> str:
    elements = enumerate_bound(args.k, args.n)
    edges = bound_covers(elements)
    if args.format == "json":
        return json.dumps({"k": args.k, "n": args.n,
                           "elements": [list(f.window) for f in elements],
                           "covers": [list(e) for e in edges]})
    lines = [f"digraph bound_{args.k}_{args.n} {{"]
    lines += [f'  {i} [label="{",".join(map(str, f.window))}"];' for i, f in enumerate(elements)]
    lines += [f"  {i} -> {j};" for i, j in edges]
    lines.append("}")
    return "\n".join(lines)


def cmd_interval(args) -> str:
    u, w = parse_permutation(args.u), parse_permutation(args.w)
    if args.action == "shelling":
        return json.dumps(formats.certificate_to_json(shelling_order(u, w, args.k)))
    c = interval_complex(u, w, args.k)
    if args.action == "facets":
        return json.dumps(formats.complex_to_json(c))
    if args.action == "fvector":
        return " ".join(map(str, f_vector(c)))
    if args.d is None:
        raise InputError("hilbert needs --d")
    return str(hilbert_dimension(c, args.d))


def cmd_class(args) -> str:
    f = parse_affine(args.f)
    if args.n is not None and f.n != args.n:
        raise InputError(f"window has length {f.n}, not {args.n}")
    c = positroid_class(f)
    return "\n".join(f"s[{','.join(map(str, p))}]: {x}" for p, x in c.terms)


def cmd_quantum(args) -> str:
    i_set, j_set = parse_ksubset(args.I), parse_ksubset(args.J)
    if len(i_set) != args.k or len(j_set) != args.k:
        raise InputError(f"I and J must have {args.k} elements")
    f, valid = f_of_quantum(i_set, j_set, args.d, args.n)
    out = {"f": list(f.window), "valid": valid,
           "T": [list(t) for t in sorted(quantum_fixed_points(i_set, j_set, args.d, args.n))]}
    if args.gw:
        gw = {}
        target = args.k * (args.n - args.k) - expected_length(i_set, j_set, args.d, args.n)
        for lam in box_partitions(args.k, args.n):
            if sum(lam) == target:
                gw[",".join(map(str, lam))] = gromov_witten(i_set, j_set, args.d, lam, args.n)
        out["gw"] = gw
    return json.dumps(out)


def cmd_matroid(args) -> str:
    try:
        with open(args.file) as fh:
            obj = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {args.file}: {e.strerror}") from None
    if "matrix" in obj:
        mat = formats.matrix_from_json(obj["matrix"])
        if args.action == "affine":
            return json.dumps(formats.affine_to_json(bounded_affine_permutation_of_matrix(mat)))
        m = matroid_of_matrix(mat)
    else:
        m = formats.matroid_from_json(obj)
    if args.action == "necklace":
        return json.dumps(formats.necklace_to_json(necklace_of_matroid(m)))
    if args.action == "envelope":
        return json.dumps(formats.matroid_to_json(envelope(m)))
    return json.dumps(formats.affine_to_json(affine_of_necklace(necklace_of_matroid(m), m.n)))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="positroids", description="Positroid combinatorics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("convert", help="convert between indexing sets")
    c.add_argument("--from", dest="source", choices=FORMATS, required=True)
    c.add_argument("--to", dest="target", choices=FORMATS, required=True)
    c.add_argument("value")
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.set_defaults(func=cmd_convert)

    e = sub.add_parser("enumerate", help="list Bound(k,n)")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(func=cmd_enumerate)

    po = sub.add_parser("poset", help="Hasse diagram of Bound(k,n)")
    po.add_argument("--k", type=int, required=True)
    po.add_argument("--n", type=int, required=True)
    po.add_argument("--format", choices=["dot", "json"], default="dot")
    po.set_defaults(func=cmd_poset)

    iv = sub.add_parser("interval", help="projected order complex of [u,w]_k")
    iv.add_argument("--u", required=True)
    iv.add_argument("--w", required=True)
    iv.add_argument("--k", type=int, required=True)
    iv.add_argument("action", choices=["facets", "shelling", "fvector", "hilbert"])
    iv.add_argument("--d", type=int)
    iv.set_defaults(func=cmd_interval)

    cl = sub.add_parser("class", help="Schur expansion of a positroid class")
    cl.add_argument("--f", required=True, help="window, e.g. 5,2,7,4")
    cl.add_argument("--n", type=int)
    cl.set_defaults(func=cmd_class)

    q = sub.add_parser("quantum", help="f(I,J,d), T(I,J,d) and GW invariants")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--I", required=True)
    q.add_argument("--J", required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--gw", action="store_true")
    q.set_defaults(func=cmd_quantum)

    m = sub.add_parser("matroid", help="necklace, envelope or affine permutation of a matroid")
    m.add_argument("--file", required=True)
    m.add_argument("action", choices=["necklace", "envelope", "affine"])
    m.set_defaults(func=cmd_matroid)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        print(args.func(args), file=stdout)
        return 0
    except AssertionError as e:
        print(f"internal error: {e}".splitlines()[0], file=stderr)
        return 1
    except (InputError, ValueError, KeyError, TypeError, json.JSONDecodeError) as e:
        msg = str(e).splitlines()[0] if str(e) else type(e).__name__
        print(f"error: {msg}", file=stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
