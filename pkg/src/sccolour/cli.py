"""Command-line front end.

Exit status: 0 for success or an affirmative answer, 1 for a well-formed
negative answer (not colourable, invalid assignment, elliptic), 2 for
input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .colourings import Assignment, ColourScheme, check, chromatic, colour
from .complex import homogeneity, is_connected, is_strongly_connected, load_complex
from .derived import KINDS, derive
from .graph import load_graph
from .reductions import LEMMAS, get_lemma, graph_to_complex, source_colouring, translate_colouring
from .sullivan import ellipticity_verdict, model_for_scheme


def _emit(obj):
    print(json.dumps(obj, sort_keys=True, indent=2))


def _scheme(args) -> ColourScheme:
    name = args.scheme
    if args.s is not None and ":" not in name:
        name = f"{name}:{args.s}"
    return ColourScheme.parse(name)


def cmd_info(args) -> int:
    X = load_complex(args.file)
    h = homogeneity(X)
    _emit({
        "dimension": X.dim,
        "vertices": list(X.vertices),
        "face_counts": X.face_counts(),
        "connected": is_connected(X),
        "strongly_connected": is_strongly_connected(X),
        "vertex_homogeneous": h.vertex_homogeneous,
        "pure": h.pure,
    })
    return 0


def cmd_graph(args) -> int:
    X = load_complex(args.file)
    G = derive(X, args.kind, args.dim, literal_total=args.literal)
    if args.format == "dot":
        sys.stdout.write(G.to_dot())
    else:
        _emit(G.to_json())
    return 0


def cmd_colour(args) -> int:
    X = load_complex(args.file)
    a = colour(X, _scheme(args), args.k, method=args.method, theorem_backed=args.theorem_backed)
    if a is None:
        print("none")
        return 1
    _emit(a.to_json())
    return 0


def cmd_chromatic(args) -> int:
    X = load_complex(args.file)
    print(chromatic(X, _scheme(args), method=args.method, theorem_backed=args.theorem_backed))
    return 0


def cmd_check(args) -> int:
    X = load_complex(args.file)
    with open(args.assignment) as fh:
        a = Assignment.from_json(json.load(fh))
    ok = check(X, _scheme(args), a)
    print("valid" if ok else "invalid")
    return 0 if ok else 1


def cmd_model(args) -> int:
    X = load_complex(args.file)
    m = model_for_scheme(X, _scheme(args), args.k)
    if args.format == "text":
        print(m.render())
    else:
        _emit(m.to_json())
    return 0


def cmd_verdict(args) -> int:
    X = load_complex(args.file)
    v = ellipticity_verdict(X, _scheme(args), args.k)
    _emit(v.to_json())
    return 0 if v.non_elliptic else 1


def cmd_reduce(args) -> int:
    G = load_graph(args.file)
    lemma = get_lemma(args.lemma)
    X = graph_to_complex(G)
    phi = source_colouring(lemma, G, args.k)
    out = {
        "lemma": lemma.id,
        "source_problem": f"{lemma.source} colouring",
        "k": args.k,
        "complex": X.to_json(),
        "target_schemes": [str(s) for s in lemma.targets],
        "target_k": args.k + lemma.shift,
        "source_colouring": phi,
        "target_assignment": None,
        "round_trip": None,
    }
    if phi is None:
        _emit(out)
        return 1
    a = translate_colouring(lemma, "forward", G, phi, args.k)
    out["target_assignment"] = a.to_json()
    out["round_trip"] = translate_colouring(lemma, "backward", G, a, args.k)
    _emit(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sccolour", description="Colourings of simplicial complexes.")
    sub = p.add_subparsers(dest="verb", required=True)

    def scheme_opts(sp, need_k):
        sp.add_argument("--scheme", required=True, help="c1..c11, c7/ps (with --s), asc:r, desc:s, ps:s")
        sp.add_argument("--s", type=int, default=None, help="index for c7/ps/asc/desc given without one")
        if need_k:
            sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("info", help="dimension, face counts and connectivity flags")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("graph", help="emit a derived graph")
    sp.add_argument("file")
    sp.add_argument("--kind", required=True, help=", ".join(KINDS))
    sp.add_argument("--dim", type=int, default=None)
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.add_argument("--literal", action="store_true", help="total graph: join every vertex to every simplex")
    sp.set_defaults(func=cmd_graph)

    for verb, func, need_k in (("colour", cmd_colour, True), ("chromatic", cmd_chromatic, False)):
        sp = sub.add_parser(verb)
        sp.add_argument("file")
        scheme_opts(sp, need_k)
        sp.add_argument("--method", choices=("graph", "direct"), default="graph")
        sp.add_argument("--theorem-backed", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("check", help="validate an assignment file")
    sp.add_argument("file")
    scheme_opts(sp, False)
    sp.add_argument("--assignment", required=True)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("model", help="emit the Sullivan presentation")
    sp.add_argument("file")
    scheme_opts(sp, True)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_model)

    sp = sub.add_parser("verdict", help="Elliptic / NonElliptic with witness")
    sp.add_argument("file")
    scheme_opts(sp, True)
    sp.set_defaults(func=cmd_verdict)

    sp = sub.add_parser("reduce", help="translate a graph instance and its colouring")
    sp.add_argument("file", help="graph as JSON or adjacency matrix")
    sp.add_argument("--lemma", required=True, choices=sorted(LEMMAS))
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
