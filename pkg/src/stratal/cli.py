"""Command-line surface: deterministic JSON reports over the bundled corpus.

Exit codes: 0 success, 1 a verification check failed, 2 usage/load error.
Malformed input never produces a traceback.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import corpus as corpus_mod
from . import hilbert as hb
from .complexes import load
from .errors import StratalError
from .intersection import StratifiedChainComplex
from .l2model import cone_report, fredholm_indices, theorem_predictions
from .perversity import (
    BY_CODIM,
    PER_STRATUM,
    Perversity,
    dual,
    is_gm_perversity,
    middle_perversities,
    perversity_from_json,
    perversity_from_weights,
    perversity_to_json,
    top_perversity,
    zero_perversity,
)
from .rationals import format_rational, parse_rational
from .verify import SUITES, run_suite


def _emit(doc):
    print(json.dumps(doc, indent=2, sort_keys=True))


def _load_space(spec, corpus_dir=None):
    path = Path(spec)
    if path.exists():
        return load(path)
    base = Path(corpus_dir) if corpus_dir else corpus_mod.corpus_dir()
    if (base / f"{spec}.json").exists():
        return corpus_mod.load_space(spec, corpus_dir)
    raise StratalError(f"space {spec!r} is neither a file nor a corpus name")


def _resolve_perversity(spec, n, space=None):
    if spec == "zero":
        return zero_perversity(n) if n >= 1 else Perversity(PER_STRATUM, {})
    if spec == "top":
        return top_perversity(n)
    if spec == "lower-middle":
        return middle_perversities(n)[0]
    if spec == "upper-middle":
        return middle_perversities(n)[1]
    if spec == "from-weights":
        if space is None:
            raise StratalError("perversity spec 'from-weights' needs a space")
        strata = [(s.id, s.link_dim) for s in space.singular_strata()]
        return perversity_from_weights(strata, space.weights)
    if spec.startswith("gm:"):
        values = [int(v) for v in spec[3:].split(",") if v != ""]
        return Perversity(BY_CODIM, {k + 2: v for k, v in enumerate(values)})
    if spec.startswith("per-stratum:"):
        path = spec.split(":", 1)[1]
        doc = json.loads(Path(path).read_text())
        if "kind" in doc:
            return perversity_from_json(doc)
        return Perversity(PER_STRATUM, {str(k): int(v) for k, v in doc.items()})
    raise StratalError(
        f"unknown perversity spec {spec!r}; use zero | top | lower-middle | "
        "upper-middle | gm:k0,k1,... | per-stratum:FILE | from-weights"
    )


def cmd_ih(args):
    K = _load_space(args.space, args.corpus_dir)
    p = _resolve_perversity(args.perversity, K.n, K)
    chains = StratifiedChainComplex(K, p)
    betti = chains.homology()
    report = {
        "space": K.name,
        "dimension": K.n,
        "coefficients": "R0",
        "perversity_used": perversity_to_json(p),
        "betti": list(betti),
    }
    if args.cobetti:
        report["cobetti"] = list(betti)
    if args.emit_generators:
        gens = {}
        for i in range(K.n + 1):
            reg = chains.reg[i]
            vecs = []
            for col in chains.bases[i]:
                vecs.append(
                    {
                        "(" + ",".join(str(K.vertex_ids[v]) for v in reg[r]) + ")":
                        format_rational(val)
                        for r, val in sorted(col.items())
                    }
                )
            gens[str(i)] = vecs
        report["chain_basis"] = gens
    _emit(report)
    return 0


def cmd_perversity(args):
    if args.space:
        K = _load_space(args.space, args.corpus_dir)
        strata = [(s.id, s.link_dim) for s in K.singular_strata()]
        p_g = perversity_from_weights(strata, K.weights)
        q_g = dual(p_g, K)
        report = {
            "space": K.name,
            "weights": {sid: format_rational(c) for sid, c in sorted(K.weights.items())},
            "p_g": perversity_to_json(p_g),
            "q_g": perversity_to_json(q_g),
        }
        _emit(report)
        return 0
    if not args.dim:
        raise StratalError("perversity needs --space or --dim with --spec")
    p = _resolve_perversity(args.spec, args.dim)
    if args.dual:
        p = dual(p)
    report = {"perversity": perversity_to_json(p)}
    if p.kind == BY_CODIM and all(k >= 1 for k in p.values):
        try:
            report["classical_gm"] = is_gm_perversity(
                Perversity(BY_CODIM, {k: v for k, v in p.values.items() if k >= 2})
            )
        except StratalError:
            pass
    _emit(report)
    return 0


def cmd_cone(args):
    betti = [int(b) for b in args.link_betti.split(",")]
    c = parse_rational(args.weight)
    rep = cone_report(betti, args.link_dim, c)
    _emit(rep.to_json())
    return 0


def cmd_predict(args):
    K = _load_space(args.space, args.corpus_dir)
    pred = theorem_predictions(K)
    ind_max, ind_min = fredholm_indices(pred["max_betti"], pred["min_betti"])
    pred["fredholm"] = {"ind_max": ind_max, "ind_min": ind_min}
    _emit(pred)
    return 0


def cmd_verify(args):
    report = run_suite(args.suite, args.corpus_dir)
    _emit(report.to_json())
    if not args.quiet:
        status = "PASS" if report.passed else "FAIL"
        print(f"suite {args.suite}: {len(report.checks)} checks {status}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_hilbert(args):
    doc = json.loads(Path(args.complex).read_text())
    if "dims" not in doc or "differentials" not in doc:
        raise StratalError("complex file needs 'dims' and 'differentials'")
    C = hb.validate(doc["dims"], doc["differentials"])
    _, dual_rep = hb.dual_complex(C)
    report = {
        "dims": list(C.dims),
        "cohomology": list(hb.cohomology_dims(C)),
        "harmonic": list(hb.harmonic_dims(C)),
        "index_even_odd": hb.index_even_odd(C),
        "dual_reversal": dual_rep,
    }
    if args.decompose is not None:
        if not args.vector:
            raise StratalError("--decompose needs --vector FILE")
        vec_doc = json.loads(Path(args.vector).read_text())
        vec = [parse_rational(v) if isinstance(v, str) else Fraction(v) for v in vec_doc]
        h, e, c = hb.kodaira_decompose(C, args.decompose, vec)
        def fmt(part):
            return {str(r): format_rational(v) for r, v in sorted(part.items())}
        report["decomposition"] = {
            "degree": args.decompose,
            "harmonic": fmt(h),
            "exact": fmt(e),
            "coexact": fmt(c),
        }
    _emit(report)
    return 0


def cmd_corpus_list(args):
    listing = corpus_mod.corpus_listing(args.corpus_dir)
    _emit({"corpus_dir": str(args.corpus_dir or corpus_mod.corpus_dir()),
           "spaces": listing})
    return 0


def cmd_corpus_build(args):
    written = corpus_mod.write_corpus(args.out)
    _emit({"written": written})
    return 0


def _build_parser():
    # SUPPRESS keeps a subcommand's unset flags from clobbering globals given
    # before the subcommand; real defaults are applied after parsing.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON reports (default)")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress progress lines")
    common.add_argument("--corpus-dir", default=argparse.SUPPRESS,
                        help="override the corpus directory (also STRATAL_CORPUS_DIR)")
    parser = argparse.ArgumentParser(
        prog="stratal",
        description="Exact intersection (co)homology of filtered simplicial "
                    "pseudomanifolds and weighted-cone L2 model formulas.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("ih", help="intersection betti/cobetti of a space")
    p.add_argument("--space", required=True)
    p.add_argument("--perversity", required=True)
    p.add_argument("--cobetti", action="store_true")
    p.add_argument("--emit-generators", action="store_true")
    p.set_defaults(func=cmd_ih)

    p = add_parser("perversity", help="construct and inspect perversities")
    p.add_argument("--space", help="derive p_g/q_g from a weighted space")
    p.add_argument("--dim", type=int, help="ambient dimension for --spec")
    p.add_argument("--spec", default="zero")
    p.add_argument("--dual", action="store_true")
    p.set_defaults(func=cmd_perversity)

    p = add_parser("cone", help="L2 cone truncation of a link betti vector")
    p.add_argument("--link-betti", required=True)
    p.add_argument("--link-dim", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_cone)

    p = add_parser("predict", help="max/min cohomology predictions for a space")
    p.add_argument("--space", required=True)
    p.set_defaults(func=cmd_predict)

    p = add_parser("verify", help="run a theorem-check suite over the corpus")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.set_defaults(func=cmd_verify)

    p = add_parser("hilbert", help="validate and analyze a finite complex")
    p.add_argument("--complex", required=True)
    p.add_argument("--decompose", type=int, default=None)
    p.add_argument("--vector")
    p.set_defaults(func=cmd_hilbert)

    p = add_parser("corpus-list", help="list the bundled spaces")
    p.set_defaults(func=cmd_corpus_list)

    p = add_parser("corpus-build", help="regenerate the corpus data files")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_corpus_build)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", True), ("quiet", False), ("corpus_dir", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except StratalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
