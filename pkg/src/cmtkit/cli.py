"""Command-line surface.

Exit codes: 0 when the command succeeded (and, for deciders, the property
holds), 1 when a decided property fails, 2 on usage or parse errors.
Reports are JSON with a stable schema (schema: 1); exit code 1 is always
accompanied by a concrete witness in the report.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .classify import (
    ClassificationReport,
    classify,
    cm_t_witness,
    explore_join,
    k_cm_t_witness,
    normalize_criterion,
)
from .core import Face, SimplicialComplex
from .fields import FieldSpec
from .files import ParseError, dump, emit, load
from .generators import (
    GluedFamilySpec,
    boundary_simplex,
    glued_simplices,
    miyazaki_example,
    projective_plane_6,
    random_pure,
    simplex,
)
from .homology import reduced_betti
from .suites import DEFAULT_SEED_BASE, SUITE_NAMES, build_corpus, run_suites

SCHEMA = 1


class UsageError(Exception):
    pass


def _field(args) -> FieldSpec:
    try:
        return FieldSpec.parse(args.field)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _face_from_labels(cx: SimplicialComplex, text: str) -> Face:
    tokens = text.replace(",", " ").split()
    index = {lb: i for i, lb in enumerate(cx.labels)}
    missing = [t for t in tokens if t not in index]
    if missing:
        raise UsageError(f"unknown vertex label(s): {missing}")
    return Face(index[t] for t in tokens)


def _write_report(report: dict, args) -> None:
    text = json.dumps(report, indent=2, sort_keys=False) + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _write_complex(cx: SimplicialComplex, args) -> None:
    if getattr(args, "output", None):
        dump(cx, args.output)
    else:
        sys.stdout.write(emit(cx))


def cmd_homology(args) -> int:
    cx = load(args.file)
    field = _field(args)
    betti = reduced_betti(cx, field)
    dim = cx.dim
    _write_report({
        "schema": SCHEMA,
        "command": "homology",
        "field": field.token,
        "dim": dim,
        "betti": {str(d): betti[d] for d in range(-1, dim + 1)},
    }, args)
    return 0


def cmd_check(args) -> int:
    cx = load(args.file)
    field = _field(args)
    t = args.t
    report: dict = {"schema": SCHEMA, "command": "check", "field": field.token, "t": t}
    if args.k is not None:
        report["k"] = args.k
        report["property"] = f"{args.k}-CM_{t}"
        try:
            witness = k_cm_t_witness(cx, args.k, t, field, jobs=args.jobs)
        except ValueError as e:
            raise UsageError(str(e)) from None
    else:
        criterion = normalize_criterion(args.criterion)
        report["criterion"] = criterion
        report["property"] = f"CM_{t}"
        witness = cm_t_witness(cx, t, field, criterion)
    report["ok"] = witness is None
    report["witnesses"] = [] if witness is None else [witness.to_json(cx)]
    _write_report(report, args)
    return 0 if witness is None else 1


def cmd_classify(args) -> int:
    cx = load(args.file)
    report: ClassificationReport = classify(cx, _field(args))
    _write_report({"schema": SCHEMA, "command": "classify", **report.to_json()}, args)
    return 0


def cmd_link(args) -> int:
    cx = load(args.file)
    face = _face_from_labels(cx, args.face)
    try:
        _write_complex(cx.link(face).compact(), args)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return 0


def cmd_skeleton(args) -> int:
    cx = load(args.file)
    try:
        _write_complex(cx.skeleton(args.j).compact(), args)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return 0


def cmd_join(args) -> int:
    a = load(args.file_a)
    b = load(args.file_b)
    try:
        _write_complex(a.join(b), args)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return 0


def cmd_gen(args) -> int:
    try:
        if args.family == "simplex":
            cx = simplex(args.n)
        elif args.family == "boundary":
            cx = boundary_simplex(args.n)
        elif args.family == "glued":
            cx = glued_simplices(GluedFamilySpec.uniform(args.d, args.m, args.overlap))
        elif args.family == "miyazaki":
            cx, _ = miyazaki_example()
        elif args.family == "rp2":
            cx = projective_plane_6()
        elif args.family == "random":
            cx = random_pure(args.n, args.d, args.density, args.seed)
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(f"unknown family {args.family!r}")
    except ValueError as e:
        raise UsageError(str(e)) from None
    _write_complex(cx, args)
    return 0


def cmd_explore_join(args) -> int:
    pool = [load(args.file_a), load(args.file_b)]
    field = _field(args)
    try:
        observations = explore_join(pool, field)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _write_report({
        "schema": SCHEMA,
        "command": "explore-join",
        "field": field.token,
        "exploratory": True,
        "note": "observed values only; no relationship is asserted",
        "observations": [o.to_json() for o in observations],
    }, args)
    return 0


def cmd_verify(args) -> int:
    field = _field(args)
    seed_base = DEFAULT_SEED_BASE
    env_seed = os.environ.get("CMTKIT_SEED")
    if env_seed is not None:
        try:
            seed_base = int(env_seed)
        except ValueError:
            raise UsageError(f"CMTKIT_SEED must be an integer, got {env_seed!r}") from None
    corpus = build_corpus(max_n=args.max_n, seeds=args.seeds, seed_base=seed_base)
    try:
        reports = run_suites([args.suite], corpus, field=field, jobs=args.jobs)
    except ValueError as e:
        raise UsageError(str(e)) from None
    ce_paths = []
    ce_dir = Path(args.output).parent if args.output else Path.cwd()
    for rep in reports:
        for i, failure in enumerate(rep.failures):
            if failure.complex is not None:
                path = ce_dir / f"cmtkit-counterexample-{rep.suite}-{i}.cplx"
                dump(failure.complex.compact(), path)
                ce_paths.append(str(path))
    ok = all(rep.ok for rep in reports)
    _write_report({
        "schema": SCHEMA,
        "command": "verify",
        "field": field.token,
        "suite": args.suite,
        "max_n": args.max_n,
        "seeds": args.seeds,
        "seed_base": seed_base,
        "ok": ok,
        "suites": [rep.to_json() for rep in reports],
        "counterexample_files": ce_paths,
    }, args)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmtkit",
        description="Decide Cohen-Macaulay, CM_t, Buchsbaum and k-CM_t properties "
                    "of simplicial complexes, exactly, over GF(p) or Q.")
    parser.add_argument("--version", action="version", version=f"cmtkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output_is_complex=False):
        p.add_argument("--field", default="gf2", help="coefficient field: gf<p> or q")
        p.add_argument("-o", "--output",
                       help="write the %s here instead of stdout"
                            % ("facet file" if output_is_complex else "JSON report"))

    p = sub.add_parser("homology", help="reduced Betti numbers of a complex")
    p.add_argument("file")
    add_common(p)
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("check", help="decide CM_t (or k-CM_t with --k)")
    p.add_argument("file")
    p.add_argument("--t", type=int, default=0, help="CM_t index (default 0 = CM)")
    p.add_argument("--k", type=int, default=None, help="decide k-CM_t instead")
    p.add_argument("--criterion", default="def", choices=("def", "reisner", "local"),
                   help="CM_t criterion (ignored with --k)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for the removal loop")
    add_common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("classify", help="full classification report")
    p.add_argument("file")
    add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("link", help="link of a face, as a facet file")
    p.add_argument("file")
    p.add_argument("--face", required=True, help="vertex labels, e.g. --face '1 3'")
    add_common(p, output_is_complex=True)
    p.set_defaults(fn=cmd_link)

    p = sub.add_parser("skeleton", help="j-skeleton, as a facet file")
    p.add_argument("file")
    p.add_argument("-j", type=int, required=True, help="skeleton dimension (>= -1)")
    add_common(p, output_is_complex=True)
    p.set_defaults(fn=cmd_skeleton)

    p = sub.add_parser("join", help="simplicial join of two complexes")
    p.add_argument("file_a")
    p.add_argument("file_b")
    add_common(p, output_is_complex=True)
    p.set_defaults(fn=cmd_join)

    p = sub.add_parser("gen", help="emit a generated complex as a facet file")
    p.add_argument("family", choices=("simplex", "boundary", "glued", "miyazaki",
                                      "rp2", "random"))
    p.add_argument("-n", type=int, default=3, help="vertex count (simplex/boundary/random)")
    p.add_argument("-d", type=int, default=3, help="facet size (glued/random)")
    p.add_argument("-m", type=int, default=2, help="number of glued simplices")
    p.add_argument("--overlap", type=int, default=0,
                   help="pairwise intersection dimension for glued families")
    p.add_argument("--density", type=float, default=0.5, help="facet density (random)")
    p.add_argument("--seed", type=int, default=42, help="random seed")
    add_common(p, output_is_complex=True)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("explore-join", help="observed min_t of two factors and their join")
    p.add_argument("file_a")
    p.add_argument("file_b")
    add_common(p)
    p.set_defaults(fn=cmd_explore_join)

    p = sub.add_parser("verify", help="run a named property suite over a generated corpus")
    p.add_argument("--suite", default="all", choices=SUITE_NAMES)
    p.add_argument("--max-n", dest="max_n", type=int, default=6,
                   help="vertex bound for the generated corpus")
    p.add_argument("--seeds", type=int, default=10, help="number of random corpus seeds")
    p.add_argument("--jobs", type=int, default=1, help="worker threads over suite cases")
    add_common(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"cmtkit: parse error: {e}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as e:
        # domain errors (void complex, bad parameters) are input errors here
        print(f"cmtkit: {e}", file=sys.stderr)
        return 2


def run_main() -> None:  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":
    run_main()
