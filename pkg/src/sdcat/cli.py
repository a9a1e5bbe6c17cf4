"""Command-line entry point: ``sdcat <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on a
usage error (bad flags, unreadable or malformed input).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance, graphs, probe, serialize
from .errors import SdcatError, SearchBudgetExceeded
from .fincat import FinCategory, as_groupoid, check_functor, is_groupoid, validate_category
from .oracle import IsoSearchConfig, find_isomorphisms
from .reconstruct import check_invariants, reconstruct
from .subdivision import build_sd

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _trunc(text: str):
    if text == "full":
        return "full"
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer or 'full'") from None
    if k < 0:
        raise argparse.ArgumentTypeError("truncation must be non-negative")
    return k


def _load(path: str) -> FinCategory:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    try:
        return serialize.loads_category(p.read_text())
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _summary(C: FinCategory) -> str:
    kind = "groupoid" if is_groupoid(C) else "category"
    return f"{kind} with {C.n_objects} objects and {C.n_morphisms} morphisms"


# -- commands ---------------------------------------------------------------

def cmd_validate(args) -> int:
    C = _load(args.inp)
    problems = validate_category(C)
    if args.format == "json":
        _emit(serialize._dump({"valid": not problems, "problems": problems,
                               "objects": C.n_objects, "morphisms": C.n_morphisms,
                               "groupoid": is_groupoid(C)}), args.out)
    else:
        lines = [f"{args.inp}: {_summary(C)}"] + [f"  {p}" for p in problems]
        lines.append("valid" if not problems else f"{len(problems)} problem(s)")
        _emit("\n".join(lines) + "\n", args.out)
    return OK if not problems else FAILED


def cmd_sd(args) -> int:
    C = _load(args.inp)
    sd = build_sd(C, args.trunc)
    if args.format == "dot":
        _emit(serialize.sd_to_dot(sd), args.out)
    elif args.format == "text":
        lines = [f"Sd of a {_summary(C)}, truncation {sd.truncation}:",
                 f"  {sd.category.n_objects} objects, {sd.category.n_morphisms} morphisms"]
        lines += [f"  {i}: {s.label(C)} (dim {s.dim})" for i, s in enumerate(sd.simplices)]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(serialize.dumps_category(sd.category), args.out)
        if args.out:
            side = Path(args.out)
            side.with_name(side.stem + ".index.json").write_text(serialize._dump(serialize.sd_index(sd)))
    return OK


def _search_cfg(args) -> IsoSearchConfig:
    return IsoSearchConfig(result_limit=args.limit, node_limit=args.nodes)


def cmd_iso(args) -> int:
    A, B = _load(args.left), _load(args.right)
    res = find_isomorphisms(A, B, _search_cfg(args))
    if args.format == "text":
        lines = [f"{len(res)} isomorphism(s), complete={res.complete}, {res.nodes} search nodes"]
        for F in res.functors:
            lines.append("  " + ", ".join(f"{A.name(f)}->{B.name(F.mor_map[f])}" for f in A.morphisms))
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(serialize._dump({"complete": res.complete, "count": len(res),
                               "functors": [serialize.functor_to_dict(F) for F in res.functors]}), args.out)
    return OK


def cmd_reconstruct(args) -> int:
    if bool(args.psi) == bool(args.search):
        raise UsageError("give exactly one of --psi or --search")
    G, H = _load(args.left), _load(args.right)
    if not (is_groupoid(G) and is_groupoid(H)):
        raise UsageError("reconstruction needs groupoids on both sides")
    sdG, sdH = build_sd(G, args.trunc), build_sd(H, args.trunc)
    if args.psi:
        try:
            d = json.loads(Path(args.psi).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"{args.psi}: {exc}") from None
        psis = [serialize.functor_from_dict(d, sdG.category, sdH.category)]
        complete = True
    else:
        res = find_isomorphisms(sdG.category, sdH.category, _search_cfg(args))
        psis, complete = res.functors, res.complete

    reports, all_ok = [], bool(psis)
    for Psi in psis:
        entry: dict = {}
        try:
            if not check_functor(Psi):
                raise SdcatError("Psi is not a functor")
            rec = reconstruct(Psi, sdG, sdH)
            fails = check_invariants(Psi, sdG, sdH, rec.psi)
            entry = {"functor": serialize.functor_to_dict(rec.functor),
                     "variance": {str(k): v for k, v in sorted(rec.variance.items())},
                     "verified": not fails, "invariant_failures": fails}
        except SdcatError as exc:
            entry = {"verified": False, "error": f"{type(exc).__name__}: {exc}"}
        all_ok &= entry["verified"]
        reports.append(entry)

    distinct = {json.dumps(r["functor"]) for r in reports if "functor" in r}
    if args.format == "text":
        lines = [f"{len(psis)} Psi examined (search complete={complete}), "
                 f"{len(distinct)} distinct P, all verified={all_ok}"]
        for r in reports:
            lines.append(f"  {'ok ' if r['verified'] else 'BAD'} " + json.dumps(r.get("functor", r.get("error"))))
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(serialize._dump({"complete": complete, "verified": all_ok,
                               "distinct": len(distinct), "results": reports}), args.out)
    return OK if all_ok else FAILED


def cmd_appendix(args) -> int:
    table = graphs.equation_subgraph_table(extended=True)
    valid = [graphs.assignment_label(b) for b in graphs.enumerate_valid_assignments()]
    if args.format == "json":
        _emit(serialize._dump({
            "equations": {t: sorted(sorted(str(v) for v in e) for e in es) for t, es in table.items()},
            "generators": list(graphs.GENERATOR_EQUATIONS), "valid": valid}), args.out)
        return OK
    lines = ["equation      edges of C'(f,g)"]
    for tag, es in table.items():
        pretty = "  ".join("-".join(sorted(str(v) for v in e)) for e in sorted(es, key=lambda e: sorted(map(str, e))))
        lines.append(f"{tag:<12}  {len(es)}: {pretty}")
    lines.append(f"total edges: {sum(len(es) for es in table.values())}")
    lines.append("valid truth assignments of (" + ", ".join(graphs.GENERATOR_EQUATIONS) + "):")
    lines += [f"  {v}" for v in valid]
    _emit("\n".join(lines) + "\n", args.out)
    return OK


def cmd_demo(args) -> int:
    from .fincat import dihedral_group, zigzag
    out = []
    G = dihedral_group(3)
    sd = build_sd(G, 2)
    P = probe.ProbedCategory(sd.category)
    out.append(f"D3 has {G.n_morphisms} elements; Sd<=2 D3 has {sd.category.n_objects} objects "
               f"and {sd.category.n_morphisms} morphisms.")
    out.append("Every simplex of dimension m receives 2^(m+1)-1 morphisms:")
    for d in range(3):
        sizes = sorted({len(sd.category.incoming(y)) for y in sd.category.objects if sd.dim(y) == d})
        out.append(f"  dim {d}: {sizes}")
    r, s = 1, 3  # r and the reflection s
    er, es = sd.edge(r), sd.edge(s)
    out.append(f"Reading D3 off the shape of its subdivision (r = <{G.name(r)}>, s = <{G.name(s)}>):")
    out.append(f"  s is self-inverse: {probe.is_self_inverse(P, es)}; r is self-inverse: {probe.is_self_inverse(P, er)}")
    out.append(f"  r and s commute: {probe.commutes(P, er, es)}")
    comps = probe.composite_pair_set(P, er, es)
    out.append("  {rs, sr} = {" + ", ".join(sorted(sd.simplices[e].label(G) for e in comps)) + "}")
    B, Bop = zigzag(2), zigzag(2, start_forward=False)
    n_sd = len(find_isomorphisms(build_sd(B, "full").category, build_sd(Bop, "full").category))
    n_plain = find_isomorphisms(B, Bop)
    out.append(f"Zigzag B = (. -> . <- .): Sd B and Sd B^op are related by {n_sd} isomorphisms,")
    out.append(f"  while B and B^op admit {len(n_plain)} (search exhaustive: {n_plain.complete}).")
    out.append("  So the groupoid hypothesis cannot be dropped.")
    _emit("\n".join(out) + "\n", args.out)
    return OK


def cmd_selftest(args) -> int:
    results = []
    for n in sorted(acceptance.CHECKS):
        r = acceptance.run(n)
        results.append(r)
        print(r.line(), flush=True)
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return OK if not failed else FAILED


# -- parser -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sdcat", description="Barycentric subdivision of finite categories and groupoid reconstruction.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, formats=("json", "text"), default="json"):
        s = sub.add_parser(name, help=help_)
        s.set_defaults(fn=fn)
        s.add_argument("--format", choices=formats, default=default)
        s.add_argument("--out", help="write output here instead of stdout")
        return s

    s = add("validate", cmd_validate, "check the category axioms of a JSON file", default="text")
    s.add_argument("--in", dest="inp", required=True)

    s = add("sd", cmd_sd, "build and export a subdivision", formats=("json", "dot", "text"))
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--trunc", type=_trunc, default=2, help="K or 'full' (default 2)")

    for name, fn, help_ in (("iso", cmd_iso, "enumerate isomorphisms between two categories"),
                            ("reconstruct", cmd_reconstruct, "recover G -> H from isomorphisms Sd G -> Sd H")):
        s = add(name, fn, help_)
        s.add_argument("--left", required=True)
        s.add_argument("--right", required=True)
        s.add_argument("--limit", type=int, default=10000, help="stop after this many isomorphisms")
        s.add_argument("--nodes", type=int, default=200000, help="search node budget")
    s.add_argument("--trunc", type=_trunc, default=2)
    s.add_argument("--psi", help="functor JSON for a single Psi")
    s.add_argument("--search", action="store_true", help="enumerate every Psi")

    add("appendix", cmd_appendix, "print the equation table and valid assignments", default="text")
    add("demo", cmd_demo, "annotated walk through D3 and the zigzag", formats=("text",), default="text")
    add("selftest", cmd_selftest, "run the acceptance suite", formats=("text",), default="text")
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"sdcat: error: {exc}", file=sys.stderr)
        return USAGE
    except SearchBudgetExceeded as exc:
        print(f"sdcat: search budget exhausted: {exc}", file=sys.stderr)
        return FAILED
    except SdcatError as exc:
        print(f"sdcat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FAILED


def main() -> None:
    sys.exit(run())
