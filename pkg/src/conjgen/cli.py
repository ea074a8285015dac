"""Command-line interface.

Subcommands: ctab validate|mcoeff|ncoeff|relation|fusions,
group info|class|centralizer|beta|alpha|fusion-embed, scott check,
suite run <tier>.  All numeric output is exact (integers or p/q strings);
--json switches to a lossless structured payload.  Exit codes: 0 success,
1 data/computation error, 2 usage error.
"""

import argparse
import json
import sys

from . import perm
from .permgroup import load_group, PermutationGroup, CapExceeded, WordError
from .chartab import (load_table, load_class_function, TableError,
                      match_classes)
from .cyclotomic import CycParseError, NotRational
from .structconst import (m_coeff, n_coeff, check_relation, NonIntegerResult)
from .scott import scott_excludes, fixed_space_dim
from .fusion import fusion_from_embedding, possible_fusions, FusionError
from .betasolver import GroupPair, beta_exact, alpha_exact, BetaError
from .suite import run_tier

DATA_ERRORS = (TableError, NonIntegerResult, CapExceeded, WordError,
               CycParseError, NotRational, FusionError, BetaError,
               FileNotFoundError, json.JSONDecodeError, ValueError)


def _emit(payload, args, human):
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for line in human:
            print(line)
    return 0


def _labels_to_indices(table, labels):
    return [table.index_of(l.strip()) for l in labels.split(",")]


# -- ctab ---------------------------------------------------------------------
def cmd_ctab_validate(args):
    table = load_table(args.file)
    kind = "class frame" if table.is_frame else "character table"
    payload = {"status": "ok", "name": table.name, "kind": kind,
               "classes": table.n_classes, "group_order": table.group_order}
    return _emit(payload, args,
                 [f"{table.name}: valid {kind}, {table.n_classes} classes, "
                  f"group order {table.group_order}"])


def cmd_ctab_mcoeff(args):
    table = load_table(args.file)
    classes = _labels_to_indices(table, args.classes)
    target = table.index_of(args.target)
    value = m_coeff(table, classes, target)
    payload = {"status": "ok", "value": value,
               "classes": args.classes.split(","), "target": args.target}
    return _emit(payload, args, [str(value)])


def cmd_ctab_ncoeff(args):
    table = load_table(args.file)
    classes = _labels_to_indices(table, args.classes)
    value = n_coeff(table, classes)
    payload = {"status": "ok", "value": value,
               "classes": args.classes.split(",")}
    return _emit(payload, args, [str(value)])


def cmd_ctab_relation(args):
    table = load_table(args.file)
    classes = _labels_to_indices(table, args.classes)
    target = table.index_of(args.target)
    ok = check_relation(table, classes, target)
    payload = {"status": "ok", "holds": ok}
    return _emit(payload, args, ["holds" if ok else "FAILS"])


def cmd_ctab_fusions(args):
    tH = load_table(args.source)
    tG = load_table(args.target)
    maps = possible_fusions(tH, tG)
    payload = {"status": "ok", "source": tH.name, "target": tG.name,
               "maps": [list(f.map) for f in maps]}
    human = [f"{len(maps)} candidate fusion(s) from {tH.name} to {tG.name}"]
    for f in maps:
        human.append("  " + " ".join(
            f"{tH.classes[k].label}->{tG.classes[j].label}"
            for k, j in enumerate(f.map)))
    return _emit(payload, args, human)


# -- group --------------------------------------------------------------------
def cmd_group_info(args):
    G = load_group(args.file)
    payload = {"status": "ok", "name": G.name, "degree": G.degree,
               "order": G.order(), "generators": G.generator_names}
    return _emit(payload, args,
                 [f"{G.name}: degree {G.degree}, order {G.order()}, "
                  f"generators {', '.join(G.generator_names)}"])


def cmd_group_class(args):
    G = load_group(args.file)
    x = G.evaluate_word(args.element)
    orbit = G.class_orbit(x)
    cent = G.order() // len(orbit)
    payload = {"status": "ok", "element": args.element,
               "element_order": perm.order(x), "class_size": len(orbit),
               "centralizer_order": cent,
               "cycles": perm.cycle_string(x)}
    return _emit(payload, args,
                 [f"order {perm.order(x)}, class size {len(orbit)}, "
                  f"centralizer order {cent}"])


def cmd_group_centralizer(args):
    G = load_group(args.file)
    x = G.evaluate_word(args.element)
    C = G.centralizer(x)
    payload = {"status": "ok", "element": args.element,
               "centralizer_order": C.order(),
               "generators": [perm.cycle_string(g) for g in C.generators]}
    return _emit(payload, args, [f"centralizer order {C.order()} with "
                                 f"{len(C.generators)} generators"])


def _make_pair(args):
    G = load_group(args.file)
    x = G.evaluate_word(args.element)
    if args.subgroup:
        s_gens = [G.evaluate_word(w.strip())
                  for w in args.subgroup.split(",")]
    else:
        s_gens = G.generators
    return GroupPair(G, s_gens, x)


def _report_payload(report):
    value = report.value if report.exact else \
        {"greater_than": report.value[0]}
    return {
        "status": "ok",
        "kind": report.kind,
        "r": report.r,
        "value": value,
        "witnesses": [[perm.cycle_string(w) for w in tup]
                      for tup in report.witnesses],
        "method": report.method,
        "trace": report.trace,
    }


def _report_human(report):
    label = f"beta_{report.r}" if report.kind == "beta" else "alpha"
    if report.exact:
        lines = [f"{label} = {report.value}"]
    else:
        lines = [f"{label} > {report.value[0]} (search exhausted)"]
    for tup in report.witnesses:
        lines.append("witness: " + "  ".join(perm.cycle_string(w)
                                             for w in tup))
    for t in report.trace:
        lines.append(f"  k={t['k']}: {t['tuples_tested']} tuples tested, "
                     f"{'success' if t['success'] else 'no success'}")
    return lines


def cmd_group_beta(args):
    pair = _make_pair(args)
    report = beta_exact(pair, args.prime, k_max=args.kmax,
                        threads=args.threads)
    return _emit(_report_payload(report), args, _report_human(report))


def cmd_group_alpha(args):
    pair = _make_pair(args)
    report = alpha_exact(pair, k_max=args.kmax, threads=args.threads)
    return _emit(_report_payload(report), args, _report_human(report))


def cmd_group_fusion_embed(args):
    G = load_group(args.file)
    hgens = [G.evaluate_word(w.strip()) for w in args.subgroup.split(",")]
    fmap, H, Hcls, Gcls = fusion_from_embedding(G, hgens)
    payload = {"status": "ok", "source": fmap.source, "target": fmap.target,
               "subgroup_order": H.order(),
               "map": list(fmap.map),
               "source_labels": [c.label for c in Hcls],
               "target_labels": [Gcls[j].label for j in fmap.map]}
    human = [f"subgroup of order {H.order()}; fusion:"]
    for i, j in enumerate(fmap.map):
        human.append(f"  {Hcls[i].label} -> {Gcls[j].label}")
    return _emit(payload, args, human)


# -- scott ---------------------------------------------------------------------
def cmd_scott_check(args):
    table = load_table(args.table)
    cf = load_class_function(args.classfn, table)
    indices = _labels_to_indices(table, args.classes)
    report = scott_excludes(cf, indices, m_style=args.m_style)
    payload = {
        "status": "ok",
        "module_dim": report.module_dim,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "generation_excluded": report.generation_excluded,
        "per_element": report.per_element,
    }
    human = []
    for e in report.per_element:
        human.append(f"{e['label']}: fixed dim {e['fixed_dim']}, "
                     f"nu {e['nu']}")
    human.append(f"sum of fixed dims {report.lhs} vs bound {report.rhs}: "
                 + ("generation EXCLUDED" if report.generation_excluded
                    else "no exclusion"))
    return _emit(payload, args, human)


# -- suite ----------------------------------------------------------------------
def cmd_suite_run(args):
    results = run_tier(args.tier, threads=args.threads,
                       suz_table=args.table)
    payload = {"status": "ok", "tier": args.tier,
               "results": [{"criterion": n, "ok": ok, "detail": d}
                           for n, ok, d in results]}
    human = []
    all_ok = True
    for n, ok, d in results:
        human.append(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {d}")
        all_ok = all_ok and ok
    if not all_ok:
        payload["status"] = "error"
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for line in human:
            print(line)
    return 0 if all_ok else 1


# -- parser ---------------------------------------------------------------------
def build_parser():
    p = argparse.ArgumentParser(
        prog="conjgen",
        description="Exact structure constants, fixed-space bounds, class "
                    "fusions and conjugate-generation numbers for finite "
                    "permutation groups.")
    p.add_argument("--json", action="store_true",
                   help="structured, lossless output")
    p.add_argument("--threads", type=int, default=1,
                   help="worker processes for parallel searches")
    sub = p.add_subparsers(dest="command", required=True)

    ctab = sub.add_parser("ctab", help="character table operations")
    csub = ctab.add_subparsers(dest="subcommand", required=True)
    v = csub.add_parser("validate")
    v.add_argument("file")
    v.set_defaults(func=cmd_ctab_validate)
    m = csub.add_parser("mcoeff")
    m.add_argument("file")
    m.add_argument("--classes", required=True,
                   help="comma-separated factor class labels")
    m.add_argument("--target", required=True)
    m.set_defaults(func=cmd_ctab_mcoeff)
    n = csub.add_parser("ncoeff")
    n.add_argument("file")
    n.add_argument("--classes", required=True)
    n.set_defaults(func=cmd_ctab_ncoeff)
    r = csub.add_parser("relation")
    r.add_argument("file")
    r.add_argument("--classes", required=True)
    r.add_argument("--target", required=True)
    r.set_defaults(func=cmd_ctab_relation)
    f = csub.add_parser("fusions")
    f.add_argument("source")
    f.add_argument("target")
    f.set_defaults(func=cmd_ctab_fusions)

    grp = sub.add_parser("group", help="permutation group operations")
    gsub = grp.add_subparsers(dest="subcommand", required=True)
    gi = gsub.add_parser("info")
    gi.add_argument("file")
    gi.set_defaults(func=cmd_group_info)
    gc = gsub.add_parser("class")
    gc.add_argument("file")
    gc.add_argument("--element", required=True,
                    help="word in the named generators")
    gc.set_defaults(func=cmd_group_class)
    gz = gsub.add_parser("centralizer")
    gz.add_argument("file")
    gz.add_argument("--element", required=True)
    gz.set_defaults(func=cmd_group_centralizer)
    gb = gsub.add_parser("beta")
    gb.add_argument("file")
    gb.add_argument("--element", required=True)
    gb.add_argument("--prime", type=int, required=True)
    gb.add_argument("--kmax", type=int, default=4)
    gb.add_argument("--subgroup", default=None,
                    help="comma-separated words generating S "
                         "(default: the whole group)")
    gb.set_defaults(func=cmd_group_beta)
    ga = gsub.add_parser("alpha")
    ga.add_argument("file")
    ga.add_argument("--element", required=True)
    ga.add_argument("--kmax", type=int, default=4)
    ga.add_argument("--subgroup", default=None)
    ga.set_defaults(func=cmd_group_alpha)
    ge = gsub.add_parser("fusion-embed")
    ge.add_argument("file")
    ge.add_argument("--subgroup", required=True,
                    help="comma-separated words generating the subgroup")
    ge.set_defaults(func=cmd_group_fusion_embed)

    sc = sub.add_parser("scott", help="fixed-space exclusion checks")
    ssub = sc.add_subparsers(dest="subcommand", required=True)
    sk = ssub.add_parser("check")
    sk.add_argument("--table", required=True)
    sk.add_argument("--classfn", required=True)
    sk.add_argument("--classes", required=True,
                    help="comma-separated class labels, product-equals-1 "
                         "orientation unless --m-style")
    sk.add_argument("--m-style", action="store_true", dest="m_style",
                    help="treat the last class as the product target")
    sk.set_defaults(func=cmd_scott_check)

    st = sub.add_parser("suite", help="tiered verification runs")
    tsub = st.add_subparsers(dest="subcommand", required=True)
    tr = tsub.add_parser("run")
    tr.add_argument("tier", choices=["fast", "paper", "stretch"])
    tr.add_argument("--table", default=None,
                    help="externally supplied character table for the "
                         "stretch tier")
    tr.set_defaults(func=cmd_suite_run)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
