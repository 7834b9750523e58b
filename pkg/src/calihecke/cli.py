"""Command-line front end.

Subcommands: classify, seminormal, bgg, locus, verify.  Output is JSON by
default (``--format tsv`` for tab-separated tables); rationals are emitted
as "p/q" strings and all listings are stably sorted, so output is
deterministic.  Exit codes: 0 success, 1 verification failure, 2 usage
error.
"""

import argparse
import json
import sys
from fractions import Fraction
from math import gcd

from .multipartitions import (
    Charge,
    count_standard_tableaux,
    heights,
    is_cylindrical_charge,
    is_multipartition,
    is_partition,
    is_s_admissible,
    make_charge,
    mp_size,
    partitions_of,
)
from .calibration import is_cali, is_flotw
from .crystal import reachable_by_size
from .alcoves import count_fundamental_paths, in_fundamental_alcove, length
from . import bgg as bggmod
from .seminormal import (
    class_form_signs,
    cyclotomic_membership,
    is_calibrated_weight,
    seminormal_module,
    verify_form_invariance,
    verify_hecke_relations,
    weight_class,
)
from .unitary_loci import (
    column_reading_weight,
    oracle_locus_verdict,
    unitary_locus,
)


def _fmt_rational(c):
    return f"{c.numerator}/{c.denominator}"


def _die_usage(code, message):
    json.dump({"error": code, "message": message}, sys.stderr)
    sys.stderr.write("\n")
    sys.exit(2)


def _parse_charge(args, required=True):
    if args.charge is None:
        if required:
            _die_usage("MISSING_CHARGE", "--charge is required")
        return None
    try:
        s = tuple(int(x) for x in args.charge.split(","))
    except ValueError:
        _die_usage("BAD_CHARGE", "charge must be comma-separated integers")
    try:
        ch = make_charge(s, args.e, args.a)
    except ValueError as ex:
        _die_usage("BAD_PARAMETERS", str(ex))
    if not is_cylindrical_charge(ch):
        _die_usage("CHARGE_NOT_CYLINDRICAL",
                   "need s_1 <= ... <= s_ell < s_1 + e")
    return ch


def _parse_multipartition(args):
    if args.multipartition is None:
        return None
    try:
        raw = json.loads(args.multipartition)
        mp = tuple(tuple(int(x) for x in comp) for comp in raw)
    except (ValueError, TypeError):
        _die_usage("BAD_MULTIPARTITION", "--multipartition must be a JSON array of arrays")
    if not is_multipartition(mp):
        _die_usage("BAD_MULTIPARTITION", "components must be partitions")
    return mp


def _parse_partition(args):
    if args.partition is None:
        return None
    try:
        la = tuple(int(x) for x in args.partition.split(","))
    except ValueError:
        _die_usage("BAD_PARTITION", "partition must be comma-separated integers")
    if not la or not is_partition(la):
        _die_usage("BAD_PARTITION", "need a nonempty weakly decreasing tuple")
    return la


def _emit(payload, fmt, table_key=None, columns=None):
    if fmt == "json":
        json.dump(payload, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    else:
        rows = payload[table_key] if table_key else [payload]
        if columns is None:
            columns = sorted(rows[0]) if rows else []
        sys.stdout.write("\t".join(columns) + "\n")
        for row in rows:
            sys.stdout.write("\t".join(json.dumps(row[c], sort_keys=True)
                                       if not isinstance(row[c], str) else row[c]
                                       for c in columns) + "\n")


def cmd_classify(args):
    ch = _parse_charge(args)
    if args.n is None:
        _die_usage("MISSING_N", "--n is required for classify")
    rows = []
    for mp in sorted(reachable_by_size(args.n, ch)[args.n]):
        hb = heights(mp)
        geom_ok = (sum(hb) < ch.e and is_s_admissible(hb, ch))
        alen = paths = None
        if geom_ok:
            try:
                alen = length(mp, ch, hb)
                if in_fundamental_alcove(mp, ch, hb):
                    paths = count_fundamental_paths(mp, ch, hb)
            except ValueError:
                alen = None
        rows.append({
            "multipartition": [list(c) for c in mp],
            "flotw": is_flotw(mp, ch),
            "cali": is_cali(mp, ch),
            "alcove_length": alen,
            "standard_tableaux": count_standard_tableaux(mp),
            "fundamental_paths": paths,
        })
    _emit({"rows": rows}, args.format, "rows",
          ["multipartition", "flotw", "cali", "alcove_length",
           "standard_tableaux", "fundamental_paths"])
    return 0


def cmd_seminormal(args):
    if args.weight is not None:
        try:
            m = tuple(int(x) for x in args.weight.split(","))
        except ValueError:
            _die_usage("BAD_WEIGHT", "weight must be comma-separated integers")
    else:
        la = _parse_partition(args)
        if la is None:
            _die_usage("MISSING_INPUT", "need --weight or --partition")
        m = column_reading_weight(la, args.e)
    if gcd(args.a, args.e) != 1:
        _die_usage("BAD_PARAMETERS", "need gcd(a, e) = 1")
    if not is_calibrated_weight(m, args.e):
        _die_usage("NOT_CALIBRATED", "weight is not calibrated")
    cls = weight_class(m, args.e)
    mod = seminormal_module(cls, args.e, args.a)
    relations = verify_hecke_relations(mod)
    invariance = verify_form_invariance(mod)
    signs = class_form_signs(cls, args.e, args.a)
    report = {
        "dimension": mod.dim(),
        "weights": [list(w) for w in cls],
        "signs": [signs[w] for w in cls],
        "unitary": all(v == 1 for v in signs.values()),
        "relations_pass": all(relations.values()),
        "invariance_pass": all(invariance.values()),
    }
    ch = _parse_charge(args, required=False)
    if ch is not None:
        report["cyclotomic_member"] = cyclotomic_membership(mod, ch)
    _emit(report, args.format)
    return 0 if report["relations_pass"] and report["invariance_pass"] else 1


def cmd_bgg(args):
    ch = _parse_charge(args)
    la = _parse_multipartition(args)
    if la is None:
        _die_usage("MISSING_INPUT", "need --multipartition")
    if len(la) != ch.level:
        _die_usage("BAD_MULTIPARTITION", "level must match the charge")
    hb = heights(la)
    if sum(hb) >= ch.e:
        _die_usage("BAD_PARAMETERS", "need e > total height")
    if not in_fundamental_alcove(la, ch, hb):
        _die_usage("NOT_FUNDAMENTAL", "label not in the fundamental alcove")
    poset = bggmod.block_poset(la, ch, hb, cross_validate=True)
    edges = bggmod.covers(poset)
    diamonds, strands = bggmod.diamonds_and_strands(poset, edges)
    signs = bggmod.sign_assignment(poset, edges)
    euler = bggmod.euler_check(la, ch, hb)
    conventions = bggmod.graded_character_identity(la, ch, hb)
    report = {
        "nodes": [{"multipartition": [list(c) for c in mp],
                   "length": poset.lengths[mp]} for mp in poset.nodes],
        "edges": len(edges),
        "diamonds": len(diamonds),
        "strands": len(strands),
        "signs_feasible": signs is not None,
        "euler": euler,
        "convention": {str(k): v for k, v in conventions.items()},
    }
    if ch.e > 2:
        klr = bggmod.verify_klr_relations(bggmod.build_klr_module(la, ch, hb))
        report["klr_pass"] = all(klr.values())
    _emit(report, args.format)
    ok = euler["ok"] and signs is not None and report.get("klr_pass", True)
    return 0 if ok else 1


def cmd_locus(args):
    la = _parse_partition(args)
    if la is None:
        _die_usage("MISSING_INPUT", "need --partition")
    loc = unitary_locus(la)
    report = {
        "full": loc.full,
        "exclusions": [_fmt_rational(c) for c in loc.exclusions],
        "interval": ([_fmt_rational(-loc.radius), _fmt_rational(loc.radius)]
                     if loc.radius is not None else None),
        "points": [_fmt_rational(c) for c in loc.points],
    }
    _emit(report, args.format)
    return 0


def _verify_classification(e_max, n_max):
    import itertools
    from .crystal import is_no_stuttering, is_reachable
    from .calibration import enumerate_cali
    from .multipartitions import multipartitions_of
    ok = True
    for e in range(2, e_max + 1):
        for ell in (1, 2):
            for s in itertools.product(range(e), repeat=ell):
                if tuple(sorted(s)) != s or s[0] != 0:
                    continue
                ch = Charge(s, e)
                for n in range(n_max + 1):
                    for mp in multipartitions_of(n, ell):
                        if is_no_stuttering(mp, ch) != is_cali(mp, ch):
                            ok = False
                        if is_reachable(mp, ch) != is_flotw(mp, ch):
                            ok = False
    return ok


def _verify_seminormal(e_max, n_max):
    from .seminormal import enumerate_calibrated_classes
    ok = True
    for e in range(2, e_max + 1):
        for n in range(1, n_max + 1):
            for cls in enumerate_calibrated_classes(n, e):
                for a in range(1, e):
                    if gcd(a, e) != 1:
                        continue
                    mod = seminormal_module(cls, e, a)
                    if not all(verify_hecke_relations(mod).values()):
                        ok = False
                    if not all(verify_form_invariance(mod).values()):
                        ok = False
    return ok


def _verify_klr(e_max, n_max):
    import itertools
    from .multipartitions import multipartitions_of
    ok = True
    for e in range(3, e_max + 1):
        for ell in (1, 2):
            for s in itertools.product(range(e), repeat=ell):
                if tuple(sorted(s)) != s:
                    continue
                ch = Charge(s, e)
                for n in range(n_max + 1):
                    for la in multipartitions_of(n, ell):
                        hb = heights(la)
                        if sum(hb) >= e or not is_s_admissible(hb, ch):
                            continue
                        try:
                            if not in_fundamental_alcove(la, ch, hb):
                                continue
                        except ValueError:
                            continue
                        mod = bggmod.build_klr_module(la, ch, hb)
                        if not all(bggmod.verify_klr_relations(mod).values()):
                            ok = False
                        if not bggmod.euler_check(la, ch, hb)["ok"]:
                            ok = False
    return ok


def _locus_task(la):
    loc = unitary_locus(la)
    for e in range(2, 11):
        for a in range(-(e // 2), e // 2 + 1):
            if gcd(a, e) != 1:
                continue
            c = Fraction(a, e)
            if not -Fraction(1, 2) < c <= Fraction(1, 2):
                continue
            if loc.contains(c) != oracle_locus_verdict(la, a % e, e):
                return False
    return True


def _verify_locus(n_max, jobs):
    tasks = [la for n in range(1, n_max + 1) for la in partitions_of(n)]
    if jobs > 1:
        import multiprocessing
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_locus_task, tasks)
    else:
        results = [_locus_task(la) for la in tasks]
    return all(results)


def cmd_verify(args):
    suites = {
        "classification": lambda: _verify_classification(4, 6),
        "seminormal": lambda: _verify_seminormal(5, 4),
        "klr": lambda: _verify_klr(5, 5),
        "locus": lambda: _verify_locus(7, args.jobs),
    }
    selected = sorted(suites) if args.suite == "all" else [args.suite]
    if any(s not in suites for s in selected):
        _die_usage("BAD_SUITE", f"unknown suite; choose from {sorted(suites)} or all")
    report = {name: suites[name]() for name in selected}
    _emit(report, args.format)
    return 0 if all(report.values()) else 1


def main(argv=None):
    parser = argparse.ArgumentParser(prog="calihecke")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--e", type=int, default=None)
        p.add_argument("--a", type=int, default=1)
        p.add_argument("--charge", type=str, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--partition", type=str, default=None)
        p.add_argument("--multipartition", type=str, default=None)
        p.add_argument("--weight", type=str, default=None)
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--jobs", type=int, default=1)

    for name in ("classify", "seminormal", "bgg", "locus"):
        common(sub.add_parser(name))
    verify = sub.add_parser("verify")
    verify.add_argument("suite", nargs="?", default="all")
    common(verify)

    args = parser.parse_args(argv)
    needs_e = args.command in ("classify", "seminormal", "bgg")
    if needs_e and args.e is None:
        _die_usage("MISSING_E", "--e is required")
    if args.e is not None and args.e < 2:
        _die_usage("BAD_PARAMETERS", "need e >= 2")
    handlers = {
        "classify": cmd_classify,
        "seminormal": cmd_seminormal,
        "bgg": cmd_bgg,
        "locus": cmd_locus,
        "verify": cmd_verify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
