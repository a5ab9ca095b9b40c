# Command-line front end: coefficients, expansions, multiplet tables, zero
# lists, verification suites, and benchmarks.

import argparse
import csv
import io
import json
import sys
import time

from . import coeff_engine, expansion, oracles, symmetry

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_ORACLE_MISMATCH = 3


class UsageError(Exception):
    pass


def _parse_indices(n, text, as_mult):
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError("indices must be comma-separated integers")
    if as_mult:
        if len(values) != n or sum(values) != n or any(v < 0 for v in values):
            raise UsageError("multiplicity vector must have N nonnegative entries summing to N")
        return coeff_engine.indices_from_multiplicities(values)
    if len(values) != n:
        raise UsageError("need exactly N indices")
    if any(v < 0 or v >= n for v in values):
        raise UsageError("indices must lie in [0, N-1]")
    return tuple(sorted(values))


def poly_to_json(poly) -> str:
    terms = [{"M": list(k), "coeff": str(v)} for k, v in poly.sorted_terms()]
    return json.dumps({"N": poly.n, "terms": terms}, separators=(",", ":"))


def _partition_label(key):
    return ".".join(str(c) for c in sorted((c for c in key if c), reverse=True))


def _poly_text(poly, include_zeros):
    groups = {}
    items = sorted(poly.all_terms.items()) if include_zeros else poly.sorted_terms()
    for key, value in items:
        groups.setdefault(_partition_label(key), []).append((key, value))
    lines = []
    for label in sorted(groups, key=lambda s: ([-int(t) for t in s.split(".")], s)):
        lines.append("partition %s" % label)
        for key, value in groups[label]:
            lines.append("  C*_%s = %d" % ("".join(str(c) for c in key), value))
    return "\n".join(lines)


def _poly_csv(poly, include_zeros):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["M", "coeff"])
    items = sorted(poly.all_terms.items()) if include_zeros else poly.sorted_terms()
    for key, value in items:
        writer.writerow(["".join(str(c) for c in key), value])
    return buf.getvalue().rstrip("\n")


def cmd_coeff(args):
    a = _parse_indices(args.N, args.indices, args.mult)
    value, path = coeff_engine.coefficient_with_path(a)
    rep, sign = coeff_engine.reduce_representative(a)
    doc = {
        "N": args.N,
        "indices": list(a),
        "value": str(value),
        "path": path,
        "representative": {"indices": list(rep), "sign": sign},
    }
    if args.check:
        oracle = oracles.coeff_via_theorem2(a)
        doc["oracle"] = str(oracle)
        if oracle != value:
            print(json.dumps(doc, separators=(",", ":")))
            print("oracle mismatch: engine %d vs oracle %d" % (value, oracle),
                  file=sys.stderr)
            return EXIT_ORACLE_MISMATCH
    if args.format == "json":
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(value)
    return EXIT_OK


def cmd_expand(args):
    if args.N < 1 or args.N > args.max_n:
        raise UsageError("N out of range")
    if args.N == 1:
        poly = expansion.ExpansionPolynomial(1, {(1,): 1})
    else:
        poly = expansion.expand(args.N, args.strategy)
    if args.format == "json":
        print(poly_to_json(poly))
    elif args.format == "csv":
        print(_poly_csv(poly, args.include_zeros))
    else:
        print(_poly_text(poly, args.include_zeros))
    return EXIT_OK


def cmd_multiplets(args):
    if args.N < 2 or args.N > args.max_n:
        raise UsageError("N out of range")
    records = symmetry.classify(args.N)
    rows = [{"kind": rec.kind,
             "representative": "".join(str(c) for c in rec.representative),
             "n": rec.n,
             "value": str(rec.value)} for rec in records]
    footer = {"F": symmetry.count_solutions_F(args.N),
              "additive_total": sum(
                  symmetry.additive_multiplet_count_g(args.N, k)
                  for k in range(1, args.N + 1))}
    try:
        footer["super_closed_form"] = symmetry.supermultiplet_count(args.N)
    except ValueError:
        footer["super_closed_form"] = None
    doc = {"N": args.N, "multiplets": rows, "footer": footer}
    if args.format == "json":
        print(json.dumps(doc, separators=(",", ":")))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["kind", "representative", "n", "value"])
        for row in rows:
            writer.writerow([row["kind"], row["representative"], row["n"], row["value"]])
        print(buf.getvalue().rstrip("\n"))
    else:
        for row in rows:
            print("%-8s %s  n=%-3d value=%s"
                  % (row["kind"], row["representative"], row["n"], row["value"]))
        print("F(%d)=%d additive=%d super=%s"
              % (args.N, footer["F"], footer["additive_total"],
                 footer["super_closed_form"]))
    return EXIT_OK


def zeros_report(n):
    """(index set, annotation) for every vanishing condition-(8) coefficient.

    Full scan for small n; for larger n only the structural family is listed.
    """
    out = []
    if n <= 8:
        for m in symmetry.valid_vectors(n):
            a = coeff_engine.indices_from_multiplicities(m)
            if coeff_engine.coefficient(a) == 0:
                out.append((a, "corollary6" if _in_structural_family(a) else "accidental"))
    else:
        family = _structural_zero_family(n)
        for a in sorted(family):
            assert coeff_engine.coefficient(a) == 0
            out.append((a, "corollary6"))
    return out


def _structural_zero_family(n):
    base = [coeff_engine.indices_from_multiplicities(m)
            for m in symmetry.valid_vectors(n)
            if coeff_engine.zero_by_corollary6(
                coeff_engine.indices_from_multiplicities(m))]
    family = set()
    for a in base:
        for shift in range(n):
            for mult in symmetry.coprime_residues(n):
                family.add(tuple(sorted((mult * x + shift) % n for x in a)))
    return family


def _in_structural_family(a):
    return a in _structural_family_cache(len(a))


_family_memo = {}


def _structural_family_cache(n):
    if n not in _family_memo:
        _family_memo[n] = _structural_zero_family(n)
    return _family_memo[n]


def cmd_zeros(args):
    if args.N < 2 or args.N > args.max_n:
        raise UsageError("N out of range")
    report = zeros_report(args.N)
    if args.format == "json":
        doc = {"N": args.N,
               "zeros": [{"indices": list(a), "kind": kind} for a, kind in report]}
        print(json.dumps(doc, separators=(",", ":")))
    else:
        for a, kind in report:
            print("%s %s" % ("".join(str(x) for x in a), kind))
        print("total %d" % len(report))
    return EXIT_OK


def _parse_range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    return int(text), int(text)


def _verify_oracle(lo, hi):
    for n in range(max(3, lo), min(hi, 8) + 1):
        leib = oracles.leibniz_expansion(n)
        for m in symmetry.valid_vectors(n):
            a = coeff_engine.indices_from_multiplicities(m)
            got = coeff_engine.coeff_theorem3(a)
            want = leib.get(m, 0)
            if got != want:
                return "N=%d %s: engine %d vs determinant %d" % (n, m, got, want)
            if n <= 7 and oracles.coeff_via_theorem2(a) != want:
                return "N=%d %s: count-based oracle disagrees" % (n, m)
    return None


def _verify_identities(lo, hi):
    for n in range(max(2, lo), min(hi, 9) + 1):
        poly = expansion.expand(n)
        if n % 2 == 1 and expansion.evaluate(poly, [1] * n) != 0:
            return "det of all-ones not zero at N=%d" % n
        want = (n - 1) * (1 if n % 2 else -1)
        if expansion.evaluate(poly, [0] + [1] * (n - 1)) != want:
            return "det[0,1,...,1] wrong at N=%d" % n
    return None


def _verify_lemmas(lo, hi):
    for n in range(max(3, lo), min(hi, 8) + 1):
        for p in range(0, n):
            q = tuple(range(1, p + 1))
            if not oracles.lemma1_check(n, q):
                return "series identity failed at N=%d q=%s" % (n, q)
    if not oracles.lemma2_check(3, 5, trials=10):
        return "symmetric-sum reduction failed"
    return None


def _verify_symmetry(lo, hi):
    for n in range(max(2, lo), min(hi, 7) + 1):
        for m in symmetry.valid_vectors(n):
            a = coeff_engine.indices_from_multiplicities(m)
            c = coeff_engine.coefficient(a)
            if c % coeff_engine.divisibility_bound(a) != 0:
                return "divisibility bound violated at N=%d %s" % (n, m)
            shifted = tuple(sorted((x + 1) % n for x in a))
            if coeff_engine.coefficient(shifted) * (1 if (n - 1) % 2 == 0 else -1) != c:
                return "shift covariance violated at N=%d %s" % (n, m)
    return None


def _verify_counting(lo, hi):
    for n in range(max(2, lo), min(hi, 10) + 1):
        if symmetry.count_solutions_F(n) != len(symmetry.valid_vectors(n)):
            return "solution count formula wrong at N=%d" % n
    return None


SUITES = {
    "oracle": _verify_oracle,
    "identities": _verify_identities,
    "lemmas": _verify_lemmas,
    "symmetry": _verify_symmetry,
    "counting": _verify_counting,
}


def cmd_verify(args):
    lo, hi = _parse_range(args.range)
    names = [args.suite] if args.suite else sorted(SUITES)
    failed = False
    for name in names:
        if name not in SUITES:
            raise UsageError("unknown suite %r" % name)
        err = SUITES[name](lo, hi)
        if err is None:
            print("%s: pass" % name)
        else:
            print("%s: FAIL (%s)" % (name, err))
            failed = True
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


def cmd_bench(args):
    lo, hi = _parse_range(args.range)
    writer = csv.writer(sys.stdout)
    writer.writerow(["N", "terms", "expand_direct_s", "expand_reduced_s", "leibniz_s"])
    for n in range(lo, hi + 1):
        expansion._expand_cached.cache_clear()
        t0 = time.perf_counter()
        poly = expansion.expand(n, "direct")
        t1 = time.perf_counter()
        expansion.expand(n, "reduced")
        t2 = time.perf_counter()
        t_leib = ""
        if n <= 9:
            t3 = time.perf_counter()
            oracles.leibniz_expansion(n)
            t_leib = "%.4f" % (time.perf_counter() - t3)
        writer.writerow([n, len(poly.terms), "%.4f" % (t1 - t0),
                         "%.4f" % (t2 - t1), t_leib])
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="circulant",
                                     description="exact circulant determinant expansions")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--max-n", type=int, default=expansion.MAX_N)

    p = sub.add_parser("coeff", help="one expansion coefficient")
    p.add_argument("N", type=int)
    p.add_argument("indices")
    p.add_argument("--mult", action="store_true",
                   help="read the argument as a multiplicity vector")
    p.add_argument("--check", action="store_true")
    common(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("expand", help="full determinant expansion")
    p.add_argument("N", type=int)
    p.add_argument("--strategy", choices=["direct", "reduced"], default="direct")
    p.add_argument("--include-zeros", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("multiplets", help="orbit table")
    p.add_argument("N", type=int)
    common(p)
    p.set_defaults(func=cmd_multiplets)

    p = sub.add_parser("zeros", help="vanishing coefficients")
    p.add_argument("N", type=int)
    common(p)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("range")
    p.add_argument("--suite")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timing table")
    p.add_argument("range")
    common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
