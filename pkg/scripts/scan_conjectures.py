#!/usr/bin/env python3
"""Exhaustive conjecture scan over small graphs.

Checks, over every isomorphism class up to the requested order,

* S >= IRD and Var >= IRR*IRD/n^2, with the equality pattern expected
  exactly when all degrees lie in {min degree, mean degree, max degree};
* Var/S >= 1/(2n) in the cross-multiplied form 2n*Var >= S, with equality
  expected exactly on bidegreed graphs with degree gap one.

Usage: python scripts/scan_conjectures.py --max-n 6 [--connected-only]
                                          [--cache-dir DIR] [--out FILE]
"""

import argparse
import json
import sys

from graphirr.enumeration import EnumerationSpec
from graphirr.serialize import report_json
from graphirr.verify import check_deviation_conjecture, check_omega_conjecture


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--connected-only", action="store_true")
    ap.add_argument("--cache-dir", default=None)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    specs = [
        EnumerationSpec(n=k, connected_only=args.connected_only)
        for k in range(1, args.max_n + 1)
    ]
    reports = [
        check_deviation_conjecture(specs, cache_dir=args.cache_dir),
        check_omega_conjecture(specs, cache_dir=args.cache_dir),
    ]
    ok = True
    for rep in reports:
        status = "clean" if not rep.violations else "COUNTEREXAMPLES FOUND"
        print(
            f"{rep.suite_id}: {rep.graphs_checked} graphs, "
            f"{len(rep.equalities)} equality cases, "
            f"{len(rep.findings)} findings -> {status} ({rep.elapsed:.1f}s)"
        )
        for v in rep.violations:
            print(f"  counterexample {v.graph}: {v.check} lhs={v.lhs} rhs={v.rhs}")
            ok = False
        for f in rep.findings:
            print(f"  finding {f.graph}: {f.check} ({f.note})")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([report_json(r) for r in reports], fh, indent=2, sort_keys=True)
        print(f"wrote {args.out}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
