"""Command-line front end: batch identity verification, numeric
transformation checks, coefficient dumps and machine-readable reports.

Exit codes: 0 all requested checks pass, 1 at least one failure (reports are
still emitted), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import MockqError
from .numeric import CHECK_NAMES, NumericScene, SCENES, run_check
from .registry import registry_catalog, verify

__all__ = ["main", "parse_tau"]


def parse_tau(text: str) -> complex:
    """Parse "a+bi" with decimal a, b; "i" alone means 0+1i."""
    s = text.strip().replace(" ", "")
    m = re.fullmatch(r"(?:([+-]?\d*\.?\d+))?(?:([+-](?:\d*\.?\d+)?)?i)?", s)
    if not m or (m.group(1) is None and not s.endswith("i")):
        raise ValueError("cannot parse tau from %r (expected a+bi)" % text)
    re_part = float(m.group(1)) if m.group(1) is not None else 0.0
    if s.endswith("i"):
        b = m.group(2)
        if b is None:
            # plain "i" or "2i": the whole numeric head is the imaginary part
            if m.group(1) is not None:
                im_part, re_part = re_part, 0.0
            else:
                im_part = 1.0
        elif b in ("+", "-"):
            im_part = 1.0 if b == "+" else -1.0
        else:
            im_part = float(b)
    else:
        im_part = 0.0
    tau = complex(re_part, im_part)
    if not tau.imag > 0:
        raise ValueError("tau must satisfy Im(tau) > 0, got %s" % tau)
    return tau


def _emit(payload, args):
    if args.json:
        text = json.dumps(payload, indent=2)
    else:
        lines = []
        for row in payload:
            if "id" in row:
                line = "%-24s %-4s order=%d  %dms" % (
                    row["id"],
                    row["status"],
                    row["order"],
                    row["ms"],
                )
                if row["first_mismatch"]:
                    fm = row["first_mismatch"]
                    line += "  first mismatch at q^(%d/24): %s vs %s" % (
                        fm["exponent_num_24"],
                        fm["lhs"],
                        fm["rhs"],
                    )
            else:
                line = "%-24s %-4s tau=%g%+gi residual=%.3e tol=%.0e" % (
                    row["name"],
                    row["status"],
                    row["tau"][0],
                    row["tau"][1],
                    row["residual"],
                    row["tol"],
                )
                if row["detail"]:
                    line += "  " + row["detail"]
            lines.append(line)
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_verify(args) -> int:
    reports = [verify(args.id, args.order)]
    _emit([r.to_json_dict() for r in reports], args)
    return 0 if all(r.status == "pass" for r in reports) else 1


def _cmd_verify_all(args) -> int:
    recs = registry_catalog()
    jobs = args.jobs or os.cpu_count() or 1
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda r: verify(r.id, args.order), recs))
    else:
        reports = [verify(r.id, args.order) for r in recs]
    reports.sort(key=lambda r: r.id)
    _emit([r.to_json_dict() for r in reports], args)
    return 0 if all(r.status == "pass" for r in reports) else 1


def _cmd_numeric(args) -> int:
    names = [args.check] if args.check else list(CHECK_NAMES)
    if args.tau is not None:
        scenes = [NumericScene(parse_tau(args.tau))]
    else:
        scenes = list(SCENES)
    jobs = args.jobs or os.cpu_count() or 1
    tasks = [(n, sc) for n in names for sc in scenes]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda t: run_check(t[0], t[1], args.tol), tasks))
    else:
        results = [run_check(n, sc, args.tol) for n, sc in tasks]
    _emit([r.to_json_dict() for r in results], args)
    return 0 if all(r.passed for r in results) else 1


def _cmd_coeffs(args) -> int:
    from .registry import _catalog_map

    rec = _catalog_map()[args.id]
    pairs = rec.builder(24 * args.order + 24)
    side = pairs[0][0 if args.side == "lhs" else 1]
    text = side.truncate(24 * args.order + 1).dump()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _cmd_list(args) -> int:
    payload = [
        {"id": r.id, "default_order": r.default_order, "description": r.description}
        for r in registry_catalog()
    ]
    payload += [{"check": n} for n in CHECK_NAMES]
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for row in payload:
            if "id" in row:
                print("%-24s order %-4d %s" % (row["id"], row["default_order"], row["description"]))
            else:
                print("numeric check: %s" % row["check"])
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mockq", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="verify one identity record")
    pv.add_argument("--id", required=True)
    pv.add_argument("--order", type=int, default=None)
    pv.set_defaults(fn=_cmd_verify)

    pa = sub.add_parser("verify-all", help="verify every identity record")
    pa.add_argument("--order", type=int, default=None)
    pa.add_argument("--jobs", type=int, default=None)
    pa.set_defaults(fn=_cmd_verify_all)

    pn = sub.add_parser("numeric", help="run numeric transformation checks")
    pn.add_argument("--check", default=None)
    pn.add_argument("--tau", default=None)
    pn.add_argument("--tol", type=float, default=None)
    pn.add_argument("--jobs", type=int, default=None)
    pn.set_defaults(fn=_cmd_numeric)

    pc = sub.add_parser("coeffs", help="dump exact coefficients of a record side")
    pc.add_argument("--id", required=True)
    pc.add_argument("--order", type=int, default=50)
    pc.add_argument("--side", choices=("lhs", "rhs"), default="lhs")
    pc.add_argument("--out", default=None)
    pc.set_defaults(fn=_cmd_coeffs)

    pl = sub.add_parser("list", help="list identity records and numeric checks")
    pl.set_defaults(fn=_cmd_list)

    for sp in (pv, pa, pn, pl):
        sp.add_argument("--json", action="store_true")
    for sp in (pv, pa, pn):
        sp.add_argument("--out", default=None)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "order", None) is not None and args.order < 1:
        print("error: --order must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except KeyError as exc:
        valid = ", ".join(sorted(r.id for r in registry_catalog()))
        print("error: %s\nvalid ids: %s\nvalid checks: %s"
              % (exc, valid, ", ".join(CHECK_NAMES)), file=sys.stderr)
        return 2
    except (ValueError, MockqError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
