"""Command-line interface.

Exit status: 0 when everything holds, 1 for unreadable or invalid input,
2 when an audit, oracle or validation check finds a violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .bsets import CarrierError
from .dframes import BoundExceeded, dO, f_functor, validate_dframe
from .hofmann_mislove import render_report, verify_hm
from .oracle import DISAGREE, run_oracles
from .orders import specialization
from .search import MAX_POINTS, ExprError, audit_all, find_minimal
from .separation import classify
from .sobriety import discrepancy_report, sobriety_report, sobrify
from .spaces import BSpace, SpaceParseError, format_space, parse_space
from .topology import TopologyError

OK, INPUT_ERROR, VIOLATION = 0, 1, 2


class InputError(Exception):
    pass


def load_space(ref: str) -> BSpace:
    """A catalog name or the path of a space file."""
    if ref in catalog.CATALOG:
        return catalog.get(ref)
    path = Path(ref)
    if not path.is_file():
        raise InputError(f"{ref}: neither a catalog name ({', '.join(catalog.CATALOG)}) nor a readable file")
    try:
        return parse_space(path.read_text(), name=path.stem)
    except SpaceParseError as e:
        raise InputError(f"{ref}: {e}") from None


def _fmt(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def _kv(d: dict, prefix: str = "") -> list[str]:
    return [f"{prefix}{k} = {_fmt(v)}" for k, v in d.items()]


def cmd_classify(args) -> int:
    space = load_space(args.space)
    print(classify(space).render(args.format))
    return OK


def cmd_order(args) -> int:
    space = load_space(args.space)
    om = specialization(space)
    if args.format == "text":
        print(om.render())
    else:
        for x in space.points:
            for y in space.points:
                print(f"omega({x},{y}) = {om(x, y)}")
    return OK


def cmd_sobriety(args) -> int:
    space = load_space(args.space)
    lines = _kv(sobriety_report(space))
    # both characterizations of B-sobriety, side by side
    audit = discrepancy_report(space)
    audit.pop("space")
    lines += _kv(audit, "audit.")
    print("\n".join(lines))
    return OK


def cmd_sobrify(args) -> int:
    space = load_space(args.space)
    sob = sobrify(space, name=f"{space.name}-sob" if space.name else "")
    text = format_space(sob.space)
    c = space.carrier
    comments = []
    for name, g in zip(sob.space.points, sob.gammas):
        comments.append(f"# {name} = tt{c.format_set(g.t)} ff{c.format_set(g.f)}")
    for x, g in sob.unit.items():
        comments.append(f"# unit {x} -> {g}")
    out = text + "\n".join(comments) + "\n"
    if args.output:
        Path(args.output).write_text(out)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(out)
    return OK


def cmd_hm(args) -> int:
    space = load_space(args.space)
    report = verify_hm(space)
    print("\n".join(render_report(report)))
    return VIOLATION if report["failures"] else OK


def cmd_dframe(args) -> int:
    space = load_space(args.space)
    d = dO(space)
    f = f_functor(d.slice)
    rep = d.report()
    lines = [
        f"elements = {rep['elements']}",
        f"con = {rep['con']}",
        f"tot = {rep['tot']}",
        f"violations = {','.join(rep['violations']) or 'none'}",
        f"f_functor.con = {len(f.con)}",
        f"f_functor.tot = {len(f.tot)}",
        f"f_functor.violations = {','.join(validate_dframe(f)) or 'none'}",
    ]
    print("\n".join(lines))
    return VIOLATION if rep["violations"] or validate_dframe(f) else OK


def cmd_catalog(args) -> int:
    names = [args.name] if args.name else list(catalog.CATALOG)
    status = OK
    for name in names:
        if name not in catalog.CATALOG:
            raise InputError(f"no catalog space named {name!r}")
        e = catalog.CATALOG[name]
        if args.show:
            sys.stdout.write(format_space(e.space))
            print(f"# {e.note}")
            continue
        from .search import PREDICATES

        bad = [k for k, v in e.expected.items() if PREDICATES[k](e.space) != v]
        state = "ok" if not bad else "MISMATCH " + ",".join(bad)
        print(f"{name} = {len(e.space)} points; {state}; {e.note}")
        if bad:
            status = VIOLATION
    return status


def cmd_search(args) -> int:
    if not 1 <= args.points <= MAX_POINTS:
        raise InputError(f"--points must be between 1 and {MAX_POINTS}")
    if not args.check_implications and not args.find:
        raise InputError("search needs --check-implications and/or --find")
    status = OK
    if args.check_implications:
        res = audit_all(args.points, args.jobs)
        print(f"spaces = {res.spaces}")
        print(f"violations = {len(res.violations)}")
        for v in res.violations:
            print(f"violation = {v}")
        if res.violations:
            status = VIOLATION
    if args.find:
        try:
            results = find_minimal(args.find, args.points, args.jobs)
        except ExprError as e:
            raise InputError(str(e)) from None
        print(f"find = {args.find}")
        for w in results:
            print(f"points = {w.points}; matches = {w.matches}; classes = {len(w.classes)}")
        last = results[-1]
        for i, s in enumerate(last.classes):
            s = s.renamed(f"witness{i}")
            hits = last.catalog_matches(s)
            sys.stdout.write(format_space(s))
            if hits:
                print(f"# homeomorphic to {', '.join(hits)}")
    return status


def cmd_oracle(args) -> int:
    space = load_space(args.space)
    checks = run_oracles(space, args.max_elements)
    for c in checks:
        tail = f" ({c.detail})" if c.detail else ""
        print(f"{c.name} = {c.status}{tail}")
    return VIOLATION if any(c.status == DISAGREE for c in checks) else OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bitop", description="Bitopological spaces as B-valued topological spaces on finite carriers.")
    p.add_argument("--format", choices=("kv", "text"), default="kv", help="kv: key = value lines (stable); text: tables")
    p.add_argument("--max-elements", type=int, default=64, help="bound for brute-force enumerations (default 64)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_space(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("space", help="catalog name or space file")
        sp.set_defaults(func=fn)
        return sp

    with_space("classify", cmd_classify, "decide every separation axiom")
    with_space("order", cmd_order, "print the specialization B-order")
    with_space("sobriety", cmd_sobriety, "B-points, d-points and sobriety")
    s = with_space("sobrify", cmd_sobrify, "write the B-sobrification")
    s.add_argument("-o", "--output", help="write the space file here instead of stdout")
    with_space("hm", cmd_hm, "check the Hofmann-Mislove correspondence")
    with_space("dframe", cmd_dframe, "validate the d-frame of opens")
    with_space("oracle", cmd_oracle, "run every dual-path cross-check")

    c = sub.add_parser("catalog", help="list or verify the named example spaces")
    c.add_argument("name", nargs="?")
    c.add_argument("--show", action="store_true", help="print the space files")
    c.set_defaults(func=cmd_catalog)

    s = sub.add_parser("search", help="exhaustive search over small spaces")
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--check-implications", action="store_true")
    s.add_argument("--find", metavar="EXPR", help='formula such as "T1 & !cwT0"')
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    s.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, TopologyError, CarrierError, BoundExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
