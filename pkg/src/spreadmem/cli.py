"""Command-line front end.

Every subcommand reads a memory file, calls the library, and prints a plain
text report.  Reports are deterministic: no timestamps, fixed ordering.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import core, generator, search, spread
from .errors import SpreadMemError
from .formats import (
    format_fragment,
    format_matrix,
    format_order,
    format_vector,
    parse_fragment,
    parse_order,
    read_coordinates,
    read_memories,
)

CSV_HEADER = ["label", "target", "fragment", "order", "seed_count", "minimal", "generated"]


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _record_line(rec: search.GeneratorRecord) -> str:
    line = f"{rec.label}  {format_order(rec.order)}  fragment={format_fragment(rec.fragment)}"
    line += f"  minimal={_yes(rec.minimal)}"
    if not rec.generated:
        line += "  generated=no"
    return line


def write_records_csv(records, path) -> None:
    """Comma-separated dump, one row per generator record, header first."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in records:
            w.writerow([
                r.label,
                format_vector(r.target),
                format_fragment(r.fragment),
                format_order(r.order),
                r.order.seed_count,
                _yes(r.minimal),
                _yes(r.generated),
            ])


def _targets(memories, which):
    if which is None:
        return [(f"memory#{k}", m) for k, m in enumerate(memories, start=1)]
    if not 1 <= which <= len(memories):
        raise SpreadMemError(f"--memory {which} is outside 1..{len(memories)}")
    return [(f"memory#{which}", memories[which - 1])]


def cmd_train(args, out):
    t = core.train(read_memories(args.memories))
    out.write("T =\n" + format_matrix(t))
    out.write("B =\n" + format_matrix(generator.decompose(t)))


def cmd_verify(args, out):
    mems = read_memories(args.memories)
    t = core.train(mems)
    count = 0
    for label, m in _targets(mems, None):
        ok = core.is_stored(t, m)
        count += ok
        out.write(f"{label}  {format_vector(m)}  stored={_yes(ok)}\n")
    out.write(f"{count}/{len(mems)} memories stored\n")


def cmd_recall(args, out):
    t = core.train(read_memories(args.memories))
    n = t.shape[0]
    frag = parse_fragment(args.fragment, n)
    if args.order is None:
        result, trace = generator.recall(generator.decompose(t), frag)
    else:
        result, trace = generator.ordered_recall(t, frag, parse_order(args.order, n))
    out.write(format_vector(result) + "\n")
    for k, step in enumerate(trace.steps):
        out.write(f"step {k}: {format_vector(step)}\n")


def cmd_generators(args, out):
    mems = read_memories(args.memories)
    b = generator.decompose(core.train(mems))
    records = [
        search.minimal_prefix_generator(b, m, label=label)
        for label, m in _targets(mems, args.memory)
    ]
    out.write(", ".join(format_order(r.order) for r in records) + "\n")
    for r in records:
        out.write(_record_line(r) + "\n")
    if args.csv:
        write_records_csv(records, args.csv)


def cmd_onebit(args, out):
    mems = read_memories(args.memories)
    t = core.train(mems)
    records = []
    for label, m in _targets(mems, args.memory):
        found = search.find_one_bit_generators(t, m, max_n=args.max_n, label=label)
        out.write(f"{label}  {format_vector(m)}  one-bit generators: {len(found)}\n")
        for r in found:
            out.write("  " + _record_line(r) + "\n")
        records += found
    if args.csv:
        write_records_csv(records, args.csv)

    policy = search.ascending_policy
    if args.policy == "spread":
        coords = read_coordinates(args.coords) if args.coords else None
        policy = spread.spread_policy(t, coords)
    report = search.one_bit_capacity(t, mems, policy, cap=args.cap)
    out.write(f"capacity ({args.policy} policy): {report.distinct_count} distinct "
              f"of {len(report.entries)} seeds, bound {report.bound}\n")
    for e in report.entries:
        out.write(f"  {format_order(e.order)}  seed={e.value:+d}  -> "
                  f"{format_vector(e.result)}  {e.classification}\n")


def cmd_census(args, out):
    mems = read_memories(args.memories)
    t = core.train(mems)
    c = core.fixed_point_census(t, mems, cap=args.cap)
    for name in ("stored", "complements", "spurious", "nonfixed_trained"):
        vecs = getattr(c, name)
        out.write(f"{name}: {len(vecs)}\n")
        for v in vecs:
            out.write(f"  {format_vector(v)}\n")
    if args.spread_classes:
        classes = search.local_spread_census(t, max_n=args.max_n)
        out.write(f"single-seed classes: {len(classes)}\n")
        for v in classes:
            out.write(f"  {format_vector(v)}\n")


def cmd_spread(args, out):
    t = core.train(read_memories(args.memories))
    coords = read_coordinates(args.coords) if args.coords else None
    res = spread.local_spread(t, args.seed, args.value, args.size, coords, args.rule)
    result = spread.spread_then_recall(t, args.seed, args.value, args.size, coords, args.rule)
    out.write(f"fragment: {format_fragment(res.fragment)}\n")
    out.write(f"visit order: {' '.join(map(str, res.visit_order))}\n")
    out.write(f"stalled: {_yes(res.stalled)}\n")
    out.write(f"recalled: {format_vector(result)}\n")


def cmd_graph(args, out):
    t = core.train(read_memories(args.memories))
    out.write(spread.build_graph(t).to_dot())


def _seed_value(text: str) -> int:
    if text in ("1", "+1"):
        return 1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError(f"expected +1 or -1, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spreadmem",
        description="Hebbian memories recalled from fragments and single neurons.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--memories", "-m", required=True, help="memory file")
        sp.add_argument("--out", "-o", help="write the report here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    add("train", cmd_train, "print the weight matrix and its spread matrix")
    add("verify", cmd_verify, "check every memory is a fixed point")

    sp = add("recall", cmd_recall, "complete a clamped fragment")
    sp.add_argument("--fragment", "-f", required=True,
                    help="'1 -1' (prefix) or '1:+1,3:-1'; use --fragment=... for a leading -1")
    sp.add_argument("--order", help="update order such as '(4)1325'")

    sp = add("generators", cmd_generators, "shortest prefix fragment per memory")
    sp.add_argument("--memory", type=int, help="only this memory (1-based)")
    sp.add_argument("--csv", help="also write records as CSV")

    sp = add("onebit", cmd_onebit, "single-neuron generators over all update orders")
    sp.add_argument("--memory", type=int, help="only this memory (1-based)")
    sp.add_argument("--max-n", type=int, default=search.DEFAULT_SEARCH_MAX_N)
    sp.add_argument("--cap", type=int, default=core.DEFAULT_CENSUS_CAP)
    sp.add_argument("--policy", choices=("ascending", "spread"), default="ascending")
    sp.add_argument("--coords", help="neuron coordinates for the spread policy")
    sp.add_argument("--csv", help="also write records as CSV")

    sp = add("census", cmd_census, "enumerate all fixed points")
    sp.add_argument("--cap", type=int, default=core.DEFAULT_CENSUS_CAP)
    sp.add_argument("--spread-classes", action="store_true",
                    help="also list single-seed outcomes up to complement and cyclic shift")
    sp.add_argument("--max-n", type=int, default=search.DEFAULT_SEARCH_MAX_N)

    sp = add("spread", cmd_spread, "grow a fragment from one neuron, then recall")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--value", type=_seed_value, default=1)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--coords", help="file of 'index x y' lines")
    sp.add_argument("--rule", choices=spread.RULES, default="strongest")

    add("graph", cmd_graph, "interconnection graph in DOT format")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        args.func(args, buf)
        if args.out:
            Path(args.out).write_text(buf.getvalue(), encoding="utf-8")
        else:
            sys.stdout.write(buf.getvalue())
    except (SpreadMemError, OSError) as exc:
        print(f"spreadmem: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
