"""Command-line front end: generate libraries, test clicks, render states,
keep a record store, and serve the HTTP session."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import service
from .geometry import PartitionSpec
from .raster import build_library, load_library, render_state, save_library, write_pbm
from .session import hit_canvas
from .state import bit_toggle, format_bits, format_decimal, parse_state
from .store import RecordStore


def _load_spec(path: str) -> PartitionSpec:
    with open(path, encoding="utf-8") as handle:
        return PartitionSpec.from_dict(json.load(handle))


def _cmd_gen_library(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    library = build_library(spec)
    save_library(library, args.out)
    print(f"wrote {2 + library.sector_count} files to {args.out}")
    return 0


def _cmd_hit(args: argparse.Namespace) -> int:
    library = load_library(args.lib)
    mask = parse_state(args.state, library.sector_count)
    sector = hit_canvas(library.spec, args.x, args.y)
    if sector is None:
        print("sector: outside")
    else:
        mask = bit_toggle(mask, sector)
        print(f"sector: {sector}")
    print(f"state: {format_bits(mask)}")
    print(f"state_int: {format_decimal(mask)}")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    library = load_library(args.lib)
    mask = parse_state(args.state, library.sector_count)
    Path(args.out).write_bytes(write_pbm(render_state(library, mask)))
    return 0


def _cmd_store_save(args: argparse.Namespace) -> int:
    store = RecordStore(args.file, width=args.width)
    store.save(args.name, parse_state(args.state, store.width))
    return 0


def _cmd_store_query(args: argparse.Namespace) -> int:
    store = RecordStore(args.file, width=args.width)
    for name in store.query(args.sector):
        print(name)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    try:
        service.serve(args.lib, port=args.port)
    except KeyboardInterrupt:
        pass
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sectormap",
        description="Hit testing, highlighting and bitmask state for "
                    "canvases partitioned by concentric ellipses and radial slices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen-library", help="rasterize skeleton and sector masks")
    gen.add_argument("--spec", required=True, help="partition spec JSON file")
    gen.add_argument("--out", required=True, help="output library directory")
    gen.set_defaults(func=_cmd_gen_library)

    hit = sub.add_parser("hit", help="resolve a canvas click and toggle the state")
    hit.add_argument("--lib", required=True, help="library directory")
    hit.add_argument("--x", required=True, type=float, help="canvas x in px")
    hit.add_argument("--y", required=True, type=float, help="canvas y in px")
    hit.add_argument("--state", required=True, help="current state, binary or decimal")
    hit.set_defaults(func=_cmd_hit)

    render = sub.add_parser("render", help="reconstruct the display image from a state")
    render.add_argument("--lib", required=True, help="library directory")
    render.add_argument("--state", required=True, help="state, binary or decimal")
    render.add_argument("--out", required=True, help="output PBM file")
    render.set_defaults(func=_cmd_render)

    store = sub.add_parser("store", help="named record store of states")
    store_sub = store.add_subparsers(dest="store_command", required=True)

    save = store_sub.add_parser("save", help="insert or replace a record")
    save.add_argument("--file", required=True, help="store file path")
    save.add_argument("--name", required=True, help="record name")
    save.add_argument("--state", required=True, help="state, binary or decimal")
    save.add_argument("--width", type=int, default=24, help="sector count (default 24)")
    save.set_defaults(func=_cmd_store_save)

    query = store_sub.add_parser("query", help="list records containing a sector")
    query.add_argument("--file", required=True, help="store file path")
    query.add_argument("--sector", required=True, type=int, help="sector id (1-based)")
    query.add_argument("--width", type=int, default=24, help="sector count (default 24)")
    query.set_defaults(func=_cmd_store_query)

    serve = sub.add_parser("serve", help="serve the HTTP session over a library")
    serve.add_argument("--lib", required=True, help="library directory")
    serve.add_argument("--port", required=True, type=int, help="TCP port")
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
