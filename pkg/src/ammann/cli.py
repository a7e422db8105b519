"""Command-line front end: a thin client of the HTTP service.

Without --server the service app runs in-process behind an ASGI test
transport, so no socket is needed; with --server the same requests go to a
remote instance.  Math flags are exact rational strings; floats are never
parsed for math input.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .serialize import dumps_canonical

CANONICAL_SELECTORS = ("oblate-canonical", "prolate-canonical")


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server, timeout=600.0)
    from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _die(message: str, code: int = 2):
    print(f"ammann: error: {message}", file=sys.stderr)
    raise SystemExit(code)


def _check(resp):
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        _die(f"service returned {resp.status_code}: {detail}")
    return resp.json()


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        _die(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        _die(f"{path} is not valid JSON: {exc}")


def _write_text(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_rational(text: str, flag: str) -> str:
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        _die(f"{flag} must be an exact rational like '8' or '3/2', got {text!r}")
    return text


def _resolve_tile(client, selector: str, patch_path: str | None) -> dict:
    if selector in CANONICAL_SELECTORS:
        tile_type = selector.split("-")[0]
        return _check(client.get(f"/tiles/canonical/{tile_type}"))
    try:
        index = int(selector)
    except ValueError:
        _die(
            f"tile selector must be 'oblate-canonical', 'prolate-canonical' "
            f"or a patch index, got {selector!r}"
        )
    if patch_path is None:
        _die("an index tile selector needs --patch FILE")
    data = _load_json(patch_path)
    tiles = data.get("tiles")
    if not isinstance(tiles, list) or not (0 <= index < len(tiles)):
        _die(f"patch index {index} out of range (patch has {len(tiles or [])} tiles)")
    return tiles[index]


def cmd_gen(client, args) -> int:
    body = {"radius": _parse_rational(args.radius, "--radius")}
    if args.shift is not None:
        body["shift"] = [_parse_rational(s, "--shift") for s in args.shift]
    data = _check(client.post("/patch/generate", json=body))
    _write_text(args.out, dumps_canonical(data))
    print(f"generated {len(data['tiles'])} tiles", file=sys.stderr)
    return 0


def cmd_verify(client, args) -> int:
    patch = _load_json(args.patch)
    data = _check(client.post("/patch/verify", json=patch))
    print(f"tiles: {data['n_tiles']}")
    print(f"violations: {len(data['violations'])}")
    for v in data["violations"]:
        print(f"  [{v['check']}] tiles {v['tiles']}: {v['detail']}")
    return 0 if data["ok"] else 1


def cmd_stats(client, args) -> int:
    patch = _load_json(args.patch)
    data = _check(client.post("/patch/stats", json=patch))
    print(f"oblate:  {data['n_oblate']}")
    print(f"prolate: {data['n_prolate']}")
    if data["ratio_infinite"]:
        print("ratio:   inf")
    else:
        print(f"ratio:   {data['ratio']:.6f}")
    return 0


def cmd_export_obj(client, args) -> int:
    patch = _load_json(args.patch)
    data = _check(client.post("/patch/export-obj", json=patch))
    _write_text(args.out, data["obj"])
    return 0


def cmd_delzant(client, args) -> int:
    tile = _resolve_tile(client, args.tile, args.patch)
    data = _check(client.post("/delzant", json={"tile": tile}))
    sys.stdout.write(data["report"])
    if args.json_out:
        _write_text(args.json_out, dumps_canonical(data["result"]))
    return 0


def cmd_canon(client, args) -> int:
    tile = _resolve_tile(client, args.tile, args.patch)
    data = _check(client.post("/canon", json={"tile": tile}))
    sys.stdout.write(data["report"])
    return 0


def cmd_compare(client, args) -> int:
    tile_a = _resolve_tile(client, args.a, args.patch)
    tile_b = _resolve_tile(client, args.b, args.patch)
    data = _check(client.post("/compare", json={"a": tile_a, "b": tile_b}))
    sys.stdout.write(data["report"])
    return 0


def cmd_group(client, args) -> int:
    data = _check(client.get("/group"))
    print(f"group order: {data['order']}")
    print(f"rotations:   {data['rotations']}")
    print(f"star invariant under every element: {'yes' if data['star_invariant'] else 'no'}")
    print(
        "unit star of Q invariant under every element: "
        f"{'yes' if data['unit_star_invariant'] else 'no'}"
    )
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ammann",
        description="Ammann tiling patches and their toric reduction data, exactly.",
    )
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    parser.add_argument("--version", action="version", version=f"ammann {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a patch and write its JSON")
    p.add_argument("--radius", required=True, help="cutoff in units of sigma (rational)")
    p.add_argument("--shift", nargs=3, metavar=("SX", "SY", "SZ"), help="internal shift (rationals)")
    p.add_argument("--out", help="output file (default stdout)")

    p = sub.add_parser("verify", help="validate a patch file; exit 0 iff clean")
    p.add_argument("patch", help="patch JSON file")

    p = sub.add_parser("stats", help="tile counts and type ratio of a patch file")
    p.add_argument("patch", help="patch JSON file")

    p = sub.add_parser("export-obj", help="export a patch file as a Wavefront OBJ mesh")
    p.add_argument("patch", help="patch JSON file")
    p.add_argument("--out", help="output file (default stdout)")

    p = sub.add_parser("delzant", help="reduction data report for a tile")
    p.add_argument("--tile", required=True, help="oblate-canonical | prolate-canonical | index")
    p.add_argument("--patch", help="patch JSON file for index selectors")
    p.add_argument("--json-out", help="also write the full result as JSON")

    p = sub.add_parser("canon", help="rigid motion mapping a tile onto its canonical tile")
    p.add_argument("--tile", required=True, help="oblate-canonical | prolate-canonical | index")
    p.add_argument("--patch", help="patch JSON file for index selectors")

    p = sub.add_parser("compare", help="compare the reduction invariants of two tiles")
    p.add_argument("--a", required=True, help="first tile selector")
    p.add_argument("--b", required=True, help="second tile selector")
    p.add_argument("--patch", help="patch JSON file for index selectors")

    sub.add_parser("group", help="icosahedral group order and invariance diagnostics")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


_HANDLERS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "stats": cmd_stats,
    "export-obj": cmd_export_obj,
    "delzant": cmd_delzant,
    "canon": cmd_canon,
    "compare": cmd_compare,
    "group": cmd_group,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "serve":
        return cmd_serve(args)
    with _client(args.server) as client:
        return _HANDLERS[args.command](client, args)


if __name__ == "__main__":
    sys.exit(main())
