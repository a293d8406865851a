"""Command line front end; a thin client of the HTTP service.

By default requests run against an in-process instance of the service (an
ASGI transport, no server involved); --server http://host:port targets a
running one instead.  Files are parsed and output rendered locally, so exit
codes and formatting do not depend on the transport.

Exit codes: 0 success, 1 transport or internal failure, 2 matrix file parse
error, 3 invalid exponent, 4 output not writable, 5 verification failure.
"""
from __future__ import annotations

import argparse
import asyncio
import os
import sys
from types import SimpleNamespace
from typing import Optional

import httpx

from .estimate import DEFAULT_SEED
from .exponents import ExponentError, parse_exponent
from .io import MatrixParseError, format_number, load_matrix, scan_csv

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_EXPONENT = 3
EXIT_WRITE = 4
EXIT_VERIFY = 5

SEED_ENV = "OPNORM_SEED"


class TransportError(RuntimeError):
    pass


def resolve_seed(flag_value: Optional[int]) -> int:
    """--seed beats the OPNORM_SEED environment variable beats the default."""
    if flag_value is not None:
        return flag_value
    env = os.environ.get(SEED_ENV)
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env, 0)
    except ValueError:
        raise MatrixParseError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _post(server: Optional[str], path: str, payload: dict) -> dict:
    if server:
        try:
            resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=60.0)
        except httpx.HTTPError as e:
            raise TransportError(f"request to {server} failed: {e}") from None
    else:
        from .service.app import app

        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://opnorm.local") as client:
                return await client.post(path, json=payload)

        resp = asyncio.run(go())
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise TransportError(f"{path} returned {resp.status_code}: {detail}")
    return resp.json()


def _matrix_payload(path: str) -> dict:
    A = load_matrix(path)
    return {"entries": [[(float(z.real), float(z.imag)) for z in row] for row in A]}


def _check_exponent(text: str, which: str) -> str:
    # validated locally so a bad exponent never leaves the process
    try:
        parse_exponent(text)
    except ExponentError as e:
        raise ExponentError(f"invalid {which}: {e}") from None
    return text


def _common_payload(args) -> dict:
    return {
        "tol": args.tol,
        "seed": resolve_seed(args.seed),
    }


def _norm_payload(args, include_witness: bool) -> dict:
    payload = _common_payload(args)
    payload.update({
        "matrix": _matrix_payload(args.file),
        "p": _check_exponent(args.p, "--p"),
        "q": _check_exponent(args.q, "--q"),
        "include_witness": include_witness,
    })
    return payload


def _print_witness(witness) -> None:
    print("witness:")
    for re_part, im_part in witness:
        print(f"{format_number(re_part)},{format_number(im_part)}")


def cmd_norm(args) -> int:
    data = _post(args.server, "/norm", _norm_payload(args, args.witness))
    line = f"{format_number(data['value'])} {data['status']} {data['method']}"
    if data.get("lo") is not None and data.get("hi") is not None:
        line += f" lo={format_number(data['lo'])} hi={format_number(data['hi'])}"
    print(line)
    if args.witness:
        if data.get("witness"):
            _print_witness(data["witness"])
        else:
            print("witness: unavailable")
    return EXIT_OK


def cmd_witness(args) -> int:
    data = _post(args.server, "/norm", _norm_payload(args, True))
    print(f"value {format_number(data['value'])} {data['status']}")
    if data.get("witness"):
        _print_witness(data["witness"])
        return EXIT_OK
    print("witness: unavailable")
    return EXIT_FAILURE


def cmd_scan(args) -> int:
    payload = _common_payload(args)
    payload.update({
        "matrix": _matrix_payload(args.file),
        "resolution": args.resolution,
    })
    data = _post(args.server, "/scan", payload)
    cells = [SimpleNamespace(**c) for c in data["cells"]]
    text = scan_csv(cells)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        print(f"cannot write {args.out}: {e.strerror or e}", file=sys.stderr)
        return EXIT_WRITE
    print(f"wrote {len(cells)} cells to {args.out}")
    return EXIT_OK


def cmd_classify(args) -> int:
    payload = {"matrix": _matrix_payload(args.file), "tol": args.tol}
    data = _post(args.server, "/classify", payload)
    print(data["description"])
    return EXIT_OK


def cmd_verify(args) -> int:
    payload = _common_payload(args)
    payload.update({
        "matrix": _matrix_payload(args.file),
        "suite": args.suite,
    })
    data = _post(args.server, "/verify", payload)
    checks = data["checks"]
    for check in checks:
        word = "PASS" if check["passed"] else "FAIL"
        print(f"{word} {check['name']}: {check['detail']}")
    n_pass = sum(1 for c in checks if c["passed"])
    print(f"{n_pass}/{len(checks)} checks passed")
    return EXIT_OK if n_pass == len(checks) else EXIT_VERIFY


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opnorm",
                                     description="operator (p,q)-norms of small complex matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, with_file=True):
        if with_file:
            sp.add_argument("file", help="matrix file (.csv real, .json complex)")
        sp.add_argument("--server", default=None,
                        help="base URL of a running service (default: in-process)")
        sp.add_argument("--tol", type=float, default=1e-9,
                        help="classification and certification tolerance")
        sp.add_argument("--seed", type=int, default=None,
                        help=f"estimator seed (default: ${SEED_ENV} or {DEFAULT_SEED})")

    sp = sub.add_parser("norm", help="compute ||A||_{p,q}")
    add_common(sp)
    sp.add_argument("--p", required=True, help='domain exponent ("inf", decimal, or "a/b")')
    sp.add_argument("--q", required=True, help="codomain exponent")
    sp.add_argument("--witness", action="store_true", help="also print a maximizing vector")
    sp.set_defaults(func=cmd_norm)

    sp = sub.add_parser("witness", help="print a maximizer for ||A||_{p,q}")
    add_common(sp)
    sp.add_argument("--p", required=True)
    sp.add_argument("--q", required=True)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("scan", help="tabulate the norm over a reciprocal-exponent grid")
    add_common(sp)
    sp.add_argument("--resolution", type=int, default=8, help="grid steps per axis (>= 2)")
    sp.add_argument("--out", default="scan.csv", help="output CSV path")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("classify", help="report the structural class of a matrix")
    add_common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="run the self-check suites")
    add_common(sp)
    sp.add_argument("--suite", default="all",
                    choices=["interpolation", "strictness", "cross-check", "all"])
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MatrixParseError as e:
        print(str(e), file=sys.stderr)
        return EXIT_PARSE
    except ExponentError as e:
        print(str(e), file=sys.stderr)
        return EXIT_EXPONENT
    except TransportError as e:
        print(str(e), file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
