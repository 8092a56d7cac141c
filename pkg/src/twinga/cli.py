"""Command-line client for the experiment service.

Subcommands build a request, send it to the HTTP API and persist the
returned CSV documents.  Without ``--server`` the request is served by
an in-process application instance, so batch runs need no deployment;
with it, any running service answers instead.

Exit codes: 0 success, 1 runtime/transport failure, 2 usage or
configuration error.
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

import httpx

from .benchmarks import PRESETS
from .errors import ConfigError, GaError
from .experiment import DEFAULT_SEED, DEFAULT_TRIALS, OVERRIDE_KEYS, build_config

_SCALAR_KEYS = ("function", "mode", "trials", "seed", "out")


@dataclass
class RunSpec:
    """Resolved request parameters; None means "not set anywhere"."""

    function: str | None = None
    mode: str | None = None
    trials: int | None = None
    seed: int | None = None
    output_dir: str | None = None
    overrides: dict = field(default_factory=dict)


def _parse_int(key: str, value: str, where: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{where}: {key} must be an integer, got {value!r}") from None


def load_config(path: str | Path) -> RunSpec:
    """Parse a ``key = value`` config file (one pair per line, # comments).

    Scalar keys: function, mode, trials, seed, out.  Every GA and twin
    parameter is addressable through the override keys accepted by
    ``--set``.  Unknown keys are rejected with their line number.
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    spec = RunSpec()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{path}:{lineno}"
        if "=" not in line:
            raise ConfigError(f"{where}: expected 'key = value', got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not value:
            raise ConfigError(f"{where}: empty value for key {key!r}")
        if key == "function":
            spec.function = value
        elif key == "mode":
            spec.mode = value
        elif key == "trials":
            spec.trials = _parse_int(key, value, where)
        elif key == "seed":
            spec.seed = _parse_int(key, value, where)
        elif key == "out":
            spec.output_dir = value
        elif key in OVERRIDE_KEYS:
            spec.overrides[key] = value
        else:
            valid = ", ".join(_SCALAR_KEYS + OVERRIDE_KEYS)
            raise ConfigError(f"{where}: unknown key {key!r} (valid keys: {valid})")
    return spec


def _parse_set(pair: str) -> tuple[str, str]:
    key, sep, value = pair.partition("=")
    if not sep or not key.strip() or not value.strip():
        raise argparse.ArgumentTypeError(f"--set expects key=value, got {pair!r}")
    return key.strip(), value.strip()


def _resolve_spec(args: argparse.Namespace) -> RunSpec:
    """Merge sources by precedence: preset defaults < config file < --set < flags."""
    spec = load_config(args.config) if args.config else RunSpec()
    for key, value in args.set or []:
        spec.overrides[key] = value
    if args.function is not None:
        spec.function = args.function
    if getattr(args, "mode", None) is not None:
        spec.mode = args.mode
    if args.trials is not None:
        spec.trials = args.trials
    if args.seed is not None:
        spec.seed = args.seed
    if args.out is not None:
        spec.output_dir = args.out
    if spec.trials is None:
        spec.trials = DEFAULT_TRIALS
    if spec.seed is None:
        spec.seed = DEFAULT_SEED
    if spec.output_dir is None:
        spec.output_dir = "."
    return spec


def _make_client(server: str | None):
    if server:
        return httpx.Client(base_url=server, timeout=httpx.Timeout(600.0))
    import warnings

    with warnings.catch_warnings():
        # the in-process transport is an implementation detail; keep its
        # import-time deprecation chatter off the CLI's stderr
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app, raise_server_exceptions=False)


def _post(client, path: str, payload: dict):
    try:
        return client.post(path, json=payload)
    except httpx.HTTPError as exc:
        raise RuntimeError(f"request failed: {exc}") from exc


def _write_files(files: list[dict], out_dir: str) -> list[Path]:
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for item in files:
        path = directory / item["name"]
        path.write_bytes(item["content"].encode("utf-8"))
        written.append(path)
    return written


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _summary_line(summary: dict) -> str:
    return (
        f"{summary['function']} {summary['mode']} "
        f"n_trials={summary['n_trials']} "
        f"mean_best={summary['mean_best']:.6g} "
        f"max_best={summary['max_best']:.6g} "
        f"cv_percent={summary['cv_percent']:.6g} "
        f"mean_convergence_gen={summary['mean_convergence_gen']:.6g}"
    )


_TABLE_STATS = ("mean_best", "max_best", "cv_percent", "mean_convergence_gen")


def _comparison_table(comparison: dict, trials: int, seed: int) -> str:
    lines = [f"function: {comparison['function']} (trials={trials}, seed={seed})"]
    lines.append(f"  {'statistic':<22}{'SGA':>14}{'ATGA':>14}")
    for stat in _TABLE_STATS:
        sga = comparison["sga"][stat]
        atga = comparison["atga"][stat]
        lines.append(f"  {stat:<22}{sga:>14.6g}{atga:>14.6g}")
    return "\n".join(lines)


def command_run(args: argparse.Namespace) -> int:
    try:
        spec = _resolve_spec(args)
        if spec.function is None:
            return _fail("a function is required (--function or config file)", 2)
        if spec.mode is None:
            return _fail("a mode is required (--mode or config file)", 2)
        build_config(spec.function, spec.mode, seed=spec.seed, overrides=spec.overrides)
    except GaError as exc:
        return _fail(str(exc), 2)
    payload = {
        "function": spec.function,
        "mode": spec.mode,
        "trials": spec.trials,
        "seed": spec.seed,
        "overrides": spec.overrides,
    }
    try:
        with _make_client(args.server) as client:
            response = _post(client, "/api/run", payload)
    except RuntimeError as exc:
        return _fail(str(exc), 1)
    if response.status_code != 200:
        return _handle_error_response(response)
    body = response.json()
    written = _write_files(body["files"], spec.output_dir)
    print(_summary_line(body["summary"]))
    for path in written:
        print(f"wrote {path}")
    return 0


def command_compare(args: argparse.Namespace) -> int:
    try:
        spec = _resolve_spec(args)
        if args.all:
            functions = sorted(PRESETS)
        elif spec.function is not None:
            functions = [spec.function]
        else:
            return _fail("a function is required (--function, --all, or config file)", 2)
        for function in functions:
            build_config(function, "sga", seed=spec.seed, overrides=spec.overrides)
    except GaError as exc:
        return _fail(str(exc), 2)
    payload = {
        "functions": functions,
        "trials": spec.trials,
        "seed": spec.seed,
        "overrides": spec.overrides,
    }
    try:
        with _make_client(args.server) as client:
            response = _post(client, "/api/compare", payload)
    except RuntimeError as exc:
        return _fail(str(exc), 1)
    if response.status_code != 200:
        return _handle_error_response(response)
    body = response.json()
    for comparison in body["comparisons"]:
        print(_comparison_table(comparison, spec.trials, spec.seed))
    written = _write_files(body["files"], spec.output_dir)
    for path in written:
        print(f"wrote {path}")
    return 0


def _handle_error_response(response) -> int:
    try:
        detail = response.json().get("detail", response.text)
    except ValueError:
        detail = response.text
    code = 2 if 400 <= response.status_code < 500 else 1
    return _fail(f"server returned {response.status_code}: {detail}", code)


def command_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("twinga.service.app:app", host=args.host, port=args.port)
    return 0


def _add_request_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--function", help="benchmark preset name")
    parser.add_argument("--trials", type=int, help=f"repeated runs (default {DEFAULT_TRIALS})")
    parser.add_argument("--seed", type=int, help=f"master seed (default {DEFAULT_SEED})")
    parser.add_argument("--config", help="key = value config file; flags override it")
    parser.add_argument("--out", help="directory for result CSVs (default .)")
    parser.add_argument(
        "--set",
        action="append",
        type=_parse_set,
        metavar="KEY=VALUE",
        help=f"override a GA/twin parameter; keys: {', '.join(OVERRIDE_KEYS)}",
    )
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twinga",
        description="Run twin-operator GA benchmark experiments and export CSV results.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_parser = sub.add_parser("run", help="run one function in one mode")
    run_parser.add_argument("--mode", choices=["sga", "atga"], help="GA variant to run")
    _add_request_flags(run_parser)
    run_parser.set_defaults(handler=command_run)

    compare_parser = sub.add_parser("compare", help="run both modes and tabulate them")
    compare_parser.add_argument("--all", action="store_true", help="compare every preset")
    _add_request_flags(compare_parser)
    compare_parser.set_defaults(handler=command_compare)

    serve_parser = sub.add_parser("serve", help="start the HTTP service")
    serve_parser.add_argument("--host", default="127.0.0.1")
    serve_parser.add_argument("--port", type=int, default=8000)
    serve_parser.set_defaults(handler=command_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
