"""Command-line entry point: ``sectortaper <command> ...``.

Exit codes: 0 success, 2 parse/usage error, 3 reduction impossible,
4 verification mismatch, 1 any other failure.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ParseError, ReductionError, SectorTaperError, SizeLimitError
from .fermion import jordan_wigner
from .formats import detect_format, parse_fham, parse_psum, serialize_fham, serialize_psum, write_atomic
from .models import MODEL_PARAMETERS, bench_projector_growth, build_model
from .pauli import PauliSum
from .projectors import SpinResolved, TotalNumber, project, sector_projector
from .reduction import reduce_full
from .verification import isospectral_check, sector_map, spectrum

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_IRREDUCIBLE = 3
EXIT_MISMATCH = 4


class UsageError(SectorTaperError):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        write_atomic(path, text)


def _modes(text: str | None, option: str) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise UsageError(f"{option} expects a comma-separated list of mode numbers, got {text!r}") from None


def parse_sector(text: str, n_qubits: int, up_modes=None, down_modes=None):
    """``N=<n>`` or ``up=<n>,down=<n>``; spin mode sets default to the two halves."""
    fields = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or not value.strip().lstrip("-").isdigit():
            raise UsageError(f"bad sector specification {text!r}")
        fields[key] = int(value)
    if set(fields) == {"N"}:
        spec = TotalNumber(fields["N"])
    elif set(fields) == {"up", "down"}:
        half = SpinResolved.halves(n_qubits, fields["up"], fields["down"])
        spec = SpinResolved(
            up_modes if up_modes is not None else half.up_modes,
            fields["up"],
            down_modes if down_modes is not None else half.down_modes,
            fields["down"],
        )
    else:
        raise UsageError(f"bad sector specification {text!r}; use N=<n> or up=<n>,down=<n>")
    try:
        spec.validate(n_qubits)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return spec


def _load_pauli(path: str | None) -> PauliSum:
    return parse_psum(_read(path))


def cmd_jw(args) -> int:
    doc = parse_fham(_read(args.input))
    _write(args.output, serialize_psum(jordan_wigner(doc.hamiltonian)))
    return EXIT_OK


def cmd_project(args) -> int:
    h = _load_pauli(args.input)
    spec = parse_sector(
        args.sector, h.n_qubits, _modes(args.up_modes, "--up-modes"), _modes(args.down_modes, "--down-modes")
    )
    _write(args.output, serialize_psum(project(h, sector_projector(h.n_qubits, spec))))
    return EXIT_OK


def cmd_reduce(args) -> int:
    text = _read(args.input)
    if detect_format(text) == "fham":
        h = parse_fham(text).hamiltonian
        n = h.n_modes
    else:
        h = parse_psum(text)
        n = h.n_qubits
    spec = parse_sector(
        args.sector, n, _modes(args.up_modes, "--up-modes"), _modes(args.down_modes, "--down-modes")
    )
    try:
        result, trace = reduce_full(
            h, spec, paper_exact_reorder=args.paper_exact_reorder, max_qubits=args.matrix_limit
        )
    except ReductionError as exc:
        if exc.trace is not None:
            _emit_trace(args.trace, exc.trace.render())
        raise
    _write(args.output, serialize_psum(result))
    _emit_trace(args.trace, trace.render())
    if trace.qubits_removed == 0 and trace.stop_reason == "not-reducible":
        print("error: no qubit could be removed (support exceeds half the space)", file=sys.stderr)
        return EXIT_IRREDUCIBLE
    return EXIT_OK


def _emit_trace(path: str | None, text: str):
    if path is None:
        sys.stderr.write(text)
    else:
        write_atomic(path, text)


def cmd_spectrum(args) -> int:
    h = _load_pauli(args.input)
    print(spectrum(h, args.matrix_limit).format(args.digits))
    return EXIT_OK


def cmd_verify(args) -> int:
    full = _load_pauli(args.full)
    reduced = _load_pauli(args.reduced)
    report = isospectral_check(full, reduced, tol=args.tol, max_qubits=args.matrix_limit)
    sys.stdout.write(report.render())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_sector_map(args) -> int:
    table = sector_map(args.k, args.matrix_limit)
    if args.states:
        table = table.filtered(_modes(args.states, "--states"))
    sys.stdout.write(table.render())
    return EXIT_OK


def cmd_model(args) -> int:
    params = {p: getattr(args, p) for p in MODEL_PARAMETERS[args.name]}
    try:
        model = build_model(args.name, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = serialize_psum(model) if isinstance(model, PauliSum) else serialize_fham(model)
    _write(args.output, text)
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        rows = bench_projector_growth(args.max_k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print("K N terms 2^K")
    for row in rows:
        print(*row)
    return EXIT_OK


def _add_sector_options(p):
    p.add_argument("--sector", required=True, help="N=<n> or up=<n>,down=<n>")
    p.add_argument("--up-modes", help="comma-separated spin-up modes (default: first half)")
    p.add_argument("--down-modes", help="comma-separated spin-down modes (default: second half)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sectortaper",
        description="Reduce qubit counts of fermionic Hamiltonians by sector projection and shift operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jw", help="Jordan-Wigner transform a .fham file")
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_jw)

    p = sub.add_parser("project", help="project a .psum onto a particle-number sector")
    p.add_argument("input", nargs="?")
    _add_sector_options(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("reduce", help="run the full project/reorder/reduce pipeline")
    p.add_argument("input", nargs="?")
    _add_sector_options(p)
    p.add_argument("--paper-exact-reorder", action="store_true", help="use the fixed three-qubit reorder operator")
    p.add_argument("--matrix-limit", type=int, default=None, metavar="K")
    p.add_argument("-o", "--output")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("spectrum", help="print the eigenvalues of a .psum")
    p.add_argument("input", nargs="?")
    p.add_argument("--digits", type=int, default=10)
    p.add_argument("--matrix-limit", type=int, default=None, metavar="K")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="check iso-spectrality of a full and a reduced .psum")
    p.add_argument("full")
    p.add_argument("reduced")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--matrix-limit", type=int, default=None, metavar="K")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sector-map", help="print the electron-count block map")
    p.add_argument("k", type=int)
    p.add_argument("--states", help="keep only these basis states (comma-separated)")
    p.add_argument("--matrix-limit", type=int, default=None, metavar="K")
    p.set_defaults(func=cmd_sector_map)

    p = sub.add_parser("model", help="emit a bundled model Hamiltonian")
    models = p.add_subparsers(dest="name", required=True)
    m = models.add_parser("hubbard2", help="two-site Hubbard model (.fham)")
    m.add_argument("--t", type=float, required=True)
    m.add_argument("--U", type=float, required=True)
    m.add_argument("-o", "--output")
    m = models.add_parser("h2", help="minimal-basis H2 from orbital integrals (.psum)")
    for name in MODEL_PARAMETERS["h2"]:
        m.add_argument(f"--{name}", type=float, required=True)
    m.add_argument("-o", "--output")
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("bench-projector", help="projector term counts versus 2^K")
    p.add_argument("--max-k", type=int, default=10)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ReductionError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IRREDUCIBLE
    except (SectorTaperError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
