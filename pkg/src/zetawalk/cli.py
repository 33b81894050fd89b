"""File-driven command-line front end.

Verbs: ``verify`` (all four expressions plus agreement verdicts), ``ihara``
(the vertex determinant data), ``hashimoto``/``euler``/``exp`` (single
expressions), ``spectrum`` (direct vs factorization-derived walk spectra),
and ``fixtures`` (write a bundled instance).  Reports are byte-deterministic
for the exact-arithmetic commands.

Exit codes: 0 success / all agree, 1 mathematical mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from .digraph import GraphError, GraphMode
from .instances import (
    FIXTURES,
    ParseError,
    fixture_text,
    instance_digraph,
    instance_weights,
    load_instance,
)
from .walk import (
    WalkError,
    grover_spectrum_via_zeta,
    grover_transition,
    spectrum_deviation,
    szegedy_spectrum_via_factorization,
    szegedy_transition,
    unitarity_defect,
)
from .zeta import (
    ZetaReport,
    euler_truncated,
    exponential_truncated,
    hashimoto,
    ihara_digraph,
    ihara_graph,
    verify_expressions,
)
from .linalg import eigenvalues_numeric

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2


def exit_code_for_report(report: ZetaReport) -> int:
    return EXIT_OK if report.all_agree else EXIT_MISMATCH


class _Report:
    """Accumulates either plain lines or key=value records."""

    def __init__(self, records: bool):
        self.records = records
        self.lines: list[str] = []

    def add(self, key: str, value) -> None:
        if self.records:
            self.lines.append(f"{key}={value}")
        else:
            self.lines.append(f"{key} {value}")

    def verdict(self, name: str, agree: bool, detail=None) -> None:
        status = "agree" if agree else ("MISMATCH" + (f" {detail}" if detail else ""))
        if self.records:
            self.lines.append(f"verdict.{name}={status}")
        else:
            self.lines.append(f"VERDICT {name} {status}")

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _instance_header(rep: _Report, command: str, inst) -> None:
    rep.add("command", command)
    rep.add("instance", inst.source)
    rep.add("mode", inst.mode.value)
    rep.add("vertices", inst.vertex_count)
    if inst.mode is GraphMode.SYMMETRIC:
        rep.add("edges", len(inst.pairs))
    rep.add("arcs", inst.arc_count)


def _load(ns):
    inst = load_instance(ns.instance)
    return inst, instance_digraph(inst), instance_weights(inst)


def cmd_verify(ns) -> tuple[str, int]:
    inst, d, w = _load(ns)
    report = verify_expressions(d, w, ns.order)
    rep = _Report(ns.format == "records")
    _instance_header(rep, "verify", inst)
    rep.add("order", report.order)
    rep.add("exponential", report.exponential.render())
    rep.add("euler", report.euler.render())
    rep.add("hashimoto", report.hashimoto.render())
    rep.add("hashimoto-series", report.hashimoto_series.render())
    rep.add("ihara", report.ihara_rhs.render())
    for v in report.verdicts:
        rep.verdict(v.name, v.agree, v.detail)
    rep.add("overall", "agree" if report.all_agree else "MISMATCH")
    return rep.text(), exit_code_for_report(report)


def _matrix_entries(rep: _Report, name: str, mat) -> None:
    for i in range(mat.rows):
        for j in range(mat.cols):
            rep.add(f"{name}[{i}][{j}]", mat[i, j].render() if hasattr(mat[i, j], "render") else mat[i, j])


def cmd_ihara(ns) -> tuple[str, int]:
    inst, d, w = _load(ns)
    rep = _Report(ns.format == "records")
    _instance_header(rep, "ihara", inst)
    if d.mode is GraphMode.GENERAL:
        data = ihara_digraph(d, w, check=False)
        for pair, f in zip(data.pairs, data.f_factors):
            rep.add(f"f({pair.u},{pair.v})", f.render())
        _matrix_entries(rep, "A", data.a)
        _matrix_entries(rep, "D", data.d_ul)
        _matrix_entries(rep, "X", data.x_ul)
    else:
        data = ihara_graph(d, w, check=False)
        rep.add("prefactor-exponent", data.prefactor_exponent)
        _matrix_entries(rep, "A", data.a_g)
        _matrix_entries(rep, "D", data.d_g)
        rep.add("vertex-det", data.vertex_det.render())
    rep.add("rhs", data.rhs.render())
    rep.add("hashimoto", data.hashimoto.render())
    rep.verdict("hashimoto-vs-ihara", data.agree)
    rep.add("overall", "agree" if data.agree else "MISMATCH")
    return rep.text(), EXIT_OK if data.agree else EXIT_MISMATCH


def cmd_hashimoto(ns) -> tuple[str, int]:
    inst, d, w = _load(ns)
    rep = _Report(ns.format == "records")
    _instance_header(rep, "hashimoto", inst)
    rep.add("hashimoto", hashimoto(d, w).render())
    return rep.text(), EXIT_OK


def cmd_euler(ns) -> tuple[str, int]:
    inst, d, w = _load(ns)
    order = ns.order if ns.order is not None else max(10, d.arc_count)
    rep = _Report(ns.format == "records")
    _instance_header(rep, "euler", inst)
    rep.add("order", order)
    rep.add("euler", euler_truncated(d, w, order).render())
    return rep.text(), EXIT_OK


def cmd_exp(ns) -> tuple[str, int]:
    inst, d, w = _load(ns)
    order = ns.order if ns.order is not None else max(10, d.arc_count)
    rep = _Report(ns.format == "records")
    _instance_header(rep, "exp", inst)
    rep.add("order", order)
    rep.add("exponential", exponential_truncated(d, w, order).render())
    return rep.text(), EXIT_OK


def _render_complex(z: complex) -> str:
    return f"{z.real:+.10f}{z.imag:+.10f}j"


def _sorted_spectrum(values) -> list[complex]:
    return sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag))


def cmd_spectrum(ns) -> tuple[str, int]:
    inst = load_instance(ns.instance)
    if inst.mode is not GraphMode.SYMMETRIC:
        raise WalkError("spectrum requires a graph-mode instance")
    g = instance_digraph(inst)
    rep = _Report(ns.format == "records")
    _instance_header(rep, "spectrum", inst)
    rep.add("walk", ns.walk)
    if ns.walk == "grover":
        u = grover_transition(g)
        derived = grover_spectrum_via_zeta(g, ns.tolerance)
    else:
        if not inst.prob:
            raise WalkError("szegedy spectrum needs prob lines in the instance")
        u = szegedy_transition(g, inst.prob)
        calib = szegedy_spectrum_via_factorization(g, inst.prob, ns.tolerance)
        rep.add("constants", f"c={calib.c} d={calib.d}")
        derived = calib.spectrum
    direct = eigenvalues_numeric(u)
    rep.add("unitarity-defect", f"{unitarity_defect(u):.3e}")
    for i, z in enumerate(_sorted_spectrum(direct)):
        rep.add(f"direct[{i}]", _render_complex(z))
    for i, z in enumerate(_sorted_spectrum(derived)):
        rep.add(f"derived[{i}]", _render_complex(z))
    deviation = spectrum_deviation(direct, derived)
    rep.add("max-deviation", f"{deviation:.3e}")
    agree = deviation <= ns.tolerance
    rep.verdict("spectrum", agree)
    rep.add("overall", "agree" if agree else "MISMATCH")
    return rep.text(), EXIT_OK if agree else EXIT_MISMATCH


def cmd_fixtures(ns) -> tuple[str, int]:
    try:
        text = fixture_text(ns.name)
    except KeyError:
        known = "\n".join(sorted(FIXTURES))
        sys.stderr.write(f"unknown fixture {ns.name!r}; available fixtures:\n{known}\n")
        return "", EXIT_INPUT
    if ns.output:
        with open(ns.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return "", EXIT_OK
    return text, EXIT_OK


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("order must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetawalk",
        description="weighted zeta functions of multi-digraphs and quantum-walk spectra",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, order=False, tolerance=False):
        p.add_argument("instance", help="instance file path")
        p.add_argument("--format", choices=("text", "records"), default="text")
        if order:
            p.add_argument(
                "--order", type=_positive_int, default=None, help="series truncation order"
            )
        if tolerance:
            p.add_argument("--tolerance", type=float, default=1e-8)

    p = sub.add_parser("verify", help="compute all expressions and compare")
    common(p, order=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ihara", help="vertex determinant data and identity check")
    common(p)
    p.set_defaults(func=cmd_ihara)

    p = sub.add_parser("hashimoto", help="det(I - t*M)")
    common(p)
    p.set_defaults(func=cmd_hashimoto)

    p = sub.add_parser("euler", help="prime-cycle product, truncated")
    common(p, order=True)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("exp", help="exponential expression, truncated")
    common(p, order=True)
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("spectrum", help="walk spectrum, direct vs derived")
    p.add_argument("instance", help="graph-mode instance file path")
    p.add_argument("walk", choices=("grover", "szegedy"))
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("fixtures", help="write a bundled instance file")
    p.add_argument("name", help="fixture name")
    p.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        text, code = ns.func(ns)
    except (ParseError, GraphError, WalkError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
