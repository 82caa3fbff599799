"""CSV ingestion, JSON reports, and the command line.

Wire format: a header ``dmu,in_<name>,...,out_<name>,...`` with input
columns before output columns, then one row per unit. Cells accept
decimals and fraction literals like ``13/4``. Reports are emitted as
compact JSON with a fixed field order and 12-decimal rounding, so the
same inputs and flags always produce the same bytes.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence, Union

from ._version import __version__
from .efficiency import compute_scores, is_mpss, radial, theta as theta_score, phi as phi_score
from .errors import (
    AnalysisError,
    EmptyDatasetError,
    NoInputColumnsError,
    NoOutputColumnsError,
    ParseError,
    RaggedRowsError,
    ReportWriteError,
    UnclassifiableError,
)
from .model import Dataset, Delta, Numeric, Orientation, Tolerance, validate_dataset
from .oracle import OracleConfig, verify_dataset, verify_random
from .response import build_response
from .rts import InefficientUnit, RtsReport, classify_all
from .scale import UNBOUNDED, scale_ratios
from .technology import find_dominating


def read_csv(source: Union[str, Path], exact: bool = False) -> Dataset:
    """Parse and validate a dataset CSV.

    With ``exact`` the entries stay rational; otherwise they are converted
    to doubles.
    """
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc}") from exc
    return read_csv_text(text, exact=exact)


def read_csv_text(text: str, exact: bool = False) -> Dataset:
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise EmptyDatasetError("no header row")
    header = [cell.strip() for cell in rows[0]]
    if not header or header[0] != "dmu":
        raise ParseError(f"first column must be 'dmu', got {header[:1]!r}")
    in_cols = [k for k, name in enumerate(header) if name.startswith("in_")]
    out_cols = [k for k, name in enumerate(header) if name.startswith("out_")]
    if not in_cols:
        raise NoInputColumnsError("header declares no in_ columns")
    if not out_cols:
        raise NoOutputColumnsError("header declares no out_ columns")
    if len(in_cols) + len(out_cols) != len(header) - 1:
        bad = [
            name
            for name in header[1:]
            if not (name.startswith("in_") or name.startswith("out_"))
        ]
        raise ParseError(f"unrecognized columns {bad!r}")
    if max(in_cols) > min(out_cols):
        raise ParseError("in_ columns must precede out_ columns")

    names: list[str] = []
    inputs: list[list[Numeric]] = []
    outputs: list[list[Numeric]] = []
    for rownum, row in enumerate(rows[1:], start=2):
        cells = [cell.strip() for cell in row]
        if len(cells) != len(header):
            raise RaggedRowsError(
                f"row {rownum} has {len(cells)} cells, header has {len(header)}"
            )
        names.append(cells[0])

        def parse(col: int) -> Numeric:
            textval = cells[col]
            try:
                value = Fraction(textval)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(
                    f"row {rownum}, column {header[col]!r}: bad number {textval!r}"
                ) from exc
            return value if exact else float(value)

        inputs.append([parse(c) for c in in_cols])
        outputs.append([parse(c) for c in out_cols])
    return validate_dataset(names, inputs, outputs)


def write_csv(d: Dataset, destination: Union[str, Path, None] = None) -> str:
    """Serialize a dataset with fraction literals, for exact round-trips."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["dmu"]
        + [f"in_{k + 1}" for k in range(d.m)]
        + [f"out_{k + 1}" for k in range(d.s)]
    )
    for o in range(d.n):
        writer.writerow(
            [d.names[o]]
            + [str(Fraction(v)) for v in d.inputs[o]]
            + [str(Fraction(v)) for v in d.outputs[o]]
        )
    return _deliver(buf.getvalue(), destination)


def _deliver(text: str, destination: Union[str, Path, None]) -> str:
    if destination is not None:
        try:
            Path(destination).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise ReportWriteError(f"cannot write {destination}: {exc}") from exc
    return text


def _digest(d: Dataset) -> str:
    h = hashlib.sha256()
    for o in range(d.n):
        line = "|".join(
            [
                d.names[o],
                ",".join(str(Fraction(v)) for v in d.inputs[o]),
                ",".join(str(Fraction(v)) for v in d.outputs[o]),
            ]
        )
        h.update(line.encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()


def _num(v: Any) -> Any:
    """JSON form of a score: 12-decimal rounding, 'inf' for the symbol."""
    if v is UNBOUNDED:
        return "inf"
    r = round(float(v), 12)
    i = int(r)
    return i if i == r else r


def _header(d: Dataset, tol: Tolerance, projected: bool = False) -> dict:
    return {
        "dataset_digest": _digest(d),
        "tolerance": tol.eps,
        "version": __version__,
        "projected": projected,
    }


def _score_maps(d: Dataset, scores) -> tuple[dict, dict, dict, dict]:
    tvals = {reg.value: _num(scores.theta[reg].value) for reg in Delta}
    pvals = {reg.value: _num(scores.phi[reg].value) for reg in Delta}
    twit = {reg.value: d.names[scores.theta[reg].witness] for reg in Delta}
    pwit = {reg.value: d.names[scores.phi[reg].witness] for reg in Delta}
    return tvals, pvals, twit, pwit


def _classified_units(d: Dataset, tol: Tolerance, project: bool):
    """Per unit: (dataset used, report-or-marker, projected flag)."""
    out = []
    for o in range(d.n):
        if find_dominating(d, Delta.VRS, o) is None:
            item = classify_all_one(d, o, tol)
            out.append((d, item, False))
            continue
        if project:
            grow = phi_score(d, Delta.VRS, o).value
            projected_outputs = tuple(
                tuple(grow * v for v in row) if k == o else row
                for k, row in enumerate(d.outputs)
            )
            d_proj = Dataset(d.names, d.inputs, projected_outputs)
            if find_dominating(d_proj, Delta.VRS, o) is None:
                out.append((d_proj, classify_all_one(d_proj, o, tol), True))
                continue
            w = find_dominating(d, Delta.VRS, o)
            out.append(
                (d, InefficientUnit(o, theta_score(d, Delta.VRS, o).value, w), True)
            )
            continue
        w = find_dominating(d, Delta.VRS, o)
        out.append(
            (d, InefficientUnit(o, theta_score(d, Delta.VRS, o).value, w), False)
        )
    return out


def classify_all_one(d: Dataset, o: int, tol: Tolerance) -> RtsReport:
    from .rts import OneSidedRts, grs as grs_fn, left_rts, right_rts

    return RtsReport(
        reference=o,
        one_sided=OneSidedRts(right_rts(d, o, tol), left_rts(d, o, tol)),
        grs=grs_fn(d, o, tol),
        sigma=scale_ratios(d, o, tol),
        mpss=is_mpss(d, o, tol),
        scores=compute_scores(d, o),
    )


def _report_record(
    d: Dataset, item, projected: bool, include_flag: bool
) -> dict:
    o = item.reference
    rec: dict[str, Any] = {"name": d.names[o]}
    rec["efficient"] = isinstance(item, RtsReport)
    if include_flag:
        rec["projected"] = projected
    scores = item.scores if isinstance(item, RtsReport) else compute_scores(d, o)
    tvals, pvals, twit, pwit = _score_maps(d, scores)
    rec["theta"] = tvals
    rec["phi"] = pvals
    rec["mpss"] = is_mpss(d, o) if not isinstance(item, RtsReport) else item.mpss
    if isinstance(item, RtsReport):
        rec["grs"] = item.grs.value
        rec["right_rts"] = item.one_sided.right.value
        rec["left_rts"] = item.one_sided.left.value
        rec["sigma_plus"] = _num(item.sigma.sigma_plus)
        rec["sigma_minus"] = _num(item.sigma.sigma_minus)
        rec["witnesses"] = {
            "theta": twit,
            "phi": pwit,
            "sigma_plus": _name_or_none(d, item.sigma.plus_witness),
            "sigma_minus": _name_or_none(d, item.sigma.minus_witness),
            "dominating": None,
        }
    else:
        rec["grs"] = None
        rec["right_rts"] = None
        rec["left_rts"] = None
        rec["sigma_plus"] = None
        rec["sigma_minus"] = None
        rec["witnesses"] = {
            "theta": twit,
            "phi": pwit,
            "sigma_plus": None,
            "sigma_minus": None,
            "dominating": d.names[item.witness],
        }
    return rec


def _name_or_none(d: Dataset, j: Union[int, None]) -> Union[str, None]:
    return None if j is None else d.names[j]


def build_report_document(
    d: Dataset, tol: Tolerance = Tolerance(), project: bool = False
) -> dict:
    units = [
        _report_record(dd, item, flag, project)
        for dd, item, flag in _classified_units(d, tol, project)
    ]
    return {"header": _header(d, tol, project), "units": units}


def _classify_record(d: Dataset, item, projected: bool, include_flag: bool) -> dict:
    o = item.reference
    rec: dict[str, Any] = {"name": d.names[o]}
    rec["efficient"] = isinstance(item, RtsReport)
    if include_flag:
        rec["projected"] = projected
    if isinstance(item, RtsReport):
        rec["theta_vrs"] = _num(item.scores.theta[Delta.VRS].value)
        rec["mpss"] = item.mpss
        rec["grs"] = item.grs.value
        rec["right_rts"] = item.one_sided.right.value
        rec["left_rts"] = item.one_sided.left.value
        rec["sigma_plus"] = _num(item.sigma.sigma_plus)
        rec["sigma_minus"] = _num(item.sigma.sigma_minus)
        rec["witnesses"] = {
            "sigma_plus": _name_or_none(d, item.sigma.plus_witness),
            "sigma_minus": _name_or_none(d, item.sigma.minus_witness),
            "dominating": None,
        }
    else:
        rec["theta_vrs"] = _num(item.theta_vrs)
        rec["mpss"] = is_mpss(d, o)
        rec["grs"] = None
        rec["right_rts"] = None
        rec["left_rts"] = None
        rec["sigma_plus"] = None
        rec["sigma_minus"] = None
        rec["witnesses"] = {
            "sigma_plus": None,
            "sigma_minus": None,
            "dominating": d.names[item.witness],
        }
    return rec


def build_classification_document(
    d: Dataset, tol: Tolerance = Tolerance(), project: bool = False
) -> dict:
    units = [
        _classify_record(dd, item, flag, project)
        for dd, item, flag in _classified_units(d, tol, project)
    ]
    return {"header": _header(d, tol, project), "units": units}


def build_efficiency_document(
    d: Dataset, delta: Delta, orientation: Orientation, tol: Tolerance = Tolerance()
) -> dict:
    scores = []
    for o in range(d.n):
        sc = radial(d, delta, orientation, o)
        scores.append(
            {
                "name": d.names[o],
                "value": _num(sc.value),
                "witness": d.names[sc.witness],
                "delta": _num(sc.delta),
            }
        )
    return {
        "header": _header(d, tol),
        "technology": delta.value,
        "orientation": orientation.value,
        "scores": scores,
    }


def build_ratios_document(
    d: Dataset, name: str, tol: Tolerance = Tolerance(), project: bool = False
) -> dict:
    o = d.index_of(name)
    used, projected = d, False
    if project and find_dominating(d, Delta.VRS, o) is not None:
        grow = phi_score(d, Delta.VRS, o).value
        outputs = tuple(
            tuple(grow * v for v in row) if k == o else row
            for k, row in enumerate(d.outputs)
        )
        used, projected = Dataset(d.names, d.inputs, outputs), True
    ratios = scale_ratios(used, o, tol)
    return {
        "header": _header(d, tol, projected),
        "name": name,
        "projected": projected,
        "sigma_plus": _num(ratios.sigma_plus),
        "sigma_minus": _num(ratios.sigma_minus),
        "witnesses": {
            "sigma_plus": _name_or_none(d, ratios.plus_witness),
            "sigma_minus": _name_or_none(d, ratios.minus_witness),
        },
    }


def response_csv(d: Dataset, name: str, alpha_max: Union[float, None] = None) -> str:
    """Two-column step list of a unit's response function."""
    r = build_response(d, d.index_of(name))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alpha_threshold", "beta_value"])
    for t, v in r.steps:
        if alpha_max is not None and t > alpha_max:
            break
        writer.writerow([_num(t), _num(v)])
    return buf.getvalue()


def write_report(document: dict, destination: Union[str, Path, None] = None) -> str:
    """Serialize a report deterministically; optionally write it out."""
    text = json.dumps(document, separators=(",", ":"), allow_nan=False) + "\n"
    return _deliver(text, destination)


# ---------------------------------------------------------------------------
# command line


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="fdhscale",
        description="Free disposal hull efficiency, response functions, "
        "and returns-to-scale classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, input_required: bool = True) -> None:
        p.add_argument("--input", required=input_required, help="dataset CSV path")
        p.add_argument("--eps", type=float, default=1e-9, help="classification tolerance")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument(
            "--project",
            action="store_true",
            help="classify dominated units after expanding their outputs onto "
            "the frontier (labeled; departs from the plain definitions)",
        )

    p = sub.add_parser("efficiency", help="radial scores for every unit")
    common(p)
    p.add_argument(
        "--technology",
        choices=[reg.value for reg in Delta],
        default=Delta.VRS.value,
    )
    p.add_argument(
        "--orientation",
        choices=[orient.value for orient in Orientation],
        default=Orientation.INPUT.value,
    )
    p.set_defaults(func=_cmd_efficiency)

    p = sub.add_parser("classify", help="returns-to-scale classes for every unit")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("ratios", help="scale ratios of one unit")
    common(p)
    p.add_argument("--dmu", required=True, help="unit name")
    p.set_defaults(func=_cmd_ratios)

    p = sub.add_parser("response", help="step list of one unit's response function")
    common(p)
    p.add_argument("--dmu", required=True, help="unit name")
    p.add_argument("--alpha-max", type=float, default=None, help="cap listed thresholds")
    p.add_argument("--emit", default=None, help="CSV output path")
    p.set_defaults(func=_cmd_response)

    p = sub.add_parser("report", help="full classification report")
    common(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("verify", help="cross-check fast paths against the sweeps")
    common(p, input_required=False)
    p.add_argument("--grid-steps", type=int, default=10_000, help="sweep density")
    p.add_argument("--seed", type=int, default=42, help="random dataset seed")
    p.add_argument("--trials", type=int, default=10, help="random datasets to check")
    p.set_defaults(func=_cmd_verify)

    return parser


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out is not None:
        _deliver(text, args.out)
    else:
        sys.stdout.write(text)


def _cmd_efficiency(args: argparse.Namespace) -> int:
    d = read_csv(args.input)
    doc = build_efficiency_document(
        d, Delta(args.technology), Orientation(args.orientation), Tolerance(args.eps)
    )
    _emit(args, write_report(doc))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    d = read_csv(args.input)
    doc = build_classification_document(d, Tolerance(args.eps), args.project)
    _emit(args, write_report(doc))
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    d = read_csv(args.input)
    doc = build_report_document(d, Tolerance(args.eps), args.project)
    _emit(args, write_report(doc))
    return 0


def _cmd_ratios(args: argparse.Namespace) -> int:
    d = read_csv(args.input)
    doc = build_ratios_document(d, args.dmu, Tolerance(args.eps), args.project)
    _emit(args, write_report(doc))
    return 0


def _cmd_response(args: argparse.Namespace) -> int:
    d = read_csv(args.input)
    text = response_csv(d, args.dmu, args.alpha_max)
    if args.emit is not None:
        _deliver(text, args.emit)
    elif args.out is not None:
        _deliver(text, args.out)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    tol = Tolerance(args.eps)
    cfg = OracleConfig(grid_steps=args.grid_steps, seed=args.seed)
    results = []
    if args.input:
        results.extend(verify_dataset(read_csv(args.input, exact=True), tol, cfg))
    if args.trials > 0:
        batch = verify_random(args.trials, args.seed, tol, cfg)
        if results:
            merged = {res.name: res for res in results}
            for res in batch:
                merged[res.name] = (
                    merged[res.name].merge(res) if res.name in merged else res
                )
            results = list(merged.values())
        else:
            results = batch
    if not results:
        print("error: nothing to verify; give --input or --trials > 0", file=sys.stderr)
        return 1
    width = max(len(res.name) for res in results) + 2
    lines = [
        f"{res.name.ljust(width)}{'PASS' if res.passed else 'FAIL'}  {res.detail}"
        for res in results
    ]
    ok = all(res.passed for res in results)
    lines.append(f"{'overall'.ljust(width)}{'PASS' if ok else 'FAIL'}")
    _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 3


def main(argv: Union[Sequence[str], None] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except UnclassifiableError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 3
    except AnalysisError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
