"""Report rows, parameter sweeps and their table/CSV/JSON renderings."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from twofano.classify import Witness, classify
from twofano.errors import PreconditionError
from twofano.grammar import BundleNode, CINode, GrassNode, ProductNode, parse_spec
from twofano.ring import format_rational

CSV_COLUMNS = (
    "spec",
    "dim",
    "fano",
    "fano_index",
    "two_fano",
    "ch2_strict",
    "boundary_flag",
    "oracle",
    "agree",
)
FAMILIES = ("complete-intersection", "grassmannian", "product", "p1-bundle")
FORMATS = ("table", "csv", "json")
DEFAULT_CAP = 10**6
# classification only needs c_1 and c_2 of the tangent bundle
CLASSIFY_DEPTH = 2


@dataclass(frozen=True)
class ReportRow:
    spec: str
    dim: int
    fano: bool
    fano_index: Fraction
    two_fano: bool
    ch2_strict: bool
    boundary_flag: bool
    oracle: bool
    agree: bool
    witnesses: tuple = None

    def discrepancy(self):
        """Why oracle and engine disagree, or ``None`` when they agree."""
        if self.agree is None or self.agree:
            return None
        if self.boundary_flag:
            return "boundary"
        if self.dim < 2:
            return "no-surfaces"
        if " w=" in self.spec:
            return "weighted"
        return "other"


def row_for_node(node, verbose=False):
    space = node.build(CLASSIFY_DEPTH)
    record = classify(space)
    oracle = node.oracle()
    return ReportRow(
        spec=str(node),
        dim=record.dimension,
        fano=record.is_fano,
        fano_index=record.fano_index,
        two_fano=record.is_two_fano,
        ch2_strict=record.is_ch2_strictly_positive,
        boundary_flag=record.boundary_flag,
        oracle=oracle,
        agree=None if oracle is None else oracle == record.is_two_fano,
        witnesses=record.witness_pairings if verbose else None,
    )


def run_classify(spec_text, verbose=False):
    return row_for_node(parse_spec(spec_text), verbose)


def _row_worker(args):
    spec_text, verbose = args
    return run_classify(spec_text, verbose)


# sweeps -----------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    family: str
    max_n: int = 10
    max_r: int = 3
    min_d: int = 2
    max_d: int = 6
    max_k: int = 4
    max_weight: int = 1
    max_c1l: int = 3
    output_format: str = "table"
    boundary_only: bool = False
    verbose: bool = False
    cap: int = DEFAULT_CAP
    jobs: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown family '{self.family}', expected one of {FAMILIES}")
        if self.output_format not in FORMATS:
            raise PreconditionError(f"unknown format '{self.output_format}'")
        for name in ("max_n", "max_r", "min_d", "max_d", "max_k", "max_weight", "cap", "jobs"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} must be positive")
        if self.max_c1l < 0:
            raise PreconditionError("max_c1l must be >= 0")


def _multisets(lo, hi, size):
    return combinations_with_replacement(range(lo, hi + 1), size)


def _multiset_count(lo, hi, size):
    values = hi - lo + 1
    if values <= 0:
        return 1 if size == 0 else 0
    return math.comb(values + size - 1, size)


def _product_factors(config):
    factors = [CINode(m) for m in range(1, config.max_n + 1)]
    factors += [
        GrassNode(k, n)
        for k in range(2, config.max_k + 1)
        for n in range(2 * k, config.max_n + 1)
    ]
    return factors


def count_cases(config):
    """Number of parameter tuples a sweep visits, computed without enumerating."""
    if config.family == "complete-intersection":
        total = 0
        for n in range(1, config.max_n + 1):
            weights = _multiset_count(1, config.max_weight, n + 1)
            eqs = sum(
                _multiset_count(config.min_d, config.max_d, r)
                for r in range(1, min(config.max_r, n - 1) + 1)
            )
            total += weights * eqs
        return total
    if config.family == "grassmannian":
        return sum(
            max(0, config.max_n - max(2 * k, 2) + 1) for k in range(1, config.max_k + 1)
        )
    if config.family == "product":
        m = len(_product_factors(config))
        return m * (m + 1) // 2
    return max(0, config.max_n - 1) * config.max_d * (config.max_c1l + 1)


def iter_cases(config):
    """Spec nodes of a sweep in lexicographic parameter order."""
    if config.family == "complete-intersection":
        for n in range(1, config.max_n + 1):
            for weights in _multisets(1, config.max_weight, n + 1):
                w = None if config.max_weight == 1 else weights
                for r in range(1, min(config.max_r, n - 1) + 1):
                    for degrees in _multisets(config.min_d, config.max_d, r):
                        yield CINode(n, w, degrees)
    elif config.family == "grassmannian":
        for k in range(1, config.max_k + 1):
            for n in range(max(2 * k, 2), config.max_n + 1):
                yield GrassNode(k, n)
    elif config.family == "product":
        factors = _product_factors(config)
        for i, a in enumerate(factors):
            for b in factors[i:]:
                yield ProductNode(a, b)
    else:
        for n in range(2, config.max_n + 1):
            for d in range(1, config.max_d + 1):
                for c in range(config.max_c1l + 1):
                    yield BundleNode(CINode(n, None, (d,)), c)


def run_sweep(config):
    count = count_cases(config)
    if count > config.cap:
        raise PreconditionError(f"sweep has {count} cases, above the cap of {config.cap}")
    specs = [str(node) for node in iter_cases(config)]
    jobs = [(s, config.verbose) for s in specs]
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            rows = list(pool.map(_row_worker, jobs, chunksize=max(1, len(jobs) // (4 * config.jobs))))
    else:
        rows = [_row_worker(job) for job in jobs]
    if config.boundary_only:
        rows = [row for row in rows if row.boundary_flag]
    return rows


def summarize(rows):
    by_class = {"boundary": 0, "no-surfaces": 0, "weighted": 0, "other": 0}
    for row in rows:
        cls = row.discrepancy()
        if cls is not None:
            by_class[cls] += 1
    with_oracle = [row for row in rows if row.oracle is not None]
    return {
        "rows": len(rows),
        "with_oracle": len(with_oracle),
        "agree": sum(1 for row in with_oracle if row.agree),
        "disagree": sum(1 for row in with_oracle if not row.agree),
        "boundary_rows": sum(1 for row in rows if row.boundary_flag),
        "two_fano": sum(1 for row in rows if row.two_fano),
        "disagree_by_class": by_class,
    }


# rendering ----------------------------------------------------------------


def _fmt_bool(value):
    return "" if value is None else ("true" if value else "false")


def _parse_bool(text):
    if text == "":
        return None
    if text not in ("true", "false"):
        raise ValueError(f"not a boolean: {text!r}")
    return text == "true"


def _fmt_q(value):
    return "" if value is None else format_rational(value)


def _parse_q(text):
    return None if text == "" else Fraction(text)


def _fmt_witnesses(witnesses):
    return ";".join(f"{w.kind}:{w.label}={format_rational(w.value)}" for w in witnesses)


def _parse_witnesses(text):
    if not text:
        return ()
    out = []
    for item in text.split(";"):
        head, value = item.rsplit("=", 1)
        kind, label = head.split(":", 1)
        out.append(Witness(kind, label, Fraction(value)))
    return tuple(out)


def _cells(row):
    return [
        row.spec,
        str(row.dim),
        _fmt_bool(row.fano),
        _fmt_q(row.fano_index),
        _fmt_bool(row.two_fano),
        _fmt_bool(row.ch2_strict),
        _fmt_bool(row.boundary_flag),
        _fmt_bool(row.oracle),
        _fmt_bool(row.agree),
    ]


def _summary_lines(summary):
    by_class = " ".join(f"{k}={v}" for k, v in summary["disagree_by_class"].items())
    head = " ".join(f"{k}={v}" for k, v in summary.items() if k != "disagree_by_class")
    return [f"# summary: {head}", f"# disagreements: {by_class}"]


def render_csv(rows, summary=None):
    verbose = any(row.witnesses is not None for row in rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS + (("witnesses",) if verbose else ()))
    for row in rows:
        cells = _cells(row)
        if verbose:
            cells.append(_fmt_witnesses(row.witnesses or ()))
        writer.writerow(cells)
    text = buf.getvalue()
    if summary is not None:
        text += "\n".join(_summary_lines(summary)) + "\n"
    return text


def parse_csv(text):
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None:
        return []
    if tuple(header[: len(CSV_COLUMNS)]) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {header}")
    verbose = len(header) > len(CSV_COLUMNS)
    rows = []
    for cells in reader:
        rows.append(
            ReportRow(
                spec=cells[0],
                dim=int(cells[1]),
                fano=_parse_bool(cells[2]),
                fano_index=_parse_q(cells[3]),
                two_fano=_parse_bool(cells[4]),
                ch2_strict=_parse_bool(cells[5]),
                boundary_flag=_parse_bool(cells[6]),
                oracle=_parse_bool(cells[7]),
                agree=_parse_bool(cells[8]),
                witnesses=_parse_witnesses(cells[9]) if verbose else None,
            )
        )
    return rows


def row_to_dict(row):
    out = {
        "spec": row.spec,
        "dim": row.dim,
        "fano": row.fano,
        "fano_index": None if row.fano_index is None else format_rational(row.fano_index),
        "two_fano": row.two_fano,
        "ch2_strict": row.ch2_strict,
        "boundary_flag": row.boundary_flag,
        "oracle": row.oracle,
        "agree": row.agree,
    }
    if row.witnesses is not None:
        out["witnesses"] = [
            {"kind": w.kind, "label": w.label, "value": format_rational(w.value)}
            for w in row.witnesses
        ]
    return out


def row_from_dict(data):
    witnesses = data.get("witnesses")
    if witnesses is not None:
        witnesses = tuple(Witness(w["kind"], w["label"], Fraction(w["value"])) for w in witnesses)
    return ReportRow(
        spec=data["spec"],
        dim=data["dim"],
        fano=data["fano"],
        fano_index=None if data["fano_index"] is None else Fraction(data["fano_index"]),
        two_fano=data["two_fano"],
        ch2_strict=data["ch2_strict"],
        boundary_flag=data["boundary_flag"],
        oracle=data["oracle"],
        agree=data["agree"],
        witnesses=witnesses,
    )


def render_json(rows, summary=None):
    payload = {"rows": [row_to_dict(row) for row in rows]}
    if summary is not None:
        payload["summary"] = summary
    return json.dumps(payload, indent=2) + "\n"


def parse_json(text):
    return [row_from_dict(item) for item in json.loads(text)["rows"]]


def render_table(rows, summary=None):
    header = list(CSV_COLUMNS)
    body = [_cells(row) for row in rows]
    widths = [max([len(h)] + [len(cells[i]) for cells in body]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row, cells in zip(rows, body):
        lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
        if row.witnesses is not None:
            for wit in row.witnesses:
                lines.append(f"    {wit.kind} . {wit.label} = {format_rational(wit.value)}")
    if summary is not None:
        lines += _summary_lines(summary)
    return "\n".join(lines) + "\n"


RENDERERS = {"table": render_table, "csv": render_csv, "json": render_json}


def render(rows, output_format, summary=None):
    return RENDERERS[output_format](rows, summary)

