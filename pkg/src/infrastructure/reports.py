"""
Report Documents
Rendering divisiveness reports as an aligned table (for people) or as
stable-key JSON (for tools), and reading the JSON form back.

Exact values print as 'p/q' with a 6-significant-digit decimal beside them;
the rational is the value, the decimal is a reading aid.
"""
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd

from ..engine.report import DivisivenessReport
from ..model.errors import ProfileInputError, ProfileParseError

logger = logging.getLogger(__name__)

TABLE = 'table'
MACHINE = 'json-like'
STYLES = (TABLE, MACHINE)

Value = Union[Fraction, float]


@dataclass
class ReportDocument:
    method: str
    proposals: Tuple[str, ...]
    values: Dict[str, Value]
    selection: Tuple[str, ...]
    direction: str = 'max'
    sampling: str = 'exact'
    seed: Optional[int] = None
    samples: Optional[int] = None
    stderr: Dict[str, float] = field(default_factory=dict)
    # seconds; shown in the table only so machine output stays byte-identical
    timing: Optional[float] = None

    def __post_init__(self):
        if not self.selection:
            raise ProfileInputError("report selection is empty")
        missing = [p for p in self.proposals if p not in self.values]
        if missing:
            raise ProfileInputError(f"report has no value for {missing}")

    @classmethod
    def from_report(cls, report: DivisivenessReport, timing: Optional[float] = None) -> "ReportDocument":
        names = report.proposals.names
        stderr = dict(zip(names, report.stderr)) if report.stderr is not None else {}
        return cls(
            method=report.method,
            proposals=tuple(names),
            values=dict(zip(names, report.values)),
            selection=tuple(report.selected_labels()),
            direction=report.direction,
            sampling=report.sampling,
            seed=report.seed,
            samples=report.samples,
            stderr=stderr,
            timing=timing,
        )


def format_value(value: Value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def decimal(value: Value) -> str:
    return format(float(value), '.6g')


def _parse_value(text: str, exact: bool) -> Value:
    try:
        return Fraction(text) if exact else float(text)
    except (ValueError, ZeroDivisionError):
        raise ProfileParseError(f"bad report value {text!r}") from None


def report_frame(document: ReportDocument) -> pd.DataFrame:
    rows = []
    chosen = set(document.selection)
    for name in document.proposals:
        value = document.values[name]
        row = {
            'proposal': name,
            'value': format_value(value) if isinstance(value, Fraction) else decimal(value),
            'decimal': decimal(value),
        }
        if document.stderr:
            row['stderr'] = decimal(document.stderr[name])
        row['selected'] = '*' if name in chosen else ''
        rows.append(row)
    return pd.DataFrame(rows)


def emit_report(document: ReportDocument, style: str = TABLE) -> str:
    if style == TABLE:
        header = [
            f"method:    {document.method}",
            f"sampling:  {document.sampling}" + (f" (seed {document.seed})" if document.seed is not None else ''),
            f"direction: {document.direction}",
            f"selection: {', '.join(document.selection)}",
        ]
        if document.timing is not None:
            header.append(f"time:      {document.timing:.3f}s")
        return '\n'.join(header) + '\n\n' + report_frame(document).to_string(index=False) + '\n'

    if style == MACHINE:
        payload = {
            'method': document.method,
            'direction': document.direction,
            'sampling': document.sampling,
            'seed': document.seed,
            'samples': document.samples,
            'selection': list(document.selection),
            'values': [
                {'proposal': name, 'value': format_value(document.values[name]),
                 'decimal': decimal(document.values[name]),
                 **({'stderr': format_value(document.stderr[name])} if document.stderr else {})}
                for name in document.proposals
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + '\n'

    raise ProfileInputError(f"unknown report style {style!r} (expected one of {STYLES})")


def parse_report(text: str) -> ReportDocument:
    """Read the JSON form back; exact reports come back as Fractions."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProfileParseError(f"report is not valid JSON: {e.msg}", e.lineno) from None
    try:
        exact = payload['sampling'].startswith('exact')
        entries: List[dict] = payload['values']
        proposals = tuple(e['proposal'] for e in entries)
        values = {e['proposal']: _parse_value(e['value'], exact) for e in entries}
        stderr = {e['proposal']: float(e['stderr']) for e in entries if 'stderr' in e}
        return ReportDocument(
            method=payload['method'],
            proposals=proposals,
            values=values,
            selection=tuple(payload['selection']),
            direction=payload['direction'],
            sampling=payload['sampling'],
            seed=payload.get('seed'),
            samples=payload.get('samples'),
            stderr=stderr,
        )
    except (KeyError, TypeError, AttributeError) as e:
        raise ProfileParseError(f"report is missing or mangles field {e}") from None
