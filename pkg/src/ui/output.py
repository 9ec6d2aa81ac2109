"""
Output formatting for the command line.
Plain text, JSON envelopes and CSV; every number is rendered exactly.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from modules.exactnum import format_rational
from modules.polybasis import Polynomial
from modules.report import VerificationReport, render_exact

PLAIN = "plain"
JSON = "json"
CSV = "csv"
FORMATS = (PLAIN, JSON, CSV)


def render_json(command: str, params: Dict[str, Any], result: Any, notes: Optional[List[str]] = None) -> str:
    """
    Build the JSON envelope ``{command, params, result, notes}``.

    Rationals become ``p/q`` strings and integers stay JSON integers, so parsing
    the output and dumping it again gives the same bytes.
    """
    envelope = {
        "command": command,
        "params": render_exact(params),
        "result": render_exact(result),
        "notes": list(notes or []),
    }
    return json.dumps(envelope, indent=2) + "\n"


def render_csv(frame: pd.DataFrame) -> str:
    """Header row plus comma-separated rows; blank cells stay empty."""
    return frame.to_csv(index=False, lineterminator="\n")


def exact_frame(rows: Sequence[Sequence[Any]], columns: Sequence[str]) -> pd.DataFrame:
    # object dtype keeps Python ints unbounded; Fractions are pre-rendered as p/q
    cells = [[_cell(v) for v in row] for row in rows]
    return pd.DataFrame(cells, columns=list(columns), dtype=object)


def _cell(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def render_plain_table(rows: Sequence[Sequence[Optional[Any]]]) -> str:
    """Right-aligned columns separated by one space; blank cells print as spaces."""
    cells = [["" if v is None else _plain(v) for v in row] for row in rows]
    if not cells:
        return ""
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    lines = [" ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _plain(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def with_notes(text: str, notes: Sequence[str]) -> str:
    """Append each note as a footnote line."""
    if not notes:
        return text
    return text + "".join(f"* {note}\n" for note in notes)


def format_polynomial(p: Polynomial, var: str = "x") -> str:
    """
    Ascending-order rendering such as ``x + 14x^2 + 36x^3 + 24x^4`` or ``-1/2 + x``.

    Unit coefficients are omitted on non-constant terms and fractional ones are
    parenthesised, as in ``1/4 - (3/2)x^2 + x^3``; the zero polynomial is ``0``.
    """
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        magnitude = abs(c)
        if k == 0:
            body = format_rational(magnitude)
        else:
            power = var if k == 1 else f"{var}^{k}"
            if magnitude == 1:
                body = power
            elif magnitude.denominator == 1:
                body = f"{magnitude.numerator}{power}"
            else:
                body = f"({format_rational(magnitude)}){power}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    negative, body = terms[0]
    text = f"-{body}" if negative else body
    for negative, body in terms[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


def summary_frame(reports: Sequence[VerificationReport]) -> pd.DataFrame:
    """One row per identity: id, range, cases checked, failures and status."""
    return pd.DataFrame(
        [
            {
                "identity": r.identity_id,
                "range": r.range_description,
                "checked": r.checked,
                "failures": len(r.failures),
                "status": r.status,
            }
            for r in reports
        ],
        columns=["identity", "range", "checked", "failures", "status"],
    )


def render_failures(reports: Sequence[VerificationReport], limit: int = 5) -> str:
    """First few failing cases of each report, for the plain summary."""
    lines = []
    for r in reports:
        for inputs, expected, actual in r.failures[:limit]:
            lines.append(f"{r.identity_id} {json.dumps(inputs)}: expected {expected}, got {actual}")
        if len(r.failures) > limit:
            lines.append(f"{r.identity_id}: {len(r.failures) - limit} more failures")
    return "".join(line + "\n" for line in lines)
