"""This module contains methods to render reports as tables, TSV or JSON."""
import csv
import io
import json

from hkltower.enums.output_format import OutputFormat


def cell(value) -> str:
    """Render one value for a table or TSV cell.

    Parameters
    ----------
    value: object
        A string, number, bool, None, list or dict

    Returns
    -------
    str
        Lists joined by "; ", dicts as key=value pairs, None as "-"
    """
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return " ".join(f"{key}={cell(item)}" for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return "; ".join(cell(item) for item in value)
    return str(value)


def render_json(payload) -> str:
    """Render a payload as one JSON document with sorted keys."""
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2)


def render_tsv(rows: list[dict], columns) -> str:
    """Render rows as tab separated values with a header line."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="\t", lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([cell(row.get(column)) for column in columns])
    return buffer.getvalue().rstrip("\n")


def render_table(rows: list[dict], columns) -> str:
    """Render rows as an aligned table with a header and a rule."""
    cells = [[cell(row.get(column)) for column in columns] for row in rows]
    widths = [
        max([len(str(column))] + [len(line[i]) for line in cells])
        for i, column in enumerate(columns)
    ]
    lines = [
        "  ".join(str(column).ljust(width) for column, width in zip(columns, widths)),
        "  ".join("-" * width for width in widths),
    ]
    lines.extend(
        "  ".join(text.ljust(width) for text, width in zip(line, widths))
        for line in cells
    )
    return "\n".join(line.rstrip() for line in lines)


def render(
    payload, rows: list[dict], columns, output_format: OutputFormat
) -> str:
    """Render a report in the requested format.

    Parameters
    ----------
    payload: object
        The JSON document
    rows: list[dict]
        The rows shown by the table and TSV formats
    columns: sequence of str
        The row keys to show, in order
    output_format: OutputFormat
        table, json or tsv

    Returns
    -------
    str
        The rendered text without a trailing newline
    """
    output_format = OutputFormat(output_format)
    if output_format is OutputFormat.json:
        return render_json(payload)
    if output_format is OutputFormat.tsv:
        return render_tsv(rows, columns)
    return render_table(rows, columns)
