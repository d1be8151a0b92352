"""This module contains the OutputFormat class."""
from enum import Enum


class OutputFormat(Enum):
    """OutputFormat class which contains the enum of all report formats.

    Attributes
    ----------
    table: OutputFormat
        The value representing an aligned human readable table
    json: OutputFormat
        The value representing one JSON document with sorted keys
    tsv: OutputFormat
        The value representing tab separated rows with a header line
    """

    table = "table"
    json = "json"
    tsv = "tsv"
