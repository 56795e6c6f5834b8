# -*- coding: utf-8 -*-
"""
Copyright (c) 2024 Paris Brain Institute. All rights reserved.

Created on October 2026

@author: Cassandra Dumas

"""

# Modules
# -------
import pandas as pd

# Variables
# ---------
FRAME_STYLE = """
<style>
    table.frame { margin-left: auto; margin-right: auto; width: 80%; border-collapse: collapse; }
    table.frame th, table.frame td { border: 1px solid black; text-align: center; padding: 10px; }
    table.frame tbody tr:nth-child(odd) { background-color: #f2f2f2; }
</style>
"""


# Functions
# ---------
def generate_html_table(data):
    """
    Generate an HTML table from a dictionary of key-value pairs.

    Parameters:
        data (dict): Dictionary with headers as keys and values for rows.

    Returns:
        str: HTML table as a string.
    """
    rows = []
    for i, (header, value) in enumerate(data.items()):
        background_color = "#f2f2f2" if i % 2 == 0 else "#ffffff"
        rows.append(f"""
        <tr style="background-color: {background_color};">
            <td style="border: 1px solid black; text-align: center; padding: 10px;"><b>{header}</b></td>
            <td style="border: 1px solid black; text-align: center; padding: 10px;">{value}</td>
        </tr>
        """)
    return f"""
    <table style="margin-left: auto; margin-right: auto; width: 60%; border-collapse: collapse; border: 1px solid black;">
        {''.join(rows)}
    </table>
    """


def generate_html_frame(table):
    """
    HTML table of a DataFrame, rows shaded alternately like generate_html_table.

    Parameters:
        table (pd.DataFrame): Table to render.

    Returns:
        str: HTML table as a string.
    """
    return FRAME_STYLE + table.to_html(index=False, border=1, classes="frame", justify="center")


def generate_html_report(title, summary, table=None):
    """
    Standalone HTML page with a key-value summary and an optional table.

    Parameters:
        title (str): Page title.
        summary (dict): Key-value pairs shown first.
        table (pd.DataFrame): Detail rows.

    Returns:
        str: HTML page.
    """
    body = f"<h2 style=\"text-align: center;\">{title}</h2>" + generate_html_table(summary)
    if table is not None and len(table):
        body += generate_html_frame(table)
    return f"<html><head><meta charset=\"utf-8\"><title>{title}</title></head><body>{body}</body></html>"


def text_table(table):
    """Plain-text rendering of a DataFrame or a list of flat dicts, without the index."""
    return pd.DataFrame(table).to_string(index=False)


def text_summary(summary):
    """Aligned "key: value" lines."""
    width = max((len(str(k)) for k in summary), default=0)
    return "\n".join(f"{str(k).ljust(width)}: {v}" for k, v in summary.items())
