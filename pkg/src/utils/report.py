import sys

import pandas as pd

report_columns_list = ['section', 'subject', 'value', 'status']


def checks_to_frame(checks):
    return pd.DataFrame([[c.section, c.subject, c.value, c.status] for c in checks],
                        columns=report_columns_list, dtype=str)


def write_report(checks, out=None):
    """Write the checks as a tab separated table with a one-line header.

    Parameters
    ----------
    checks : list of Check
        report rows in output order
    out : str, optional
        file to write to, defaults to stdout
    """
    frame = checks_to_frame(checks)
    if out is None:
        frame.to_csv(sys.stdout, sep='\t', index=False)
    else:
        frame.to_csv(out, sep='\t', index=False)
    return frame
