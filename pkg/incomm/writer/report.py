# Copyright © 2019-2020 The incomm developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice (including the next
# paragraph) shall be included in all copies or substantial portions of the
# Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import json
import sys
from typing import Any, Dict, List, Optional, TextIO, cast

import numpy as np

## Keys of a report, in the order they are written
REPORT_KEYS: List[str] = ['command', 'inputs', 'outputs', 'tolerances', 'error']


def round_float(value: float) -> float:
    """! Round to 15 significant digits, the precision reports are compared at. """
    return float('%.15g' % value) + 0.0


def to_json_value(value: Any) -> Any:
    """!
    Convert a report value to plain JSON types

    @param value Any mix of dicts, sequences, numpy arrays and scalars
    @return The same structure with floats rounded and complex numbers turned into [re, im] pairs
    """
    if value is None or isinstance(value, (bool, np.bool_)):
        return None if value is None else bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return round_float(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        return [round_float(cast(float, value.real)), round_float(cast(float, value.imag))]
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, np.ndarray):
        return [to_json_value(v) for v in value]
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    raise TypeError('cannot write a {} in a report'.format(type(value).__name__))


def format_report(report: Dict[str, Any]) -> str:
    ordered: Dict[str, Any] = {}
    for key in REPORT_KEYS:
        if key in report:
            ordered[key] = to_json_value(report[key])
    return json.dumps(ordered, indent=2, ensure_ascii=False)


class ReportWriter:
    def __init__(self, report: Dict[str, Any], f: Optional[str] = '-') -> None:
        self.file: TextIO = sys.stdout if f is None or f == '-' else open(
            f, 'w', encoding='utf-8')
        self.file.write(format_report(report))
        self.file.write('\n')
        if self.file is not sys.stdout:
            self.file.close()
