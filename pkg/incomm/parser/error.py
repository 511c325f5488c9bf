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

from arpeggio import ParserPython, NoMatch, StrMatch
from typing import List, NoReturn

from incomm.core.error import DomainError, Failure


def handle_parse_error(err: NoMatch, parser: ParserPython) -> NoReturn:
    exp: List[str] = []
    for r in err.rules:
        repr: str = "'%s'" % str(r) if type(r) is StrMatch else str(r)
        if repr not in exp:
            exp.append(repr)
    line, col = parser.pos_to_linecol(err.position)
    where: str = '%s:%d:%d' % (parser.file_name, line, col)
    raise DomainError([Failure(DomainError.Severity.Fatal, 'expected %s' % (' or '.join(exp)),
                               where)])
