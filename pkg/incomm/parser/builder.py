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

from arpeggio import NonTerminal, ParseTreeNode, PTNodeVisitor, Terminal
from typing import Any, Dict, List, Sequence, Tuple

Field = Tuple[str, List[Any]]


def terminals(node: ParseTreeNode, rule: str) -> List[str]:
    """! Text of every terminal matched by @c rule below @c node, in source order. """
    if isinstance(node, Terminal):
        return [str(node.value)] if node.rule_name == rule else []
    assert isinstance(node, NonTerminal)
    return [v for child in node for v in terminals(child, rule)]


class StateBuilder(PTNodeVisitor):
    # Comments
    ##########

    def visit_line_comment(self, node: ParseTreeNode, children: Sequence[Any]) -> None:
        return None

    def visit_trailing_comma(self, node: ParseTreeNode, children: Sequence[Any]) -> None:
        return None

    # Fields
    ########

    def visit_dims(self, node: ParseTreeNode, children: Sequence[Any]) -> Field:
        return 'dims', [int(v) for v in terminals(node, 'integer')]

    def visit_amps(self, node: ParseTreeNode, children: Sequence[Any]) -> Field:
        values: List[str] = terminals(node, 'number')
        return 'amps', [complex(float(re), float(im)) for re, im in zip(values[::2], values[1::2])]

    def visit_state_file(self, node: ParseTreeNode, children: Sequence[Any]
                         ) -> Dict[str, List[Any]]:
        return dict(c for c in children if isinstance(c, tuple))
