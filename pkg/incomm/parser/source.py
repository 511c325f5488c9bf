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

from arpeggio import ParserPython, ParseTreeNode, visit_parse_tree, NoMatch
from typing import Any, Dict, List, Optional

from incomm.core.error import fail
from incomm.core.state import PureState, make_state
from incomm.parser.builder import StateBuilder
from incomm.parser.error import handle_parse_error
from incomm.parser.grammar import comment_grammar, state_file


def parse_string(contents: str, name: str = '<string>') -> PureState:
    """!
    Load a state from the contents of a state file

    @param contents @b str The text to parse
    @param name @b str Name reported with failures
    @return @b PureState The state it describes, which must already be normalized
    """
    parser: ParserPython = ParserPython(state_file, comment_grammar, autokwd=True)
    fields: Optional[Dict[str, List[Any]]] = None
    try:
        parsed: ParseTreeNode = parser.parse(contents)
        fields = visit_parse_tree(parsed, StateBuilder())
    except NoMatch as err:
        parser.file_name = name
        handle_parse_error(err, parser)
    assert fields is not None
    return make_state(fields['dims'], fields['amps'], where=name)


def parse(source: str) -> PureState:
    try:
        with open(source, 'r', encoding='utf-8') as f:
            contents: str = f.read()
    except UnicodeDecodeError as err:
        fail('not a UTF-8 text file: {}'.format(err.reason), source)
    except OSError as err:
        fail('cannot read file: {}'.format(err.strerror), source)
    return parse_string(contents, source)
