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

from arpeggio import RegExMatch, Optional, OneOrMore, EOF
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from arpeggio import GrammarType
else:
    # Only read by the type checker, defined so that the annotations resolve at runtime
    GrammarType = int


# Utilities
###########

def trailing_comma() -> GrammarType:
    return Optional(',')


# Comments
##########

def line_comment() -> GrammarType:
    return RegExMatch(r'#[^\n]*', str_repr='comment')


# Values
########

def integer() -> GrammarType:
    return RegExMatch(r'[0-9]+', str_repr='integer')


def number() -> GrammarType:
    return RegExMatch(r'[-+]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][-+]?[0-9]+)?', str_repr='number')


def amplitude() -> GrammarType:
    return '[', number, ',', number, ']'


# Fields
########

def dims() -> GrammarType:
    return 'dims', ':', '[', OneOrMore(integer, sep=','), trailing_comma, ']'


def amps() -> GrammarType:
    return 'amps', ':', '[', OneOrMore(amplitude, sep=','), trailing_comma, ']'


# Root grammars
###############

def state_file() -> GrammarType:
    return dims, amps, EOF


def comment_grammar() -> GrammarType:
    return [line_comment]
