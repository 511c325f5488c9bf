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

import sys
from typing import Optional, TextIO

from incomm.core.error import fail
from incomm.core.state import PureState


class StateFileWriter:
    """!
    Write a state in the format read by incomm.parser

    Amplitudes are written with 17 significant digits, enough for a double to be read back
    unchanged.
    """

    def __init__(self, state: PureState, f: str, comment: Optional[str] = None) -> None:
        try:
            self.file: TextIO = sys.stdout if f == '-' else open(f, 'w', encoding='utf-8')
        except OSError as err:
            fail('cannot write file: {}'.format(err.strerror), f)
        if comment is not None:
            for line in comment.splitlines():
                self.file.write('# {}\n'.format(line))
        self.write_dims(state)
        self.write_amps(state)
        if f != '-':
            self.file.close()

    def write_dims(self, state: PureState) -> None:
        self.file.write('dims: [{}]\n'.format(', '.join(str(d) for d in state.party_dims)))

    def write_amps(self, state: PureState) -> None:
        self.file.write('amps: [\n')
        for a in state.amplitudes:
            self.file.write('    [{}, {}],\n'.format(self.number(a.real), self.number(a.imag)))
        self.file.write(']\n')

    @staticmethod
    def number(value: float) -> str:
        # -0 is written as 0
        return '%.17g' % (value + 0.0)
