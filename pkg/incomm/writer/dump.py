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

import logging
from typing import Callable, List, Sequence, Tuple

from incomm.core.state import PureState, ket_terms, local_spectra

IndentedFnType = Callable[['DumpWriter', str], None]


def indent(fn: IndentedFnType) -> Callable[..., None]:
    def fn_wrapper(cls: 'DumpWriter', line: str, is_next: bool = True) -> None:
        cls.increment_prefix(is_next)
        fn(cls, line)
        cls.decrement_prefix()
    return fn_wrapper


class DumpWriter:
    """!
    Log a state as a tree at debug level

    Example, for an EPR pair:
        PureState
        ├─ Dims: [2, 2]
        ├─ Local spectra
        │  ├─ 0.5 0.5
        │  └─ 0.5 0.5
        └─ Amplitudes
           ├─ |00> 0.707107
           └─ |11> 0.707107
    """

    def __init__(self, state: PureState, title: str = 'state', tol: float = 1e-12) -> None:
        self.prefix: str = ''
        self.prev_have_next: bool = False
        self.upd_prefix: bool = False
        spectra: List[str] = [' '.join('%.6g' % v for v in s) for s in local_spectra(state)]
        terms: List[Tuple[str, complex]] = ket_terms(state, tol)
        logging.debug('')
        logging.debug('--- %s ---', title)
        self.dump('PureState')
        self.print_str('Dims: {}'.format(list(state.party_dims)))
        self.print_str_list('Local spectra', spectra)
        self.print_str_list('Amplitudes', ['|{}> {}'.format(label, self.amplitude(a))
                                           for label, a in terms], False)

    def dump(self, string: str) -> None:
        logging.debug('%s%s', self.prefix, string)

    def decrement_prefix(self) -> None:
        self.prefix = self.prefix[:-3]
        self.upd_prefix = False

    def increment_prefix(self, is_next: bool) -> None:
        if self.upd_prefix:
            self.prefix = self.prefix[:-3]
            if self.prev_have_next:
                self.prefix += '│  '
            else:
                self.prefix += '   '
            self.upd_prefix = False

        self.prev_have_next = is_next
        if is_next:
            self.prefix += '├' + '─ '
        else:
            self.prefix += '└' + '─ '
        self.upd_prefix = True

    def print_str_list(self, string: str, lst: Sequence[str], is_next: bool = True) -> None:
        self.increment_prefix(is_next)
        self.dump(string)
        cnt: int = len(lst)
        for i, line in enumerate(lst):
            self.print_str(line, i < cnt - 1)
        self.decrement_prefix()

    @indent
    def print_str(self, s: str) -> None:
        self.dump(s)

    @staticmethod
    def amplitude(a: complex) -> str:
        if abs(a.imag) <= 1e-12:
            return '%.6g' % a.real
        return '(%.6g%+.6gj)' % (a.real, a.imag)
