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
from enum import IntEnum
from typing import List, NoReturn, Optional


class Failure(Exception):
    def __init__(self, severity: 'DomainError.Severity', msg: str, where: Optional[str] = None
                 ) -> None:
        self.severity: DomainError.Severity = severity
        self.msg: str = msg
        self.where: Optional[str] = where

    def __str__(self) -> str:
        if self.where is None:
            return self.msg
        return self.where + ': ' + self.msg


class DomainError(Exception):
    class Severity(IntEnum):
        Unset = -1
        Warning = 1
        Error = 2
        Fatal = 3

    def __init__(self, failures: List[Failure]) -> None:
        self.failures: List[Failure] = failures
        self.max_level: DomainError.Severity = DomainError.Severity.Unset
        self.errors: int = 0
        self.warnings: int = 0
        for f in failures:
            if f.severity > self.max_level:
                self.max_level = f.severity
            if f.severity is DomainError.Severity.Warning:
                self.warnings += 1
            else:
                self.errors += 1

    @property
    def summary(self) -> str:
        if self.warnings == 0:
            return 'check finished with %d errors' % self.errors
        elif self.errors == 0:
            return 'check finished with %d warnings' % self.warnings
        else:
            return 'check finished with %d errors and %d warnings' % (self.errors, self.warnings)

    def __str__(self) -> str:
        return '\n'.join(str(f) for f in self.failures)


class FailureCollector:
    """!
    Gathers failures found while validating a value, so that every problem is reported at once
    instead of only the first one.
    """

    def __init__(self, where: Optional[str] = None) -> None:
        self.where: Optional[str] = where
        self.failures: List[Failure] = []

    def error(self, msg: str) -> None:
        self.failures.append(Failure(DomainError.Severity.Error, msg, self.where))

    def warn(self, msg: str) -> None:
        self.failures.append(Failure(DomainError.Severity.Warning, msg, self.where))

    def check(self) -> None:
        """! Raise the collected failures, if any of them is at least an error. """
        if any(f.severity > DomainError.Severity.Warning for f in self.failures):
            raise DomainError(self.failures)
        for f in self.failures:
            logging.warning(str(f))


def fail(msg: str, where: Optional[str] = None) -> NoReturn:
    raise DomainError([Failure(DomainError.Severity.Error, msg, where)])
