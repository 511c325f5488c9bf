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
from typing import Any, Callable, Dict, List, Optional, Sequence

from incomm.options import OptionsStruct

Report = Dict[str, Any]


def configure_logging(verbose: bool) -> None:
    logging.addLevelName(logging.ERROR, 'Error: ')
    logging.addLevelName(logging.WARNING, 'Warning: ')
    logging.addLevelName(logging.INFO, 'Note: ')
    logging.addLevelName(logging.DEBUG, '> ')
    logging.basicConfig(format='%(levelname)s%(message)s',
                        level=logging.DEBUG if verbose else logging.INFO)
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.INFO)


def tolerances(args: OptionsStruct) -> Dict[str, float]:
    from incomm.core import invariants, linalg
    res: Dict[str, float] = {
        'hermitian': linalg.HERMITIAN_TOL,
        'reconstruction': linalg.RECONSTRUCTION_TOL,
        'spectrum': linalg.SPECTRUM_TOL,
        'norm': linalg.NORM_TOL,
        'certify': invariants.CERTIFY_TOL,
    }
    assert args.tol is not None
    if args.full_command == 'majorize':
        res['majorization'] = args.tol
    if args.full_command == 'certify':
        res['certify'] = args.tol
    return res


def new_report(args: OptionsStruct) -> Report:
    return {'command': args.full_command, 'inputs': {}, 'outputs': {},
            'tolerances': tolerances(args)}


def run(args: OptionsStruct, report: Optional[Report] = None) -> Report:
    """!
    Run the command selected by @c args

    @param args @b OptionsStruct Options, already checked by check_arguments
    @param report @b Report Report to fill, a new one if None. It is left partially filled when the
        command fails.
    @return @b Report The report, with the command name, its resolved inputs, its outputs and the
        tolerances in effect
    """
    # Avoid importing submodules in global scope, otherwise they may use the logger before it is
    # initialized
    from incomm import commands

    logging.debug('running %s', args.full_command)
    if report is None:
        report = new_report(args)
    handler: Callable[[OptionsStruct, Report], None] = commands.HANDLERS[args.full_command]
    handler(args, report)
    return report


def main(argv: Optional[Sequence[str]] = None) -> int:
    """!
    Entry point of the command line

    The report goes to stdout, diagnostics to stderr.

    @return @b int 0 on success, 1 when the command failed on its input states, 2 on usage error
    """
    from incomm.options import ArgError, check_arguments, parse_arguments
    try:
        args: OptionsStruct = parse_arguments(argv)
    except SystemExit as err:
        return 0 if err.code == 0 else 2
    configure_logging(args.verbose)

    from incomm.core.error import DomainError
    from incomm.writer import WriteReport

    report: Report = {'command': args.command}
    try:
        check_arguments(args)
        report = new_report(args)
        run(args, report)

    except DomainError as err:
        failures: List[str] = []
        for f in err.failures:
            if f.severity < DomainError.Severity.Error:
                logging.warning(str(f))
            else:
                logging.error(str(f))
            failures.append(str(f))
        logging.info(err.summary)
        if err.max_level > DomainError.Severity.Warning:
            report['error'] = '\n'.join(failures)
            WriteReport(report)
            return 1

    except ArgError as err:
        logging.error(str(err))
        report['command'] = getattr(args, 'full_command', args.command)
        report['error'] = str(err)
        WriteReport(report)
        return 2

    WriteReport(report)
    return 0
