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

import re
from argparse import ArgumentParser, Namespace
from os import path
from typing import Any, Dict, List, Optional, Sequence, cast

from incomm.core.invariants import CERTIFY_TOL
from incomm.core.linalg import SPECTRUM_TOL

## Commands reading a state file, and how many of them
STATE_INPUTS: Dict[str, int] = {
    'reduce': 1,
    'spectra': 1,
    'schmidt': 1,
    'majorize': 2,
    'nielsen': 2,
    'invariants': 1,
    'certify': 2,
    'measure': 1,
    'qss decode': 1,
}


class OptionsStruct:
    command: str
    qss_command: Optional[str]
    verbose: bool
    sources: List[str]
    candidates: List[str]
    output_file: Optional[str]
    name: str
    params: List[str]
    keep: Optional[str]
    left: Optional[str]
    tol: Optional[float]
    k: int
    secret: Optional[str]
    pair: str

    # Set by check_arguments
    full_command: str
    build_params: List[complex]
    indices: List[int]
    secret_amps: Optional[List[complex]]


class ArgError(Exception):
    def __init__(self, msg: str) -> None:
        self.msg: str = msg

    def __str__(self) -> str:
        return self.msg


def parse_indices(text: str) -> List[int]:
    """!
    Read a party list such as `0,2`

    @param text @b str Comma separated party indices
    @return @b List[int] The indices, in the order given
    """
    try:
        indices: List[int] = [int(v) for v in text.split(',') if v.strip() != '']
    except ValueError:
        raise ArgError("%s: not a comma separated list of party indices" % text)
    if len(indices) == 0:
        raise ArgError("empty party list")
    if len(set(indices)) != len(indices):
        raise ArgError("%s: party listed twice" % text)
    return indices


def parse_secret(text: str) -> List[complex]:
    """! Read `a_re,a_im,b_re,b_im,c_re,c_im` into three complex amplitudes. """
    try:
        values: List[float] = [float(v) for v in text.split(',')]
    except ValueError:
        raise ArgError("%s: not a list of numbers" % text)
    if len(values) != 6:
        raise ArgError("%s: expected 6 numbers (a_re,a_im,b_re,b_im,c_re,c_im), got %d"
                       % (text, len(values)))
    return [complex(values[i], values[i + 1]) for i in range(0, 6, 2)]


def parse_param(text: str) -> complex:
    try:
        return complex(text.replace(' ', ''))
    except ValueError:
        raise ArgError("%s: not a number" % text)


def check_arguments(args: OptionsStruct) -> None:
    args.full_command = args.command
    if args.command == 'qss':
        if args.qss_command is None:
            raise ArgError("qss: missing subcommand")
        args.full_command = 'qss ' + args.qss_command

    for source in args.sources + args.candidates:
        if not path.isfile(source):
            raise ArgError("%s: no such file or directory" % source)
    expected: int = STATE_INPUTS.get(args.full_command, 0)
    if len(args.sources) != expected:
        raise ArgError("%s: expected %d state files, got %d"
                       % (args.full_command, expected, len(args.sources)))

    args.build_params = [parse_param(p) for p in args.params]
    args.indices = []
    if args.keep is not None:
        args.indices = parse_indices(args.keep)
    elif args.left is not None:
        args.indices = parse_indices(args.left)

    args.secret_amps = None
    if args.secret is not None:
        args.secret_amps = parse_secret(args.secret)

    if args.tol is None:
        args.tol = CERTIFY_TOL if args.full_command == 'certify' else SPECTRUM_TOL
    elif args.tol < 0:
        raise ArgError("negative tolerance %r" % args.tol)

    if args.output_file is not None:
        if path.isdir(args.output_file):
            raise ArgError("%s: is a directory" % args.output_file)
        directory: str = path.dirname(args.output_file)
        if directory != '' and not path.isdir(directory):
            raise ArgError("%s: no such directory" % directory)


def _state_file(parser: ArgumentParser, count: int = 1) -> None:
    if count == 1:
        parser.add_argument('sources', nargs=1, metavar='file', help="State file")
    else:
        parser.add_argument('sources', nargs=count, metavar='file', help="State files")


def _output(parser: ArgumentParser) -> None:
    parser.add_argument("-o", "--output", dest="output_file",
                        help="File where to write the state")


def _left(parser: ArgumentParser) -> None:
    parser.add_argument("--left", required=True,
                        help="Parties on the left of the cut, comma separated (e.g. 0 or 0,2)")


def _tol(parser: ArgumentParser, default: float) -> None:
    parser.add_argument("--tol", type=float,
                        help="Comparison tolerance [default: %g]" % default)


class OptionParser(ArgumentParser):
    """!
    Argument parser reading "-0.6,0,0.8,0,0,0" or "-0.5+0.5j" as values, not as options.
    Subparsers are built with the class of their parent and read them the same way.
    """

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r'^-\.?[0-9]')


def make_parser() -> ArgumentParser:
    parser: ArgumentParser = OptionParser(
        prog='incomm', description="Local invariants, LOCC incommensurability and qutrit secret"
                                   " sharing on multipartite pure states")
    parser.add_argument("-v", "--verbose", dest="verbose", action="store_true",
                        help="Print debug messages, including a dump of every state")
    parser.add_argument("-q", "--quiet", dest="verbose", action="store_false", default=False,
                        help="Do not print debug messages [default]")
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    # States
    build = commands.add_parser('build', help="Build a state of the catalog")
    build.add_argument('name', help="Catalog identifier, see the `catalog` command")
    build.add_argument('params', nargs='*', help="Parameters of the state (e.g. 3, 0.5+0.5j)")
    _output(build)
    commands.add_parser('catalog', help="List the states the catalog can build")
    reduce = commands.add_parser('reduce', help="Density matrix of some of the parties")
    _state_file(reduce)
    reduce.add_argument("--keep", required=True, help="Parties to keep, comma separated")
    _state_file(commands.add_parser('spectra', help="Spectrum of every one-party reduction"))

    # Bipartite cuts
    schmidt = commands.add_parser('schmidt', help="Schmidt decomposition across a cut")
    _state_file(schmidt)
    _left(schmidt)
    majorize = commands.add_parser('majorize', help="Compare the spectra of a cut")
    _state_file(majorize, 2)
    _left(majorize)
    _tol(majorize, SPECTRUM_TOL)
    nielsen = commands.add_parser('nielsen', help="Whether LOCC across a cut turns one state into"
                                                  " the other")
    _state_file(nielsen, 2)
    _left(nielsen)

    # Invariants
    _state_file(commands.add_parser('invariants', help="Local unitary invariants I1 to I5"))
    certify = commands.add_parser('certify', help="Prove two states incommensurate")
    _state_file(certify, 2)
    _tol(certify, CERTIFY_TOL)
    hidden = commands.add_parser('hidden-count', help="Count the non-local parameters of k qubits")
    hidden.add_argument('k', type=int, help="Number of qubit parties")
    measure = commands.add_parser('measure', help="Measure a state onto orthogonal candidates")
    _state_file(measure)
    measure.add_argument('candidates', nargs='+', metavar='candidate',
                         help="State files of the candidates")

    # Secret sharing
    qss = commands.add_parser('qss', help="The qutrit threshold scheme")
    qss_commands = qss.add_subparsers(dest='qss_command', metavar='command')
    encode = qss_commands.add_parser('encode', help="Spread a secret qutrit over three shares")
    encode.add_argument('secret', help="Amplitudes as a_re,a_im,b_re,b_im,c_re,c_im")
    _output(encode)
    decode = qss_commands.add_parser('decode', help="Recover the secret from two shares")
    _state_file(decode)
    decode.add_argument("--pair", required=True, choices=['AB', 'AC', 'BC'],
                        help="Parties taking part in the decoding")
    decode.add_argument("--secret", help="Expected secret, to report the fidelity against")
    qss_commands.add_parser('cheat-demo', help="Bob shifts his share before each decoding")
    qss_commands.add_parser('prevention-check', help="Certify the phi states incommensurate")
    return parser


def parse_arguments(argv: Optional[Sequence[str]] = None) -> OptionsStruct:
    args: Namespace = make_parser().parse_args(argv)
    # Fields of the commands that were not selected
    defaults: Dict[str, Any] = {
        'qss_command': None, 'sources': [], 'candidates': [], 'output_file': None, 'name': '',
        'params': [], 'keep': None, 'left': None, 'tol': None, 'k': 0, 'secret': None,
        'pair': '',
    }
    for key, value in defaults.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    return cast(OptionsStruct, args)
