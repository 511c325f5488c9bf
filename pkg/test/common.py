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

"""
Incomm test case

This module contains a class with tools to help incomm test writing
"""

import io
import json
import logging
import os
import os.path
import sys
import tempfile
from inspect import getsourcefile

import numpy as np
from unittest import TestCase

import incomm
from incomm.core.state import PureState, make_state, reduce

__unittest = True

TEST_DIR = os.path.dirname(os.path.abspath(getsourcefile(lambda: 0)))
ROOT_DIR = os.path.dirname(TEST_DIR)


class Pipe():
    """
        Output (stdout & stderr) redirection

        Usage: `with Pipe() as output:`

        @variable stdout string
        @variable stderr string
    """

    def __enter__(self):
        sys.stdout = io.StringIO()
        sys.stderr = io.StringIO()
        return self

    def __exit__(self, *args):
        self.stdout = sys.stdout.getvalue()
        self.stderr = sys.stderr.getvalue()
        sys.stdout.close()
        sys.stderr.close()
        sys.stdout = sys.__stdout__
        sys.stderr = sys.__stderr__


def random_state(rng, dims):
    """
    Draw a state uniformly from the unit sphere

    @param rng numpy random generator
    @param dims Party dimensions
    @return PureState
    """
    n = int(np.prod(dims))
    amps = rng.normal(size=n) + 1j * rng.normal(size=n)
    return make_state(dims, amps, normalize=True)


def random_unitary(rng, dim):
    """ Haar random unitary, seeded from rng """
    from scipy.stats import unitary_group
    return unitary_group.rvs(dim, random_state=int(rng.integers(2 ** 31)))


class IncommTestCase(TestCase):
    """ Extent to unittest.TestCase to ease writing of tests for incomm """

    def __init__(self, arg):
        super().__init__(arg)
        self.maxDiff = None
        os.chdir(TEST_DIR)

    def setUp(self):
        logging.basicConfig(format='%(message)s', level=logging.DEBUG)
        self.logStream = io.StringIO()
        self.logHandler = logging.StreamHandler(self.logStream)
        self.log = logging.getLogger()
        for h in list(self.log.handlers):
            self.log.removeHandler(h)
        self.log.addHandler(self.logHandler)
        self.log.setLevel(logging.DEBUG)
        self.tmpdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.log.removeHandler(self.logHandler)
        self.logHandler.close()
        self.tmpdir.cleanup()

    def logs(self):
        self.logHandler.flush()
        return self.logStream.getvalue()

    def tmp(self, name):
        """ Path of a file in a directory removed after the test """
        return os.path.join(self.tmpdir.name, name)

    def run_main(self, *argv):
        """
        Run the command line

        @param argv The command line arguments
        @return tuple Exit code, parsed JSON report (None if nothing was printed) and stderr
        """
        with Pipe() as output:
            code = incomm.main(list(argv))
        report = json.loads(output.stdout) if output.stdout.strip() != '' else None
        return code, report, output.stderr

    def assert_report_equal_to_file(self, report, filename, tol=None):
        """
        Check a report against a golden JSON file

        @param report The parsed report
        @param filename Path to the golden file, relative to the test directory
        @param tol Absolute tolerance on floats, which are compared exactly when None
        """
        with open(os.path.join(TEST_DIR, filename), 'r', encoding="utf-8") as f:
            expected = json.load(f)
        if tol is None:
            self.assertEqual(report, expected)
        else:
            self.assert_json_close(report, expected, tol, filename)

    def assert_json_close(self, actual, expected, tol, where):
        if isinstance(expected, dict):
            self.assertIsInstance(actual, dict, where)
            self.assertEqual(list(actual), list(expected), where)
            for key in expected:
                self.assert_json_close(actual[key], expected[key], tol, where + '.' + key)
        elif isinstance(expected, list):
            self.assertIsInstance(actual, list, where)
            self.assertEqual(len(actual), len(expected), where)
            for i, (a, e) in enumerate(zip(actual, expected)):
                self.assert_json_close(a, e, tol, '{}[{}]'.format(where, i))
        elif isinstance(expected, float) or isinstance(actual, float):
            self.assertAlmostEqual(actual, expected, delta=tol, msg=where)
        else:
            self.assertEqual(actual, expected, where)

    def assert_close(self, actual, expected, tol=1e-9, msg=None):
        """ Entrywise comparison of numbers or arrays within an absolute tolerance """
        actual = np.asarray(actual)
        expected = np.asarray(expected)
        self.assertEqual(actual.shape, expected.shape, msg)
        delta = float(np.max(np.abs(actual - expected))) if actual.size != 0 else 0.0
        self.assertLessEqual(delta, tol, msg)

    def assert_same_state(self, first, second, tol=1e-10, up_to_phase=False):
        """
        Check that two states are equal

        @param up_to_phase Ignore a global phase between the two states
        """
        self.assertIsInstance(first, PureState)
        self.assertEqual(first.party_dims, second.party_dims)
        if up_to_phase:
            self.assertAlmostEqual(abs(np.vdot(first.amplitudes, second.amplitudes)), 1,
                                   delta=tol)
        else:
            self.assert_close(first.amplitudes, second.amplitudes, tol)

    def assert_maximally_mixed(self, state, party, tol=1e-12):
        d = state.party_dims[party]
        self.assert_close(reduce(state, [party]).matrix, np.eye(d) / d, tol)
