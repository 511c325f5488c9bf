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

import json
import os

import numpy as np

from incomm.core import catalog
from incomm.core.error import DomainError
from incomm.core.state import make_state
from incomm.writer import WriteDump, WriteReport, WriteStateFile
from incomm.writer.report import format_report, round_float, to_json_value
from test.common import IncommTestCase, Pipe


class TestDump(IncommTestCase):
    def dumped(self, state, title):
        WriteDump(state, title)
        return self.logs().split('--- {} ---\n'.format(title), 1)[1]

    def test_epr(self):
        self.assertEqual(self.dumped(catalog.epr(), 'epr'), '\n'.join([
            'PureState',
            '├─ Dims: [2, 2]',
            '├─ Local spectra',
            '│  ├─ 0.5 0.5',
            '│  └─ 0.5 0.5',
            '└─ Amplitudes',
            '   ├─ |00> 0.707107',
            '   └─ |11> 0.707107',
            ''
        ]))

    def test_complex_amplitude(self):
        state = make_state([2, 2], [0.6, 0, 0, 0.8j])
        self.assertEqual(self.dumped(state, 'pair').splitlines()[-2:], [
            '   ├─ |00> 0.6',
            '   └─ |11> (0+0.8j)',
        ])


class TestReport(IncommTestCase):
    def test_rounding(self):
        self.assertEqual(round_float(0.1 + 0.2), 0.3)
        self.assertEqual(round_float(1 / 3), 0.333333333333333)
        self.assertEqual(str(round_float(-0.0)), '0.0')

    def test_values(self):
        self.assertEqual(to_json_value({'a': (1, 2.5, None), 'b': np.array([True, False])}),
                         {'a': [1, 2.5, None], 'b': [True, False]})
        self.assertEqual(to_json_value(np.complex128(0.5 - 0.25j)), [0.5, -0.25])
        self.assertEqual(to_json_value(np.int64(3)), 3)
        self.assertIsInstance(to_json_value(np.int64(3)), int)
        with self.assertRaises(TypeError):
            to_json_value({1, 2})

    def test_key_order(self):
        text = format_report({'error': None, 'outputs': {'x': 1}, 'command': 'catalog',
                              'ignored': 1})
        self.assertEqual(list(json.loads(text)), ['command', 'outputs', 'error'])

    def test_stdout(self):
        with Pipe() as output:
            WriteReport({'command': 'catalog', 'outputs': {'names': ['epr']}})
        self.assertTrue(output.stdout.endswith('}\n'))
        self.assertEqual(json.loads(output.stdout),
                         {'command': 'catalog', 'outputs': {'names': ['epr']}})

    def test_file(self):
        path = self.tmp('report.json')
        WriteReport({'command': 'spectra', 'outputs': {'purity': 1 / 3}}, path)
        with open(path, 'r', encoding='utf-8') as f:
            self.assertEqual(json.load(f)['outputs']['purity'], 0.333333333333333)


class TestStateFile(IncommTestCase):
    def test_unwritable(self):
        blocker = self.tmp('blocker')
        with open(blocker, 'w', encoding='utf-8') as f:
            f.write('not a directory\n')
        path = os.path.join(blocker, 'epr.state')
        with self.assertRaises(DomainError) as ctx:
            WriteStateFile(catalog.epr(), path)
        self.assertTrue(str(ctx.exception).startswith(path + ': cannot write file'))
