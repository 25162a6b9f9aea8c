"""Settings tests."""
import os
import shutil
import tempfile

from mock import patch

import tests.helper

import frechetrans.errors
import frechetrans.settings


class SettingsTests(tests.helper.Tests):
    """Settings tests."""

    def setUp(self):
        tests.helper.Tests.setUp(self)
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)
        tests.helper.Tests.tearDown(self)

    def write_config(self, text):
        """Store frechetrans.conf in the temporary directory."""
        with open(os.path.join(self.tmp, 'frechetrans.conf'), 'w') as handle:
            handle.write(text)

    @patch.dict(os.environ, {}, clear=True)
    def test_config_file(self):
        """Values from a valid config file."""
        self.write_config('[frechetrans]\n'
                          'tolerance = 1e-6\n'
                          'engine = naive\n'
                          'prune = off\n')
        values = frechetrans.settings.read_config([self.tmp])
        self.assertEqual(values['tolerance'], '1e-6')
        self.assertEqual(values['chunk_size'], '0')
        frechetrans.settings.load(values)
        self.assertEqual(frechetrans.settings.TOLERANCE, 1e-6)
        self.assertEqual(frechetrans.settings.ENGINE, 'naive')
        self.assertFalse(frechetrans.settings.PRUNE)
        self.assertEqual(frechetrans.settings.CHUNK_SIZE, 0)
        self.assertEqual(frechetrans.settings.BENCH_BUDGET, 600.0)

    @patch.dict(os.environ, {}, clear=True)
    def test_config_file_missing(self):
        """Defaults without a config file."""
        values = frechetrans.settings.read_config([self.tmp])
        self.assertEqual(values, frechetrans.settings.DEFAULTS)

    @patch.dict(os.environ, {}, clear=True)
    @patch('builtins.open')
    def test_open_error(self, open_mock):
        """Unreadable locations are skipped."""
        open_mock.side_effect = IOError()
        values = frechetrans.settings.read_config(['a', 'b'])
        self.assertEqual(values, frechetrans.settings.DEFAULTS)
        self.assertEqual(open_mock.call_count, 2)

    @patch.dict(os.environ, {}, clear=True)
    def test_first_location_wins(self):
        """Later locations are not read once a file is found."""
        self.write_config('[frechetrans]\nchunk_size = 7\n')
        with patch('builtins.open', wraps=open) as open_mock:
            values = frechetrans.settings.read_config(
                [self.tmp, os.path.join(self.tmp, 'other')])
        self.assertEqual(values['chunk_size'], '7')
        self.assertEqual(open_mock.call_count, 1)

    def test_environment(self):
        """Environment variables override the config file."""
        self.write_config('[frechetrans]\nchunk_size = 7\nengine = naive\n')
        with patch.dict(os.environ, {'FRECHET_CHUNK': '3',
                                     'FRECHET_DEBUG': 'yes'}, clear=True):
            values = frechetrans.settings.read_config([self.tmp])
        self.assertEqual(values['chunk_size'], '3')
        self.assertEqual(values['engine'], 'naive')
        frechetrans.settings.load(values)
        self.assertEqual(frechetrans.settings.CHUNK_SIZE, 3)
        self.assertTrue(frechetrans.settings.DEBUG_CHECKS)

    def test_invalid(self):
        """Bad values raise Error and leave the settings alone."""
        for key, value in (('tolerance', 'abc'), ('chunk_size', '1.5'),
                           ('chunk_size', '-1'), ('prune', 'maybe'),
                           ('engine', 'parametric'), ('bench_budget', '0'),
                           ('log_level', 'loud'), ('log_level', '')):
            values = dict(frechetrans.settings.DEFAULTS)
            values[key] = value
            self.assertRaises(frechetrans.errors.SettingsError,
                              frechetrans.settings.load, values)
            self.assertEqual(frechetrans.settings.TOLERANCE, 1e-9)
            self.assertEqual(frechetrans.settings.ENGINE, 'chunked')

    def test_log_level(self):
        """Log levels are upper-cased."""
        values = dict(frechetrans.settings.DEFAULTS, log_level=' debug ')
        frechetrans.settings.load(values)
        self.assertEqual(frechetrans.settings.LOG_LEVEL, 'DEBUG')
        frechetrans.settings.load(dict(values, log_level='warn'))
        self.assertEqual(frechetrans.settings.LOG_LEVEL, 'WARN')

    def test_invalid_environment(self):
        """An unknown FRECHET_LOG_LEVEL is rejected at load time."""
        with patch.dict(os.environ, {'FRECHET_LOG_LEVEL': 'chatty'},
                        clear=True):
            values = frechetrans.settings.read_config([self.tmp])
        with self.assertRaises(frechetrans.errors.SettingsError) as context:
            frechetrans.settings.load(values)
        self.assertIn('CHATTY', str(context.exception))
        self.assertEqual(frechetrans.settings.LOG_LEVEL,
                         self.saved['LOG_LEVEL'])
