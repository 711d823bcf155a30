from django.test import SimpleTestCase, override_settings

from core.utils.conf import weaver_setting
from core.utils.constants import DEFAULTS, EXIT_CODES
from core.utils.exceptions import BracketError, DomainError, WeaverError


class WeaverSettingTest(SimpleTestCase):

    @override_settings(WEAVER={'SEED': 42})
    def test_reads_project_settings(self):
        self.assertEqual(weaver_setting('SEED'), 42)

    @override_settings(WEAVER={})
    def test_falls_back_to_defaults(self):
        self.assertEqual(weaver_setting('SLACK_TOL'), DEFAULTS['SLACK_TOL'])

    def test_unknown_key(self):
        with self.assertRaises(KeyError):
            weaver_setting('NO_EXISTE')


class ErrorPayloadTest(SimpleTestCase):

    def test_as_dict(self):
        exc = DomainError("eps must be positive", field='eps', value=-1)
        self.assertEqual(exc.as_dict(), {
            'error': 'domain_error',
            'message': "eps must be positive",
            'details': {'field': 'eps', 'value': -1},
        })

    def test_exit_codes_by_family(self):
        self.assertEqual(DomainError("x").exit_code, EXIT_CODES['INPUT_ERROR'])
        self.assertEqual(BracketError("x").exit_code, EXIT_CODES['NUMERICAL_FAILURE'])
        self.assertIsInstance(BracketError("x"), WeaverError)
