import threading
from unittest import mock

from django.conf import settings
from django.db import connections
from django.test import SimpleTestCase

from intersections.cli_helpers import ordered_map


class StartupTests(SimpleTestCase):
    def test_thread_stack_size_set_at_startup(self):
        # stack_size() without an argument resets the size, so put it back
        size = threading.stack_size()
        threading.stack_size(size)
        self.assertEqual(size, settings.TAUTCALC_THREAD_STACK_MB * 1024 * 1024)

    def test_parallel_map_leaves_stack_size_alone(self):
        with mock.patch("threading.stack_size") as stack_size:
            self.assertEqual(ordered_map(abs, [-1, -2, 3], jobs=2), [1, 2, 3])
        stack_size.assert_not_called()

    def test_no_database(self):
        self.assertEqual(connections["default"].settings_dict["ENGINE"], "django.db.backends.dummy")
