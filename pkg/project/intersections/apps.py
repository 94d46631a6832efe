import logging
import sys
import threading

from django.apps import AppConfig
from django.conf import settings

logger = logging.getLogger(__name__)


class IntersectionsConfig(AppConfig):
    name = 'intersections'
    verbose_name = "Intersection numbers on moduli of curves"

    def ready(self):
        limit = getattr(settings, "TAUTCALC_RECURSION_LIMIT", 10000)
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)
        # worker threads for --jobs recurse as deep as the main thread
        stack_mb = getattr(settings, "TAUTCALC_THREAD_STACK_MB", 64)
        try:
            threading.stack_size(stack_mb * 1024 * 1024)
        except (ValueError, RuntimeError) as exc:
            logger.warning("cannot set thread stack size to %d MiB: %s", stack_mb, exc)
