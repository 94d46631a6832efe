# intersections/cli_helpers.py
"""Shared plumbing for the management commands: --cache/--jobs handling,
error translation and ordered parallel evaluation."""
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from tqdm import tqdm

from . import memo_cache
from .arith import InvalidArgument
from .expressions import ExpressionError
from .taut_ag import SingularSystem

logger = logging.getLogger(__name__)

ENGINE_ERRORS = (InvalidArgument, ExpressionError, SingularSystem)

T = TypeVar("T")
R = TypeVar("R")


class EngineCommand(BaseCommand):
    """Base for every command: loads the memo cache before running and
    flushes it afterwards, also when the command fails."""

    def add_arguments(self, parser):
        parser.add_argument(
            "--cache",
            default=settings.TAUTCALC_CACHE or None,
            help="memo cache file to load before and save after the run",
        )
        parser.add_argument(
            "--jobs",
            type=int,
            default=settings.TAUTCALC_JOBS,
            help="worker threads for independent top-level queries",
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        if options["jobs"] < 1:
            raise CommandError("--jobs must be at least 1")
        cache = options["cache"]
        if cache:
            memo_cache.load(cache)
        try:
            self.run(*args, **options)
        except ENGINE_ERRORS as exc:
            raise CommandError(str(exc)) from exc
        finally:
            if cache:
                memo_cache.save(cache)

    def run(self, *args, **options):
        raise NotImplementedError

    def warn(self, message: str):
        logger.warning("%s: %s", self.__module__.rsplit(".", 1)[-1], message)


def ordered_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1, desc: Optional[str] = None) -> List[R]:
    """fn over items, results in input order whatever the worker count."""
    items = list(items)
    with tqdm(total=len(items), desc=desc, disable=None, file=sys.stderr, leave=False) as bar:

        def task(item: T) -> R:
            out = fn(item)
            bar.update(1)
            return out

        if jobs <= 1 or len(items) <= 1:
            return [task(item) for item in items]
        logger.info("evaluating %d queries on %d threads", len(items), jobs)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(task, items))
