"""
Django settings for the tautcalc project.

The project has no web front end: it exists to host the intersections app
and its management commands (eval, table, tau, jacobian, selftest).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv
# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / ".env")

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "django-insecure-tautcalc-local-development-key")

DEBUG = os.getenv("DJANGO_DEBUG", "False") == "True"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'intersections',
]


# No models; the engine keeps its memo tables in memory and in the
# optional cache file below, so no database is configured.
DATABASES = {}


# Engine options

# memo cache file used when a command gets no --cache ("" = none)
TAUTCALC_CACHE = os.getenv("TAUTCALC_CACHE", "")
# default worker count for --jobs
TAUTCALC_JOBS = int(os.getenv("TAUTCALC_JOBS", "1"))
# the evaluators recurse once per dimension step and boundary split
TAUTCALC_RECURSION_LIMIT = int(os.getenv("TAUTCALC_RECURSION_LIMIT", "10000"))
# stack size for --jobs worker threads, in MiB
TAUTCALC_THREAD_STACK_MB = int(os.getenv("TAUTCALC_THREAD_STACK_MB", "64"))
TAUTCALC_LOG_LEVEL = os.getenv("TAUTCALC_LOG_LEVEL", "WARNING")


# Logging: results go to stdout, everything else to stderr.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'intersections': {
            'handlers': ['stderr'],
            'level': TAUTCALC_LOG_LEVEL,
            'propagate': False,
        },
    },
}
