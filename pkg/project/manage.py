#!/usr/bin/env python
"""tautcalc command line.

    python manage.py eval "M(2,0): d1^3"
    python manage.py table --space 3,0
    python manage.py tau --gmax 4
    python manage.py jacobian --genus 5
    python manage.py selftest [--full]
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'project.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django is not importable; install the packages in "
            "requirements.txt into the active environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
