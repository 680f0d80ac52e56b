"""
Entry point that runs a command by name with Django configured, accepting
the hyphenated spellings (``kernel-rank``, ``n-expand``).
"""

import os
import sys

ALIASES = {
    'kernel-rank': 'kernel_rank',
    'n-expand': 'n_expand',
}


def normalize_argv(argv):
    argv = list(argv)
    if len(argv) > 1:
        argv[1] = ALIASES.get(argv[1], argv[1])
    return argv


def run(args=None):
    """Run ``args`` (without the program name) and return the exit code."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'gesselkernel.settings')
    from django.core.management import execute_from_command_line

    args = sys.argv[1:] if args is None else list(args)
    try:
        execute_from_command_line(normalize_argv(['gessel'] + args))
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
