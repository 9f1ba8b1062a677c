"""Module entry point: ``python -m casebrief``."""

import sys

from casebrief.service.cli import main

if __name__ == "__main__":
    sys.exit(main())
