"""Run the hkltower command line with python -m hkltower."""
import sys

from hkltower.cli.main import main

sys.exit(main())
