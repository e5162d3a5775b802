"""Allow ``python -m weakval``."""

import sys

from weakval.cli.main import main

sys.exit(main())
