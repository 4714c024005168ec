import sys

from .textio.cli import main

sys.exit(main())
