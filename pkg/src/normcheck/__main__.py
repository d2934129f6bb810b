import sys

from normcheck.cli import main

sys.exit(main())
