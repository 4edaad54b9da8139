import sys

from gridmax.cli import main

sys.exit(main())
