import sys

from frobjac.cli import main

sys.exit(main())
