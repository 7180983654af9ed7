import sys

from stokesgraph.cli import main

sys.exit(main())
