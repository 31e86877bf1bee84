import sys

from keypoly.cli import main

sys.exit(main())
