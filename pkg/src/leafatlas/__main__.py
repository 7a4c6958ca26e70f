import sys

from leafatlas.cli import main

sys.exit(main())
