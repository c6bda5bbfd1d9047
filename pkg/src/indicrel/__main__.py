import sys

from indicrel.cli import main

sys.exit(main())
