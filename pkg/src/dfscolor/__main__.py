import sys

from dfscolor.cli import main

sys.exit(main())
