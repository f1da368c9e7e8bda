import sys

from clwsd.cli import main

sys.exit(main())
