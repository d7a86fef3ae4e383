import sys

from glqdiv.cli import main

sys.exit(main())
