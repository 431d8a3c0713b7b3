import sys

from typedefect.cli import main

sys.exit(main())
