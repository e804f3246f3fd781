import sys

from casehide.cli import main

sys.exit(main())
