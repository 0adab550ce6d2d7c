import sys

from qsingleton.cli import main

sys.exit(main())
