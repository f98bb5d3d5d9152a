import sys

from backcalc.cli import main

sys.exit(main())
