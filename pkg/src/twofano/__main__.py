import sys

from twofano.cli import main

sys.exit(main())
