import sys

from quasiline.cli import main

sys.exit(main())
