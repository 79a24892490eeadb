import sys

from belltransform.cli import main

sys.exit(main())
