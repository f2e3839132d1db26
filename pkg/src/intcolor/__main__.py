from intcolor.cli import main
import sys

sys.exit(main())
