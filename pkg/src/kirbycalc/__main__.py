from kirbycalc.cli import main
import sys

sys.exit(main())
