from bipartify.cli import main
import sys

sys.exit(main())
