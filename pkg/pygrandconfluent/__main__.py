"""python -m pygrandconfluent"""
import sys
from pygrandconfluent.cli import main

sys.exit(main())
