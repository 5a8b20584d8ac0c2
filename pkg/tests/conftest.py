# conftest.py

import os
import sys

# tests import the packages the same way the console script does
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))
