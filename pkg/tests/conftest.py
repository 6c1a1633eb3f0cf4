import os
import sys

# Allow running the tests from a checkout without installing the package;
# the pure-Python scan keeps everything functional in that case.
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
