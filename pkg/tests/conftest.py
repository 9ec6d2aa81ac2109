"""
Shared pytest setup: put the repository root and src/ on sys.path the way app.py does.
"""

import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

sys.path.insert(0, os.path.join(ROOT, 'src'))
sys.path.insert(0, ROOT)
