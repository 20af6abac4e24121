"""
SKEWRANK - Main Entry Point
"""

import os
import sys

# Windows consoles need UTF-8 for the report marks
if sys.platform == 'win32' and sys.stdout is not None:
    sys.stdout.reconfigure(encoding='utf-8', errors='replace')

BASE_PATH = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(BASE_PATH, "src"))

from cli import main

if __name__ == "__main__":
    sys.exit(main())
