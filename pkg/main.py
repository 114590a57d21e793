"""
Dedekind Symbols - Main Entry Point
Command line by default; 'serve' starts the HTTP API
"""

import sys

from dedekind_symbols.cli import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
