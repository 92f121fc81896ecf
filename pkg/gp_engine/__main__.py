# Path and File Name : gp_engine/__main__.py
# Author: gp_engine maintainers
# Details of functionality of this file: Module entry point enabling python3 -m gp_engine invocation

"""
Module entry point for python3 -m gp_engine.
"""

import sys

from gp_engine.cli import main

if __name__ == '__main__':
    sys.exit(main())
