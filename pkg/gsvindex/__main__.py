#!/usr/bin/env python3
# File name   : __main__.py
# Description : python -m gsvindex
import sys

from .cli import main

sys.exit(main())
