# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""cli: the valcone command-line tool.

token -- Token classes which grab command elements from the arguments
command -- the commands
frame -- dispatch, error reporting, and the entry point main()
"""
