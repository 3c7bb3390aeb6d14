# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.

import io
import logging
import sys
import traceback

from valcone.cli import command, token
from valcone.cli.exceptions import INVALID_INPUT, SUCCESS, CommandError
from valcone.exceptions import ValconeError

logger = logging.getLogger(__name__)

# last_backtrace: the stack trace (in string form) of the last Exception
#   caught by the interpreter.
last_backtrace = None

VERBOSE_FLAGS = ('-v', '--verbose')


def get_last_backtrace():
    """get_last_backtrace() -> str

    Get a string representation of the backtrace of the last Exception
    that was caught.

    (The return string will have several lines, separated by newlines.
    However, it will not end with a newline.)
    """
    return last_backtrace


def note_backtrace():
    """note_backtrace() -> None

    Record a string representation of the backtrace of the current Exception.
    This should only be called from an exception handler.
    """
    global last_backtrace

    fl = io.StringIO()
    traceback.print_exc(None, fl)
    last_backtrace = fl.getvalue().rstrip()
    fl.close()


def handle(args=None):
    """handle(args=None) -> int

    Process one command, given as a list of arguments, and return the
    exit code. With no arguments, this lists the commands.

    This catches all exceptions except KeyboardInterrupt. Errors are
    printed on stderr; stdout only carries command output.
    """
    if not args:
        args = ['help']
    try:
        source = token.InputSource(args)
        cmdclass = command.CommandToken().accept(source)
        cmd = cmdclass()
        status = cmd.perform(source)
        if status is None:
            status = SUCCESS
        return status
    except CommandError as ex:
        # Simple exception: print the message.
        if str(ex):
            print(str(ex), file=sys.stderr)
        return ex.status
    except ValconeError as ex:
        # The rule identifiers lead the message.
        print(str(ex), file=sys.stderr)
        return INVALID_INPUT
    except KeyboardInterrupt:
        raise
    except Exception as ex:
        # Unexpected exception: print it, and save a backtrace.
        note_backtrace()
        logger.debug('%s', last_backtrace)
        print('Python exception:', ex.__class__.__name__ + ':', str(ex), file=sys.stderr)
        return INVALID_INPUT


def main(argv=None):
    """main(argv=None) -> None

    The valcone entry point. A -v or --verbose flag anywhere turns on
    debug logging (on stderr).
    """
    if argv is None:
        argv = sys.argv[1:]
    verbose = any(arg in VERBOSE_FLAGS for arg in argv)
    args = [arg for arg in argv if arg not in VERBOSE_FLAGS]

    logging.basicConfig(
        stream=sys.stderr,
        level=(logging.DEBUG if verbose else logging.WARNING),
        format='%(name)s: %(levelname)s: %(message)s')

    sys.exit(handle(args))


if __name__ == '__main__':
    main()
