# Exit codes.
SUCCESS = 0
INVALID_INPUT = 1
NEGATIVE_RESULT = 2


class CommandError(Exception):
    """CommandError: represents a failure in command processing which
    should be reported to the user.

    CommandError(msg, status=INVALID_INPUT) -- constructor

    The status is the exit code of the process. NEGATIVE_RESULT marks a
    question which was answered in the negative (no cone of curves, no
    witness found) rather than bad input.
    """

    def __init__(self, msg, status=INVALID_INPUT):
        Exception.__init__(self, msg)
        self.status = status
