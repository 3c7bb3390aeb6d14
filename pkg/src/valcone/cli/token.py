# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.

import os.path

from valcone import configfile, invariants
from valcone.cli.exceptions import CommandError


class Token:
    """Token: represents a command element to be parsed.

    A Token is an object which can grab an element from the command-line
    arguments. Each subclass of Token grabs a particular kind of element.
    For example, CommandToken (in command.py) grabs a word that matches
    one of the commands (classify, cone, etc).

    Publicly readable fields:

    prompt -- the name of this element, for error messages

    Methods:

    accept() -- grab the desired command element and return it.
    """

    prompt = ''

    def accept(self, source):
        """accept(source) -> value

        Grab the desired command element from the given InputSource, and
        return it. The type of value returned depends on the Token subclass.
        """
        raise NotImplementedError(str(self))


class FileToken(Token):
    """FileToken: Grab the name of a file.

    FileToken(mustexist=True) -- constructor

    If mustexist is True, this only accepts the name of a file which
    exists. Returns (path, exists).
    """

    prompt = 'file'

    def __init__(self, mustexist=True):
        self.mustexist = mustexist

    def accept(self, source):
        val = source.pop_word(self)
        if not os.path.exists(val):
            if self.mustexist:
                raise CommandError('Does not exist: ' + val)
            return (val, False)
        if not os.path.isfile(val):
            raise CommandError('Not a file: ' + val)
        return (val, True)


class ConfigToken(FileToken):
    """ConfigToken: Grab the name of a configuration file, and load it.
    Returns the Configuration. A file which breaks the rules raises
    ConfigurationError.
    """

    prompt = 'configuration file'

    def accept(self, source):
        (path, exists) = FileToken.accept(self, source)
        return configfile.load_configuration(path)


def int_value(val):
    try:
        return int(val)
    except ValueError:
        raise CommandError('Not an integer: ' + val)


def pair_value(val):
    """pair_value(val) -> (int, int)

    "8,8" or "8x8".
    """
    parts = val.replace('x', ',').split(',')
    if len(parts) != 2:
        raise CommandError('Not a pair of integers: ' + val)
    return (int_value(parts[0]), int_value(parts[1]))


def mcv_value(val):
    return invariants.parse_mcv(val)


def word_value(val):
    return val


def choice_value(*choices):
    """choice_value(*choices) -> function

    A converter accepting only the given words.
    """
    def convert(val):
        if val not in choices:
            raise CommandError('Expected one of ' + ', '.join(choices) + ': ' + val)
        return val
    return convert


# The kind of an option which takes no value.
FLAG = None


class OptionsToken(Token):
    """OptionsToken: Grab all the remaining "--name value" options.

    OptionsToken(options) -- constructor

    The options argument maps each option name (with its dashes) to a
    converter function for the value, or to FLAG for an option which
    takes no value. Returns a dict mapping the names seen to their
    converted values (True for flags).
    """

    prompt = 'option'

    def __init__(self, options):
        self.options = options

    def accept(self, source):
        res = {}
        while not source.is_empty():
            name = source.pop_word(self)
            if name not in self.options:
                raise CommandError('Unknown option: "' + name + '"')
            if name in res:
                raise CommandError('Option given twice: "' + name + '"')
            convert = self.options[name]
            if convert is FLAG:
                res[name] = True
                continue
            if source.is_empty():
                raise CommandError('Option ' + name + ' needs a value')
            res[name] = convert(source.pop_word(self))
        return res


class InputSource:
    """InputSource: represents the command-line arguments. Various Tokens
    pull words out of the InputSource.

    A Token can also push information back into the InputSource, which
    means that lookahead is possible.

    InputSource(args=None) -- constructor

    The args, if supplied, should be a list of shell-style arguments.
    (That is, entries may contain whitespace; and the whitespace should be
    considered to be a part of the entries, as opposed to separating
    entries.)

    Methods:

    is_empty() -- check whether any input is left
    pop_word() -- grab one word of input
    push_word() -- push back one word of input
    drain() -- grab all remaining words of input
    """

    def __init__(self, args=None):
        self.list = list(args or [])
        self.pushback = []

    def is_empty(self):
        """is_empty() -> bool

        Check whether any input is left.
        """
        return not self.list and not self.pushback

    def pop_word(self, tok):
        """pop_word(tok) -> str

        Grab one word of input. If none is left, this raises a
        CommandError naming the token's prompt.
        """
        if self.pushback:
            return self.pushback.pop()
        if not self.list:
            prompt = tok.prompt if tok is not None else 'argument'
            raise CommandError('Missing ' + prompt)
        return self.list.pop(0)

    def push_word(self, val):
        """push_word(val) -> None

        Push back one word of input. This will become the next word popped.
        """
        self.pushback.append(val)

    def drain(self):
        """drain() -> list of str

        Grab all the remaining words of input, and return them as a list.
        """
        res = []
        while not self.is_empty():
            res.append(self.pop_word(None))
        return res
