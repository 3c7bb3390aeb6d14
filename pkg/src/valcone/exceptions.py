class ValconeError(Exception):
    """ValconeError: represents a failure which the library can name.

    Every failure carries a stable rule identifier (E_PROX, E_MCV_INVALID,
    and so on). The message is the identifier followed by the detail.

    ValconeError(rule, detail) -- constructor
    """

    rule = 'E_UNKNOWN'

    def __init__(self, rule=None, detail=''):
        if rule is not None:
            self.rule = rule
        self.detail = detail
        if detail:
            Exception.__init__(self, self.rule + ': ' + detail)
        else:
            Exception.__init__(self, self.rule)


class ConfigurationError(ValconeError):
    """ConfigurationError: represents a configuration which breaks one
    or more validation rules.

    Fields:

    violations -- list of (rule, detail) pairs, in the order found.

    The rule of the exception itself is the rule of the first violation.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        (rule, detail) = self.violations[0]
        ValconeError.__init__(self, rule, detail)

    def __str__(self):
        return '; '.join(rule + ': ' + detail for (rule, detail) in self.violations)

    def rules(self):
        """rules() -> list of str

        The rule identifiers of all violations, without repeats.
        """
        res = []
        for (rule, detail) in self.violations:
            if rule not in res:
                res.append(rule)
        return res


class McvError(ValconeError):
    """McvError: a maximal contact value sequence which is inadmissible
    (E_MCV_INVALID), or an internal inconsistency while computing one
    (E_MCV).
    """

    rule = 'E_MCV_INVALID'


class LatticeError(ValconeError):
    """LatticeError: a failure in Picard lattice arithmetic: mismatched
    dimensions, a class which does not apply, a singular basis, or a
    broken structural identity.
    """

    rule = 'E_DIM'


class ConeError(ValconeError):
    """ConeError: a generator list which fails its own checks, or a
    request for cone generators which the criterion does not provide.
    """

    rule = 'E_DUAL'


class RealizationError(ValconeError):
    """RealizationError: the configuration could not be placed in
    coordinates with the requested parameters.
    """

    rule = 'E_REALIZE'


class InterpolationError(ValconeError):
    """InterpolationError: only the zero polynomial satisfies the
    requested multiplicity conditions.
    """

    rule = 'E_EMPTY'


class PolynomialParseError(ValconeError):
    """PolynomialParseError: represents a failure to parse a polynomial
    string.
    """

    rule = 'E_PARSE'

    def __init__(self, detail, pos=None):
        if pos is not None:
            detail = detail + ' (at position ' + str(pos) + ')'
        ValconeError.__init__(self, None, detail)
