__all__ = ['TorcsError', 'OddLatticeError', 'DegenerateLatticeError',
           'DegenerateModuleError', 'IllDefinedFormError',
           'ElementRangeError', 'DimensionMismatchError',
           'NotSymmetricError', 'TermBudgetExceeded',
           'VanishingGaussFactor', 'NotLagrangianError',
           'InputFormatError']



class TorcsError(Exception):
    """
    Base class of every error raised by torcs.
    """
    pass


class OddLatticeError(TorcsError, ValueError):
    """
    The level form has an odd diagonal entry.
    """
    def __init__(self, index, value):
        self.index = index
        self.value = value
        msg = 'K is not even: diagonal entry {0} equals {1}'.format(index, value)
        super(OddLatticeError, self).__init__(msg)


class DegenerateLatticeError(TorcsError, ValueError):
    """
    The level form has determinant zero.
    """
    pass


class DegenerateModuleError(TorcsError, ValueError):
    """
    The bicharacter of a quadratic module has a nontrivial radical.

    The radical elements are stored in `radical`.
    """
    def __init__(self, radical):
        self.radical = radical
        msg = ('bicharacter is degenerate: radical has {0} elements'
               .format(len(radical)))
        super(DegenerateModuleError, self).__init__(msg)


class IllDefinedFormError(TorcsError, ValueError):
    """
    The rational Gram matrix does not define a quadratic form on the group.
    """
    pass


class ElementRangeError(TorcsError, ValueError):
    """
    A group element has a coordinate outside of ``[0, d_i)``.
    """
    pass


class DimensionMismatchError(TorcsError, ValueError):
    pass


class NotSymmetricError(TorcsError, ValueError):
    pass


class TermBudgetExceeded(TorcsError, RuntimeError):
    """
    A finite sum would exceed the configured number of terms.
    """
    def __init__(self, terms, budget, what='sum'):
        self.terms = terms
        self.budget = budget
        msg = '{0} needs {1} terms, budget is {2}'.format(what, terms, budget)
        super(TermBudgetExceeded, self).__init__(msg)


class VanishingGaussFactor(TorcsError, RuntimeError):
    """
    A one-component Gauss factor is numerically zero, so the Haar
    normalized functional is undefined.
    """
    pass


class NotLagrangianError(TorcsError, ValueError):
    pass


class InputFormatError(TorcsError, ValueError):
    """
    Malformed input document. `lineno` is 1-based when known.
    """
    def __init__(self, msg, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            msg = 'line {0}: {1}'.format(lineno, msg)
        super(InputFormatError, self).__init__(msg)
