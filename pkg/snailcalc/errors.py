"""
Errors raised by snailcalc operations.

Every error is a :class:`SnailCalcError` carrying a stable numeric ``code``.
The command line front end reports the code in its JSON error body.
"""
from collections import namedtuple


ErrorCodeInfo = namedtuple('ErrorCodeInfo', ['code', 'desc'])


class ErrorCodes(object):
    """
    Error codes and documented descriptions.
    """
    # 1xxx: Matrices
    determinant_invalid = ErrorCodeInfo('1001', 'Determinant is not +1 or -1')
    not_hyperbolic = ErrorCodeInfo('1002', 'Matrix is not hyperbolic (needs |trace| >= 3 and det +1)')

    # 2xxx: Words
    word_syntax = ErrorCodeInfo('2001', 'Word or code text does not match the grammar')
    rewrite_fuel = ErrorCodeInfo('2002', 'Rewriting ran out of fuel')
    orientation_reversing = ErrorCodeInfo('2003', 'Mapping class reverses orientation')
    not_permutation_trivial = ErrorCodeInfo('2004', 'Mod 2 reduction is not the identity')

    # 3xxx: Euclid
    not_coprime = ErrorCodeInfo('3001', 'Parameters are not relatively prime')
    not_positive = ErrorCodeInfo('3002', 'Matrix has no representative with nonnegative entries')
    invalid_parameters = ErrorCodeInfo('3003', 'Invalid parameters')

    # 5xxx: Skeletons
    not_reduced = ErrorCodeInfo('5001', 'Crossing sequence is not reduced')
    invalid_crossing_sequence = ErrorCodeInfo('5002', 'Invalid crossing sequence')

    # 6xxx: Arrow trees
    not_positive_core = ErrorCodeInfo('6001', 'Word is not a product of positive powers of A and B')

    # 9xxx: Input files and settings
    invalid_input = ErrorCodeInfo('9001', 'Input file failed schema validation')
    input_unreadable = ErrorCodeInfo('9002', 'Input file could not be read')
    invalid_setting = ErrorCodeInfo('9003', 'A SNAILCALC_* setting has an invalid value')


_code_to_desc = {v.code: v.desc for v in vars(ErrorCodes).values() if isinstance(v, ErrorCodeInfo)}


class SnailCalcError(ValueError):
    """
    A domain error.

    :ivar code: Error code, one of :class:`ErrorCodes`.
    :ivar message: Details about this occurrence.
    """
    info = ErrorCodeInfo('', '')

    def __init__(self, message=''):
        self.code = self.info.code
        self.message = message
        blurb = '{} {}'.format(type(self).__name__, self.code)
        if message:
            blurb += ": '{}'".format(message)
        super(SnailCalcError, self).__init__(blurb)

    @property
    def description(self):
        """
        The documented description of the error code, if any.
        """
        return _code_to_desc.get(self.code, '')

    def to_json(self):
        return {'error': type(self).__name__, 'code': self.code, 'message': self.message}


class DeterminantInvalid(SnailCalcError):
    info = ErrorCodes.determinant_invalid


class NotHyperbolic(SnailCalcError):
    info = ErrorCodes.not_hyperbolic


class WordSyntaxError(SnailCalcError):
    """
    :ivar offset: Byte offset of the offending character in the input text.
    """
    info = ErrorCodes.word_syntax

    def __init__(self, message='', offset=0):
        self.offset = offset
        super(WordSyntaxError, self).__init__('{} at offset {}'.format(message, offset))

    def to_json(self):
        js = super(WordSyntaxError, self).to_json()
        js['offset'] = self.offset
        return js


class RewriteFuelExceeded(SnailCalcError):
    info = ErrorCodes.rewrite_fuel


class OrientationReversing(SnailCalcError):
    info = ErrorCodes.orientation_reversing


class NotPurePermutationTrivial(SnailCalcError):
    info = ErrorCodes.not_permutation_trivial


class NotCoprime(SnailCalcError):
    info = ErrorCodes.not_coprime


class NotPositive(SnailCalcError):
    info = ErrorCodes.not_positive


class InvalidParameters(SnailCalcError):
    info = ErrorCodes.invalid_parameters


class NotReduced(SnailCalcError):
    info = ErrorCodes.not_reduced


class InvalidCrossingSequence(SnailCalcError):
    info = ErrorCodes.invalid_crossing_sequence


class NotPositiveCore(SnailCalcError):
    info = ErrorCodes.not_positive_core


class InputUnreadable(SnailCalcError):
    info = ErrorCodes.input_unreadable


class InvalidSetting(SnailCalcError):
    info = ErrorCodes.invalid_setting
