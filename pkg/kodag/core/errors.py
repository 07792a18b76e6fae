class ConfigError(ValueError):
    """Invalid configuration, argument combination or input document."""


class SequenceParseError(ConfigError):
    def __init__(self, token, reason):
        self.token = token
        super(SequenceParseError, self).__init__('Cannot parse sequence token {!r}: {}'.format(token, reason))


class DocumentError(ConfigError):
    """Malformed poset, matrix or fixture document."""


class DomainError(ValueError):
    """Arguments outside the mathematical domain of an operation."""


class JoinConditionError(DomainError):
    def __init__(self, left_size, right_size):
        self.left_size = left_size
        self.right_size = right_size
        super(JoinConditionError, self).__init__(
            'Natural join requires equal shared level sizes, got {} and {}'.format(left_size, right_size))


class PreconditionError(DomainError):
    """An operation stated only for cobweb posets received another poset."""


class CapExceededError(RuntimeError):
    def __init__(self, projected, cap):
        self.projected = projected
        self.cap = cap
        super(CapExceededError, self).__init__(
            'Enumeration of {} chains exceeds the cap of {}'.format(projected, cap))
