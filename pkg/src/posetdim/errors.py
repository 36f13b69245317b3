"""Exception hierarchy. Every error raised by the library derives from PosetError."""


class PosetError(ValueError):
    pass


class DuplicateId(PosetError):
    pass


class UnknownId(PosetError):
    pass


class CycleDetected(PosetError):
    pass


class DomainMismatch(PosetError):
    pass


class InconsistentPartial(PosetError):
    pass


class OverlappingDomains(PosetError):
    pass


# multipartite

class PartsOverlap(PosetError):
    pass


class EmptyPart(PosetError):
    pass


class TooFewParts(PosetError):
    pass


class BackwardRelation(PosetError):
    pass


class IntraPartRelation(PosetError):
    pass


class SingleLevel(PosetError):
    pass


class IndexOutOfRange(PosetError):
    pass


class NotStrictlyOrdered(PosetError):
    pass


# solver

class EmptyPoset(PosetError):
    pass


class NotARealizer(PosetError):
    pass


class CapExceeded(PosetError):
    """No realizer of size <= max_d exists. The search certificate is attached."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


# constructions / bounds

class TooSmall(PosetError):
    pass


class BadMatching(PosetError):
    pass


class BadParameters(PosetError):
    pass


class NotABipartiteRealizer(PosetError):
    pass
