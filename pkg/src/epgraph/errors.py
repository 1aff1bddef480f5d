"""Exception hierarchy shared by every epgraph module."""


class EpgraphError(Exception):
    """Base class for all errors raised by epgraph."""


class NotAGroup(EpgraphError):
    """An ingested Cayley table fails one of the group axioms."""


class OrderCapExceeded(EpgraphError):
    """A construction would produce more elements than the configured cap."""


class UnsupportedSpec(EpgraphError):
    """A family descriptor has out-of-range parameters."""


class ParseError(EpgraphError):
    """A group spec string or input file could not be parsed."""


class NotAPGroup(EpgraphError):
    pass


class NotNilpotent(EpgraphError):
    pass


class NotApplicable(EpgraphError):
    """A theorem check was asked about a group outside its hypothesis."""


class TrivialGroup(EpgraphError):
    pass


class SameVertex(EpgraphError):
    pass


class EmptyGraph(EpgraphError):
    pass


class Disconnected(EpgraphError):
    pass


class SizeMismatch(EpgraphError):
    pass
