"""Exception types shared across the package."""


class MotiflensError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MotiflensError):
    """Input stream is not well-formed in the declared format."""


class DanglingEndpoint(ParseError):
    """A link references a node id that was never declared."""


class EmptyNetwork(MotiflensError):
    """The parsed network contains zero nodes."""


class UnknownElement(MotiflensError):
    """An element id does not exist in the owning network."""


class NotTemporal(MotiflensError):
    """A temporal operation was requested on a non-temporal network."""


class MissingOrdering(MotiflensError):
    """Matrix or time-arcs geometry requested without a node ordering."""


class MissingCoordinates(MotiflensError):
    """Node-link geometry requested without 2-D coordinates."""


class DegenerateRegion(MotiflensError):
    """A selection region has no usable extent and cannot be recovered."""


class UnknownPair(MotiflensError):
    """No explanation card exists for the requested motif/visualization pair."""


class UnknownInstance(MotiflensError):
    """An instance reference does not resolve against the session."""
