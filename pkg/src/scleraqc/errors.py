"""Exception hierarchy shared by all scleraqc modules."""


class ScleraQcError(Exception):
    """Base class for all library errors."""


class DegenerateInput(ScleraQcError):
    """Geometry input has no well-defined result (too few or collinear points)."""


class EmptyInput(ScleraQcError):
    """An operation that needs at least one point received none."""


class ParseError(ScleraQcError):
    """Landmark document is not well-formed."""


class SchemaError(ScleraQcError):
    """Landmark document is well-formed but violates the schema.

    The message names the offending field.
    """


class DegenerateEye(ScleraQcError):
    """Eye contour landmarks are collinear (closed or occluded eye)."""


class BothEyesDegenerate(ScleraQcError):
    """Neither eye produced a usable sclera geometry."""


class EmptyRegion(ScleraQcError):
    """A statistics region contains no pixels."""


class IoError(ScleraQcError):
    """Image file could not be read."""


class DecodeError(ScleraQcError):
    """Image file exists but could not be decoded."""


class UnsupportedFormat(ScleraQcError):
    """Image file is in a format this library does not accept."""
