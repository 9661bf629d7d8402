"""Exception types shared across the package."""


class CrystalCountError(Exception):
    """Base class for errors raised by this package."""


class UnsupportedFormatError(CrystalCountError):
    """The input is not a raster format this package accepts."""


class CorruptImageError(CrystalCountError):
    """The raster file was recognized but could not be decoded."""


class ParamError(CrystalCountError, ValueError):
    """A parameter override is unknown or out of range."""


class DimensionMismatchError(CrystalCountError, ValueError):
    """Two rasters that must share dimensions do not."""


class ImageTooSmallError(CrystalCountError, ValueError):
    """The image is smaller than the adaptation tile."""


class MissingMapError(CrystalCountError):
    """Model B was requested without a radial distance map."""


class RdmFormatError(CrystalCountError):
    """Base class for radial distance map parsing failures."""


class BadMagicError(RdmFormatError):
    """The file does not start with the RDM1 magic."""


class TruncatedFileError(RdmFormatError):
    """The file ends before the payload the header promises."""


class DimensionOverflowError(RdmFormatError):
    """The header claims dimensions no real map can have."""
