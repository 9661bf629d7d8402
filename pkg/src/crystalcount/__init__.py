"""Crystal counting and sizing for microscope images."""

__version__ = "0.1.0"
