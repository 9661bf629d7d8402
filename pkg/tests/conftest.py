"""Shared test helpers."""

import io

import numpy as np
from PIL import Image


def png_bytes(array: np.ndarray, mode: str | None = None) -> bytes:
    """Encode a numpy array as PNG bytes."""
    im = Image.fromarray(array, mode=mode)
    buf = io.BytesIO()
    im.save(buf, format="PNG")
    return buf.getvalue()


def bmp_bytes(array: np.ndarray) -> bytes:
    im = Image.fromarray(array)
    buf = io.BytesIO()
    im.save(buf, format="BMP")
    return buf.getvalue()
