"""Minimal RGB raster image type with PNG round-tripping.

Pixels are stored row-major, 8 bits per channel, so the buffer length is
always 3 * width * height. Conversions to numpy and PIL are provided for
the rendering and vision code.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from PIL import Image


@dataclass(frozen=True)
class RasterImage:
    width: int
    height: int
    pixels: bytes  # row-major RGB

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("image dimensions must be positive")
        if len(self.pixels) != 3 * self.width * self.height:
            raise ValueError(
                f"pixel buffer length {len(self.pixels)} != 3*{self.width}*{self.height}"
            )

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "RasterImage":
        if arr.ndim == 2:  # greyscale -> replicate channels
            arr = np.stack([arr] * 3, axis=-1)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ValueError("expected HxWx3 array")
        arr = np.ascontiguousarray(arr, dtype=np.uint8)
        return cls(width=arr.shape[1], height=arr.shape[0], pixels=arr.tobytes())

    def to_array(self) -> np.ndarray:
        return np.frombuffer(self.pixels, dtype=np.uint8).reshape(
            self.height, self.width, 3
        )

    @classmethod
    def from_pil(cls, img: Image.Image) -> "RasterImage":
        return cls.from_array(np.asarray(img.convert("RGB")))

    def to_pil(self) -> Image.Image:
        return Image.fromarray(self.to_array(), mode="RGB")

    @classmethod
    def from_png_bytes(cls, data: bytes) -> "RasterImage":
        return cls.from_pil(Image.open(io.BytesIO(data)))

    @classmethod
    def load_png(cls, path) -> "RasterImage":
        return cls.from_pil(Image.open(path))

    def to_png_bytes(self) -> bytes:
        buf = io.BytesIO()
        self.to_pil().save(buf, format="PNG")
        return buf.getvalue()

    def save_png(self, path) -> None:
        self.to_pil().save(path, format="PNG")
