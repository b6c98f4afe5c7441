"""Widget image preprocessing: greyscale, boundary segmentation, upscaling.

Segmentation exploits the renderer's contract: every widget carries a
solid white rectangular boundary on a grey background. Canny edges of
that boundary form a closed, near-rectangular contour; the largest such
contour above min_area is the widget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

import cv2
import numpy as np

from ..errors import MultipleCandidates, NoWidgetFound
from ..raster import RasterImage


@dataclass(frozen=True)
class SegmentationParams:
    canny_low: int = 50
    canny_high: int = 150
    min_area: int = 400
    fill_ratio: float = 0.9  # contour area / bbox area; near-rectangular gate

    def __post_init__(self):
        if not (0 < self.canny_low < self.canny_high):
            raise ValueError("need 0 < canny_low < canny_high")
        if self.min_area < 1:
            raise ValueError("min_area must be >= 1")


@dataclass(frozen=True)
class SegmentResult:
    image: RasterImage
    bbox: tuple[int, int, int, int]  # x, y, w, h in panel coordinates
    clipped: bool  # crop hit the panel edge


def to_greyscale(image: RasterImage) -> np.ndarray:
    """Luma conversion, round(0.299R + 0.587G + 0.114B), dims preserved."""
    arr = image.to_array().astype(np.float64)
    luma = 0.299 * arr[:, :, 0] + 0.587 * arr[:, :, 1] + 0.114 * arr[:, :, 2]
    return np.round(luma).astype(np.uint8)


def segment_widget(
    panel: RasterImage, params: SegmentationParams = SegmentationParams()
) -> SegmentResult:
    grey = to_greyscale(panel)
    edges = cv2.Canny(grey, params.canny_low, params.canny_high)
    # close 1 px gaps so the boundary contour is watertight
    edges = cv2.dilate(edges, np.ones((3, 3), np.uint8))

    contours, _ = cv2.findContours(edges, cv2.RETR_EXTERNAL, cv2.CHAIN_APPROX_SIMPLE)
    boxes = []
    for contour in contours:
        x, y, w, h = cv2.boundingRect(contour)
        if w * h < params.min_area:
            continue
        if cv2.contourArea(contour) / float(w * h) < params.fill_ratio:
            continue
        # undo the 1 px dilation used to close the boundary
        boxes.append((x + 1, y + 1, w - 2, h - 2))

    if not boxes:
        raise NoWidgetFound("no closed widget boundary detected")
    if len(boxes) > 1:
        raise MultipleCandidates(sorted(boxes))

    x, y, w, h = boxes[0]
    x0, y0 = max(0, x), max(0, y)
    x1, y1 = min(panel.width, x + w), min(panel.height, y + h)
    clipped = x <= 0 or y <= 0 or x + w >= panel.width or y + h >= panel.height
    crop = panel.to_array()[y0:y1, x0:x1]
    return SegmentResult(image=RasterImage.from_array(crop), bbox=(x, y, w, h), clipped=clipped)


Upscaler = Callable[[RasterImage, int], RasterImage]


def nearest_neighbour(image: RasterImage, factor: int) -> RasterImage:
    arr = image.to_array()
    out = np.repeat(np.repeat(arr, factor, axis=0), factor, axis=1)
    return RasterImage.from_array(out)


def upscale(
    image: RasterImage, factor: int = 4, method: Union[str, Upscaler] = "nearest"
) -> RasterImage:
    """Scale by an integer factor; output dims are exactly factor x input.

    `method` is either "nearest" or a callable, so learned upscalers can
    be plugged in without touching callers.
    """
    if factor < 1:
        raise ValueError("factor must be >= 1")
    if factor == 1:
        return image
    upscaler = nearest_neighbour if method == "nearest" else method
    out = upscaler(image, factor)
    expected = (image.width * factor, image.height * factor)
    if (out.width, out.height) != expected:
        raise ValueError(f"upscaler produced {out.width}x{out.height}, expected {expected}")
    return out
