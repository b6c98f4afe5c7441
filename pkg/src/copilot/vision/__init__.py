from .ops import (
    SegmentationParams,
    SegmentResult,
    nearest_neighbour,
    segment_widget,
    to_greyscale,
    upscale,
)

__all__ = [
    "SegmentationParams",
    "SegmentResult",
    "nearest_neighbour",
    "segment_widget",
    "to_greyscale",
    "upscale",
]
