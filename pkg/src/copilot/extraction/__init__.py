from .extract import (
    EXAMPLE_COUNT,
    ExtractionResult,
    FewShotExample,
    build_extraction_messages,
    extract,
    load_fewshot_examples,
)
from .observation import (
    SymbolObservation,
    WidgetObservation,
    parse_observation_xml,
    serialize_observation_xml,
)

__all__ = [
    "EXAMPLE_COUNT",
    "ExtractionResult",
    "FewShotExample",
    "build_extraction_messages",
    "extract",
    "load_fewshot_examples",
    "SymbolObservation",
    "WidgetObservation",
    "parse_observation_xml",
    "serialize_observation_xml",
]
