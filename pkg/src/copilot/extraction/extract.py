"""Few-shot widget data extraction through the chat backend.

Four example image-label pairs are inserted as alternating
user/assistant messages, the query image is appended as the final user
message, and the reply is parsed as observation XML. Calls always run at
temperature 0. One corrective retry on malformed output.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..errors import ExtractionFailed, MalformedXml, WrongExampleCount
from ..models.messages import ChatMessage, CompletionRequest
from ..raster import RasterImage
from .observation import (
    WidgetObservation,
    parse_observation_xml,
    serialize_observation_xml,
)

EXAMPLE_COUNT = 4

QUERY_TEXT = "Extract the widget data in the same XML format as the examples."
RETRY_TEXT = (
    "Your previous reply was not valid widget XML. Respond with only the "
    "<widget>...</widget> block, nothing else."
)


@dataclass(frozen=True)
class FewShotExample:
    image: RasterImage
    labels: WidgetObservation


def load_fewshot_examples(directory) -> list[FewShotExample]:
    """Load the shipped examples: NN.png paired with NN.xml."""
    directory = Path(directory)
    examples = []
    for png in sorted(directory.glob("*.png")):
        xml = png.with_suffix(".xml")
        examples.append(
            FewShotExample(
                image=RasterImage.load_png(png),
                labels=parse_observation_xml(xml.read_text(encoding="utf-8")),
            )
        )
    return examples


def build_extraction_messages(
    examples: list[FewShotExample], query_image: RasterImage
) -> list[ChatMessage]:
    if len(examples) != EXAMPLE_COUNT:
        raise WrongExampleCount(
            f"need exactly {EXAMPLE_COUNT} few-shot examples, got {len(examples)}"
        )
    messages: list[ChatMessage] = []
    for ex in examples:
        messages.append(ChatMessage(role="user", text=QUERY_TEXT, images=[ex.image]))
        messages.append(
            ChatMessage(role="assistant", text=serialize_observation_xml(ex.labels))
        )
    messages.append(ChatMessage(role="user", text=QUERY_TEXT, images=[query_image]))
    return messages


@dataclass
class ExtractionResult:
    observation: WidgetObservation
    retries: int


def extract(
    widget_image: RasterImage, chat_backend, examples: list[FewShotExample]
) -> ExtractionResult:
    messages = build_extraction_messages(examples, widget_image)
    retries = 0
    while True:
        reply = chat_backend.complete(
            CompletionRequest(messages=messages, temperature=0.0)
        )
        try:
            return ExtractionResult(
                observation=parse_observation_xml(reply.text), retries=retries
            )
        except MalformedXml as exc:
            if retries >= 1:
                raise ExtractionFailed(str(exc)) from exc
            retries += 1
            messages = messages + [
                ChatMessage(role="assistant", text=reply.text),
                ChatMessage(role="user", text=RETRY_TEXT),
            ]
