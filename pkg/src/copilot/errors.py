"""Shared exception types for the copilot packages."""


class CopilotError(Exception):
    """Base class for all copilot errors."""


# --- scenario / simulator ---

class ParseError(CopilotError):
    """A scenario or script file could not be parsed."""


class ValidationError(CopilotError):
    """A loaded plant violates a structural invariant.

    Carries the offending alias (when known) so callers can point at
    the exact device block in the scenario file.
    """

    def __init__(self, message, alias=None):
        super().__init__(message)
        self.alias = alias


class UnknownAlias(CopilotError):
    def __init__(self, alias):
        super().__init__(f"unknown alias: {alias}")
        self.alias = alias


class SizeTooSmall(CopilotError):
    """Requested panel render size below the 64x64 minimum."""


# --- corpus ---

class EmptyCorpus(CopilotError):
    pass


class UnbalancedBraces(CopilotError):
    def __init__(self, file_name, line):
        super().__init__(f"unbalanced braces in {file_name} at line {line}")
        self.file_name = file_name
        self.line = line


# --- vector store ---

class EmptyCollection(CopilotError):
    pass


class EmbedderFailure(CopilotError):
    """Embedding failed for some records; reports partial progress."""

    def __init__(self, inserted, failures):
        super().__init__(
            f"embedding failed for {len(failures)} record(s); {inserted} inserted"
        )
        self.inserted = inserted
        self.failures = failures


# --- model gateway ---

class BackendUnavailable(CopilotError):
    pass


class ScriptExhausted(CopilotError):
    """The scripted chat backend has no remaining entry matching the input."""


class BadResponse(CopilotError):
    """A remote backend returned a body we could not interpret."""


# --- vision ---

class NoWidgetFound(CopilotError):
    pass


class MultipleCandidates(CopilotError):
    """More than one widget-like boundary detected; boxes attached."""

    def __init__(self, boxes):
        super().__init__(f"{len(boxes)} widget candidates found")
        self.boxes = boxes


# --- extraction ---

class WrongExampleCount(CopilotError):
    pass


class MalformedXml(CopilotError):
    pass


class ExtractionFailed(CopilotError):
    pass


# --- agents ---

class DuplicateToolName(CopilotError):
    pass


class UnparseableStep(CopilotError):
    pass


class StepBudgetExhausted(CopilotError):
    """ReAct loop hit max_steps without a final answer; partial trace attached."""

    def __init__(self, trace):
        super().__init__("step budget exhausted")
        self.trace = trace
