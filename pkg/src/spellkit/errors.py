"""Exception types shared across the toolkit."""


class SpellkitError(Exception):
    """Base class for every error raised by this package."""


class ConfigurationError(SpellkitError):
    """A configuration value or combination of values is unusable."""


class InputDataError(SpellkitError):
    """An input source could not be read or parsed."""


class VectorFormatError(InputDataError):
    """A vector file is malformed at a specific line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TrainingInputError(InputDataError):
    """The training corpus cannot produce a usable vocabulary."""


class EvaluationInputError(InputDataError):
    """A labeled test set is missing a required subset."""


class OutOfVocabularyError(SpellkitError):
    """The model has no way to produce a vector for the requested word."""


class UndefinedSimilarityError(SpellkitError):
    """Cosine similarity is undefined because an argument has zero norm."""
