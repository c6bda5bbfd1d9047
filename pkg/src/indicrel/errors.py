class DataError(ValueError):
    """Input data violates an operation's contract (bad corpus, bad file, bad argument)."""


class ConversionError(DataError):
    """Strict script conversion hit a character with no aligned counterpart."""

    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"cannot convert {char!r} (U+{ord(char):04X}) at position {position}")


class TreeParseError(DataError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")
