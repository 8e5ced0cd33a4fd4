"""
Error hierarchy shared by every layer.
Library code raises these; only the CLI turns them into exit codes.
"""


class DivisivenessError(Exception):
    """Root of all errors raised by this package."""


class ProfileInputError(DivisivenessError, ValueError):
    """Unknown agent, unknown proposal, malformed ranking or permutation."""


class DisjointnessError(ProfileInputError):
    """Union of profiles whose electorates overlap."""


class EmptyCoalitionError(DivisivenessError):
    """A score or winner set was requested for an empty subprofile."""


class CapacityError(DivisivenessError):
    """Exact enumeration requested beyond the configured electorate cap."""


class ProfileParseError(ProfileInputError):
    """Malformed profile file; carries the offending line number."""

    def __init__(self, message: str, line_number: int = 0):
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number else ""
        super().__init__(f"{prefix}{message}")
