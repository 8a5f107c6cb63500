"""Exception types shared across the package.

The CLI maps these onto its exit codes: ConfigError -> 2,
VerificationError -> 3, ResourceCapError -> 4.
"""


class ConfigError(ValueError):
    """Invalid Cartan type, lattice, automorphism or element syntax."""


class VerificationError(RuntimeError):
    """A mathematically guaranteed identity failed; signals an implementation bug.

    Carries an optional ``payload`` with the offending data for diagnosis.
    """

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


class ResourceCapError(RuntimeError):
    """A search or tabulation exceeded its configured size cap."""
