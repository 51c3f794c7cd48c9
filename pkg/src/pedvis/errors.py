"""Exception types shared across the package."""


class PedvisError(Exception):
    """Base class for all pedvis errors."""


class DuplicatePerson(PedvisError):
    """A person_id occurs more than once in the input."""


class DanglingReference(PedvisError):
    """A mother/father reference points to a person that does not exist."""


class CycleError(PedvisError):
    """The parent relation contains a cycle (a person is their own ancestor)."""


class UnknownPerson(PedvisError):
    """A queried person_id is not present in the graph."""


class UnknownUnit(PedvisError):
    """A queried unit_id is not present in the graph."""


class SchemaError(PedvisError):
    """The CSV header does not match the canonical schema."""


class ConfigError(PedvisError):
    """A layout/render configuration violates its invariants."""


class DomainError(PedvisError):
    """A numeric argument is outside its legal domain."""


class IndexOutOfRange(PedvisError):
    """A disease index falls outside [0, disease_count)."""


class PaletteError(PedvisError):
    """The palette lacks a color required by the data being rendered."""
