"""Exception types shared across the package."""


class StratalError(Exception):
    """Base class for all stratal errors."""


class SpaceFormatError(StratalError):
    """A space document violates the file schema or a structural invariant."""


class ConfigurationError(StratalError):
    """An operation was invoked with inconsistent or incomplete inputs."""


class RealizabilityError(StratalError):
    """A perversity cannot be realized by any admissible weight assignment."""


class StructureError(StratalError):
    """A complex fails a pseudomanifold structure requirement."""


class ConstructionError(StratalError):
    """A chain-complex construction violates D∘D = 0 or a shape constraint."""
