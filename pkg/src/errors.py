class BandCLTError(Exception):
    """
    Base class for every error raised by the laboratory.
    """


class ConfigError(BandCLTError, ValueError):
    """
    Invalid configuration or violated precondition of an operation.
    """


class SizeLimitError(ConfigError):
    """
    A dense or operator path was asked for a matrix larger than its cap.
    """


class DegenerateSampleError(BandCLTError, ValueError):
    """
    Samples that carry no statistical information (too few, or zero variance).
    """


class DigestMismatchError(BandCLTError, ValueError):
    """
    Two reports produced from different configurations were compared.
    """


class ConvergenceError(BandCLTError, RuntimeError):
    """
    An iterative or refining numerical procedure hit its cap.
    """


class InvariantError(BandCLTError, RuntimeError):
    """
    A conservation check failed after a computation.
    """


class ReplicaError(BandCLTError, RuntimeError):
    """
    A Monte Carlo replica failed.

    Attributes:
        replica_id (int): Identifier of the failing replica.
    """

    def __init__(self, replica_id: int, cause: BaseException):
        super().__init__(f"Replica {replica_id} failed: {cause}")
        self.replica_id = replica_id
        self.cause = cause
