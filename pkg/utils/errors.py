"""Error types shared by the engine and the command line."""


class TubedefError(ValueError):
    """Base error; ``kind`` is the stable identifier reported in JSON."""

    kind = 'error'

    def __init__(self, detail, kind=None):
        super().__init__(detail)
        self.detail = detail
        if kind is not None:
            self.kind = kind

    def to_dict(self):
        """Convert the error to the CLI error payload."""
        return {'error': {'kind': self.kind, 'detail': str(self.detail)}}


class FieldMismatchError(TubedefError):
    kind = 'field-mismatch'


class DimensionMismatchError(TubedefError):
    kind = 'dimension-mismatch'


class NotFiniteDimensionalError(TubedefError):
    kind = 'not-finite-dimensional-within-bound'


class UnsupportedError(TubedefError):
    kind = 'unsupported'


class UnsupportedCharacteristicError(TubedefError):
    kind = 'unsupported-characteristic'


class BandSyntaxError(TubedefError):
    """Raised for malformed band words; ``kind`` names the violated rule."""

    kind = 'band-syntax'


class InvalidBandError(TubedefError):
    kind = 'invalid-band-for-algebra'


class ConstructionConventionError(TubedefError):
    kind = 'construction-convention'


class TubeHypothesisError(TubedefError):
    kind = 'tube-hypothesis-violated'


class SurjectionSearchError(TubedefError):
    kind = 'surjection-search-failure'


class CertificateFailure(TubedefError):
    kind = 'certificate-failure'


class UnknownFixtureError(TubedefError):
    kind = 'unknown-fixture'


class OutOfRangeError(TubedefError):
    kind = 'out-of-range'


class FormatError(TubedefError):
    kind = 'parse-error'


class UsageError(TubedefError):
    kind = 'usage'


class NotFoundError(TubedefError):
    kind = 'not-found'
