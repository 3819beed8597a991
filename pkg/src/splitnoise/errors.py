"""Exception hierarchy shared by all splitnoise modules."""


class SplitNoiseError(Exception):
    """Base class for all library errors."""


class NonZeroMean(SplitNoiseError):
    """A driver that must have zero mean has a nonzero constant coefficient."""


class PeriodMismatch(SplitNoiseError):
    """Periodic drivers that must share a period do not."""


class NotPSD(SplitNoiseError):
    """A matrix required to be positive semi-definite has an eigenvalue below tolerance."""


class NonFinite(SplitNoiseError):
    """An integrator step produced NaN or Inf (path blow-up)."""


class KappaVanished(SplitNoiseError):
    """The effective phase diffusion rate dropped below its floor."""


class PotentialInvalid(SplitNoiseError):
    """A confining potential failed its growth/spectral validation."""


class UnknownPreset(SplitNoiseError):
    """Preset name not recognized."""


class GridTooCoarse(SplitNoiseError):
    """Grid resolution is insufficient: analytic ground state is not resolved."""


class NotConverged(SplitNoiseError):
    """A linear solve or series evaluation did not reach its tolerance."""


class SolverSingular(SplitNoiseError):
    """A resolvent solve failed; grid too coarse or operator hypothesis violated."""


class MissingFrequency(SplitNoiseError):
    """A driver frequency is not covered by the coefficient table."""


class EmptySample(SplitNoiseError):
    """A statistic was requested on an empty sample."""


class DegenerateFit(SplitNoiseError):
    """A log-log rate fit received a zero error (exact match)."""


class ConfigError(SplitNoiseError):
    """Run configuration is malformed; message carries a field diagnostic."""
