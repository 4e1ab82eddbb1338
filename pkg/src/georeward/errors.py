"""Exception hierarchy for the geometry reward engine.

Exit-code mapping for the CLI lives in ``georeward.cli``; library code only
raises these types and never calls ``sys.exit``.
"""


class GeorewardError(Exception):
    """Base class for all engine errors."""


# --- geometry ---------------------------------------------------------------

class NonPositiveDepth(GeorewardError):
    pass


class SingularIntrinsics(GeorewardError):
    pass


class DegenerateProjection(GeorewardError):
    """Point lies on the principal plane of the target camera (|Z| < 1e-12)."""


class FrameMismatch(GeorewardError):
    """Per-frame input lists disagree in length."""


class EmptyInput(GeorewardError):
    pass


class NoValidPairs(GeorewardError):
    """Every candidate point/frame pair was filtered out.

    Callers must not treat this as zero error; it signals a degenerate or
    fully rejected input.
    """


# --- sampling ---------------------------------------------------------------

class DimensionMismatch(GeorewardError):
    pass


class EmptyKeys(GeorewardError):
    pass


class PatchTooLarge(GeorewardError):
    pass


# --- reward -----------------------------------------------------------------

class RewardUndefined(GeorewardError):
    """The requested metric is undefined on this input (e.g. no valid pairs)."""


class DegenerateBaseline(GeorewardError):
    """Zero-translation two-view pair; the fundamental matrix is undefined."""


class MissingImages(GeorewardError):
    pass


class NoOverlap(GeorewardError):
    """No warped pixel landed in bounds for any evaluated frame pair."""


# --- search -----------------------------------------------------------------

class GeneratorFailure(GeorewardError):
    def __init__(self, message, seed=None):
        super().__init__(message)
        self.seed = seed


class AllRewardsUndefined(GeorewardError):
    """Every candidate at a search step had an undefined reward."""


class BudgetExceeded(GeorewardError):
    pass


# --- losses -----------------------------------------------------------------

class ShapeMismatch(GeorewardError):
    pass


class SequenceTooShort(GeorewardError):
    pass


# --- curation ---------------------------------------------------------------

class TooFewCandidates(GeorewardError):
    pass


class IoFailure(GeorewardError):
    pass


# --- synth ------------------------------------------------------------------

class InfeasibleTrajectory(GeorewardError):
    """Scene points could not be placed inside every camera frustum."""


# --- interchange format -----------------------------------------------------

class BundleFormatError(GeorewardError):
    """Malformed manifest or tensor file."""
