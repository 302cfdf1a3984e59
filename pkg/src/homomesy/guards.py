"""Budget guards shared by enumeration and orbit iteration."""

DEFAULT_ENUMERATION_GUARD = 10**7
DEFAULT_ORBIT_GUARD = 10**6


class GuardExceeded(RuntimeError):
    """A state-space or orbit budget was exhausted before completion."""
