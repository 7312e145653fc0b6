"""Exact Steinberg-section, braid-variety and Stokes-diagram computations."""

try:
    from ._wildbraid import *  # noqa: F401,F403
    from ._wildbraid import __doc__  # noqa: F401
except ImportError:  # in-tree builds put the extension next to this package
    from _wildbraid import *  # noqa: F401,F403
