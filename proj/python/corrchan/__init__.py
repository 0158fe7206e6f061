"""Python interface to the channel-synthesis and correlation-extraction core."""

try:
    from ._corrchan import *  # noqa: F401,F403  installed package layout
except ImportError:  # pragma: no cover - build-tree layout for in-repo tests
    from _corrchan import *  # noqa: F401,F403

__version__ = "0.1.0"
