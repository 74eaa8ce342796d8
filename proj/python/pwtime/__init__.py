"""Clock-conditioned dynamics, time-averaged reduced states, and the
linear-entropy entanglement indicator for finite-dimensional systems."""

from pwtime._core import *  # noqa: F401,F403
from pwtime._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
