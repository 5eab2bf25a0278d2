"""Secrecy rate regions for the two-user multi-antenna Gaussian broadcast
channel with confidential messages.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._mgbccm import *  # noqa: F401,F403
from ._mgbccm import __version__  # noqa: F401
