# SPDX-License-Identifier: Apache-2.0
"""Phase-conjugation near-field focusing of uniform circular arrays."""

from ._nff import *  # noqa: F401,F403
from ._nff import __doc__  # noqa: F401

__version__ = "0.1.0"
