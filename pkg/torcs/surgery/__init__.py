"""
Closed 3-manifold invariants from integral surgery presentations.
"""
from __future__ import absolute_import

from . import presentation
from .presentation import *
from . import invariants
from .invariants import *
from . import haar
from .haar import *


__all__ = presentation.__all__[:]
__all__ += invariants.__all__
__all__ += haar.__all__
