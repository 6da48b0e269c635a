"""
Modular data, weight corrections and the Maslov-Kashiwara index of the
toral theory.
"""
from __future__ import absolute_import

from . import modular
from .modular import *
from . import weights
from .weights import *
from . import maslov
from .maslov import *


__all__ = modular.__all__[:]
__all__ += weights.__all__
__all__ += maslov.__all__
