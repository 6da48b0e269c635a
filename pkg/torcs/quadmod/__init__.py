"""
Finite quadratic modules: discriminant modules of even lattices, user
specified modules, Gauss sums, Milgram's formula and the anomaly constant.
"""
from __future__ import absolute_import

from . import base
from .base import *
from . import lattice
from .lattice import *
from . import gauss
from .gauss import *


__all__ = base.__all__[:]
__all__ += lattice.__all__
__all__ += gauss.__all__
