"""
The :mod:`torcs` module computes abelian Reshetikhin-Turaev and toral
Chern-Simons invariants of closed oriented 3-manifolds and machine-checks
the identities that relate them.

A 3-manifold is given by an integral surgery presentation, that is a
symmetric linking matrix `L`, and the theory by an even nondegenerate
lattice level `K` (or directly by a finite quadratic module). In a typical
work flow the level is turned into its discriminant module with
:func:`discriminant_module`, the linking matrix into a
:class:`SurgeryPresentation`, and the two raw scalars are computed by
:func:`rt_raw_invariant` and :func:`cs_raw_invariant`. All group-theoretic
data is exact (integer matrices, rational phases); only the final sums are
evaluated, at a configurable binary precision, with :mod:`mpmath`.

The :mod:`torcs.tqft` subpackage holds the modular data of the pointed
category, the weight corrections of the extended theory and the
Maslov-Kashiwara index. :mod:`torcs.cli` is the command-line front end.
"""


import torcs.exactnum
from torcs.exactnum import *
import torcs.intlinalg
from torcs.intlinalg import *
import torcs.quadmod
from torcs.quadmod import *
import torcs.surgery
from torcs.surgery import *
import torcs.tqft
from torcs.tqft import *

__version__ = '0.1.0'

__all__ = ['__version__']
__all__ += torcs.exactnum.__all__[:]
__all__ += torcs.intlinalg.__all__
__all__ += torcs.quadmod.__all__
__all__ += torcs.surgery.__all__
__all__ += torcs.tqft.__all__
