"""
Exceptions raised by :mod:`torcs`.

Every error derives from :class:`TorcsError` and from the closest builtin
exception, so callers may catch ``ValueError`` or ``RuntimeError`` as they
would for any numerical library.
"""
from __future__ import absolute_import

from . import errors
from .errors import *

__all__ = errors.__all__
