"""Cartan measures, covering numbers, Remez-type bounds and valency probes."""

from ._valentkit import *  # noqa: F401,F403
from ._valentkit import __version__, DomainError, InputError  # noqa: F401
