"""Gate synthesis for n-qubit unitaries over controlled Walsh-Hadamard,
phase-shift and NOT gates, with a statevector simulator for verification."""

from hpsynth._core import *  # noqa: F401,F403
from hpsynth._core import __version__  # noqa: F401
