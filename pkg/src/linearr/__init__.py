"""Exact line arrangements in the projective plane.

Arrangements over the rationals and cyclotomic fields, their weak
combinatorics and Poincare polynomials, supersolvability, the number of
lines needed to reach a supersolvable arrangement, and unexpected curves of
the dual point sets.
"""

from .arrangement import *  # noqa: F401,F403
from .generators import *  # noqa: F401,F403
from .invariants import *  # noqa: F401,F403
from .kernel import *  # noqa: F401,F403
from .resolution import *  # noqa: F401,F403
from .solver import *  # noqa: F401,F403
from .supersolvable import *  # noqa: F401,F403
from .unexpected import *  # noqa: F401,F403
from .render import RenderError, scene, to_svg, to_tikz  # noqa: F401

__version__ = "0.1.0"
