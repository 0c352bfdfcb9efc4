"""nu-Tamari and nu-Greedy lattices on lattice paths, with the degree and
isomorphism machinery around paths of maximal in- and out-degree."""
from .paths import *  # noqa: F401,F403
from .tamari import *  # noqa: F401,F403
from .greedy import *  # noqa: F401,F403
from .posetcore import *  # noqa: F401,F403
from .distance import *  # noqa: F401,F403
from .degrees import *  # noqa: F401,F403
from .maps import *  # noqa: F401,F403

__version__ = "0.1.0"
