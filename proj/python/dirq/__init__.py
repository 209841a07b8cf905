from ._dirq import *  # noqa: F401,F403
from ._dirq import __version__  # noqa: F401
