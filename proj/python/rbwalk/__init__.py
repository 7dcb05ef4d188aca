from ._rbwalk import *  # noqa: F401,F403
from ._rbwalk import __doc__  # noqa: F401
