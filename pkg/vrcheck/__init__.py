# Licensed with the 3-clause BSD license.  See LICENSE for details.
from .vrcheck import VRCheck
from .config import Config
from .core import AlternativeSet, WeakOrdering, Profile, Triple
