# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
from .errors import *
from .costmodel import *
from .rings import *
from .models import *
from .division import *
from .symbols import *
from .residue import *
from .adversary import *
from .verification import *
from .formatters import *

from ._version import get_versions
__version__ = get_versions()['version']
del get_versions
