# -*- coding: utf-8 -*-
# ###
# Copyright (c) 2024, eis-jacobi contributors
# This software is subject to the provisions of the GNU Affero General
# Public License version 3 (AGPLv3).
# See LICENCE.txt for details.
# ###
import sys

from .cli import main


sys.exit(main())
