# -*- coding:utf-8 -*-

"""
Executable barrier geometry of minimal hypersurfaces in H^n x R: catenoid and
translation-invariant barrier families, their heights and intersection laws, numerical
maximum-principle sweeps and obstruction checks on asymptotic boundary data.

Date:   2026/10/19
"""

__version__ = (0, 1, 0)


from hnrkit.kit import HnrKit

kit = HnrKit()
