# -*- coding:utf-8 -*-

"""
Barrier families of minimal hypersurfaces in H^n x R.

    catenoid: rotational n-catenoids C_a.
    translation: translation-invariant family M_d.
"""
