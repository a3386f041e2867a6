# flake8: noqa
from __future__ import absolute_import

from .linalg import (
    RANK_TOL, left_kernel, numerical_rank, row_space, span_residual,
)
from .algebra import (
    LieElement, Subalgebra, bracket, cartan_involution, closure_residual,
    is_lorentz_algebra, lift, pi1, subalgebra_closure_check,
    subalgebra_span_residual, translation_part,
)
from .group import (
    GROUP_TOL, IsoElement, adjoint, exp_iso, iso_apply, iso_compose,
    iso_inverse, reflection,
)
from .iwasawa import (
    IwasawaBasis, Y_A, Y_K, Y_N, Y_SO11, boost_a, boost_so11,
    iwasawa_generators, nilpotent_n, root_generator, rotation_k,
)
