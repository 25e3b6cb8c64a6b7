"""angleworks: exact expected angles of random simplices and expected
f-vectors of random polytopes, with a Monte Carlo verification oracle."""

from .exact_scalars import (
    DomainError,
    PiNumber,
    Rational,
    c_beta,
    c_tilde_beta,
    format_pinumber,
    gamma_half,
    normalizing_constant,
    parse_pinumber,
    pinumber_from_json,
    pinumber_to_json,
    to_decimal,
)
from .angle_engine import (
    AngleTable,
    ParityError,
    ResidueSpec,
    angle_table,
    bJ_exact,
    bJ_numeric,
    bJ_residue,
    bJtilde_exact,
    bJtilde_numeric,
    bJtilde_residue,
    bernoulli_fill,
    lA_residue,
    lA_tilde_residue,
    p_alpha_k_value,
    poincare_fill,
    residue_rational,
    rm_value,
)
from .polytope_engine import (
    FVector,
    ReitznerConstant,
    beta_polytope_fvector,
    betaprime_polytope_fvector,
    face_intensity,
    poisson_polytope_fvector,
    reitzner_ball,
    reitzner_sphere,
    typical_voronoi_fvector,
    zero_cell_fvector,
)
from .montecarlo import (
    McEstimate,
    mc_angle_sum,
    mc_beta_hull_2d,
    mc_voronoi_2d,
    sample_beta_point,
    sample_betaprime_point,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
