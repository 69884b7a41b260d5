"""Bound states, phase shifts and spinor profiles for V(r) = D (1 - sigma0 coth(alpha r))^2
in the spin and pseudospin limits of the Dirac equation, plus the
non-relativistic limit."""

from .bound_states import (
    BoundStateSolution,
    EnergyEquationResidual,
    nonrel_energy,
    pspin_residual,
    solve_bound_energies,
    spin_residual,
)
from .errors import (
    ComplexExponentError,
    ConvergenceError,
    DegenerateParameterError,
    DHSError,
    DomainError,
    EmptyWindowError,
    EvanescentChannelError,
    FitQualityError,
    NoTransitionError,
    PoleError,
)
from .model import (
    C0_DEFAULT,
    Channel,
    EnergyParams,
    Limit,
    PotentialParams,
    SymmetryContext,
    centrifugal_approx,
    energy_params,
    orbital_l,
    potential_value,
)
from .scattering import (
    HypergeomTriple,
    PhaseShiftResult,
    WavefunctionProfile,
    hypergeom_params,
    normalization_constant,
    phase_shift,
    radial_wavefunction,
)
from .special import abs_gamma, arg_gamma, hyp2f1, hyp2f1_connection, log_gamma

__version__ = "0.1.0"
