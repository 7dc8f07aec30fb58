"""Multi-frequency near-field synthesis and non-iterative source reconstruction
for the 2-D Helmholtz equation with a separable wavenumber-dependent source."""

from .exceptions import ConfigurationError, DegenerateReconstructionError
from .sources import (SourceSpec, TransverseProfile, eval_f, eval_g,
                      g_mode_integral_dl, g_mode_integral_ft)
from .forward import (MeasurementGrid, NearFieldData, QuadratureConfig,
                      dirichlet_data, fundamental_solution, neumann_data_direct)
from .dtn import BoundaryFourierCoeffs, fourier_coefficients, neumann_from_dirichlet
from .noise import NoiseConfig, add_noise
from .recon_dl import (DLCoefficients, boundary_pairing_dl, dl_coefficients,
                       dl_reconstruct, dl_test_function)
from .recon_ft import (FTCoefficients, boundary_pairing_ft, ft_coefficients,
                       ft_reconstruct, ft_test_wavevector)
from .experiment import (ExperimentConfig, ReconstructionResult, config_from_dict,
                         greens_identity_check, relative_l2_error, run_experiment,
                         sweep_noise, synthesize_data, validate)

__version__ = "0.1.0"
