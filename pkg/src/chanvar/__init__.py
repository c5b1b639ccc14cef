"""chanvar: uncertainty of quantum channels.

Computes the two-parameter total uncertainty (generalized variance), quantum
uncertainty (generalized skew information) and classical uncertainty of
quantum channels on finite-dimensional states, together with entanglement
fidelity, entropy exchange, coherent information and the trade-off bounds
relating them.  Ships a channel/state catalog, analytic closed forms for the
catalog, a property-verification suite and a CLI (``chanvar``).
"""

from .channels import (
    KrausChannel,
    amplitude_damping,
    basis_channel,
    computational_measurement,
    convex_combination,
    depolarizing,
    hadamard_decoherence,
    identity_channel,
    mix_kraus,
    phase_damping,
    random_channel,
    tensor_with_identity,
    von_neumann_measurement,
)
from .exceptions import (
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveError,
    NotTracePreservingError,
    NotUnitalError,
    NotUnitaryError,
)
from .infotheory import (
    BoundReport,
    coherent_info_bound,
    coherent_information,
    entanglement_fidelity,
    entropy_exchange,
    entropy_exchange_bound,
    fidelity_tradeoff,
    quantum_fano,
    unital_conservation,
)
from .linalg import (
    binary_entropy,
    fractional_power,
    hermitian_eig,
    max_eigenvalue,
    partial_trace,
    qubit_power_closed_form,
    von_neumann_entropy,
)
from .states import (
    DensityMatrix,
    bell_basis,
    from_bloch,
    isotropic,
    maximally_mixed,
    purify,
    random_density,
    random_pure,
    random_unitary,
    werner,
)
from .uncertainty import (
    AlphaBeta,
    UncertaintyTriple,
    channel_uncertainty,
    classical_channel,
    classical_operator,
    mgv_channel,
    mgv_operator,
    mgwyd_channel,
    mgwyd_operator,
    morozova_chentsov,
    pure_state_uncertainty,
)

__version__ = "0.1.0"

import types as _types

__all__ = [
    name for name, obj in list(globals().items())
    if not name.startswith("_") and not isinstance(obj, _types.ModuleType)
]
