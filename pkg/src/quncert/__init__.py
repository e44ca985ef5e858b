"""Memory-assisted entropic uncertainty bounds, quantum correlations, and
two-qubit decoherence dynamics."""

from .bounds import (
    BoundReport,
    Observable,
    complementarity,
    evaluate_bounds,
    single_system_bound,
    observable_measurement,
    uncertainty_sum,
)
from .channels import (
    KrausChannel,
    ad_closed_form,
    apply_kraus,
    jc_state,
    jc_survival,
    local_channel,
    dephased_bell_diagonal,
    pd_closed_form,
    random_field_state,
)
from .correlations import (
    OptimizerConfig,
    bell_diagonal_classical_closed,
    classical_correlation,
    concurrence,
    concurrence_x,
    discord,
    holevo_quantity,
)
from .entropy import (
    MeasurementOutcome,
    ProjectiveMeasurement,
    conditional_entropy,
    measure_on_A,
    measured_conditional_entropy,
    mutual_information,
    shannon,
    von_neumann,
)
from .linalg import (
    DensityMatrix,
    EigenSystem,
    eig_hermitian,
    kron,
    partial_trace,
    validate_density,
)
from .states import (
    bell_diagonal,
    bell_like,
    bell_mixture,
    isotropic,
    qubit_qudit,
    singlet,
    werner,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DensityMatrix",
    "EigenSystem",
    "KrausChannel",
    "MeasurementOutcome",
    "Observable",
    "OptimizerConfig",
    "ProjectiveMeasurement",
    "ad_closed_form",
    "apply_kraus",
    "bell_diagonal",
    "bell_diagonal_classical_closed",
    "bell_like",
    "bell_mixture",
    "classical_correlation",
    "complementarity",
    "concurrence",
    "concurrence_x",
    "conditional_entropy",
    "discord",
    "eig_hermitian",
    "evaluate_bounds",
    "holevo_quantity",
    "isotropic",
    "jc_state",
    "jc_survival",
    "kron",
    "single_system_bound",
    "local_channel",
    "dephased_bell_diagonal",
    "measure_on_A",
    "measured_conditional_entropy",
    "mutual_information",
    "observable_measurement",
    "partial_trace",
    "pd_closed_form",
    "qubit_qudit",
    "random_field_state",
    "singlet",
    "shannon",
    "uncertainty_sum",
    "validate_density",
    "von_neumann",
    "werner",
]
