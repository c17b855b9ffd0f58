"""ietlab: exact-arithmetic experiments with interval exchange transformations."""

from .exactnum import (
    ExactReal,
    IncompatibleField,
    exact,
    sqrt_int,
    golden_mean,
    parse_exact,
    circle_add,
    circle_sub,
    circle_point,
    nearest_int_dist,
    compare,
)
from .iet import (
    Iet,
    DeltaSet,
    KeaneVerdict,
    BadLengths,
    BadPermutation,
    build_iet,
    rotation,
    identity_iet,
    compose,
    power,
    delta_set,
    delta_prime_n,
    keane_certificate,
)
from .induce import (
    BudgetExhausted,
    TowerViolated,
    NotIrrational,
    InducedMap,
    Tower,
    TowerBook,
    first_return,
    find_tower,
    iet3_from_rotation,
    tower_book,
    renormalized_lengths,
)
from .scales import PowerScale, PowerLogScale, TableScale, ExprScale, classify_scale
from .gauges import (
    gauge_trace,
    estimate_constants,
    polarization_fractions,
    polarization_histogram,
    discrepancy,
    omega_discrepancy,
    tau_entropy,
    proximality_bc_measure,
    decisiveness_diagnostic,
)
from .dioph import (
    ContinuedFraction,
    RationalInput,
    ScaleTooSlow,
    cf_expand,
    quadratic_from_cf,
    check_convergent_ineq,
    type_estimate,
    liouville_from_scale,
    akc_measure,
    three_distance_check,
    kesten_window_counts,
    mixing_falsifier,
)

__version__ = "0.1.0"
