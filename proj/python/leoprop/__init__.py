"""Analytical LEO intermediary propagators with J2-J4 zonal gravity."""

from ._leoprop import (  # noqa: F401
    CartesianState,
    ElementsDeg,
    Ephemeris,
    Equinoctial,
    GeoModel,
    IntegratorConfig,
    IntermediaryKind,
    IntermediaryPropagator,
    Keplerian,
    KeplerianConstants,
    PolarNodal,
    PolarNodalEphemeris,
    Scenario,
    Vec3,
    ZonalModel,
    builtin_scenario,
    builtin_scenario_names,
    cartesian_to_polar_nodal,
    equinoctial_of,
    keplerian_to_polar_nodal,
    load_scenario,
    polar_nodal_to_cartesian,
    polar_nodal_to_keplerian,
    propagate_cowell,
    reference_propagate,
    solve_kepler,
    total_potential,
    wrap_pi,
    zonal_acceleration,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
