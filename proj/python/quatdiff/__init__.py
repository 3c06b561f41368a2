"""Python bindings for the constant quaternion-difference attitude library."""

try:
    from ._quatdiff_core import (  # installed wheel layout
        QuatdiffError,
        build_A,
        char_poly_closed,
        char_poly_numeric,
        classify,
        discriminant,
        eigenvalues,
        error_quat,
        nominal_state_derivative,
        nominal_wdot,
        qinv,
        qmul,
        quat_kinematics,
        run_scenario,
        selftest,
        trajectory_sample,
        v_from_w,
        w_from_v,
    )
except ImportError:
    from _quatdiff_core import (  # in-tree build with module dir on sys.path
        QuatdiffError,
        build_A,
        char_poly_closed,
        char_poly_numeric,
        classify,
        discriminant,
        eigenvalues,
        error_quat,
        nominal_state_derivative,
        nominal_wdot,
        qinv,
        qmul,
        quat_kinematics,
        run_scenario,
        selftest,
        trajectory_sample,
        v_from_w,
        w_from_v,
    )

__all__ = [
    "QuatdiffError",
    "build_A",
    "char_poly_closed",
    "char_poly_numeric",
    "classify",
    "discriminant",
    "eigenvalues",
    "error_quat",
    "nominal_state_derivative",
    "nominal_wdot",
    "qinv",
    "qmul",
    "quat_kinematics",
    "run_scenario",
    "selftest",
    "trajectory_sample",
    "v_from_w",
    "w_from_v",
]
