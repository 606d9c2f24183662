"""Laurent-type multiple orthogonal polynomials on the unit circle."""

from mopuc._core import (
    CircleVerdict,
    DiskVerdict,
    Error,
    HalfLaurentPoly,
    MeasureSystem,
    MomentEngine,
    NormalityReport,
    ParaPoly,
    SolveResult,
    ZeroReport,
    build_para,
    find_roots,
    load_system,
    preset,
    sharp,
    shift_half,
    solve_hp,
    solve_hp_star,
    solve_phi,
    solve_phi_sharp,
    system_from_json,
    trig_form,
    verify_circle_zeros,
    verify_zeros_in_disk,
    zero_report,
)

__all__ = [
    "CircleVerdict",
    "DiskVerdict",
    "Error",
    "HalfLaurentPoly",
    "MeasureSystem",
    "MomentEngine",
    "NormalityReport",
    "ParaPoly",
    "SolveResult",
    "ZeroReport",
    "build_para",
    "find_roots",
    "load_system",
    "preset",
    "sharp",
    "shift_half",
    "solve_hp",
    "solve_hp_star",
    "solve_phi",
    "solve_phi_sharp",
    "system_from_json",
    "trig_form",
    "verify_circle_zeros",
    "verify_zeros_in_disk",
    "zero_report",
]
