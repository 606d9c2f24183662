#include "mopuc/errors.hpp"

namespace mopuc {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_arc: return "InvalidArc";
    case errc::overlapping_arcs: return "OverlappingArcs";
    case errc::forbidden_point_mass: return "ForbiddenPointMass";
    case errc::mass_outside_arc: return "MassOutsideArc";
    case errc::negative_weight: return "NegativeWeight";
    case errc::invalid_modifier_point: return "InvalidModifierPoint";
    case errc::empty_function_set: return "EmptyFunctionSet";
    case errc::zero_argument: return "ZeroArgument";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::empty_index: return "EmptyIndex";
    case errc::non_normal: return "NonNormal";
    case errc::non_unimodular_tau: return "NonUnimodularTau";
    case errc::not_tau_invariant: return "NotTauInvariant";
    case errc::degenerate_leading: return "DegenerateLeading";
    case errc::root_on_circle: return "RootOnCircle";
    case errc::theorem_violated: return "TheoremViolated";
    case errc::config_parse: return "ConfigParse";
    case errc::unknown_preset: return "UnknownPreset";
    case errc::io_failure: return "IOFailure";
    case errc::precondition: return "Precondition";
  }
  return "UnknownError";
}

}  // namespace mopuc
