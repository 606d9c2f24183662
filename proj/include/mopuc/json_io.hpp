#pragma once

#include <string>

#include "json.hpp"
#include "mopuc/zeros.hpp"

namespace mopuc {

using json = nlohmann::json;

json cplx_to_json(cplx z);
cplx cplx_from_json(const json& j);

// {"two_min": int, "coeffs": [[re, im], ...]}
json poly_to_json(const HalfLaurentPoly& p);
HalfLaurentPoly poly_from_json(const json& j);

json report_to_json(const NormalityReport& rep);
json solve_to_json(const SolveResult& res);
json zeros_to_json(const ZeroReport& rep);
json phase_summary_to_json(const PhaseReport& rep);
json chebyshev_to_json(const ChebyshevReport& rep);
json trig_to_json(const std::vector<TrigCoeff>& trig);
json disk_to_json(const MultiIndex& n, const DiskVerdict& v);
json circle_to_json(const MultiIndex& n, const CircleVerdict& v);
json offdiag_to_json(const OffdiagVerdict& v);

// Schema (see README): {"r", "t0", "tag", "components": [{"arc": [a, b],
// "weight": {"kind": ..., ...}, "masses": [{"theta", "mass"}]}]}.
json system_to_json(const MeasureSystem& sys);
MeasureSystem system_from_json(const json& j);

// Reads and parses a system description; throws IOFailure / ConfigParse.
MeasureSystem load_system_file(const std::string& path);

}  // namespace mopuc
