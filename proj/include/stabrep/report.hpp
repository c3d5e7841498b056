#ifndef STABREP_REPORT_HPP
#define STABREP_REPORT_HPP

#include "stabrep/config.hpp"
#include "stabrep/glweights.hpp"
#include "stabrep/intrep.hpp"
#include "stabrep/vic.hpp"

#include "json.hpp"

#include <string>

namespace stabrep {

using Json = nlohmann::ordered_json;

Json config_json(const Config& cfg);
Json envelope(const std::string& command, const Config& cfg);

Json branch_report(const Bipartition& b, int rank, bool pieri, int lr_m, const Config& cfg);
Json dim_report(const Bipartition& b, int rank, const Config& cfg);
Json bounds_report(int n, const Int* dim, const long* ell, const long* p, const int* k,
                   const Config& cfg);
Json group_table_report(int n, long ell, const std::string& variant, const Config& cfg);
Json depth_report(const IntegralRep& rep, long gamma_u_ell, const Config& cfg);

struct VicOpsRequest {
    bool filtration = false;
    bool phi0 = false;
    bool phi1 = false;
    bool phi2 = false;
    bool growth = false;
    bool stable_depth = false;
    bool length = false;
    bool triples = false;
    bool twist = false;
};

Json vic_report(const VicModule& m, const VicOpsRequest& ops, const Config& cfg);
Json vic_report(const PairVicModule& m, const VicOpsRequest& ops, const Config& cfg);

// Serialization of modules and integral representations.
Json module_to_json(const VicModule& m);
VicModule module_from_json(const Json& j);
IntegralRep rep_from_json(const Json& j);

// Deterministic multi-command pipeline used by the determinism check and
// the `suite` subcommand.
std::string full_suite_report(const Config& cfg);

// Human-readable rendering of a report (tables for the main blocks).
std::string render_text(const Json& report);

} // namespace stabrep

#endif
