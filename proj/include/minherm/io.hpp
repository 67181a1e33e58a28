#pragma once

#include "minherm/adequacy.hpp"
#include "minherm/constructions.hpp"
#include "minherm/core.hpp"
#include "minherm/moment.hpp"
#include "minherm/oracle.hpp"
#include "minherm/rank_one.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace minherm {

using Json = nlohmann::json;

/// Matrix wire format: {"rows": n, "cols": p, "entries": [[re, im], ...]}
/// with entries row-major. Exact round-trip: doubles serialize losslessly.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json vector_to_json(const CVector& v);  // as an n x 1 matrix
CVector vector_from_json(const Json& j);

/// Pair file: {"n": ..., "V": <matrix>, "W": <matrix>} plus the optional
/// witness system {"columns": <n x n matrix>, "w": <n x 1 matrix>} used by
/// the certificate-based subcommands.
struct PairFile {
  OrthoPair pair;
  std::optional<CMatrix> columns;
  std::optional<CVector> w;
};

Json pair_to_json(const PairFile& p);
PairFile pair_from_json(const Json& j, double ortho_tol = kOrthoTol);

PairFile load_pair(const std::string& path, double ortho_tol = kOrthoTol);
void save_json(const Json& j, const std::string& path);
Json load_json(const std::string& path);

Json certificate_to_json(const SupportCertificate& c);
Json adequacy_result_to_json(const AdequacyResult& r);
Json fw_result_to_json(const FwResult& r);
Json membership_to_json(const MembershipResult& r);
Json characterization_to_json(const CharacterizationReport& r);
Json campaign_to_json(const CampaignStats& s);

}  // namespace minherm
