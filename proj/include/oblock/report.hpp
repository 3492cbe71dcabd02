// JSON and CSV report construction.  Key order is fixed (insertion order via
// nlohmann::ordered_json) and every container is emitted in a canonical
// order, so identical configurations produce byte-identical reports.

#pragma once

#include "oblock/cato.hpp"
#include "oblock/klengine.hpp"
#include "oblock/weights.hpp"
#include "oblock/weylgroup.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace oblock {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json weight_json(const LieDatum& datum, const Weight& w);
Json root_json(const LieDatum& datum, const RootVec& r);

Json realize_report(const LieDatum& datum, const RealizationReport& verification);
Json block_report(const LieDatum& datum, const BlockPoset& block);
Json matrices_report(const LieDatum& datum, const BlockPoset& block, const GradedMatrices& gm);
Json koszul_json(const KoszulReport& rep);
Json certificate_json(const CertificateItem& item);
Json stability_json(const StabilityReport& rep);
Json klambda_json(const LieDatum& datum, const KLambdaReport& rep);
Json dual_block_json(const LieDatum& datum, const DualBlockLabels& labels);
Json character_json(const LieDatum& datum, const Character& ch);

// One CSV line per matrix row; RFC-4180 style quoting.
std::string matrix_csv(const PolyMatrix& mat, const std::vector<std::string>& labels);
std::string character_csv(const LieDatum& datum, const Character& ch);

std::string poly_str(const LaurentPoly& p);

} // namespace oblock
