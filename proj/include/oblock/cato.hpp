// Block-level homological invariants: Ext tables, graded Cartan matrices,
// BGG reciprocity, Koszulity certificates, truncation stability, the
// stabilization rank k_lambda, and dual-block label combinatorics.
//
// All matrices are square over the Lambda^lambda window of a block, rows and
// columns in (length, lexicographic weight) order:
//   dec     (mu,gamma) = graded [Delta(mu) : L(gamma)]      (KL polynomials)
//   ext_dl  (mu,gamma) = sum_i dim Ext^i(Delta(mu), L(gamma)) q^i
//                      = transposed inverse of dec(-q), coefficientwise >= 0
//   cartan  = dec^T dec   (graded [P(gamma) : L(mu)]; BGG reciprocity)
//   ext_ll  = ext_dl^T ext_dl  (graded Ext(L,L) by the standard convolution)

#pragma once

#include "oblock/klengine.hpp"
#include "oblock/laurent.hpp"
#include "oblock/weights.hpp"
#include "oblock/weylgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oblock {

struct GradedMatrices {
    std::vector<std::size_t> labels; // indices into block.elements (the P window)
    std::vector<int> lengths;
    PolyMatrix dec, ext_dl, cartan, ext_ll;
};

GradedMatrices build_graded_matrices(const BlockPoset& block, const LieDatum& datum,
                                     const ParabolicSpec& y, KLTable& table);

// dim Ext^i(Delta(mu), L(gamma)) for i = 0..; trailing zeros trimmed.
std::vector<long long> ext_delta_simple(const GradedMatrices& gm, std::size_t mu_label,
                                        std::size_t gamma_label);
// dim Ext^j(L(mu), L(gamma)).
std::vector<long long> ext_simple_simple(const GradedMatrices& gm, std::size_t mu_label,
                                         std::size_t gamma_label);

struct CertificateItem {
    std::string name;
    bool pass = false;
    std::string detail; // first offending entry on failure
};

struct KoszulReport {
    bool pass = false;
    std::vector<CertificateItem> items;
    const CertificateItem* find(const std::string& name) const;
};

// The falsifiable numerical Koszulity certificate for one block:
//   - parity of every dec/ext_dl monomial against the length function
//   - nonnegativity of the inverse decomposition matrix (Koszulity proper)
//   - symmetry and unit constant diagonal of C(q), symmetry of E(q)
//   - C(q) E(-q)^T = I and E(-q)^T C(q) = I, both orientations
//   - E degree-j entries pair only labels with length difference == j mod 2
//   - vanishing of decomposition numbers from the P window into its complement
KoszulReport koszulity_certificate(const BlockPoset& block, const GradedMatrices& gm,
                                   const LieDatum& datum, const ParabolicSpec& y, KLTable& table);

// Depth-truncated character consistency: inverting dec(1) over the block must
// produce nonnegative simple characters with unit top term.
CertificateItem character_consistency(const BlockPoset& block, const GradedMatrices& gm,
                                      const LieDatum& datum, const ParabolicSpec& y,
                                      long long depth);

struct StabilityReport {
    bool pass = false;
    int k = 0, n = 0;
    std::size_t labels_k = 0, labels_n = 0;
    bool label_bijection = false; // Lambda^lambda_k == truncatable part of Lambda^lambda_n
    bool dec_equal = false, ext_dl_equal = false, cartan_equal = false;
    bool ext_ll_geq = false;        // rank-n E >= rank-k E entrywise
    bool ext_ll_deg1_equal = false; // Ext^1 between simples is rank-stable
    std::size_t ext_ll_equal_entries = 0, ext_ll_total_entries = 0;
    std::string detail;
};

// Computes blocks at ranks k and n, restricts the rank-n matrices to the
// labels embedded from rank k, and compares.
StabilityReport truncation_stability(const Weight& lambda_k, LieType type, int m, int k, int n,
                                     const std::vector<std::size_t>& head_parabolic);

struct KLambdaReport {
    int k_lambda = 0;
    Half2 tail_constant2 = 0;   // doubled C with t(j) = -j + C beyond the support
    bool decreasing_premise = false;
    bool symbolic_certificate = false;
    std::vector<int> enumerated_ranks;
    bool enumeration_confirms = false; // Lambda^{lambda,-} == Lambda^lambda at those ranks
    std::string detail;
};

// Smallest rank beyond which the block inequality holds for every larger rank
// (certified symbolically; cross-validated by enumeration at k, k+1, k+2).
KLambdaReport find_k_lambda(const Weight& lambda, LieType type, int m,
                            const std::vector<std::size_t>& head_parabolic);

struct DualBlockLabels {
    bool ok = false;
    std::string failure; // violated constraint when !ok
    Weight phi;          // at rank n
    Half2 a2 = 0;        // the negative half-integer a, doubled
    int n0 = 0;
    std::vector<std::size_t> y_singular;    // simple roots singular on phi (must equal Y)
    std::vector<std::size_t> y_prime;       // simple roots singular on lambda (Y'_n)
    std::vector<Weight> labels;             // Lambda'_{n,phi}, sorted
    bool stabilizer_matches = false;        // |orbit| * |W_Y| == |W|
    std::optional<std::size_t> lambda_block_size; // |Lambda^lambda_n| when computable
    bool size_bijection = false;            // |Lambda'| == |Lambda^lambda_n|
};

DualBlockLabels dual_block_labels(const Weight& lambda, LieType type, int m, int n,
                                  const std::vector<std::size_t>& head_parabolic);

// Truncation on dual-block labels: keeps mu iff it agrees with phi beyond
// rank k; kept labels are re-windowed to rank k.
std::vector<Weight> truncate_dual_labels(const std::vector<Weight>& labels, const Weight& phi,
                                         const LieDatum& datum_n, const LieDatum& datum_k);

} // namespace oblock
