// Exact Kazhdan-Lusztig machinery: R-polynomials, KL polynomials, and the
// Deodhar parabolic (antispherical, u = -1) polynomials, memoized over
// interned group elements.
//
// Conventions, fixed here and pinned by the rank-1 oracle plus the character
// consistency checks in catO:
//   * W_J is generated by the simple reflections in J; {}^J W denotes the
//     minimal-length representatives of the right cosets W_J \ W.
//   * n_{x,w} (x, w in {}^J W) are the antispherical u = -1 polynomials; with
//     J empty they reduce to the ordinary KL polynomials P_{x,w}.
//   * The graded composition multiplicity of the parabolic Verma Delta(mu) at
//     the simple L(gamma) is q^{l(gamma)-l(mu)} n_{x_mu, x_gamma}(q^{-2}).

#pragma once

#include "oblock/laurent.hpp"
#include "oblock/liedata.hpp"
#include "oblock/weylgroup.hpp"

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace oblock {

class KLTable {
public:
    // J = indices of the simple reflections generating the parabolic subgroup
    // (empty for the full KL table).
    KLTable(const LieDatum& datum, std::vector<std::size_t> jgens = {});

    const LieDatum& datum() const { return datum_; }
    const std::vector<std::size_t>& parabolic() const { return jgens_; }

    LaurentPoly r_poly(const WeylElt& x, const WeylElt& w);
    LaurentPoly kl_poly(const WeylElt& x, const WeylElt& w);

    // Antispherical n_{x,w}.  Throws if x or w is not a minimal-length right
    // coset representative for W_J.
    LaurentPoly parabolic_kl(const WeylElt& x, const WeylElt& w);

    bool bruhat_leq(const WeylElt& x, const WeylElt& w);
    bool is_min_rep(const WeylElt& w);
    int length(const WeylElt& w);

private:
    using Id = std::uint32_t;
    static std::uint64_t key(Id x, Id w) { return (std::uint64_t(x) << 32) | w; }

    Id intern(const WeylElt& w);
    Id right_mult(Id w, std::size_t s);
    int len(Id w);
    bool right_descent(Id w, std::size_t s);
    bool min_rep(Id w);
    bool leq(Id x, Id w);
    const std::vector<Id>& cone(Id w); // Bruhat lower cone {z : z <= w}

    LaurentPoly rpol(Id x, Id w);
    LaurentPoly kl(Id x, Id w);
    LaurentPoly npol(Id x, Id w);
    long long mu_kl(Id z, Id v);   // KL mu(z,v)
    long long mu_npol(Id z, Id v); // antispherical mu(z,v)

    const LieDatum& datum_;
    std::vector<std::size_t> jgens_;
    std::vector<WeylElt> pool_;
    std::unordered_map<WeylElt, Id, WeylEltHash> ids_;
    std::vector<int> len_;
    std::vector<std::int8_t> minrep_; // -1 unknown, 0 no, 1 yes
    std::vector<std::vector<Id>> rmul_;
    std::unordered_map<std::uint64_t, LaurentPoly> rmemo_, klmemo_, nmemo_;
    std::unordered_map<std::uint64_t, bool> leqmemo_;
    std::unordered_map<Id, std::vector<Id>> cones_;
    std::mutex mutex_; // coarse guard: concurrent fills are idempotent
};

// Graded decomposition matrix D(q) over the Lambda^lambda window of a block:
// D_{mu,gamma} = q^{l(gamma)-l(mu)} n_{x_mu, x_gamma}(q^{-2}).  Rows and
// columns follow block.p_subset order (length, then lexicographic weight).
struct GradedDecomposition {
    std::vector<std::size_t> labels; // indices into block.elements
    PolyMatrix dec;
};

// Requires a regular anchor (singular blocks carry no KL formula here) and
// asserts the parity and degree bounds as it fills the matrix.
GradedDecomposition graded_decomposition_matrix(const BlockPoset& block, const LieDatum& datum,
                                                const ParabolicSpec& y, KLTable& table);

} // namespace oblock
