// Weyl groups as finitely supported signed permutations of the index window,
// the rho-shifted dot action, Coxeter length, Bruhat order, and dot-orbit
// generation of blocks.
//
// Elements act on tilde coordinates (and on roots in the epsilon basis) as
// signed permutations; the level is always fixed.

#pragma once

#include "oblock/liedata.hpp"
#include "oblock/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace oblock {

// Signed permutation of window positions.  img[p] = +-(q+1) means the map
// sends basis slot p to slot q with that sign; equivalently, coordinate
// vectors transform by (w t)_q = +- t_p.
class WeylElt {
public:
    WeylElt() = default;
    static WeylElt identity(int rank);

    int rank() const { return static_cast<int>(img_.size()); }
    bool is_identity() const;

    // image of slot p: (slot, sign)
    std::pair<int, int> image(int p) const
    {
        const int v = img_[p];
        return {std::abs(v) - 1, v > 0 ? +1 : -1};
    }

    WeylElt inverse() const;
    friend WeylElt operator*(const WeylElt& a, const WeylElt& b); // composition a∘b

    // Action on coordinate vectors (tilde coordinates, or roots).
    std::vector<Half2> apply(const std::vector<Half2>& t) const;
    RootVec apply_root(const RootVec& r) const;

    int num_sign_flips() const;

    bool operator==(const WeylElt& o) const { return img_ == o.img_; }
    bool operator<(const WeylElt& o) const { return img_ < o.img_; }

    std::size_t hash() const;
    std::string str() const; // one-line notation, e.g. "[2,-1,3]"

    static WeylElt from_image(std::vector<int> img) { return WeylElt(std::move(img)); }
    const std::vector<int>& raw() const { return img_; }

private:
    explicit WeylElt(std::vector<int> img) : img_(std::move(img)) {}
    std::vector<int> img_;
};

struct WeylEltHash {
    std::size_t operator()(const WeylElt& w) const { return w.hash(); }
};

// The signed permutation realizing sigma_alpha on tilde coordinates.
WeylElt simple_reflection(const LieDatum& datum, std::size_t simple_index);

// w . mu = w(mu + rho) - rho, computed on tilde coordinates.
Weight dot(const WeylElt& w, const Weight& mu, const LieDatum& datum);

// Single reflection via the formula mu - (mu+rho)(alpha^vee) alpha; redundant
// implementation kept for cross-validation of the convention.
Weight dot_reflect(std::size_t simple_index, const Weight& mu, const LieDatum& datum);

// Coxeter length = number of positive roots sent negative.
int length(const WeylElt& w, const LieDatum& datum);

// True iff sigma_alpha * w is shorter (left descent), resp. w * sigma_alpha
// (right descent).
bool is_left_descent(const LieDatum& datum, std::size_t s, const WeylElt& w);
bool is_right_descent(const LieDatum& datum, const WeylElt& w, std::size_t s);

// Reduced word by greedy descent elimination, lowest simple-root index first.
// w equals the product s_{word[0]} s_{word[1]} ... s_{word.back()}.
std::vector<std::size_t> reduced_word(const WeylElt& w, const LieDatum& datum);

// Subword/lifting criterion for Bruhat order.
bool bruhat_leq(const WeylElt& x, const WeylElt& w, const LieDatum& datum);

// Enumerates the subgroup generated by the given simple reflections,
// in increasing length (BFS); identity first.
std::vector<WeylElt> subgroup_elements(const LieDatum& datum,
                                       const std::vector<std::size_t>& generators);

// The unique minimal-length element of w W_lambda (lambda dominant integral).
WeylElt min_coset_rep(const WeylElt& w, const Weight& lambda, const LieDatum& datum);

// One element of a block: the weight, its minimal-length Weyl word, and
// whether it lies in P_n (as opposed to just P^-_n).
struct BlockElement {
    Weight weight;
    WeylElt w;
    int len = 0;
    bool in_p = false;
};

// The linkage class of a dominant integral anchor: all elements of
// Lambda^{lambda,-}_n, sorted by (length, lexicographic weight).
struct BlockPoset {
    Weight anchor;
    bool anchor_regular = false;
    std::vector<BlockElement> elements; // Lambda^{lambda,-}
    std::vector<std::size_t> p_subset;  // indices of Lambda^{lambda} inside elements

    std::optional<std::size_t> find(const Weight& w) const;
};

// BFS closure of {lambda} under dot reflections, intersected with P^-.
// Throws if lambda is not dominant integral.
BlockPoset orbit_block(const Weight& lambda, const LieDatum& datum, const ParabolicSpec& y);

// Bruhat covers (lower, higher) between consecutive lengths; quadratic in the
// block size, computed on demand.
std::vector<std::pair<std::size_t, std::size_t>> block_covers(const BlockPoset& block,
                                                              const LieDatum& datum);

// Full dot orbit of an arbitrary integral weight (no dominance filter),
// sorted lexicographically.
std::vector<Weight> dot_orbit(const Weight& w, const LieDatum& datum);

} // namespace oblock
