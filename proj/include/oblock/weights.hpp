// Integral weights, the nested sets X_n > P^-_n > P_n, dominance, the
// root-cone partial order, cross-rank embedding, and depth-truncated formal
// characters of parabolic Verma modules.

#pragma once

#include "oblock/liedata.hpp"
#include "oblock/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace oblock {

// A weight at fixed rank: coordinates lambda_i = lambda(E_i) over the window,
// plus the level d = lambda(K).  All values are half-integers stored doubled.
struct Weight {
    std::vector<Half2> coords2;
    Half2 level2 = 0;

    bool operator==(const Weight& o) const = default;
    bool operator<(const Weight& o) const
    {
        if (coords2 != o.coords2)
            return coords2 < o.coords2;
        return level2 < o.level2;
    }
};

Weight zero_weight(const LieDatum& datum);
Weight rho_weight(const LieDatum& datum);
std::string weight_str(const LieDatum& datum, const Weight& w);

// lambda(alpha^vee), doubled.
Half2 pair2(const Weight& w, const Coroot& co);

// Tilde coordinates t_i = lambda(E_i - delta_i K) = lambda_i - delta_i d,
// doubled.  The Weyl group acts on these by signed permutations.
std::vector<Half2> tilde2(const LieDatum& datum, const Weight& w);
Weight from_tilde2(const LieDatum& datum, const std::vector<Half2>& t2, Half2 level2);

// The parabolic datum: a subset Y of the simple roots containing every tail
// root beta_i (i >= 1) and not containing beta_x.
struct ParabolicSpec {
    std::vector<std::size_t> members; // indices into datum.simple_roots(), sorted

    static ParabolicSpec full_head(const LieDatum& datum); // all head roots + tail
    static ParabolicSpec from_head_subset(const LieDatum& datum,
                                          const std::vector<std::size_t>& head_positions);
    void validate(const LieDatum& datum) const;
    bool contains(std::size_t simple_index) const;
};

bool is_integral(const Weight& w, const LieDatum& datum);
bool is_pminus(const Weight& w, const LieDatum& datum, const ParabolicSpec& y);
bool is_p(const Weight& w, const LieDatum& datum, const ParabolicSpec& y);
bool is_dominant(const Weight& w, const LieDatum& datum);

// Regularity of the dot action: lambda + rho is fixed by no reflection.
bool is_dot_regular(const Weight& w, const LieDatum& datum);

// mu <= lambda iff lambda - mu is a nonnegative integral combination of simple
// roots.  Throws if levels differ (weights in distinct central characters are
// never compared).
bool leq(const Weight& mu, const Weight& lambda, const LieDatum& datum);

// Zero-extension X_k -> X_n (datum_from, datum_to share type and m).
Weight embed(const Weight& w, const LieDatum& datum_from, const LieDatum& datum_to);

// Keeps w iff its coordinates vanish beyond rank k; result lives at rank k.
std::optional<Weight> truncate_weight(const Weight& w, const LieDatum& datum_n,
                                      const LieDatum& datum_k);

// Formal character truncated at simple-root height `depth` below the anchor.
class Character {
public:
    struct Term {
        long long mult = 0;
        long long depth = 0;
    };

    Character() = default;
    Character(Weight anchor, long long depth) : anchor_(std::move(anchor)), depth_(depth) {}

    const Weight& anchor() const { return anchor_; }
    long long depth_bound() const { return depth_; }
    const std::map<Weight, Term>& terms() const { return terms_; }

    long long mult(const Weight& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second.mult;
    }

    void add(const Weight& w, long long mult, long long depth);
    // Adds factor * other, re-basing depths by depth_shift (the height of
    // this->anchor above other.anchor); terms beyond the depth bound of *this
    // are dropped, keeping the combination exact on the common window.
    void add_rebased(const Character& other, long long factor, long long depth_shift);
    bool nonnegative() const;
    long long total_at_depth(long long depth) const;

    bool operator==(const Character& o) const { return terms_ == o.terms_; }

private:
    Weight anchor_;
    long long depth_ = 0;
    std::map<Weight, Term> terms_;
};

inline bool operator==(const Character::Term& a, const Character::Term& b)
{
    return a.mult == b.mult && a.depth == b.depth;
}

// Depth-truncated character of the parabolic Verma module of highest weight
// mu: the Weyl character formula over the Levi of Y times the PBW generating
// function of the opposite nilradical.  Throws if mu is not in P^-.
Character verma_character(const Weight& mu, const LieDatum& datum, const ParabolicSpec& y,
                          long long depth);

// Restriction of the multiplicity map to weights kept by truncate_weight.
Character truncate_character(const Character& ch, const LieDatum& datum_n,
                             const LieDatum& datum_k);

} // namespace oblock
