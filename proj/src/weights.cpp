#include "oblock/weights.hpp"

#include "oblock/weylgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oblock {

Weight zero_weight(const LieDatum& datum)
{
    Weight w;
    w.coords2.assign(datum.rank(), 0);
    return w;
}

Weight rho_weight(const LieDatum& datum)
{
    Weight w;
    w.coords2 = datum.rho2();
    return w;
}

std::string weight_str(const LieDatum& datum, const Weight& w)
{
    std::ostringstream os;
    os << "(";
    for (int p = 0; p < datum.rank(); ++p) {
        if (p)
            os << ",";
        os << half2_string(w.coords2[p]);
    }
    os << " | d=" << half2_string(w.level2) << ")";
    return os.str();
}

Half2 pair2(const Weight& w, const Coroot& co)
{
    Half2 v = 0;
    for (std::size_t p = 0; p < co.cartan.size(); ++p)
        v += w.coords2[p] * co.cartan[p];
    v += w.level2 * co.k_coeff;
    return v;
}

std::vector<Half2> tilde2(const LieDatum& datum, const Weight& w)
{
    std::vector<Half2> t(w.coords2);
    for (int p = 0; p < datum.rank(); ++p)
        if (LieDatum::delta(datum.index_of_pos(p)))
            t[p] -= w.level2;
    return t;
}

Weight from_tilde2(const LieDatum& datum, const std::vector<Half2>& t2, Half2 level2)
{
    Weight w;
    w.coords2 = t2;
    w.level2 = level2;
    for (int p = 0; p < datum.rank(); ++p)
        if (LieDatum::delta(datum.index_of_pos(p)))
            w.coords2[p] += level2;
    return w;
}

ParabolicSpec ParabolicSpec::full_head(const LieDatum& datum)
{
    ParabolicSpec y;
    const std::size_t bx = datum.num_simple() - datum.n();
    for (std::size_t i = 0; i < datum.num_simple(); ++i)
        if (i != bx)
            y.members.push_back(i);
    return y;
}

ParabolicSpec ParabolicSpec::from_head_subset(const LieDatum& datum,
                                              const std::vector<std::size_t>& head_positions)
{
    ParabolicSpec y;
    const std::size_t bx = datum.num_simple() - datum.n();
    for (std::size_t h : head_positions) {
        if (h >= bx)
            throw std::invalid_argument("parabolic: head position out of range");
        y.members.push_back(h);
    }
    for (std::size_t i = bx + 1; i < datum.num_simple(); ++i)
        y.members.push_back(i); // all beta_i, i >= 1
    std::sort(y.members.begin(), y.members.end());
    y.members.erase(std::unique(y.members.begin(), y.members.end()), y.members.end());
    return y;
}

void ParabolicSpec::validate(const LieDatum& datum) const
{
    const std::size_t bx = datum.num_simple() - datum.n();
    if (contains(bx))
        throw std::invalid_argument("parabolic: beta_x must not lie in Y");
    for (std::size_t i = bx + 1; i < datum.num_simple(); ++i)
        if (!contains(i))
            throw std::invalid_argument("parabolic: Y must contain every beta_i");
    for (std::size_t i : members)
        if (i >= datum.num_simple())
            throw std::invalid_argument("parabolic: simple-root index out of range");
}

bool ParabolicSpec::contains(std::size_t simple_index) const
{
    return std::binary_search(members.begin(), members.end(), simple_index);
}

bool is_integral(const Weight& w, const LieDatum& datum)
{
    if (static_cast<int>(w.coords2.size()) != datum.rank())
        throw std::invalid_argument("weight rank mismatch");
    for (const Coroot& co : datum.coroots())
        if (pair2(w, co) % 2 != 0)
            return false;
    for (int p = datum.m(); p < datum.rank(); ++p)
        if (w.coords2[p] % 2 != 0)
            return false; // lambda_i integral for i >= 1
    return true;
}

bool is_pminus(const Weight& w, const LieDatum& datum, const ParabolicSpec& y)
{
    if (!is_integral(w, datum))
        return false;
    for (std::size_t i : y.members)
        if (pair2(w, datum.coroots()[i]) < 0)
            return false;
    return true;
}

bool is_p(const Weight& w, const LieDatum& datum, const ParabolicSpec& y)
{
    if (!is_pminus(w, datum, y))
        return false;
    for (int p = datum.m(); p < datum.rank(); ++p)
        if (w.coords2[p] < 0)
            return false;
    return true;
}

bool is_dominant(const Weight& w, const LieDatum& datum)
{
    const Weight rho = rho_weight(datum);
    for (const Coroot& co : datum.coroots()) {
        Half2 v = pair2(w, co) + pair2(rho, co);
        if (v < 0)
            return false;
    }
    return true;
}

bool is_dot_regular(const Weight& w, const LieDatum& datum)
{
    Weight shifted = w;
    const auto& r2 = datum.rho2();
    for (int p = 0; p < datum.rank(); ++p)
        shifted.coords2[p] += r2[p];
    const std::vector<Half2> t = tilde2(datum, shifted);
    // Regular iff no root pairing vanishes; pairings are differences/sums of
    // tilde values (and single values for the short/long roots of b/c).
    for (int p = 0; p < datum.rank(); ++p) {
        for (int q = p + 1; q < datum.rank(); ++q) {
            if (t[p] == t[q])
                return false;
            if (datum.type() != LieType::a && t[p] == -t[q])
                return false;
        }
        if ((datum.type() == LieType::b || datum.type() == LieType::c) && t[p] == 0)
            return false;
    }
    return true;
}

bool leq(const Weight& mu, const Weight& lambda, const LieDatum& datum)
{
    if (mu.level2 != lambda.level2)
        throw std::invalid_argument("leq: weights have different levels");
    std::vector<Half2> diff(datum.rank());
    for (int p = 0; p < datum.rank(); ++p)
        diff[p] = lambda.coords2[p] - mu.coords2[p];
    return datum.cone_height(diff).has_value();
}

Weight embed(const Weight& w, const LieDatum& datum_from, const LieDatum& datum_to)
{
    if (datum_from.type() != datum_to.type() || datum_from.m() != datum_to.m())
        throw std::invalid_argument("embed: type or head size mismatch");
    if (datum_from.n() > datum_to.n())
        throw std::invalid_argument("embed: target rank smaller than source");
    if (!is_integral(w, datum_from))
        throw std::invalid_argument("embed: weight not integral at source rank");
    Weight out;
    out.level2 = w.level2;
    out.coords2.assign(datum_to.rank(), 0);
    std::copy(w.coords2.begin(), w.coords2.end(), out.coords2.begin());
    return out;
}

std::optional<Weight> truncate_weight(const Weight& w, const LieDatum& datum_n,
                                      const LieDatum& datum_k)
{
    if (datum_n.type() != datum_k.type() || datum_n.m() != datum_k.m())
        throw std::invalid_argument("truncate: type or head size mismatch");
    if (datum_k.n() > datum_n.n())
        throw std::invalid_argument("truncate: target rank exceeds source");
    for (int p = datum_k.rank(); p < datum_n.rank(); ++p)
        if (w.coords2[p] != 0)
            return std::nullopt;
    Weight out;
    out.level2 = w.level2;
    out.coords2.assign(w.coords2.begin(), w.coords2.begin() + datum_k.rank());
    return out;
}

void Character::add(const Weight& w, long long mult, long long depth)
{
    if (mult == 0)
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = Term{mult, depth};
    } else {
        if (it->second.depth != depth)
            throw std::logic_error("character: inconsistent depth for a weight");
        it->second.mult += mult;
        if (it->second.mult == 0)
            terms_.erase(it);
    }
}

void Character::add_rebased(const Character& other, long long factor, long long depth_shift)
{
    if (factor == 0)
        return;
    for (const auto& [w, t] : other.terms_) {
        const long long d = t.depth + depth_shift;
        if (d <= depth_)
            add(w, factor * t.mult, d);
    }
}

bool Character::nonnegative() const
{
    for (const auto& [w, t] : terms_) {
        (void)w;
        if (t.mult < 0)
            return false;
    }
    return true;
}

long long Character::total_at_depth(long long depth) const
{
    long long s = 0;
    for (const auto& [w, t] : terms_) {
        (void)w;
        if (t.depth == depth)
            s += t.mult;
    }
    return s;
}

Character verma_character(const Weight& mu, const LieDatum& datum, const ParabolicSpec& y,
                          long long depth)
{
    y.validate(datum);
    if (depth < 0)
        throw std::invalid_argument("verma_character: negative depth");
    if (!is_pminus(mu, datum, y))
        throw std::invalid_argument("verma_character: weight not in P^-");

    Character ch(mu, depth);

    // Numerator: alternating sum over the Levi Weyl group of w . mu.
    const std::vector<WeylElt> wl = subgroup_elements(datum, y.members);
    for (const WeylElt& w : wl) {
        const Weight img = dot(w, mu, datum);
        std::vector<Half2> diff(datum.rank());
        for (int p = 0; p < datum.rank(); ++p)
            diff[p] = mu.coords2[p] - img.coords2[p];
        const auto h = datum.cone_height(diff);
        if (!h)
            throw std::logic_error("verma_character: Levi dot image above the anchor");
        if (*h > depth)
            continue;
        const int sign = length(w, datum) % 2 == 0 ? 1 : -1;
        ch.add(img, sign, *h);
    }

    // Multiply by the geometric series of every positive root.  Combined with
    // the alternating numerator this yields ch L(levi, mu) times the PBW
    // generating function of the opposite nilradical.
    for (const RootVec& g : datum.positive_roots()) {
        std::vector<Half2> g2(datum.rank());
        for (int p = 0; p < datum.rank(); ++p)
            g2[p] = 2 * g[p];
        const auto hg = datum.cone_height(g2);
        if (!hg || *hg <= 0)
            throw std::logic_error("verma_character: bad root height");
        Character next(mu, depth);
        for (const auto& [w, t] : ch.terms()) {
            next.add(w, t.mult, t.depth);
            Weight shifted = w;
            for (long long k = 1; t.depth + k * *hg <= depth; ++k) {
                for (int p = 0; p < datum.rank(); ++p)
                    shifted.coords2[p] -= g2[p];
                next.add(shifted, t.mult, t.depth + k * *hg);
            }
        }
        ch = std::move(next);
    }

    if (!ch.nonnegative())
        throw std::logic_error("verma_character: negative multiplicity survived");
    if (ch.mult(mu) != 1)
        throw std::logic_error("verma_character: top multiplicity is not 1");
    return ch;
}

Character truncate_character(const Character& ch, const LieDatum& datum_n,
                             const LieDatum& datum_k)
{
    auto anchor_k = truncate_weight(ch.anchor(), datum_n, datum_k);
    Character out(anchor_k ? *anchor_k : Weight{}, ch.depth_bound());
    for (const auto& [w, t] : ch.terms()) {
        auto wk = truncate_weight(w, datum_n, datum_k);
        if (wk)
            out.add(*wk, t.mult, t.depth);
    }
    return out;
}

} // namespace oblock
