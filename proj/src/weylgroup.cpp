#include "oblock/weylgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oblock {

WeylElt WeylElt::identity(int rank)
{
    std::vector<int> img(rank);
    for (int p = 0; p < rank; ++p)
        img[p] = p + 1;
    return WeylElt(std::move(img));
}

bool WeylElt::is_identity() const
{
    for (int p = 0; p < rank(); ++p)
        if (img_[p] != p + 1)
            return false;
    return true;
}

WeylElt WeylElt::inverse() const
{
    std::vector<int> inv(img_.size());
    for (int p = 0; p < rank(); ++p) {
        auto [q, s] = image(p);
        inv[q] = s * (p + 1);
    }
    return WeylElt(std::move(inv));
}

WeylElt operator*(const WeylElt& a, const WeylElt& b)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("WeylElt rank mismatch");
    // (a*b)(e_p): b sends p to (q,s), then a sends q to (r,t).
    std::vector<int> img(a.rank());
    for (int p = 0; p < b.rank(); ++p) {
        auto [q, s] = b.image(p);
        auto [r, t] = a.image(q);
        img[p] = s * t * (r + 1);
    }
    return WeylElt::from_image(std::move(img));
}

std::vector<Half2> WeylElt::apply(const std::vector<Half2>& t) const
{
    std::vector<Half2> out(t.size());
    for (int p = 0; p < rank(); ++p) {
        auto [q, s] = image(p);
        out[q] = s * t[p];
    }
    return out;
}

RootVec WeylElt::apply_root(const RootVec& r) const
{
    RootVec out(r.size(), 0);
    for (int p = 0; p < rank(); ++p) {
        if (r[p] == 0)
            continue;
        auto [q, s] = image(p);
        out[q] = s * r[p];
    }
    return out;
}

int WeylElt::num_sign_flips() const
{
    int c = 0;
    for (int v : img_)
        if (v < 0)
            ++c;
    return c;
}

std::size_t WeylElt::hash() const
{
    std::size_t h = 1469598103934665603ull;
    for (int v : img_) {
        h ^= static_cast<std::size_t>(v + (1 << 20));
        h *= 1099511628211ull;
    }
    return h;
}

std::string WeylElt::str() const
{
    std::ostringstream os;
    os << "[";
    for (int p = 0; p < rank(); ++p) {
        if (p)
            os << ",";
        os << img_[p];
    }
    os << "]";
    return os.str();
}

WeylElt simple_reflection(const LieDatum& datum, std::size_t simple_index)
{
    const RootVec& a = datum.simple_roots().at(simple_index).coeff;
    std::vector<std::pair<int, int>> nz;
    for (std::size_t p = 0; p < a.size(); ++p)
        if (a[p] != 0)
            nz.push_back({static_cast<int>(p), a[p]});

    WeylElt e = WeylElt::identity(datum.rank());
    std::vector<int> img = e.raw();
    if (nz.size() == 2 && nz[0].second == 1 && nz[1].second == -1) {
        // transposition of the two slots
        std::swap(img[nz[0].first], img[nz[1].first]);
    } else if (nz.size() == 1 && (nz[0].second == -1 || nz[0].second == -2)) {
        img[nz[0].first] = -img[nz[0].first];
    } else if (nz.size() == 2 && nz[0].second == -1 && nz[1].second == -1) {
        // swap with both signs flipped
        std::swap(img[nz[0].first], img[nz[1].first]);
        img[nz[0].first] = -img[nz[0].first];
        img[nz[1].first] = -img[nz[1].first];
    } else {
        throw std::logic_error("simple_reflection: unexpected simple-root pattern");
    }
    return WeylElt::from_image(std::move(img));
}

Weight dot(const WeylElt& w, const Weight& mu, const LieDatum& datum)
{
    Weight shifted = mu;
    for (int p = 0; p < datum.rank(); ++p)
        shifted.coords2[p] += datum.rho2()[p];
    const std::vector<Half2> t = w.apply(tilde2(datum, shifted));
    Weight out = from_tilde2(datum, t, mu.level2);
    for (int p = 0; p < datum.rank(); ++p)
        out.coords2[p] -= datum.rho2()[p];
    return out;
}

Weight dot_reflect(std::size_t simple_index, const Weight& mu, const LieDatum& datum)
{
    Weight shifted = mu;
    for (int p = 0; p < datum.rank(); ++p)
        shifted.coords2[p] += datum.rho2()[p];
    const Half2 pairing2 = pair2(shifted, datum.coroots().at(simple_index));
    if (pairing2 % 2 != 0)
        throw std::invalid_argument("dot_reflect: non-integral pairing");
    const long long c = pairing2 / 2;
    Weight out = mu;
    const RootVec& a = datum.simple_roots()[simple_index].coeff;
    for (int p = 0; p < datum.rank(); ++p)
        out.coords2[p] -= 2 * c * a[p]; // doubled coordinates
    return out;
}

int length(const WeylElt& w, const LieDatum& datum)
{
    int inv = 0;
    for (const RootVec& g : datum.positive_roots())
        if (datum.root_sign(w.apply_root(g)) < 0)
            ++inv;
    return inv;
}

bool is_left_descent(const LieDatum& datum, std::size_t s, const WeylElt& w)
{
    // l(sigma_s w) < l(w)  iff  w^{-1}(alpha_s) < 0
    const RootVec img = w.inverse().apply_root(datum.simple_roots()[s].coeff);
    return datum.root_sign(img) < 0;
}

bool is_right_descent(const LieDatum& datum, const WeylElt& w, std::size_t s)
{
    const RootVec img = w.apply_root(datum.simple_roots()[s].coeff);
    return datum.root_sign(img) < 0;
}

std::vector<std::size_t> reduced_word(const WeylElt& w, const LieDatum& datum)
{
    std::vector<std::size_t> word;
    WeylElt cur = w;
    while (!cur.is_identity()) {
        bool stripped = false;
        for (std::size_t s = 0; s < datum.num_simple(); ++s) {
            if (is_left_descent(datum, s, cur)) {
                word.push_back(s);
                cur = simple_reflection(datum, s) * cur;
                stripped = true;
                break;
            }
        }
        if (!stripped)
            throw std::logic_error("reduced_word: non-identity element with no descent");
    }
    return word;
}

bool bruhat_leq(const WeylElt& x, const WeylElt& w, const LieDatum& datum)
{
    if (x.is_identity())
        return true;
    const int lx = length(x, datum), lw = length(w, datum);
    if (lx > lw)
        return false;
    if (lx == lw)
        return x == w;
    // lifting property: pick s with sw < w
    for (std::size_t s = 0; s < datum.num_simple(); ++s) {
        if (!is_left_descent(datum, s, w))
            continue;
        const WeylElt refl = simple_reflection(datum, s);
        const WeylElt sw = refl * w;
        if (is_left_descent(datum, s, x))
            return bruhat_leq(refl * x, sw, datum);
        return bruhat_leq(x, sw, datum);
    }
    throw std::logic_error("bruhat_leq: non-identity element with no descent");
}

std::vector<WeylElt> subgroup_elements(const LieDatum& datum,
                                       const std::vector<std::size_t>& generators)
{
    std::vector<WeylElt> gens;
    gens.reserve(generators.size());
    for (std::size_t s : generators)
        gens.push_back(simple_reflection(datum, s));

    std::map<WeylElt, int> seen; // element -> BFS depth
    std::deque<WeylElt> queue;
    const WeylElt id = WeylElt::identity(datum.rank());
    seen[id] = 0;
    queue.push_back(id);
    while (!queue.empty()) {
        WeylElt u = queue.front();
        queue.pop_front();
        for (const WeylElt& g : gens) {
            WeylElt v = u * g;
            if (seen.emplace(v, seen[u] + 1).second)
                queue.push_back(v);
        }
    }
    std::vector<WeylElt> out;
    out.reserve(seen.size());
    for (const auto& [w, d] : seen) {
        (void)d;
        out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [&](const WeylElt& a, const WeylElt& b) {
        const int la = length(a, datum), lb = length(b, datum);
        if (la != lb)
            return la < lb;
        return a < b;
    });
    return out;
}

WeylElt min_coset_rep(const WeylElt& w, const Weight& lambda, const LieDatum& datum)
{
    if (!is_dominant(lambda, datum) || !is_integral(lambda, datum))
        throw std::invalid_argument("min_coset_rep: anchor must be dominant integral");
    Weight shifted = lambda;
    for (int p = 0; p < datum.rank(); ++p)
        shifted.coords2[p] += datum.rho2()[p];
    std::vector<std::size_t> stab; // simple reflections fixing lambda under dot
    for (std::size_t s = 0; s < datum.num_simple(); ++s)
        if (pair2(shifted, datum.coroots()[s]) == 0)
            stab.push_back(s);

    WeylElt cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s : stab) {
            if (is_right_descent(datum, cur, s)) {
                cur = cur * simple_reflection(datum, s);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

std::optional<std::size_t> BlockPoset::find(const Weight& w) const
{
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].weight == w)
            return i;
    return std::nullopt;
}

namespace {

// Regular anchors: breadth-first search over the minimal right-coset
// representatives of W_Y \ W themselves.  Every representative is reached by
// length-increasing right multiplications that stay inside the set, so the
// search never touches the rest of the (possibly enormous) orbit.
void fill_block_minrep(BlockPoset& block, const Weight& lambda, const LieDatum& datum,
                       const ParabolicSpec& y)
{
    Weight shifted = lambda;
    for (int p = 0; p < datum.rank(); ++p)
        shifted.coords2[p] += datum.rho2()[p];
    const std::vector<Half2> t0 = tilde2(datum, shifted);

    auto is_rep = [&](const WeylElt& x) {
        for (std::size_t s : y.members)
            if (is_left_descent(datum, s, x))
                return false;
        return true;
    };

    std::map<WeylElt, int> seen;
    std::deque<WeylElt> queue;
    const WeylElt id = WeylElt::identity(datum.rank());
    seen[id] = 0;
    queue.push_back(id);
    while (!queue.empty()) {
        const WeylElt x = queue.front();
        queue.pop_front();
        const int dist = seen[x];
        for (std::size_t s = 0; s < datum.num_simple(); ++s) {
            if (is_right_descent(datum, x, s))
                continue;
            const WeylElt xs = x * simple_reflection(datum, s);
            if (!is_rep(xs))
                continue;
            if (seen.emplace(xs, dist + 1).second)
                queue.push_back(xs);
        }
    }

    for (const auto& [x, dist] : seen) {
        Weight mu = from_tilde2(datum, x.apply(t0), lambda.level2);
        for (int p = 0; p < datum.rank(); ++p)
            mu.coords2[p] -= datum.rho2()[p];
        if (!is_pminus(mu, datum, y))
            throw std::logic_error("minimal representative left P^-; convention error");
        BlockElement el;
        el.weight = std::move(mu);
        el.w = x;
        el.len = dist;
        block.elements.push_back(std::move(el));
    }
}

// Singular anchors: walk the full dot orbit of the weight (its stabilizer is
// large, so the orbit itself stays small) and keep the P^- part.
void fill_block_orbit(BlockPoset& block, const Weight& lambda, const LieDatum& datum,
                      const ParabolicSpec& y)
{
    Weight shifted = lambda;
    for (int p = 0; p < datum.rank(); ++p)
        shifted.coords2[p] += datum.rho2()[p];
    const std::vector<Half2> t0 = tilde2(datum, shifted);

    std::vector<WeylElt> refl;
    for (std::size_t s = 0; s < datum.num_simple(); ++s)
        refl.push_back(simple_reflection(datum, s));

    struct Node {
        std::vector<Half2> t;
        WeylElt w;
        int dist;
    };
    std::map<std::vector<Half2>, std::size_t> seen;
    std::vector<Node> nodes;
    nodes.push_back({t0, WeylElt::identity(datum.rank()), 0});
    seen[t0] = 0;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        // copy defensively: nodes reallocates
        const std::vector<Half2> t = nodes[head].t;
        const WeylElt w = nodes[head].w;
        const int dist = nodes[head].dist;
        for (std::size_t s = 0; s < refl.size(); ++s) {
            std::vector<Half2> t2v = refl[s].apply(t);
            if (seen.emplace(t2v, nodes.size()).second)
                nodes.push_back({std::move(t2v), refl[s] * w, dist + 1});
        }
    }

    for (const Node& nd : nodes) {
        Weight mu = from_tilde2(datum, nd.t, lambda.level2);
        for (int p = 0; p < datum.rank(); ++p)
            mu.coords2[p] -= datum.rho2()[p];
        if (!is_pminus(mu, datum, y))
            continue;
        BlockElement el;
        el.weight = std::move(mu);
        el.w = nd.w;
        el.len = nd.dist;
        block.elements.push_back(std::move(el));
    }
}

} // namespace

BlockPoset orbit_block(const Weight& lambda, const LieDatum& datum, const ParabolicSpec& y)
{
    y.validate(datum);
    if (!is_integral(lambda, datum))
        throw std::invalid_argument("orbit_block: anchor not integral");
    if (!is_dominant(lambda, datum))
        throw std::invalid_argument("orbit_block: anchor not dominant");

    BlockPoset block;
    block.anchor = lambda;
    block.anchor_regular = is_dot_regular(lambda, datum);

    if (block.anchor_regular)
        fill_block_minrep(block, lambda, datum, y);
    else
        fill_block_orbit(block, lambda, datum, y);

    for (BlockElement& el : block.elements) {
        el.in_p = true;
        for (int p = datum.m(); p < datum.rank(); ++p)
            if (el.weight.coords2[p] < 0)
                el.in_p = false;
        // Cross-validate the two dot-action paths along this element's word.
        const std::vector<std::size_t> word = reduced_word(el.w, datum);
        Weight check = block.anchor;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            check = dot_reflect(*it, check, datum);
        if (!(check == el.weight))
            throw std::logic_error("dot-action paths disagree; convention error");
        if (static_cast<int>(word.size()) != el.len)
            throw std::logic_error("orbit BFS distance disagrees with reduced word");
    }

    std::sort(block.elements.begin(), block.elements.end(),
              [](const BlockElement& a, const BlockElement& b) {
                  if (a.len != b.len)
                      return a.len < b.len;
                  return a.weight < b.weight;
              });
    for (std::size_t i = 0; i < block.elements.size(); ++i)
        if (block.elements[i].in_p)
            block.p_subset.push_back(i);

    if (datum.type() == LieType::d)
        for (const BlockElement& el : block.elements)
            if (el.w.num_sign_flips() % 2 != 0)
                throw std::logic_error("type d element with odd sign flips");

    return block;
}

std::vector<std::pair<std::size_t, std::size_t>> block_covers(const BlockPoset& block,
                                                              const LieDatum& datum)
{
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < block.elements.size(); ++i)
        for (std::size_t j = 0; j < block.elements.size(); ++j) {
            if (block.elements[j].len != block.elements[i].len + 1)
                continue;
            if (bruhat_leq(block.elements[i].w, block.elements[j].w, datum))
                covers.push_back({i, j});
        }
    return covers;
}

std::vector<Weight> dot_orbit(const Weight& w, const LieDatum& datum)
{
    Weight shifted = w;
    for (int p = 0; p < datum.rank(); ++p)
        shifted.coords2[p] += datum.rho2()[p];
    const std::vector<Half2> t0 = tilde2(datum, shifted);

    std::vector<WeylElt> refl;
    for (std::size_t s = 0; s < datum.num_simple(); ++s)
        refl.push_back(simple_reflection(datum, s));

    std::set<std::vector<Half2>> seen;
    std::deque<std::vector<Half2>> queue;
    seen.insert(t0);
    queue.push_back(t0);
    while (!queue.empty()) {
        const std::vector<Half2> t = queue.front();
        queue.pop_front();
        for (const WeylElt& r : refl) {
            std::vector<Half2> t2v = r.apply(t);
            if (seen.insert(t2v).second)
                queue.push_back(std::move(t2v));
        }
    }

    std::vector<Weight> out;
    for (const auto& t : seen) {
        Weight mu = from_tilde2(datum, t, w.level2);
        for (int p = 0; p < datum.rank(); ++p)
            mu.coords2[p] -= datum.rho2()[p];
        out.push_back(std::move(mu));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oblock
