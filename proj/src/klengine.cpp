#include "oblock/klengine.hpp"

#include <algorithm>
#include <stdexcept>

namespace oblock {

KLTable::KLTable(const LieDatum& datum, std::vector<std::size_t> jgens)
    : datum_(datum), jgens_(std::move(jgens))
{
    std::sort(jgens_.begin(), jgens_.end());
    for (std::size_t s : jgens_)
        if (s >= datum_.num_simple())
            throw std::invalid_argument("KLTable: parabolic generator out of range");
    intern(WeylElt::identity(datum_.rank()));
}

KLTable::Id KLTable::intern(const WeylElt& w)
{
    auto it = ids_.find(w);
    if (it != ids_.end())
        return it->second;
    const Id id = static_cast<Id>(pool_.size());
    pool_.push_back(w);
    ids_.emplace(w, id);
    len_.push_back(-1);
    minrep_.push_back(-1);
    rmul_.emplace_back(datum_.num_simple(), UINT32_MAX);
    return id;
}

KLTable::Id KLTable::right_mult(Id w, std::size_t s)
{
    const Id slot = rmul_[w][s];
    if (slot != UINT32_MAX)
        return slot;
    const WeylElt ws = pool_[w] * simple_reflection(datum_, s);
    const Id id = intern(ws); // may reallocate rmul_
    rmul_[w][s] = id;
    return id;
}

int KLTable::len(Id w)
{
    if (len_[w] < 0)
        len_[w] = oblock::length(pool_[w], datum_);
    return len_[w];
}

bool KLTable::right_descent(Id w, std::size_t s)
{
    return is_right_descent(datum_, pool_[w], s);
}

bool KLTable::min_rep(Id w)
{
    if (minrep_[w] < 0) {
        bool ok = true;
        for (std::size_t s : jgens_)
            if (is_left_descent(datum_, s, pool_[w])) {
                ok = false;
                break;
            }
        minrep_[w] = ok ? 1 : 0;
    }
    return minrep_[w] == 1;
}

bool KLTable::leq(Id x, Id w)
{
    if (x == w || len(x) == 0)
        return true;
    if (len(x) >= len(w))
        return false;
    const auto k = key(x, w);
    auto it = leqmemo_.find(k);
    if (it != leqmemo_.end())
        return it->second;
    bool result = false;
    for (std::size_t s = 0; s < datum_.num_simple(); ++s) {
        if (!right_descent(w, s))
            continue;
        const Id ws = right_mult(w, s);
        result = right_descent(x, s) ? leq(right_mult(x, s), ws) : leq(x, ws);
        break;
    }
    leqmemo_[k] = result;
    return result;
}

const std::vector<KLTable::Id>& KLTable::cone(Id w)
{
    auto it = cones_.find(w);
    if (it != cones_.end())
        return it->second;
    std::vector<Id> result;
    if (len(w) == 0) {
        result = {w};
    } else {
        std::size_t s = 0;
        while (!right_descent(w, s))
            ++s;
        const std::vector<Id> base = cone(right_mult(w, s)); // copy: recursion may rehash
        std::vector<Id> acc = base;
        for (Id z : base)
            acc.push_back(right_mult(z, s));
        std::sort(acc.begin(), acc.end());
        acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
        result = std::move(acc);
    }
    return cones_.emplace(w, std::move(result)).first->second;
}

LaurentPoly KLTable::rpol(Id x, Id w)
{
    if (x == w)
        return LaurentPoly::one();
    if (!leq(x, w))
        return LaurentPoly::zero();
    const auto k = key(x, w);
    auto it = rmemo_.find(k);
    if (it != rmemo_.end())
        return it->second;
    std::size_t s = 0;
    while (!right_descent(w, s))
        ++s;
    const Id ws = right_mult(w, s);
    const Id xs = right_mult(x, s);
    LaurentPoly result;
    if (right_descent(x, s)) {
        result = rpol(xs, ws);
    } else {
        result = LaurentPoly::monomial(1, 1) * rpol(xs, ws)
                 + (LaurentPoly::monomial(1, 1) - LaurentPoly::one()) * rpol(x, ws);
    }
    rmemo_[k] = result;
    return result;
}

LaurentPoly KLTable::kl(Id x, Id w)
{
    if (x == w)
        return LaurentPoly::one();
    if (!leq(x, w))
        return LaurentPoly::zero();
    const auto k = key(x, w);
    auto it = klmemo_.find(k);
    if (it != klmemo_.end())
        return it->second;

    std::size_t s = 0;
    while (!right_descent(w, s))
        ++s;
    const Id v = right_mult(w, s); // v = ws < w
    const Id xs = right_mult(x, s);
    const int c = right_descent(x, s) ? 1 : 0;

    LaurentPoly result = LaurentPoly::monomial(1, 1 - c) * kl(xs, v)
                         + LaurentPoly::monomial(1, c) * kl(x, v);
    // mu-corrections: z <= v with zs < z
    for (Id z : cone(v)) {
        if (!right_descent(z, s) || !leq(x, z))
            continue;
        const long long m = mu_kl(z, v);
        if (m == 0)
            continue;
        result -= m * (kl(x, z).shifted((len(w) - len(z)) / 2));
    }

    if (result.is_zero() || result.coeff(0) != 1)
        throw std::logic_error("KL polynomial without constant term 1");
    if (2 * result.degree() > len(w) - len(x) - 1)
        throw std::logic_error("KL polynomial degree bound violated");
    klmemo_[k] = result;
    return result;
}

long long KLTable::mu_kl(Id z, Id v)
{
    const int d = len(v) - len(z);
    if (d <= 0 || d % 2 == 0)
        return 0;
    return kl(z, v).coeff((d - 1) / 2);
}

long long KLTable::mu_npol(Id z, Id v)
{
    const int d = len(v) - len(z);
    if (d <= 0 || d % 2 == 0)
        return 0;
    return npol(z, v).coeff((d - 1) / 2);
}

LaurentPoly KLTable::npol(Id x, Id w)
{
    if (jgens_.empty())
        return kl(x, w);
    if (x == w)
        return LaurentPoly::one();
    if (!leq(x, w))
        return LaurentPoly::zero();
    const auto k = key(x, w);
    auto it = nmemo_.find(k);
    if (it != nmemo_.end())
        return it->second;

    std::size_t s = 0;
    while (!right_descent(w, s))
        ++s;
    const Id v = right_mult(w, s);
    if (!min_rep(v))
        throw std::logic_error("npol: ws left the set of minimal representatives");
    const Id xs = right_mult(x, s);

    LaurentPoly result;
    if (!min_rep(xs)) {
        // xs = tx for some t in J: the standard-basis vector is killed.
        result = LaurentPoly::zero();
    } else if (right_descent(x, s)) {
        result = npol(xs, v) + LaurentPoly::monomial(1, 1) * npol(x, v);
    } else {
        result = LaurentPoly::monomial(1, 1) * npol(xs, v) + npol(x, v);
    }
    for (Id z : cone(v)) {
        if (!min_rep(z) || !right_descent(z, s) || !leq(x, z))
            continue;
        const long long m = mu_npol(z, v);
        if (m == 0)
            continue;
        result -= m * (npol(x, z).shifted((len(w) - len(z)) / 2));
    }

    if (!result.is_zero() && 2 * result.degree() > len(w) - len(x) - 1)
        throw std::logic_error("parabolic KL degree bound violated");
    nmemo_[k] = result;
    return result;
}

LaurentPoly KLTable::r_poly(const WeylElt& x, const WeylElt& w)
{
    std::lock_guard<std::mutex> lock(mutex_);
    if (x.rank() != datum_.rank() || w.rank() != datum_.rank())
        throw std::invalid_argument("r_poly: rank mismatch");
    return rpol(intern(x), intern(w));
}

LaurentPoly KLTable::kl_poly(const WeylElt& x, const WeylElt& w)
{
    std::lock_guard<std::mutex> lock(mutex_);
    if (x.rank() != datum_.rank() || w.rank() != datum_.rank())
        throw std::invalid_argument("kl_poly: rank mismatch");
    return kl(intern(x), intern(w));
}

LaurentPoly KLTable::parabolic_kl(const WeylElt& x, const WeylElt& w)
{
    std::lock_guard<std::mutex> lock(mutex_);
    const Id ix = intern(x), iw = intern(w);
    if (!min_rep(ix) || !min_rep(iw))
        throw std::invalid_argument("parabolic_kl: inputs must be minimal coset representatives");
    return npol(ix, iw);
}

bool KLTable::bruhat_leq(const WeylElt& x, const WeylElt& w)
{
    std::lock_guard<std::mutex> lock(mutex_);
    return leq(intern(x), intern(w));
}

bool KLTable::is_min_rep(const WeylElt& w)
{
    std::lock_guard<std::mutex> lock(mutex_);
    return min_rep(intern(w));
}

int KLTable::length(const WeylElt& w)
{
    std::lock_guard<std::mutex> lock(mutex_);
    return len(intern(w));
}

GradedDecomposition graded_decomposition_matrix(const BlockPoset& block, const LieDatum& datum,
                                                const ParabolicSpec& y, KLTable& table)
{
    if (!block.anchor_regular)
        throw std::invalid_argument(
            "graded_decomposition_matrix: singular anchor; use the dual-block routines");
    if (table.parabolic() != y.members)
        throw std::invalid_argument("graded_decomposition_matrix: table parabolic != Y");
    if (&table.datum() != &datum && table.datum().rank() != datum.rank())
        throw std::invalid_argument("graded_decomposition_matrix: table datum mismatch");

    GradedDecomposition out;
    out.labels = block.p_subset;
    const std::size_t nl = out.labels.size();
    out.dec = PolyMatrix(nl);
    for (std::size_t i = 0; i < nl; ++i) {
        const BlockElement& mu = block.elements[out.labels[i]];
        if (!table.is_min_rep(mu.w))
            throw std::logic_error("block representative is not a minimal coset representative");
        for (std::size_t j = 0; j < nl; ++j) {
            const BlockElement& ga = block.elements[out.labels[j]];
            if (i == j) {
                out.dec(i, j) = LaurentPoly::one();
                continue;
            }
            const LaurentPoly n = table.parabolic_kl(mu.w, ga.w);
            if (n.is_zero())
                continue;
            LaurentPoly d = n.q_inv_squared_shift(ga.len - mu.len);
            if (d.valuation() < 1)
                throw std::logic_error("graded multiplicity in nonpositive degree");
            if (!d.supported_on_parity(ga.len - mu.len))
                throw std::logic_error("graded multiplicity violates length parity");
            if (!d.nonneg_coeffs())
                throw std::logic_error("negative graded multiplicity");
            out.dec(i, j) = std::move(d);
        }
    }
    return out;
}

} // namespace oblock
