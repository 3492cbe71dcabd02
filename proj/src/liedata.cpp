#include "oblock/liedata.hpp"

#include "oblock/rng.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace oblock {

LieType lie_type_from_char(char c)
{
    switch (c) {
    case 'a': return LieType::a;
    case 'b': return LieType::b;
    case 'c': return LieType::c;
    case 'd': return LieType::d;
    default: throw std::invalid_argument(std::string("unknown Lie type '") + c + "'");
    }
}

std::string MatIndex::str() const
{
    switch (kind) {
    case Plain: return std::to_string(r);
    case Barred: return std::to_string(r) + "~";
    case Bar0: return "0~";
    }
    return "?";
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o)
{
    for (const auto& [k, v] : o.e_) {
        auto it = e_.find(k);
        if (it == e_.end()) {
            e_[k] = v;
        } else {
            it->second += v;
            if (it->second == Rat(0))
                e_.erase(it);
        }
    }
    return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o)
{
    for (const auto& [k, v] : o.e_) {
        auto it = e_.find(k);
        if (it == e_.end()) {
            e_[k] = -v;
        } else {
            it->second -= v;
            if (it->second == Rat(0))
                e_.erase(it);
        }
    }
    return *this;
}

SparseMatrix operator*(const Rat& s, const SparseMatrix& m)
{
    SparseMatrix r;
    if (s != Rat(0))
        for (const auto& [k, v] : m.e_)
            r.e_[k] = s * v;
    return r;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    // Group b's entries by row index for the contraction.
    SparseMatrix r;
    for (const auto& [ka, va] : a.e_) {
        const MatIndex mid = ka.second;
        // entries of b with row == mid
        auto lo = b.e_.lower_bound({mid, MatIndex{MatIndex::Plain, INT32_MIN}});
        for (auto it = lo; it != b.e_.end() && it->first.first == mid; ++it) {
            auto key = std::make_pair(ka.first, it->first.second);
            auto rit = r.e_.find(key);
            Rat add = va * it->second;
            if (rit == r.e_.end()) {
                if (add != Rat(0))
                    r.e_[key] = add;
            } else {
                rit->second += add;
                if (rit->second == Rat(0))
                    r.e_.erase(rit);
            }
        }
    }
    return r;
}

SparseMatrix bracket(const SparseMatrix& a, const SparseMatrix& b)
{
    return a * b - b * a;
}

Rat trace(const SparseMatrix& m)
{
    Rat t(0);
    for (const auto& [k, v] : m.entries())
        if (k.first == k.second)
            t += v;
    return t;
}

Rat cocycle_tau(const SparseMatrix& A, const SparseMatrix& B, const SparseMatrix& J)
{
    return trace(bracket(J, A) * B);
}

IotaCheck iota_check(const SparseMatrix& A, const SparseMatrix& B, const SparseMatrix& J)
{
    IotaCheck r;
    r.lhs = trace(J * bracket(A, B));
    r.rhs = cocycle_tau(A, B, J);
    r.ok = (r.lhs == r.rhs);
    return r;
}

// ---------------------------------------------------------------------------

LieDatum::LieDatum(LieType type, int m, int n, bool degenerate_ok) : type_(type), m_(m), n_(n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("LieDatum: require m >= 1 and n >= 1");
    build_simple_roots(degenerate_ok);
    build_positive_roots();
    build_realization();
    build_coroots();
    build_rho();
}

std::vector<int> LieDatum::index_set() const
{
    std::vector<int> v;
    v.reserve(rank());
    for (int p = 0; p < rank(); ++p)
        v.push_back(index_of_pos(p));
    return v;
}

namespace {

RootVec eps_diff(int rank, int p, int q) // eps_p - eps_q by window position
{
    RootVec v(rank, 0);
    v[p] += 1;
    v[q] -= 1;
    return v;
}

RootVec eps_minus(int rank, int p) // -eps_p
{
    RootVec v(rank, 0);
    v[p] -= 1;
    return v;
}

RootVec eps_minus2(int rank, int p) // -2 eps_p
{
    RootVec v(rank, 0);
    v[p] -= 2;
    return v;
}

RootVec eps_minus_pair(int rank, int p, int q) // -eps_p - eps_q (p<=q allowed)
{
    RootVec v(rank, 0);
    v[p] -= 1;
    v[q] -= 1;
    return v;
}

std::string idx_str(int i) { return std::to_string(i); }

} // namespace

void LieDatum::build_simple_roots(bool degenerate_ok)
{
    const int k = rank();
    auto alpha = [&](int j) { // alpha_j = eps_j - eps_{j+1}, j <= -2
        return SimpleRoot{"alpha_" + idx_str(j), eps_diff(k, pos_of_index(j), pos_of_index(j + 1))};
    };

    switch (type_) {
    case LieType::a:
        for (int j = -m_; j <= -2; ++j)
            simple_.push_back(alpha(j));
        break;
    case LieType::b:
        simple_.push_back({"-eps_" + idx_str(-m_), eps_minus(k, 0)});
        for (int j = -m_; j <= -2; ++j)
            simple_.push_back(alpha(j));
        break;
    case LieType::c:
        simple_.push_back({"-2eps_" + idx_str(-m_), eps_minus2(k, 0)});
        for (int j = -m_; j <= -2; ++j)
            simple_.push_back(alpha(j));
        break;
    case LieType::d:
        if (m_ == 1) {
            if (!degenerate_ok)
                throw std::invalid_argument(
                    "type d with m=1 uses the degenerate diagram; pass degenerate_ok");
            // fork root -eps_{-1}-eps_1 attached to the tail
            simple_.push_back({"-eps_-1-eps_1",
                               eps_minus_pair(k, pos_of_index(-1), pos_of_index(1))});
        } else {
            simple_.push_back(alpha(-m_));
            simple_.push_back({"-eps_" + idx_str(-m_) + "-eps_" + idx_str(-m_ + 1),
                               eps_minus_pair(k, 0, 1)});
            for (int j = -m_ + 1; j <= -2; ++j)
                simple_.push_back(alpha(j));
        }
        break;
    }

    simple_.push_back({"beta_x", eps_diff(k, pos_of_index(-1), pos_of_index(1))});
    for (int r = 1; r <= n_ - 1; ++r)
        simple_.push_back({"beta_" + idx_str(r), eps_diff(k, pos_of_index(r), pos_of_index(r + 1))});
}

void LieDatum::build_positive_roots()
{
    const int k = rank();
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q)
            positive_.push_back(eps_diff(k, p, q));
    switch (type_) {
    case LieType::a:
        break;
    case LieType::b:
        for (int p = 0; p < k; ++p)
            positive_.push_back(eps_minus(k, p));
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q)
                positive_.push_back(eps_minus_pair(k, p, q));
        break;
    case LieType::c:
        for (int p = 0; p < k; ++p)
            for (int q = p; q < k; ++q)
                positive_.push_back(eps_minus_pair(k, p, q));
        break;
    case LieType::d:
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q)
                positive_.push_back(eps_minus_pair(k, p, q));
        break;
    }
}

namespace {

// Builders for the realized root-vector pairs (positive vector, its mirror).
struct VecPair {
    SparseMatrix e, f;
};

VecPair vec_a(int i, int j)
{
    return {SparseMatrix::unit(MatIndex::plain(i), MatIndex::plain(j)),
            SparseMatrix::unit(MatIndex::plain(j), MatIndex::plain(i))};
}

VecPair vec_bcd_diff(int i, int j) // eps_i - eps_j
{
    SparseMatrix e = SparseMatrix::unit(MatIndex::plain(i), MatIndex::plain(j));
    e -= SparseMatrix::unit(MatIndex::barred(j), MatIndex::barred(i));
    SparseMatrix f = SparseMatrix::unit(MatIndex::plain(j), MatIndex::plain(i));
    f -= SparseMatrix::unit(MatIndex::barred(i), MatIndex::barred(j));
    return {e, f};
}

VecPair vec_b_short(int i) // -eps_i
{
    SparseMatrix e = SparseMatrix::unit(MatIndex::barred(i), MatIndex::bar0());
    e -= SparseMatrix::unit(MatIndex::bar0(), MatIndex::plain(i));
    SparseMatrix f = SparseMatrix::unit(MatIndex::bar0(), MatIndex::barred(i));
    f -= SparseMatrix::unit(MatIndex::plain(i), MatIndex::bar0());
    return {e, f};
}

VecPair vec_bd_minus(int i, int j) // -eps_i - eps_j, i < j
{
    SparseMatrix e = SparseMatrix::unit(MatIndex::barred(i), MatIndex::plain(j));
    e -= SparseMatrix::unit(MatIndex::barred(j), MatIndex::plain(i));
    SparseMatrix f = SparseMatrix::unit(MatIndex::plain(j), MatIndex::barred(i));
    f -= SparseMatrix::unit(MatIndex::plain(i), MatIndex::barred(j));
    return {e, f};
}

VecPair vec_c_minus(int i, int j) // -eps_i - eps_j, i <= j
{
    SparseMatrix e = SparseMatrix::unit(MatIndex::barred(i), MatIndex::plain(j));
    e += SparseMatrix::unit(MatIndex::barred(j), MatIndex::plain(i));
    SparseMatrix f = SparseMatrix::unit(MatIndex::plain(j), MatIndex::barred(i));
    f += SparseMatrix::unit(MatIndex::plain(i), MatIndex::barred(j));
    return {e, f};
}

} // namespace

void LieDatum::build_realization()
{
    const int k = rank();
    for (int p = 0; p < k; ++p) {
        const int i = index_of_pos(p);
        SparseMatrix h = SparseMatrix::unit(MatIndex::plain(i), MatIndex::plain(i));
        if (type_ != LieType::a)
            h -= SparseMatrix::unit(MatIndex::barred(i), MatIndex::barred(i));
        cartan_.push_back(std::move(h));
    }

    pos_vec_.reserve(positive_.size());
    neg_cache_.reserve(positive_.size());
    for (const RootVec& r : positive_) {
        // Decode the pattern back into index pairs.
        std::vector<std::pair<int, int>> nz; // (position, coeff)
        for (int p = 0; p < k; ++p)
            if (r[p] != 0)
                nz.push_back({p, r[p]});
        VecPair vp;
        if (nz.size() == 2 && nz[0].second == 1 && nz[1].second == -1) {
            const int i = index_of_pos(nz[0].first), j = index_of_pos(nz[1].first);
            vp = (type_ == LieType::a) ? vec_a(i, j) : vec_bcd_diff(i, j);
        } else if (nz.size() == 1 && nz[0].second == -1) {
            vp = vec_b_short(index_of_pos(nz[0].first));
        } else if (nz.size() == 1 && nz[0].second == -2) {
            vp = vec_c_minus(index_of_pos(nz[0].first), index_of_pos(nz[0].first));
        } else if (nz.size() == 2 && nz[0].second == -1 && nz[1].second == -1) {
            const int i = index_of_pos(nz[0].first), j = index_of_pos(nz[1].first);
            vp = (type_ == LieType::c) ? vec_c_minus(i, j) : vec_bd_minus(i, j);
        } else {
            throw std::logic_error("unrecognized positive root pattern");
        }
        pos_vec_.push_back(std::move(vp.e));
        neg_cache_.push_back(std::move(vp.f));
    }

    // J: windowed to the active indices (exact for every product with
    // realized matrices, which are supported in the window).
    if (type_ == LieType::a) {
        for (int r = 1; r <= n_; ++r)
            J_ -= SparseMatrix::unit(MatIndex::plain(r), MatIndex::plain(r));
    } else {
        J_ += SparseMatrix::unit(MatIndex::bar0(), MatIndex::bar0());
        for (int r = 1; r <= n_; ++r)
            J_ += SparseMatrix::unit(MatIndex::barred(r), MatIndex::barred(r));
    }
}

const SparseMatrix& LieDatum::neg_root_vector(std::size_t kk) const
{
    return neg_cache_.at(kk);
}

Rat LieDatum::root_value(const RootVec& root, const std::vector<Rat>& cartan_coeffs)
{
    Rat v(0);
    for (std::size_t p = 0; p < root.size(); ++p)
        if (root[p] != 0)
            v += Rat(root[p]) * cartan_coeffs[p];
    return v;
}

void LieDatum::build_coroots()
{
    coroots_.reserve(simple_.size());
    for (const SimpleRoot& sr : simple_) {
        // locate the realized vector pair for this simple root
        std::size_t k = positive_.size();
        for (std::size_t t = 0; t < positive_.size(); ++t)
            if (positive_[t] == sr.coeff) {
                k = t;
                break;
            }
        if (k == positive_.size())
            throw std::logic_error("simple root not found among positive roots");

        SparseMatrix h = bracket(pos_vec_[k], neg_cache_[k]);

        // Express h in the Cartan basis {E_i}: read off the plain diagonal.
        std::vector<Rat> coeff(rank(), Rat(0));
        SparseMatrix recon;
        for (int p = 0; p < rank(); ++p) {
            const int i = index_of_pos(p);
            coeff[p] = h.at(MatIndex::plain(i), MatIndex::plain(i));
            recon += coeff[p] * cartan_[p];
        }
        if (!(recon == h))
            throw std::logic_error("coroot bracket not in Cartan span");

        const Rat pairing = root_value(sr.coeff, coeff);
        if (pairing == Rat(0))
            throw std::logic_error("alpha(h_alpha') vanished");
        const Rat scale = Rat(2) / pairing;

        Coroot co;
        co.cartan.resize(rank());
        SparseMatrix h_norm;
        for (int p = 0; p < rank(); ++p) {
            const Rat c = scale * coeff[p];
            if (c.denominator() != 1)
                throw std::logic_error("non-integral coroot coefficient");
            co.cartan[p] = c.numerator();
            h_norm += c * cartan_[p];
        }
        const Rat kc = trace(J_ * h_norm);
        if (kc.denominator() != 1)
            throw std::logic_error("non-integral coroot K-coefficient");
        co.k_coeff = kc.numerator();
        coroots_.push_back(std::move(co));
    }
}

void LieDatum::build_rho()
{
    rho2_.resize(rank());
    for (int p = 0; p < rank(); ++p)
        rho2_[p] = rho2_value(type_, m_, index_of_pos(p));
}

int LieDatum::root_sign(const RootVec& v) const
{
    std::vector<std::pair<int, int>> nz;
    for (std::size_t p = 0; p < v.size(); ++p)
        if (v[p] != 0)
            nz.push_back({static_cast<int>(p), v[p]});
    auto fail = [&]() -> int { throw std::invalid_argument("root_sign: not a root vector"); };
    if (nz.empty())
        fail();
    if (nz.size() == 1) {
        const int c = nz[0].second;
        if (type_ == LieType::b && (c == 1 || c == -1))
            return c < 0 ? +1 : -1;
        if (type_ == LieType::c && (c == 2 || c == -2))
            return c < 0 ? +1 : -1;
        return fail();
    }
    if (nz.size() == 2) {
        const int c1 = nz[0].second, c2 = nz[1].second;
        if (c1 == 1 && c2 == -1)
            return +1; // eps_i - eps_j, i < j
        if (c1 == -1 && c2 == 1)
            return -1;
        if (c1 == -1 && c2 == -1)
            return type_ == LieType::a ? fail() : +1;
        if (c1 == 1 && c2 == 1)
            return type_ == LieType::a ? fail() : -1;
    }
    return fail();
}

std::optional<std::vector<Rat>> LieDatum::simple_root_coords(const std::vector<Half2>& v2) const
{
    const std::size_t rows = rank(), cols = simple_.size();
    // Augmented system: columns are simple roots, rhs is v (in halves).
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = Rat(simple_[c].coeff[r]);
        a[r][cols] = Rat(v2[r], 2);
    }
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == Rat(0))
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[row]);
        const Rat inv = Rat(1) / a[row][col];
        for (std::size_t c = col; c <= cols; ++c)
            a[row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == Rat(0))
                continue;
            const Rat f = a[r][col];
            for (std::size_t c = col; c <= cols; ++c)
                a[r][c] -= f * a[row][c];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (a[r][cols] != Rat(0))
            return std::nullopt; // inconsistent: not in the span
    // Simple roots are linearly independent in every case built here, so each
    // column must carry a pivot.
    if (pivot_col_of_row.size() != cols)
        throw std::logic_error("simple roots unexpectedly dependent");
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        x[pivot_col_of_row[r]] = a[r][cols];
    return x;
}

RealizationReport verify_realization(const LieDatum& datum, int samples, std::uint64_t seed)
{
    RealizationReport rep;
    auto fail = [&](const std::string& msg) {
        if (rep.first_failure.empty())
            rep.first_failure = msg;
    };

    // [h, v] = alpha(h) v exactly, for every Cartan basis element.
    for (std::size_t k = 0; k < datum.positive_roots().size(); ++k) {
        const RootVec& alpha = datum.positive_roots()[k];
        for (int p = 0; p < datum.rank(); ++p) {
            const SparseMatrix lhs = bracket(datum.cartan_basis()[p], datum.pos_root_vector(k));
            const SparseMatrix rhs = Rat(alpha[p]) * datum.pos_root_vector(k);
            ++rep.root_vector_checks;
            if (!(lhs == rhs))
                fail("[h,v] != alpha(h) v at root #" + std::to_string(k) + ", Cartan position "
                     + std::to_string(p));
            const SparseMatrix lhs2 = bracket(datum.cartan_basis()[p], datum.neg_root_vector(k));
            const SparseMatrix rhs2 = Rat(-alpha[p]) * datum.neg_root_vector(k);
            if (!(lhs2 == rhs2))
                fail("[h,f] != -alpha(h) f at root #" + std::to_string(k));
        }
    }

    // Coroot normalization: alpha(h_alpha) = 2 (recomputed from stored data).
    for (std::size_t s = 0; s < datum.num_simple(); ++s) {
        const Coroot& co = datum.coroots()[s];
        long long v = 0;
        for (int p = 0; p < datum.rank(); ++p)
            v += static_cast<long long>(datum.simple_roots()[s].coeff[p]) * co.cartan[p];
        if (v != 2)
            fail("alpha(h_alpha) != 2 for simple root " + datum.simple_roots()[s].label);
    }

    // Cartan commutativity.
    for (int p = 0; p < datum.rank(); ++p)
        for (int q = p + 1; q < datum.rank(); ++q)
            if (!bracket(datum.cartan_basis()[p], datum.cartan_basis()[q]).is_zero())
                fail("Cartan basis does not commute");

    // Random sampled identities for tau and iota.
    Rng rng(seed);
    auto random_elt = [&]() {
        SparseMatrix a;
        const int pieces = static_cast<int>(rng.range(1, 3));
        for (int t = 0; t < pieces; ++t) {
            const Rat c(rng.range(-3, 3));
            const std::size_t idx = static_cast<std::size_t>(
                rng.range(0, static_cast<long long>(datum.positive_roots().size()) * 2
                                 + datum.rank() - 1));
            if (idx < datum.positive_roots().size())
                a += c * datum.pos_root_vector(idx);
            else if (idx < 2 * datum.positive_roots().size())
                a += c * datum.neg_root_vector(idx - datum.positive_roots().size());
            else
                a += c * datum.cartan_basis()[idx - 2 * datum.positive_roots().size()];
        }
        return a;
    };

    for (int t = 0; t < samples; ++t) {
        const SparseMatrix A = random_elt(), B = random_elt(), C = random_elt();
        const Rat tau_ab = cocycle_tau(A, B, datum.J());
        const Rat tau_ba = cocycle_tau(B, A, datum.J());
        ++rep.sampled_pairs;
        if (tau_ab != -tau_ba)
            fail("tau not antisymmetric on sampled pair");
        const SparseMatrix ApB = A + B;
        if (cocycle_tau(ApB, C, datum.J())
            != cocycle_tau(A, C, datum.J()) + cocycle_tau(B, C, datum.J()))
            fail("tau not additive on sampled triple");
        ++rep.sampled_triples;
        const Rat cyc = cocycle_tau(bracket(A, B), C, datum.J())
                        + cocycle_tau(bracket(B, C), A, datum.J())
                        + cocycle_tau(bracket(C, A), B, datum.J());
        if (cyc != Rat(0))
            fail("tau cyclic cocycle identity failed");
        const IotaCheck ic = iota_check(A, B, datum.J());
        if (!ic.ok)
            fail("iota bracket preservation failed: " + to_string(ic.lhs)
                 + " != " + to_string(ic.rhs));
    }

    rep.pass = rep.first_failure.empty();
    return rep;
}

std::optional<long long> LieDatum::cone_height(const std::vector<Half2>& v2) const
{
    auto coords = simple_root_coords(v2);
    if (!coords)
        return std::nullopt;
    long long h = 0;
    for (const Rat& c : *coords) {
        if (c.denominator() != 1 || c.numerator() < 0)
            return std::nullopt;
        h += c.numerator();
    }
    return h;
}

} // namespace oblock
