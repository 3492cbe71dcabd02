// Integer Laurent polynomials in one variable q, and dense matrices of them.
//
// Coefficients are exact 64-bit integers; exponents may be negative (needed
// for intermediate R-polynomial algebra).  Polynomials are kept normalized:
// zero coefficients are never stored.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oblock {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long long constant)
    {
        if (constant != 0)
            coef_[0] = constant;
    }

    static LaurentPoly monomial(long long c, int exp)
    {
        LaurentPoly p;
        if (c != 0)
            p.coef_[exp] = c;
        return p;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return coef_.empty(); }
    bool is_one() const
    {
        return coef_.size() == 1 && coef_.begin()->first == 0 && coef_.begin()->second == 1;
    }

    long long coeff(int exp) const
    {
        auto it = coef_.find(exp);
        return it == coef_.end() ? 0 : it->second;
    }

    // Lowest/highest exponent with nonzero coefficient.  Precondition: nonzero.
    int valuation() const { return require_nonzero(), coef_.begin()->first; }
    int degree() const { return require_nonzero(), coef_.rbegin()->first; }

    const std::map<int, long long>& terms() const { return coef_; }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.coef_)
            add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.coef_)
            add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coef_)
            for (const auto& [eb, cb] : b.coef_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(long long s, const LaurentPoly& p)
    {
        LaurentPoly r;
        if (s != 0)
            for (const auto& [e, c] : p.coef_)
                r.coef_[e] = s * c;
        return r;
    }

    // q^k * p
    LaurentPoly shifted(int k) const
    {
        LaurentPoly r;
        for (const auto& [e, c] : coef_)
            r.coef_[e + k] = c;
        return r;
    }

    // p(-q)
    LaurentPoly negate_q() const
    {
        LaurentPoly r;
        for (const auto& [e, c] : coef_)
            r.coef_[e] = (e % 2 == 0) ? c : -c;
        return r;
    }

    // p(q^{-1})
    LaurentPoly bar() const
    {
        LaurentPoly r;
        for (const auto& [e, c] : coef_)
            r.coef_[-e] = c;
        return r;
    }

    // q^{shift} * p(q^{-2}).  This is the normalization taking a
    // Kazhdan-Lusztig polynomial to a graded multiplicity.
    LaurentPoly q_inv_squared_shift(int shift) const
    {
        LaurentPoly r;
        for (const auto& [e, c] : coef_)
            r.add_term(shift - 2 * e, c);
        return r;
    }

    long long eval_at_one() const
    {
        long long s = 0;
        for (const auto& [e, c] : coef_) {
            (void)e;
            s += c;
        }
        return s;
    }

    bool operator==(const LaurentPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const LaurentPoly& o) const { return coef_ != o.coef_; }

    bool nonneg_coeffs() const
    {
        for (const auto& [e, c] : coef_) {
            (void)e;
            if (c < 0)
                return false;
        }
        return true;
    }

    // True iff every exponent is congruent to `parity` mod 2.
    bool supported_on_parity(int parity) const
    {
        for (const auto& [e, c] : coef_) {
            (void)c;
            if (((e - parity) % 2 + 2) % 2 != 0)
                return false;
        }
        return true;
    }

    // "0", "1", "q", "1+q^2", "2q-q^3", ascending exponents.
    std::string str() const
    {
        if (coef_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : coef_) {
            long long a = c;
            if (first) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += (a < 0) ? "-" : "+";
                if (a < 0)
                    a = -a;
            }
            first = false;
            const bool show_coeff = (a != 1 || e == 0);
            if (show_coeff)
                out += std::to_string(a);
            if (e != 0) {
                out += "q";
                if (e != 1) {
                    out += "^";
                    out += std::to_string(e);
                }
            }
        }
        return out;
    }

private:
    void require_nonzero() const
    {
        if (coef_.empty())
            throw std::logic_error("valuation/degree of zero polynomial");
    }
    void add_term(int e, long long c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = coef_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                coef_.erase(it);
        }
    }

    std::map<int, long long> coef_;
};

// Dense square matrix of Laurent polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static PolyMatrix identity(std::size_t n)
    {
        PolyMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = LaurentPoly::one();
        return m;
    }

    std::size_t size() const { return n_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    PolyMatrix transpose() const
    {
        PolyMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    PolyMatrix negate_q() const
    {
        PolyMatrix t(n_);
        for (std::size_t i = 0; i < n_ * n_; ++i)
            t.a_[i] = a_[i].negate_q();
        return t;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
    {
        if (a.n_ != b.n_)
            throw std::invalid_argument("PolyMatrix size mismatch");
        PolyMatrix r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const LaurentPoly& aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < a.n_; ++j) {
                    if (b(k, j).is_zero())
                        continue;
                    r(i, j) += aik * b(k, j);
                }
            }
        return r;
    }

    bool operator==(const PolyMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (i == j && !(*this)(i, j).is_one())
                    return false;
                if (i != j && !(*this)(i, j).is_zero())
                    return false;
            }
        return true;
    }

    bool is_symmetric() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    // Inverse of a matrix that is unitriangular with respect to some total
    // refinement of the row order: entry (i,j) may be nonzero only when the
    // poset allows it, and the diagonal is 1.  `above(i,j)` must return true
    // when row i is allowed to see column j (i precedes j).  Back substitution,
    // exact; no division ever occurs.
    PolyMatrix unitriangular_inverse() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            if (!(*this)(i, i).is_one())
                throw std::invalid_argument("unitriangular_inverse: diagonal not 1");
        PolyMatrix inv = identity(n_);
        // Rows are assumed sorted so that nonzero off-diagonal entries point
        // forward (j > i); verified here.
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!(*this)(i, j).is_zero())
                    throw std::invalid_argument("unitriangular_inverse: not upper triangular");
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = j; i-- > 0;) {
                // inv(i,j) = -sum_{i<k<=j} a(i,k) inv(k,j)
                LaurentPoly s;
                for (std::size_t k = i + 1; k <= j; ++k) {
                    if ((*this)(i, k).is_zero() || inv(k, j).is_zero())
                        continue;
                    s += (*this)(i, k) * inv(k, j);
                }
                inv(i, j) = LaurentPoly::zero() - s;
            }
        return inv;
    }

private:
    std::size_t n_ = 0;
    std::vector<LaurentPoly> a_;
};

} // namespace oblock
