// Root data and matrix realization for the combined head+tail diagrams of
// types a, b, c, d.
//
// Indices live in I^+_m(n) = {-m,...,-1} u {1,...,n}.  The matrix realization
// additionally uses the mirrored barred indices and a middle index `0~`
// (types b, c, d).  Everything is exact: matrices have rational entries,
// weights are half-integers stored doubled.

#pragma once

#include "oblock/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oblock {

enum class LieType : char { a = 'a', b = 'b', c = 'c', d = 'd' };

LieType lie_type_from_char(char c);
inline char to_char(LieType t) { return static_cast<char>(t); }

struct RankSpec {
    int m = 1; // head size
    int n = 1; // tail rank (finite)
};

// Symbolic index into the full barred+unbarred index set I_m.
struct MatIndex {
    enum Kind : std::int8_t { Plain = 0, Barred = 1, Bar0 = 2 };
    Kind kind = Plain;
    int r = 0; // in I^+_m; unused for Bar0

    static MatIndex plain(int r) { return {Plain, r}; }
    static MatIndex barred(int r) { return {Barred, r}; }
    static MatIndex bar0() { return {Bar0, 0}; }

    friend bool operator==(const MatIndex& x, const MatIndex& y)
    {
        return x.kind == y.kind && (x.kind == Bar0 || x.r == y.r);
    }
    friend bool operator<(const MatIndex& x, const MatIndex& y)
    {
        if (x.kind != y.kind)
            return x.kind < y.kind;
        if (x.kind == Bar0)
            return false;
        return x.r < y.r;
    }
    std::string str() const;
};

// Finite-support exact matrix over the symbolic index set.
class SparseMatrix {
public:
    using Entry = std::pair<MatIndex, MatIndex>;

    static SparseMatrix unit(MatIndex r, MatIndex c) // elementary matrix E_{rc}
    {
        SparseMatrix m;
        m.e_[{r, c}] = Rat(1);
        return m;
    }

    bool is_zero() const { return e_.empty(); }
    const std::map<Entry, Rat>& entries() const { return e_; }
    Rat at(MatIndex r, MatIndex c) const
    {
        auto it = e_.find({r, c});
        return it == e_.end() ? Rat(0) : it->second;
    }
    void set(MatIndex r, MatIndex c, const Rat& v)
    {
        if (v == Rat(0))
            e_.erase({r, c});
        else
            e_[{r, c}] = v;
    }

    SparseMatrix& operator+=(const SparseMatrix& o);
    SparseMatrix& operator-=(const SparseMatrix& o);
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
    friend SparseMatrix operator*(const Rat& s, const SparseMatrix& m);
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b); // matrix product
    friend SparseMatrix bracket(const SparseMatrix& a, const SparseMatrix& b);   // [a,b]
    friend Rat trace(const SparseMatrix& m);

    bool operator==(const SparseMatrix& o) const { return e_ == o.e_; }

private:
    std::map<Entry, Rat> e_;
};

// Root expressed in the epsilon basis: dense integer coefficients over the
// window positions 0..m+n-1 (position p holds index p-m for p<m, p-m+1 else).
using RootVec = std::vector<int>;

struct SimpleRoot {
    std::string label; // "alpha_-2", "beta_x", "beta_1", "-eps_-1", ...
    RootVec coeff;
};

// Coroot alpha^vee = h_alpha + tr(J h_alpha) K, with h_alpha expressed in the
// Cartan basis {E_i}.  Coefficients are integral in every case that arises.
struct Coroot {
    std::vector<long long> cartan; // coefficient of E_i at each window position
    long long k_coeff = 0;
};

// Everything derived from (type, m, n): diagram, realization, coroots, rho.
// Immutable after construction.
class LieDatum {
public:
    LieDatum(LieType type, int m, int n, bool degenerate_ok = true);
    LieDatum(LieType type, RankSpec rank, bool degenerate_ok = true)
        : LieDatum(type, rank.m, rank.n, degenerate_ok)
    {
    }

    LieType type() const { return type_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int rank() const { return m_ + n_; } // window size m+n

    // Window position <-> index translation.
    int index_of_pos(int p) const { return p < m_ ? p - m_ : p - m_ + 1; }
    int pos_of_index(int idx) const { return idx < 0 ? idx + m_ : idx + m_ - 1; }
    std::vector<int> index_set() const; // ordered unbarred indices
    static bool delta(int idx) { return idx > 0; } // the delta_j of the rho formula

    // Diagram order: head roots, then beta_x, then beta_1..beta_{n-1}.
    const std::vector<SimpleRoot>& simple_roots() const { return simple_; }
    const std::vector<Coroot>& coroots() const { return coroots_; }
    std::size_t num_simple() const { return simple_.size(); }

    // All positive roots of the rank-(m,n) system, simple roots first.
    const std::vector<RootVec>& positive_roots() const { return positive_; }

    // Matrix realization.
    const std::vector<SparseMatrix>& cartan_basis() const { return cartan_; } // E_i by position
    const SparseMatrix& pos_root_vector(std::size_t k) const { return pos_vec_[k]; }
    const SparseMatrix& neg_root_vector(std::size_t k) const; // mirror of pos_root_vector(k)
    const SparseMatrix& J() const { return J_; }

    // Value of a root on a Cartan element sum c_i E_i.
    static Rat root_value(const RootVec& root, const std::vector<Rat>& cartan_coeffs);

    // rho coordinates (doubled half-integers) over the window; rho(K)=0.
    const std::vector<Half2>& rho2() const { return rho2_; }

    // -1/0/+1 classification of a vector that is +-(root); throws if neither.
    int root_sign(const RootVec& v) const;

    // Height of a nonnegative-integral combination of simple roots; nullopt if
    // `v` is not such a combination (exact rational solve).
    std::optional<long long> cone_height(const std::vector<Half2>& v2) const;

    // Coefficients of v in the simple-root basis, if v lies in their span.
    std::optional<std::vector<Rat>> simple_root_coords(const std::vector<Half2>& v2) const;

    bool degenerate_diagram() const { return m_ == 1; }

private:
    void build_simple_roots(bool degenerate_ok);
    void build_positive_roots();
    void build_realization();
    void build_coroots();
    void build_rho();

    LieType type_;
    int m_, n_;
    std::vector<SimpleRoot> simple_;
    std::vector<Coroot> coroots_;
    std::vector<RootVec> positive_;
    std::vector<SparseMatrix> cartan_;
    std::vector<SparseMatrix> pos_vec_;
    std::vector<SparseMatrix> neg_cache_;
    SparseMatrix J_;
    std::vector<Half2> rho2_;
};

// rho(E_j) for an arbitrary index j (not restricted to a window), doubled.
inline Half2 rho2_value(LieType t, int m, int j)
{
    const long long dj = j > 0 ? 1 : 0;
    switch (t) {
    case LieType::b: return 2 * (-m - j + dj) - 1;
    case LieType::c: return 2 * (-m - 1 - j + dj);
    default: return 2 * (-m - j + dj);
    }
}

// 2-cocycle tau(A,B) = tr([J,A]B).
Rat cocycle_tau(const SparseMatrix& A, const SparseMatrix& B, const SparseMatrix& J);

// Verifies that iota(A) = A + tr(JA) K intertwines the direct-sum bracket with
// the cocycle bracket, i.e. tr(J[A,B]) == tau(A,B).  Returns the two sides.
struct IotaCheck {
    bool ok = false;
    Rat lhs; // tr(J[A,B])
    Rat rhs; // tau(A,B)
};
IotaCheck iota_check(const SparseMatrix& A, const SparseMatrix& B, const SparseMatrix& J);

// Exhaustive-and-sampled verification of the matrix realization:
//   * [h, v] = alpha(h) v for every Cartan basis element and root vector
//   * alpha(h_alpha) = 2 for every simple coroot
//   * tau bilinear, antisymmetric, cyclic on sampled triples
//   * iota bracket preservation on sampled pairs
struct RealizationReport {
    bool pass = false;
    std::size_t root_vector_checks = 0;
    std::size_t sampled_pairs = 0;
    std::size_t sampled_triples = 0;
    std::string first_failure;
};
RealizationReport verify_realization(const LieDatum& datum, int samples, std::uint64_t seed);

} // namespace oblock
