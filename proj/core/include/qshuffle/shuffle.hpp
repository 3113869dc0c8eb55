#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qshuffle/polyring.hpp"

namespace qshuffle {

/// sl_n Cartan data: c_ii = 2, c_{i,i+1} = c_{i+1,i} = -1, 0 otherwise.
class RootSystemData {
public:
    explicit RootSystemData(int n);
    /// Standard matrix with the symmetric pair (i0,j0) moved by delta.
    /// Exists so tests can feed the shuffle product a wrong zeta; the entry
    /// must stay nonzero (the pole structure is fixed by adjacency).
    static RootSystemData perturbed(int n, int i0, int j0, int delta);

    int n() const { return n_; }
    int cartan(int i, int j) const;

private:
    int n_;
    std::vector<int> c_; // (n-1) x (n-1), row-major
};

/// Positive root alpha_j + alpha_{j+1} + ... + alpha_i, 1 <= j <= i <= n-1.
/// The default comparison is the total order: j < j', or j = j' and i <= i'.
struct Root {
    int j = 1;
    int i = 1;
    auto operator<=>(const Root&) const = default;
    int length() const { return i - j + 1; }
    bool contains(int color) const { return j <= color && color <= i; }
    DegreeVector degree(int rank) const;
    std::string str() const { return std::to_string(j) + "-" + std::to_string(i); }
};

/// All positive roots of sl_n in the total order above.
std::vector<Root> positive_roots(int n);

/// A split (r_j,...,r_i) of a loop mode r across a root's interval.
struct Decomposition {
    Root root;
    std::vector<int> r;
    Decomposition(Root root_, std::vector<int> r_);
    int total_mode() const;
    /// (r, 0, ..., 0)
    static Decomposition leading(Root root, int mode);
    /// Balanced split r_k = floor(r(k-j+1)/len) - floor(r(k-j)/len).
    static Decomposition slope(Root root, int mode);
    std::string str() const;
};

/// (z - num_shift) / (z - den_shift) in a formal ratio variable z.
struct ZetaRatio {
    LaurentV num_shift;
    LaurentV den_shift;
    bool is_one() const { return num_shift == den_shift; }
};

/// zeta_{i,j}(z) = (z - v^{-c_ij}) / (z - 1).
ZetaRatio zeta(const RootSystemData& rs, int i, int j);

/// Element of the shuffle algebra in a fixed degree: the stored polynomial is
/// the numerator f of F = f / prod_{i<n-1} prod_{r,r'} (x_{i,r} - x_{i+1,r'}).
struct ShuffleElement {
    int rank = 2;
    DegreeVector degree;
    MultiLaurent numerator;

    ShuffleElement(int rank_, DegreeVector degree_, MultiLaurent numerator_);
    static ShuffleElement unit(int rank);
    static ShuffleElement zero(int rank, const DegreeVector& degree);

    bool is_zero() const { return numerator.is_zero(); }
    /// Number of implied pole factors prod k_i * k_{i+1}.
    long pole_count() const;
    /// Loop mode: numerator total degree minus pole count (numerator must be
    /// homogeneous; zero elements report 0).
    std::optional<long> total_mode() const;
    bool same_color_symmetric() const;

    ShuffleElement scaled(const RatV& c) const;
    ShuffleElement operator+(const ShuffleElement& o) const; // equal degree required
    ShuffleElement operator-(const ShuffleElement& o) const;
    bool operator==(const ShuffleElement& o) const;
    bool operator!=(const ShuffleElement& o) const { return !(*this == o); }
};

/// The shuffle product.  Normalization: the symmetrization average of
/// F(first block) G(second block) prod zeta, i.e. the sum over block shuffles
/// scaled by k!l!/(k+l)!.  Unit law and associativity hold exactly.
ShuffleElement star(const RootSystemData& rs, const ShuffleElement& F, const ShuffleElement& G);
ShuffleElement star(const ShuffleElement& F, const ShuffleElement& G);

/// Literal definition of the same product as one symmetrized rational
/// expression over the full permutation group; test oracle for star.
ShuffleElement star_symmetrization_oracle(const RootSystemData& rs, const ShuffleElement& F,
                                          const ShuffleElement& G);

/// True iff the numerator vanishes under every wheel specialization
/// (x_{i,r1}, x_{i,r2}, x_{i+eps,s}) = (v^2 t, t, v t).
bool wheel_check(const ShuffleElement& F);

/// Image of the generator e_{color,mode}: numerator x_{color,1}^mode.
ShuffleElement gen_e(int rank, int color, int mode);

/// star(a,b) - x * star(b,a).
ShuffleElement qbracket(const RootSystemData& rs, const ShuffleElement& a, const ShuffleElement& b,
                        const RatV& x);
ShuffleElement qbracket(const ShuffleElement& a, const ShuffleElement& b, const RatV& x);

/// (v - v^{-1}) [...[[e_{j,r_j}, e_{j+1,r_{j+1}}]_v, ...]_v, e_{i,r_i}]_v.
ShuffleElement e_tilde(int rank, const Decomposition& d);

/// The undivided nested bracket at the leading split, without the
/// (v - v^{-1}) prefactor.
ShuffleElement e_root(int rank, const Root& beta, int mode);

/// F^{star k} / [k]_v!.
ShuffleElement divided_power(const ShuffleElement& F, long k);

/// One divided-power factor e_{root,mode}^(power) of an ordered monomial.
struct EPBWDFactor {
    Root root;
    int mode = 0;
    long power = 1;
    bool operator==(const EPBWDFactor&) const = default;
};

/// Ordered product of divided powers; factors strictly increasing in
/// (root, mode).
struct EPBWDMonomial {
    std::vector<EPBWDFactor> factors;
    DegreeVector degree(int rank) const;
    long total_mode() const;
    bool is_sorted() const;
};

/// Memo for higher-root divided powers, keyed by (root, mode, power).
class ElementCache {
public:
    explicit ElementCache(int rank) : rank_(rank) {}
    const ShuffleElement& divided_root_power(const Root& beta, int mode, long power);

private:
    int rank_;
    std::map<std::tuple<int, int, int, long>, ShuffleElement> memo_;
};

/// Left-to-right star product of the monomial's divided-power factors.
/// Unsorted monomials are rejected.
ShuffleElement build_e_pbwd(int rank, const EPBWDMonomial& m, ElementCache* cache = nullptr);

struct RelationReport {
    bool pass = true;
    long checked = 0;
    std::string detail; // first counterexample
};

/// Verifies the quadratic current relation and the cubic Serre relation on
/// generator images, coefficientwise over [mode_min, mode_max].  The relation
/// coefficients always use the sl_n Cartan matrix; zeta_source feeds the
/// shuffle product only, so tests can perturb it as a negative control.
RelationReport check_relations(const RootSystemData& zeta_source, int mode_min, int mode_max);
RelationReport check_relations(int n, int mode_min, int mode_max);

} // namespace qshuffle
