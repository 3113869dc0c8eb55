#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qshuffle/ratv.hpp"

namespace qshuffle {

/// One colored variable x_{color,index}; colors live in I = {1,...,n-1},
/// indices start at 1.
struct ColorVar {
    int color = 0;
    int index = 0;
    auto operator<=>(const ColorVar&) const = default;
    std::string str() const { return "x_" + std::to_string(color) + "_" + std::to_string(index); }
};

/// N^I degree vector (k_1,...,k_{n-1}).
class DegreeVector {
public:
    DegreeVector() = default;
    explicit DegreeVector(std::vector<int> k);
    static DegreeVector zero(int rank) { return DegreeVector(std::vector<int>(rank - 1, 0)); }
    /// The indicator degree 1_i.
    static DegreeVector unit(int rank, int color);

    int rank() const { return static_cast<int>(k_.size()) + 1; }
    int at(int color) const { return k_.at(color - 1); } // 1-based color
    int& at(int color) { return k_.at(color - 1); }
    const std::vector<int>& entries() const { return k_; }
    int total() const;
    bool is_zero() const { return total() == 0; }

    DegreeVector operator+(const DegreeVector& o) const;
    bool operator==(const DegreeVector& o) const = default;
    std::string str() const;

private:
    std::vector<int> k_;
};

/// The variables x_{i,r}, i in I, 1 <= r <= k_i, in canonical order.
std::vector<ColorVar> canonical_vars(const DegreeVector& degree);

/// Image of one variable under a monomial substitution: scalar * var.
struct VarImage {
    RatV scalar;
    ColorVar var;
};

/// Sparse multivariate Laurent polynomial over an ordered set of colored
/// variables, with Q(v) coefficients.  Exponent keys are aligned with
/// vars(); no zero coefficients are stored.
class MultiLaurent {
public:
    using Exps = std::vector<int>;

    MultiLaurent() = default; // zero, no variables
    explicit MultiLaurent(std::vector<ColorVar> vars);

    static MultiLaurent constant(const RatV& c);
    /// scalar * var^power
    static MultiLaurent variable(const ColorVar& v, int power = 1, const RatV& scalar = RatV(1));
    /// x_a - s * x_b
    static MultiLaurent linear_diff(const ColorVar& a, const ColorVar& b, const RatV& s = RatV(1));

    const std::vector<ColorVar>& vars() const { return vars_; }
    const std::map<Exps, RatV>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The coefficient of the all-zero exponent vector.
    RatV constant_term() const;

    MultiLaurent& add_term(const Exps& e, const RatV& c);

    /// Same polynomial over a superset of the variables (canonical order).
    MultiLaurent aligned(const std::vector<ColorVar>& to) const;

    MultiLaurent operator-() const;
    MultiLaurent operator+(const MultiLaurent& o) const;
    MultiLaurent operator-(const MultiLaurent& o) const;
    MultiLaurent operator*(const MultiLaurent& o) const;
    MultiLaurent& operator+=(const MultiLaurent& o) { return *this = *this + o; }
    MultiLaurent& operator-=(const MultiLaurent& o) { return *this = *this - o; }
    MultiLaurent& operator*=(const MultiLaurent& o) { return *this = *this * o; }
    /// Structural equality after aligning both sides to the common variable set.
    bool operator==(const MultiLaurent& o) const;
    bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

    MultiLaurent scaled(const RatV& c) const;

    /// Exact image under the substitution homomorphism x -> scalar * y.
    /// Every variable occurring with a nonzero exponent must have an image.
    MultiLaurent substitute(const std::map<ColorVar, VarImage>& images) const;

    /// Average over all permutations of same-color variables (includes the
    /// 1/m! prefactor); idempotent.
    MultiLaurent symmetrize() const;

    /// Exact quotient by prod (x_a - x_b) over the listed pairs; throws
    /// NonDivisibleError when a factor does not divide.
    MultiLaurent exact_divide_linear(const std::vector<std::pair<ColorVar, ColorVar>>& factors) const;

    /// Total degree when all terms share it, otherwise nullopt (zero -> 0).
    std::optional<long> homogeneous_degree() const;

    /// Terms in graded-lexicographic order (total degree, then exponents).
    std::vector<std::pair<Exps, RatV>> sorted_terms() const;

    std::string str() const;

private:
    MultiLaurent divide_once(const ColorVar& a, const ColorVar& b) const;
    std::vector<ColorVar> vars_; // strictly increasing
    std::map<Exps, RatV> terms_;
};

} // namespace qshuffle
