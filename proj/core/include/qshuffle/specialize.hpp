#pragma once

#include <optional>

#include "qshuffle/shuffle.hpp"

namespace qshuffle {

/// Multiset of positive roots; sum d_beta * beta has to match the degree of
/// the element being specialized.
struct SpecializationPlan {
    std::map<Root, int> d; // nonzero multiplicities only
    DegreeVector degree(int rank) const;
    /// sum d_beta * (i(beta) - j(beta)), the divisibility exponent.
    long required_power() const;
    bool operator==(const SpecializationPlan&) const = default;
    std::string str() const;
};

/// All solutions of sum d_beta * beta = degree, deterministic order (roots
/// scanned in their total order, larger multiplicities first).
std::vector<SpecializationPlan> enumerate_plans(const DegreeVector& degree);

/// Collapse variable y_{beta,s}, 1 <= s <= d_beta.
struct YVar {
    Root beta;
    int s = 1;
    auto operator<=>(const YVar&) const = default;
    std::string str() const;
};

/// Polynomial in the y_{beta,s} with Laurent coefficients; the image of a
/// numerator under phi_d.  Symmetric in the copies {y_{beta,s}}_s of each
/// root.
class SpecializedPoly {
public:
    SpecializedPoly() = default;
    explicit SpecializedPoly(std::vector<YVar> vars);

    const std::vector<YVar>& vars() const { return vars_; }
    const std::map<std::vector<int>, LaurentV>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SpecializedPoly& add_term(const std::vector<int>& e, const LaurentV& c);
    bool operator==(const SpecializedPoly& o) const = default;

    /// Invariance under permuting the copies of each root.
    bool symmetric_in_copies() const;
    std::string str() const;

private:
    std::vector<YVar> vars_; // strictly increasing
    std::map<std::vector<int>, LaurentV> terms_;
};

/// phi_d under the canonical splitting: intervals taken in root order with
/// copies consecutive, same-color variables consumed in index order;
/// x_{k,r} in the s-th copy of [beta] goes to v^{-k} y_{beta,s}.
/// Numerator coefficients must lie in Q[v,v^{-1}].
SpecializedPoly specialize(const ShuffleElement& F, const SpecializationPlan& plan);

/// Same map under an explicit variable-to-copy assignment (each variable of
/// color k mapped to some y_{beta,s} with beta containing k, copies filled
/// exactly); exists to verify splitting independence.
SpecializedPoly specialize_with_splitting(const ShuffleElement& F, const SpecializationPlan& plan,
                                          const std::map<ColorVar, YVar>& assignment);

struct GoodCertificate {
    bool good = true;
    /// Set when some numerator coefficient has a v-denominator.
    std::optional<RatV> bad_coefficient;
    /// Set when a specialization misses the required divisibility.
    std::optional<SpecializationPlan> plan;
    long required_power = 0;
    std::optional<LaurentV> failing_coefficient;
};

/// Divided-power lattice membership: integral coefficients and, for every
/// plan, divisibility of the specialization by (v-v^{-1})^required.
/// The certificate reports the first violation in enumeration order.
GoodCertificate is_good(const ShuffleElement& F);

} // namespace qshuffle
