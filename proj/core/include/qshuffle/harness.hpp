#pragma once

#include <optional>

#include "qshuffle/pairing.hpp"
#include "qshuffle/specialize.hpp"

namespace qshuffle {

enum class DecompStrategy { Zero, Slope, Custom };

std::string strategy_name(DecompStrategy s);

/// Finite verification window: rank, total-degree cap, per-factor mode range
/// and the decomposition choice for the f-side bases.
struct WindowConfig {
    int n = 2;
    int max_total_degree = 3;
    int mode_min = -2;
    int mode_max = 2;
    DecompStrategy strategy = DecompStrategy::Zero;
    /// Custom splits keyed by (root, total mode); consulted only under
    /// DecompStrategy::Custom, and every queried key must be present.
    std::map<std::pair<Root, int>, std::vector<int>> custom;
    int jobs = 1;
};

/// The split used for f~_{beta, r} under the configured strategy.
Decomposition decomposition_for(const WindowConfig& cfg, const Root& beta, int mode);

/// All ordered divided-power monomials of the given degree with every factor
/// mode inside the window and the given total mode; deterministic order.
std::vector<EPBWDMonomial> enumerate_e_monomials(const WindowConfig& cfg,
                                                 const DegreeVector& degree, long total_mode);

/// Mirror enumeration of f-side ordered monomials (factors non-increasing in
/// (root, mode), splits chosen by the strategy).
std::vector<FPBWDMonomial> enumerate_f_monomials(const WindowConfig& cfg,
                                                 const DegreeVector& degree, long total_mode);

struct GramBlock {
    DegreeVector degree;
    long total_mode = 0; // of the e-side rows
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::vector<std::vector<RatV>> entries;
    std::vector<std::vector<bool>> verdicts; // Laurent-polynomiality per entry
};

struct GramReport {
    WindowConfig config;
    std::vector<GramBlock> blocks;
    long checked = 0;
    long violations = 0;
    std::string first_violation;
    bool pass() const { return violations == 0; }
};

/// Pairs every window e-monomial against every compatible f-monomial and
/// verdicts Laurent-polynomiality of each entry.  An injected element is
/// added as an extra row of its degree/mode block, bypassing the internal
/// goodness precheck.
GramReport verify_duality(const WindowConfig& cfg,
                          const std::optional<ShuffleElement>& inject = std::nullopt);

struct GoodReport {
    bool pass = true;
    long checked = 0;
    std::string detail;
    std::optional<GoodCertificate> candidate_certificate;
    std::string witness; // non-polynomial pairing found for a non-good candidate
};

/// Forward direction: every window basis monomial must satisfy the
/// divided-power membership test.  When a candidate is supplied and fails
/// the test, a witnessing non-polynomial pairing is searched for.
GoodReport verify_good_criterion(const WindowConfig& cfg,
                                 const std::optional<ShuffleElement>& candidate = std::nullopt);

struct DualBasisRecord {
    DegreeVector degree;
    long total_mode = 0;
    std::string row, col;
    RatV entry;
};

struct DualBasisReport {
    bool pass = true;
    long blocks = 0;
    std::string detail;
    std::vector<DualBasisRecord> normalizations; // observed nonzero entries
};

/// Gram blocks of bracket-generator monomials against divided-power f-side
/// monomials, mirror-matched; asserts the permutation-monomial structure for
/// n = 2 (exploratory recording otherwise).
DualBasisReport verify_dual_bases(const WindowConfig& cfg);

struct SuiteReport {
    bool pass = true;
    long checked = 0;
    std::string detail;
};

/// pair vs pair_via_words on every compatible window pair with at most
/// max_factors f-side factors.
SuiteReport verify_oracle(const WindowConfig& cfg, int max_factors = 2);

/// The closed-form specialization identity battery for the configured rank.
SuiteReport verify_key_spec(const WindowConfig& cfg);

/// check_relations over the window, packaged as a suite report.
SuiteReport verify_relations(const WindowConfig& cfg);

/// The checked-in non-integral element x_{1,1} over its pole, rank 3.
ShuffleElement nongood_fixture();

} // namespace qshuffle
