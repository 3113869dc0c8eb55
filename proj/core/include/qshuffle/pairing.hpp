#pragma once

#include "qshuffle/shuffle.hpp"

namespace qshuffle {

/// Labels the current series of one higher-root f-side factor: colors j..i,
/// with group index t naming its variables z^{(t)}_j, ..., z^{(t)}_i.
struct FSeriesSpec {
    int j = 1;
    int i = 1;
    int t = 1;
};

/// Ordered product of f-side bracket generators.  Basis enumerations keep
/// the factors non-strictly decreasing in (root, total mode), the opposite
/// of the e-side order.
struct FPBWDMonomial {
    std::vector<Decomposition> factors;
    DegreeVector degree(int rank) const;
    long total_mode() const;
    bool is_opposite_sorted() const;
};

/// Orientation of the chain graph on a root's interval; edges[k] true means
/// the k-th edge points toward the larger color.
struct Orientation {
    Root root;
    std::vector<bool> edges;
};

/// 1/(v^{big_vpow} z_big - v^{small_vpow} z_small), always read as the
/// series sum_{m>=0} (v^{big_vpow} z_big)^{-m-1} (v^{small_vpow} z_small)^m.
struct DirectedFactor {
    ColorVar big;
    int big_vpow = 0;
    ColorVar small;
    int small_vpow = 0;
};

/// scalar * numerator * prod factors with every pole cancellation already
/// performed.  The group variable z^{(t)}_k is stored as ColorVar{k, t}.
struct PairingExpression {
    RatV scalar;
    MultiLaurent numerator;
    std::vector<DirectedFactor> factors;
};

/// phi(e_{i,r}, f_{j,s}) = delta_{ij} delta_{r+s,0} / (v - v^{-1}).
RatV base_pair(int i, int r, int j, int s);

/// Numerator shift and directed factor of one oriented edge:
/// forward (z_k - z_{k+1}) * 1/(z_k - v z_{k+1}), backward
/// v (z_k - z_{k+1}) * 1/(z_{k+1} - v z_k).
struct OrientedEdge {
    RatV scalar;
    ColorVar num_a, num_b; // numerator (z_a - z_b)
    DirectedFactor factor;
};
OrientedEdge oriented_zeta_inv(const Orientation& pi, int k, int group);

/// One expression per orientation tuple, enumerated in binary-counter order
/// over the groups' edges.  Returns an empty list when deg(x) does not match
/// the specs (the pairing is of degree zero).  Group indices must be
/// distinct; list order defines the cross-group expansion directions
/// (earlier group on the big side).
std::vector<PairingExpression> pairing_series(const ShuffleElement& x,
                                              const std::vector<FSeriesSpec>& specs);

/// Exact coefficient of prod z^{target} (variables absent from the map are
/// extracted at exponent 0), by eliminating variables that never sit on a
/// big side; the smallness relation must be acyclic.
RatV extract_coefficient(const PairingExpression& expr, const std::map<ColorVar, int>& target);

/// The Hopf pairing of x against the ordered product of bracket generators;
/// zero on degree or total-mode mismatch, bilinear in x.
RatV pair(const ShuffleElement& x, const FPBWDMonomial& m);
/// Same for a raw factor sequence in the given order.
RatV pair_product(const ShuffleElement& x, const std::vector<Decomposition>& factors);

/// Letter of an expanded word: (color, mode).
using FWordLetter = std::pair<int, int>;
using FWord = std::vector<FWordLetter>;

/// Expands the nested bracket of one generator into its 2^{i-j} signed
/// words, scalars carrying the v-powers and the (v - v^{-1}) prefactor.
std::vector<std::pair<RatV, FWord>> bracket_expand_f(const Decomposition& d);

/// Independent oracle for pair: expand every factor into words and evaluate
/// each word against the single-current formula (cross factors only).
RatV pair_via_words(const ShuffleElement& x, const FPBWDMonomial& m);
RatV pair_via_words_product(const ShuffleElement& x, const std::vector<Decomposition>& factors);

struct KeySpecReport {
    bool pass = true;
    std::string detail;
};

/// Checks, coefficientwise over a window around the single live mode, that
/// pairing the monomial-numerator element x_{j,1}^{a_j}...x_{i,1}^{a_i} (over
/// its poles) against the bracket generator with tail modes r_{j+1},...,r_i
/// equals the closed form (v-v^{-1})^{j-i} v^A z^B p(z, v^{-1}z, ...), with
/// A = sum (j-k)(r_k - 1 + [k=i]) and B = sum (r_k - 1).
/// Pre: a_k + r_k < 0 for every j < k <= i.
KeySpecReport key_specialization_check(int rank, const Root& beta,
                                       const std::vector<int>& exponents,
                                       const std::vector<int>& tail_modes, int window = 2);

} // namespace qshuffle
