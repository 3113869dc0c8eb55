#include "qshuffle/shuffle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qshuffle/errors.hpp"

namespace qshuffle {

RootSystemData::RootSystemData(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("RootSystemData: need n >= 2");
    c_.assign(static_cast<size_t>(n - 1) * (n - 1), 0);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            c_[static_cast<size_t>(i - 1) * (n_ - 1) + (j - 1)] =
                i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
}

RootSystemData RootSystemData::perturbed(int n, int i0, int j0, int delta) {
    RootSystemData rs(n);
    int c = rs.cartan(i0, j0);
    if (c == 0 || c + delta == 0)
        throw std::invalid_argument("perturbed: must keep the entry nonzero");
    rs.c_[static_cast<size_t>(i0 - 1) * (n - 1) + (j0 - 1)] = c + delta;
    rs.c_[static_cast<size_t>(j0 - 1) * (n - 1) + (i0 - 1)] = c + delta;
    return rs;
}

int RootSystemData::cartan(int i, int j) const {
    if (i < 1 || i > n_ - 1 || j < 1 || j > n_ - 1)
        throw std::out_of_range("cartan: color out of range");
    return c_[static_cast<size_t>(i - 1) * (n_ - 1) + (j - 1)];
}

DegreeVector Root::degree(int rank) const {
    DegreeVector d = DegreeVector::zero(rank);
    for (int k = j; k <= i; ++k) d.at(k) = 1;
    return d;
}

std::vector<Root> positive_roots(int n) {
    std::vector<Root> rs;
    for (int j = 1; j <= n - 1; ++j)
        for (int i = j; i <= n - 1; ++i) rs.push_back({j, i});
    return rs;
}

Decomposition::Decomposition(Root root_, std::vector<int> r_) : root(root_), r(std::move(r_)) {
    if (static_cast<int>(r.size()) != root.length())
        throw std::invalid_argument("Decomposition: split length != root length");
}

int Decomposition::total_mode() const { return std::accumulate(r.begin(), r.end(), 0); }

Decomposition Decomposition::leading(Root root, int mode) {
    std::vector<int> r(root.length(), 0);
    r[0] = mode;
    return {root, std::move(r)};
}

Decomposition Decomposition::slope(Root root, int mode) {
    const long len = root.length();
    auto fdiv = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    std::vector<int> r(root.length());
    for (long k = 0; k < len; ++k)
        r[k] = static_cast<int>(fdiv(mode * (k + 1), len) - fdiv(mode * k, len));
    return {root, std::move(r)};
}

std::string Decomposition::str() const {
    std::string s = root.str() + "@(";
    for (size_t k = 0; k < r.size(); ++k) s += (k ? "," : "") + std::to_string(r[k]);
    return s + ")";
}

ZetaRatio zeta(const RootSystemData& rs, int i, int j) {
    return {LaurentV::v_pow(-rs.cartan(i, j)), LaurentV(1)};
}

ShuffleElement::ShuffleElement(int rank_, DegreeVector degree_, MultiLaurent numerator_)
    : rank(rank_), degree(std::move(degree_)), numerator(std::move(numerator_)) {
    if (degree.rank() != rank) throw std::invalid_argument("ShuffleElement: degree rank mismatch");
    numerator = numerator.aligned(canonical_vars(degree));
}

ShuffleElement ShuffleElement::unit(int rank) {
    return {rank, DegreeVector::zero(rank), MultiLaurent::constant(RatV(1))};
}

ShuffleElement ShuffleElement::zero(int rank, const DegreeVector& degree) {
    return {rank, degree, MultiLaurent(canonical_vars(degree))};
}

long ShuffleElement::pole_count() const {
    long p = 0;
    for (int i = 1; i <= rank - 2; ++i) p += static_cast<long>(degree.at(i)) * degree.at(i + 1);
    return p;
}

std::optional<long> ShuffleElement::total_mode() const {
    auto d = numerator.homogeneous_degree();
    if (!d) return std::nullopt;
    if (numerator.is_zero()) return 0;
    return *d - pole_count();
}

bool ShuffleElement::same_color_symmetric() const { return numerator == numerator.symmetrize(); }

ShuffleElement ShuffleElement::scaled(const RatV& c) const {
    return {rank, degree, numerator.scaled(c)};
}

ShuffleElement ShuffleElement::operator+(const ShuffleElement& o) const {
    if (rank != o.rank || !(degree == o.degree))
        throw std::invalid_argument("ShuffleElement: degree mismatch in addition");
    return {rank, degree, numerator + o.numerator};
}

ShuffleElement ShuffleElement::operator-(const ShuffleElement& o) const {
    return *this + o.scaled(RatV(-1));
}

bool ShuffleElement::operator==(const ShuffleElement& o) const {
    return rank == o.rank && degree == o.degree && numerator == o.numerator;
}

namespace {

std::vector<std::vector<int>> k_subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    if (k == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        int p = k - 1;
        while (p >= 0 && cur[p] == m - (k - 1 - p)) --p;
        if (p < 0) break;
        ++cur[p];
        for (int q = p + 1; q < k; ++q) cur[q] = cur[q - 1] + 1;
    }
    return out;
}

/// One shuffle term: F relabelled into the A block, G into the B block,
/// times the zeta numerators for all cross pairs and the same-color
/// differences inside each block, with the orientation sign folded in.
MultiLaurent shuffle_term(const RootSystemData& rs, const ShuffleElement& F,
                          const ShuffleElement& G,
                          const std::vector<std::vector<int>>& A,
                          const std::vector<std::vector<int>>& B) {
    const int n = F.rank;
    std::map<ColorVar, VarImage> mapF, mapG;
    std::vector<ColorVar> avars, bvars;
    for (int i = 1; i <= n - 1; ++i) {
        for (size_t r = 0; r < A[i - 1].size(); ++r) {
            mapF[{i, static_cast<int>(r) + 1}] = {RatV(1), {i, A[i - 1][r]}};
            avars.push_back({i, A[i - 1][r]});
        }
        for (size_t r = 0; r < B[i - 1].size(); ++r) {
            mapG[{i, static_cast<int>(r) + 1}] = {RatV(1), {i, B[i - 1][r]}};
            bvars.push_back({i, B[i - 1][r]});
        }
    }
    MultiLaurent term = F.numerator.substitute(mapF) * G.numerator.substitute(mapG);

    long flips = 0;
    for (const ColorVar& a : avars)
        for (const ColorVar& b : bvars) {
            int c = rs.cartan(a.color, b.color);
            if (c != 0) term *= MultiLaurent::linear_diff(a, b, RatV::v_pow(-c));
            if (a.color == b.color && a.index > b.index) ++flips; // same-color cross orientation
            if (a.color == b.color + 1) ++flips;                  // adjacent cross orientation
        }
    // missing same-color factors joined in the canonical orientation
    // (the blocks may arrive unsorted from the full-group oracle)
    for (int i = 1; i <= n - 1; ++i)
        for (const auto* block : {&A[i - 1], &B[i - 1]})
            for (size_t p = 0; p < block->size(); ++p)
                for (size_t q = p + 1; q < block->size(); ++q) {
                    const int lo = std::min((*block)[p], (*block)[q]);
                    const int hi = std::max((*block)[p], (*block)[q]);
                    term *= MultiLaurent::linear_diff({i, lo}, {i, hi});
                }
    return (flips % 2) ? -term : term;
}

std::vector<std::pair<ColorVar, ColorVar>> same_color_pairs(const DegreeVector& m) {
    std::vector<std::pair<ColorVar, ColorVar>> ps;
    for (int i = 1; i < m.rank(); ++i)
        for (int r = 1; r <= m.at(i); ++r)
            for (int rp = r + 1; rp <= m.at(i); ++rp)
                ps.push_back({{i, r}, {i, rp}});
    return ps;
}

Rational factorial(long k) {
    Rational f(1);
    for (long j = 2; j <= k; ++j) f *= Rational(j);
    return f;
}

} // namespace

ShuffleElement star(const RootSystemData& rs, const ShuffleElement& F, const ShuffleElement& G) {
    if (F.rank != G.rank) throw std::invalid_argument("star: rank mismatch");
    if (rs.n() != F.rank) throw std::invalid_argument("star: root-system rank mismatch");
    const int n = F.rank;
    if (F.degree.is_zero()) return G.scaled(F.numerator.constant_term());
    if (G.degree.is_zero()) return F.scaled(G.numerator.constant_term());

    const DegreeVector m = F.degree + G.degree;
    MultiLaurent acc{canonical_vars(m)};

    std::vector<std::vector<std::vector<int>>> combos(n - 1);
    for (int i = 1; i <= n - 1; ++i) combos[i - 1] = k_subsets(m.at(i), F.degree.at(i));

    std::vector<size_t> choice(n - 1, 0);
    while (true) {
        std::vector<std::vector<int>> A(n - 1), B(n - 1);
        for (int i = 1; i <= n - 1; ++i) {
            A[i - 1] = combos[i - 1][choice[i - 1]];
            for (int x = 1; x <= m.at(i); ++x)
                if (!std::binary_search(A[i - 1].begin(), A[i - 1].end(), x))
                    B[i - 1].push_back(x);
        }
        acc += shuffle_term(rs, F, G, A, B);
        size_t p = 0;
        while (p < choice.size() && ++choice[p] == combos[p].size()) choice[p++] = 0;
        if (p == choice.size()) break;
    }

    MultiLaurent num = acc.exact_divide_linear(same_color_pairs(m));
    Rational pre(1);
    for (int i = 1; i <= n - 1; ++i)
        pre *= factorial(F.degree.at(i)) * factorial(G.degree.at(i)) / factorial(m.at(i));
    return {n, m, num.scaled(RatV(pre))};
}

ShuffleElement star(const ShuffleElement& F, const ShuffleElement& G) {
    return star(RootSystemData(F.rank), F, G);
}

ShuffleElement star_symmetrization_oracle(const RootSystemData& rs, const ShuffleElement& F,
                                          const ShuffleElement& G) {
    if (F.rank != G.rank) throw std::invalid_argument("star: rank mismatch");
    const int n = F.rank;
    if (F.degree.is_zero()) return G.scaled(F.numerator.constant_term());
    if (G.degree.is_zero()) return F.scaled(G.numerator.constant_term());

    const DegreeVector m = F.degree + G.degree;
    MultiLaurent acc{canonical_vars(m)};

    // all per-color permutations, split into the first-k / last-l blocks
    std::vector<std::vector<std::vector<int>>> perms(n - 1);
    Rational group_order(1);
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<int> p(m.at(i));
        std::iota(p.begin(), p.end(), 1);
        do {
            perms[i - 1].push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        group_order *= Rational(static_cast<long>(perms[i - 1].size()));
    }
    std::vector<size_t> choice(n - 1, 0);
    while (true) {
        std::vector<std::vector<int>> A(n - 1), B(n - 1);
        for (int i = 1; i <= n - 1; ++i) {
            const auto& p = perms[i - 1][choice[i - 1]];
            A[i - 1].assign(p.begin(), p.begin() + F.degree.at(i));
            B[i - 1].assign(p.begin() + F.degree.at(i), p.end());
        }
        // shuffle_term's sign bookkeeping needs sorted same-color blocks only
        // for the within-block factors, which are orientation-free; the cross
        // flips use the actual indices, so unsorted blocks are fine.
        acc += shuffle_term(rs, F, G, A, B);
        size_t p = 0;
        while (p < choice.size() && ++choice[p] == perms[p].size()) choice[p++] = 0;
        if (p == choice.size()) break;
    }
    MultiLaurent num = acc.exact_divide_linear(same_color_pairs(m));
    return {n, m, num.scaled(RatV(Rational(1) / group_order))};
}

bool wheel_check(const ShuffleElement& F) {
    const int n = F.rank;
    const ColorVar t{0, 1}; // fresh collapse variable, below every color
    const auto vars = canonical_vars(F.degree);
    for (int i = 1; i <= n - 1; ++i) {
        if (F.degree.at(i) < 2) continue;
        for (int eps : {+1, -1}) {
            const int ie = i + eps;
            if (ie < 1 || ie > n - 1 || F.degree.at(ie) < 1) continue;
            for (int r1 = 1; r1 <= F.degree.at(i); ++r1)
                for (int r2 = 1; r2 <= F.degree.at(i); ++r2) {
                    if (r1 == r2) continue;
                    for (int s = 1; s <= F.degree.at(ie); ++s) {
                        std::map<ColorVar, VarImage> images;
                        for (const ColorVar& w : vars) images[w] = {RatV(1), w};
                        images[{i, r1}] = {RatV::v_pow(2), t};
                        images[{i, r2}] = {RatV(1), t};
                        images[{ie, s}] = {RatV::v_pow(1), t};
                        if (!F.numerator.substitute(images).is_zero()) return false;
                    }
                }
        }
    }
    return true;
}

ShuffleElement gen_e(int rank, int color, int mode) {
    if (color < 1 || color > rank - 1) throw std::out_of_range("gen_e: color out of range");
    return {rank, DegreeVector::unit(rank, color), MultiLaurent::variable({color, 1}, mode)};
}

ShuffleElement qbracket(const RootSystemData& rs, const ShuffleElement& a, const ShuffleElement& b,
                        const RatV& x) {
    return star(rs, a, b) - star(rs, b, a).scaled(x);
}

ShuffleElement qbracket(const ShuffleElement& a, const ShuffleElement& b, const RatV& x) {
    return qbracket(RootSystemData(a.rank), a, b, x);
}

ShuffleElement e_tilde(int rank, const Decomposition& d) {
    RootSystemData rs(rank);
    ShuffleElement cur = gen_e(rank, d.root.j, d.r[0]);
    for (int k = d.root.j + 1; k <= d.root.i; ++k)
        cur = qbracket(rs, cur, gen_e(rank, k, d.r[k - d.root.j]), RatV::v_pow(1));
    return cur.scaled(RatV(LaurentV::v_minus_vinv()));
}

ShuffleElement e_root(int rank, const Root& beta, int mode) {
    RootSystemData rs(rank);
    ShuffleElement cur = gen_e(rank, beta.j, mode);
    for (int k = beta.j + 1; k <= beta.i; ++k)
        cur = qbracket(rs, cur, gen_e(rank, k, 0), RatV::v_pow(1));
    return cur;
}

ShuffleElement divided_power(const ShuffleElement& F, long k) {
    if (k < 0) throw std::domain_error("divided_power: negative exponent");
    RootSystemData rs(F.rank);
    ShuffleElement acc = ShuffleElement::unit(F.rank);
    for (long j = 0; j < k; ++j) acc = star(rs, acc, F);
    return acc.scaled(RatV(LaurentV(1), qfact(k)));
}

DegreeVector EPBWDMonomial::degree(int rank) const {
    DegreeVector d = DegreeVector::zero(rank);
    for (const auto& f : factors)
        for (int k = f.root.j; k <= f.root.i; ++k) d.at(k) += static_cast<int>(f.power);
    return d;
}

long EPBWDMonomial::total_mode() const {
    long m = 0;
    for (const auto& f : factors) m += f.power * f.mode;
    return m;
}

bool EPBWDMonomial::is_sorted() const {
    for (size_t t = 1; t < factors.size(); ++t) {
        auto key = [](const EPBWDFactor& f) { return std::pair(f.root, f.mode); };
        if (!(key(factors[t - 1]) < key(factors[t]))) return false;
    }
    return true;
}

const ShuffleElement& ElementCache::divided_root_power(const Root& beta, int mode, long power) {
    auto key = std::tuple(beta.j, beta.i, mode, power);
    auto it = memo_.find(key);
    if (it == memo_.end())
        it = memo_.emplace(key, divided_power(e_root(rank_, beta, mode), power)).first;
    return it->second;
}

ShuffleElement build_e_pbwd(int rank, const EPBWDMonomial& m, ElementCache* cache) {
    if (!m.is_sorted()) throw std::invalid_argument("build_e_pbwd: factors not ordered");
    RootSystemData rs(rank);
    ShuffleElement acc = ShuffleElement::unit(rank);
    for (const auto& f : m.factors) {
        const ShuffleElement& piece =
            cache ? cache->divided_root_power(f.root, f.mode, f.power)
                  : divided_power(e_root(rank, f.root, f.mode), f.power);
        acc = star(rs, acc, piece);
    }
    return acc;
}

RelationReport check_relations(const RootSystemData& zeta_source, int mode_min, int mode_max) {
    const int n = zeta_source.n();
    const RootSystemData standard(n);
    RelationReport rep;
    const RatV v = RatV::v_pow(1), vinv = RatV::v_pow(-1);

    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            const int c = standard.cartan(i, j);
            const RatV vc = RatV::v_pow(c);
            for (int r = mode_min; r <= mode_max; ++r)
                for (int s = mode_min; s <= mode_max; ++s) {
                    auto lhs = star(zeta_source, gen_e(n, i, r + 1), gen_e(n, j, s)) -
                               star(zeta_source, gen_e(n, i, r), gen_e(n, j, s + 1)).scaled(vc);
                    auto rhs = star(zeta_source, gen_e(n, j, s), gen_e(n, i, r + 1)).scaled(vc) -
                               star(zeta_source, gen_e(n, j, s + 1), gen_e(n, i, r));
                    ++rep.checked;
                    if (lhs != rhs) {
                        rep.pass = false;
                        std::ostringstream os;
                        os << "quadratic relation fails at i=" << i << " j=" << j << " r=" << r
                           << " s=" << s;
                        rep.detail = os.str();
                        return rep;
                    }
                }
            if (c == 0 && i != j) {
                for (int r = mode_min; r <= mode_max; ++r)
                    for (int s = mode_min; s <= mode_max; ++s) {
                        ++rep.checked;
                        if (star(zeta_source, gen_e(n, i, r), gen_e(n, j, s)) !=
                            star(zeta_source, gen_e(n, j, s), gen_e(n, i, r))) {
                            rep.pass = false;
                            rep.detail = "distant colors fail to commute at i=" +
                                         std::to_string(i) + " j=" + std::to_string(j);
                            return rep;
                        }
                    }
            }
            if (c == -1) {
                for (int r1 = mode_min; r1 <= mode_max; ++r1)
                    for (int r2 = mode_min; r2 <= mode_max; ++r2)
                        for (int s = mode_min; s <= mode_max; ++s) {
                            auto t1 = qbracket(zeta_source, gen_e(n, i, r1),
                                               qbracket(zeta_source, gen_e(n, i, r2),
                                                        gen_e(n, j, s), vinv),
                                               v);
                            auto t2 = qbracket(zeta_source, gen_e(n, i, r2),
                                               qbracket(zeta_source, gen_e(n, i, r1),
                                                        gen_e(n, j, s), vinv),
                                               v);
                            ++rep.checked;
                            if (!(t1 + t2).is_zero()) {
                                rep.pass = false;
                                std::ostringstream os;
                                os << "Serre relation fails at i=" << i << " j=" << j
                                   << " r1=" << r1 << " r2=" << r2 << " s=" << s;
                                rep.detail = os.str();
                                return rep;
                            }
                        }
            }
        }
    return rep;
}

RelationReport check_relations(int n, int mode_min, int mode_max) {
    return check_relations(RootSystemData(n), mode_min, mode_max);
}

} // namespace qshuffle
