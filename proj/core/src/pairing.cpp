#include "qshuffle/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <functional>
#include <sstream>

#include "qshuffle/errors.hpp"

namespace qshuffle {

DegreeVector FPBWDMonomial::degree(int rank) const {
    DegreeVector d = DegreeVector::zero(rank);
    for (const auto& f : factors)
        for (int k = f.root.j; k <= f.root.i; ++k) d.at(k) += 1;
    return d;
}

long FPBWDMonomial::total_mode() const {
    long m = 0;
    for (const auto& f : factors) m += f.total_mode();
    return m;
}

bool FPBWDMonomial::is_opposite_sorted() const {
    for (size_t t = 1; t < factors.size(); ++t) {
        auto key = [](const Decomposition& f) { return std::pair(f.root, f.total_mode()); };
        if (key(factors[t - 1]) < key(factors[t])) return false;
    }
    return true;
}

RatV base_pair(int i, int r, int j, int s) {
    if (i != j || r + s != 0) return RatV();
    return RatV(LaurentV(1), LaurentV::v_minus_vinv());
}

OrientedEdge oriented_zeta_inv(const Orientation& pi, int k, int group) {
    if (k < pi.root.j || k >= pi.root.i) throw std::out_of_range("oriented_zeta_inv: edge");
    const ColorVar zk{k, group}, zk1{k + 1, group};
    OrientedEdge e;
    e.num_a = zk;
    e.num_b = zk1;
    if (pi.edges.at(k - pi.root.j)) {
        e.scalar = RatV(1);
        e.factor = {zk, 0, zk1, 1};
    } else {
        e.scalar = RatV::v_pow(1);
        e.factor = {zk1, 0, zk, 1};
    }
    return e;
}

namespace {

struct LinFactor {
    ColorVar a, b; // (z_a - z_b)
};

/// Removes one matching numerator factor per pole, flipping the sign when
/// the orientation is reversed.  Missing factors are an internal error.
int cancel_poles(std::vector<LinFactor>& numers, const std::vector<LinFactor>& poles) {
    int sign = 1;
    for (const auto& p : poles) {
        auto same = std::find_if(numers.begin(), numers.end(),
                                 [&](const LinFactor& f) { return f.a == p.a && f.b == p.b; });
        if (same != numers.end()) {
            numers.erase(same);
            continue;
        }
        auto flip = std::find_if(numers.begin(), numers.end(),
                                 [&](const LinFactor& f) { return f.a == p.b && f.b == p.a; });
        if (flip != numers.end()) {
            numers.erase(flip);
            sign = -sign;
            continue;
        }
        throw ExactCancellationFailure("pole factor (" + p.a.str() + " - " + p.b.str() +
                                       ") has no matching numerator");
    }
    return sign;
}

void assert_acyclic(const std::vector<DirectedFactor>& factors) {
    // Kahn elimination on the big -> small relation
    std::vector<DirectedFactor> rest = factors;
    while (!rest.empty()) {
        auto minimal = std::find_if(rest.begin(), rest.end(), [&](const DirectedFactor& f) {
            return std::none_of(rest.begin(), rest.end(),
                                [&](const DirectedFactor& g) { return g.big == f.small; });
        });
        if (minimal == rest.end())
            throw CyclicDirectionGraph("directed factors contain a smallness cycle");
        ColorVar w = minimal->small;
        rest.erase(std::remove_if(rest.begin(), rest.end(),
                                  [&](const DirectedFactor& f) { return f.small == w; }),
                   rest.end());
    }
}

Rational factorial(long k) {
    Rational f(1);
    for (long j = 2; j <= k; ++j) f *= Rational(j);
    return f;
}

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 0) {
        if (total == 0) emit(cur);
        return;
    }
    if (parts == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int m = 0; m <= total; ++m) {
        cur.push_back(m);
        compositions(total - m, parts - 1, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<PairingExpression> pairing_series(const ShuffleElement& x,
                                              const std::vector<FSeriesSpec>& specs) {
    const int n = x.rank;
    const RootSystemData rs(n);

    DegreeVector want = DegreeVector::zero(n);
    for (const auto& sp : specs) {
        if (sp.j < 1 || sp.i > n - 1 || sp.j > sp.i)
            throw std::invalid_argument("pairing_series: bad spec interval");
        for (int k = sp.j; k <= sp.i; ++k) want.at(k) += 1;
    }
    if (!(want == x.degree)) return {};
    for (size_t a = 0; a < specs.size(); ++a)
        for (size_t b = a + 1; b < specs.size(); ++b)
            if (specs[a].t == specs[b].t)
                throw std::invalid_argument("pairing_series: duplicate group index");

    // x_{i,r} -> z^{(t_{i,r})}_i with the groups containing color i in order
    std::map<ColorVar, VarImage> images;
    for (int i = 1; i <= n - 1; ++i) {
        int r = 1;
        for (const auto& sp : specs)
            if (sp.j <= i && i <= sp.i) images[{i, r++}] = {RatV(1), ColorVar{i, sp.t}};
    }
    const MultiLaurent base_num = x.numerator.substitute(images);

    // The closed pairing formulas are stated for the shuffle realization
    // normalized as the plain sum over shuffles; stored numerators carry the
    // symmetrization average, so the degree factorial bridges the two.
    Rational conv(1);
    for (int i = 1; i <= n - 1; ++i) conv *= factorial(x.degree.at(i));
    long edge_total = 0;
    for (const auto& sp : specs) edge_total += sp.i - sp.j;
    const RatV base_scalar =
        RatV(conv) * RatV(LaurentV(1), LaurentV::v_minus_vinv().pow(edge_total));

    // cross-group inverse zeta data (earlier group big)
    std::vector<LinFactor> cross_numers;
    std::vector<DirectedFactor> cross_factors;
    for (size_t r = 0; r < specs.size(); ++r)
        for (size_t s = r + 1; s < specs.size(); ++s)
            for (int k = specs[r].j; k <= specs[r].i; ++k)
                for (int l = specs[s].j; l <= specs[s].i; ++l) {
                    const int c = rs.cartan(k, l);
                    if (c == 0) continue;
                    cross_numers.push_back({{k, specs[r].t}, {l, specs[s].t}});
                    cross_factors.push_back({{k, specs[r].t}, 0, {l, specs[s].t}, -c});
                }

    // specialized pole factors of x
    std::vector<LinFactor> poles;
    for (int i = 1; i <= n - 2; ++i)
        for (const auto& sp : specs) {
            if (!(sp.j <= i && i <= sp.i)) continue;
            for (const auto& sq : specs)
                if (sq.j <= i + 1 && i + 1 <= sq.i) poles.push_back({{i, sp.t}, {i + 1, sq.t}});
        }

    // orientation tuples, binary counter over all edges
    std::vector<size_t> group_edges;
    for (const auto& sp : specs) group_edges.push_back(static_cast<size_t>(sp.i - sp.j));
    const size_t total_edges = std::accumulate(group_edges.begin(), group_edges.end(), size_t{0});

    std::vector<PairingExpression> out;
    for (size_t code = 0; code < (size_t{1} << total_edges); ++code) {
        std::vector<LinFactor> numers = cross_numers;
        std::vector<DirectedFactor> factors = cross_factors;
        RatV scalar = base_scalar;
        size_t bit = 0;
        for (size_t g = 0; g < specs.size(); ++g) {
            Orientation pi{Root{specs[g].j, specs[g].i}, {}};
            for (size_t e = 0; e < group_edges[g]; ++e) pi.edges.push_back((code >> bit++) & 1);
            for (int k = specs[g].j; k < specs[g].i; ++k) {
                OrientedEdge edge = oriented_zeta_inv(pi, k, specs[g].t);
                numers.push_back({edge.num_a, edge.num_b});
                factors.push_back(edge.factor);
                scalar *= edge.scalar;
            }
        }
        const int sign = cancel_poles(numers, poles);
        if (sign < 0) scalar = -scalar;
        MultiLaurent num = base_num;
        for (const auto& f : numers) num *= MultiLaurent::linear_diff(f.a, f.b);
        assert_acyclic(factors);
        out.push_back({scalar, std::move(num), std::move(factors)});
    }
    return out;
}

RatV extract_coefficient(const PairingExpression& expr, const std::map<ColorVar, int>& target) {
    // align the numerator over every variable in sight
    std::vector<ColorVar> vars = expr.numerator.vars();
    for (const auto& f : expr.factors) {
        if (f.big == f.small)
            throw CyclicDirectionGraph("directed factor with identical variables");
        vars.push_back(f.big);
        vars.push_back(f.small);
    }
    for (const auto& [w, e] : target) vars.push_back(w);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    MultiLaurent num = expr.numerator.aligned(vars);
    std::vector<DirectedFactor> factors = expr.factors;
    auto tgt = [&target](const ColorVar& w) {
        auto it = target.find(w);
        return it == target.end() ? 0 : it->second;
    };

    while (!factors.empty()) {
        // a variable that only ever sits on the small side
        ColorVar w{};
        bool found = false;
        for (const auto& f : factors) {
            const ColorVar& cand = f.small;
            bool is_big = std::any_of(factors.begin(), factors.end(),
                                      [&](const DirectedFactor& g) { return g.big == cand; });
            if (!is_big && (!found || cand < w)) {
                w = cand;
                found = true;
            }
        }
        if (!found) throw CyclicDirectionGraph("extract_coefficient: no eliminable variable");

        std::vector<DirectedFactor> incident, rest;
        for (const auto& f : factors) (f.small == w ? incident : rest).push_back(f);

        const auto wpos = static_cast<size_t>(
            std::lower_bound(vars.begin(), vars.end(), w) - vars.begin());
        std::vector<size_t> bigpos(incident.size());
        for (size_t fi = 0; fi < incident.size(); ++fi)
            bigpos[fi] = static_cast<size_t>(
                std::lower_bound(vars.begin(), vars.end(), incident[fi].big) - vars.begin());

        std::vector<ColorVar> nvars;
        for (const auto& u : vars)
            if (!(u == w)) nvars.push_back(u);
        MultiLaurent next(nvars);

        const int want = tgt(w);
        for (const auto& [e, c] : num.terms()) {
            const int gap = want - e[wpos];
            if (gap < 0) continue;
            std::vector<int> cur;
            compositions(gap, static_cast<int>(incident.size()), cur,
                         [&](const std::vector<int>& ms) {
                             std::vector<int> ne;
                             ne.reserve(nvars.size());
                             for (size_t idx = 0; idx < e.size(); ++idx)
                                 if (idx != wpos) ne.push_back(e[idx]);
                             long vshift = 0;
                             for (size_t fi = 0; fi < incident.size(); ++fi) {
                                 const int m = ms[fi];
                                 vshift += static_cast<long>(incident[fi].small_vpow) * m -
                                           static_cast<long>(incident[fi].big_vpow) * (m + 1);
                                 size_t bp = bigpos[fi];
                                 ne[bp > wpos ? bp - 1 : bp] -= m + 1;
                             }
                             next.add_term(ne, c * RatV(LaurentV::v_pow(vshift)));
                         });
        }
        num = std::move(next);
        vars = nvars;
        factors = std::move(rest);
    }

    // plain read-off on what remains
    std::vector<int> wanted(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) wanted[i] = tgt(vars[i]);
    auto it = num.terms().find(wanted);
    RatV coeff = it == num.terms().end() ? RatV() : it->second;
    return expr.scalar * coeff;
}

RatV pair_product(const ShuffleElement& x, const std::vector<Decomposition>& factors) {
    const int n = x.rank;
    DegreeVector want = DegreeVector::zero(n);
    long fmode = 0;
    for (const auto& f : factors) {
        for (int k = f.root.j; k <= f.root.i; ++k) want.at(k) += 1;
        fmode += f.total_mode();
    }
    if (!(want == x.degree)) return RatV();
    if (auto xmode = x.total_mode(); xmode && *xmode + fmode != 0) return RatV();

    std::vector<FSeriesSpec> specs;
    for (size_t t = 0; t < factors.size(); ++t)
        specs.push_back({factors[t].root.j, factors[t].root.i, static_cast<int>(t) + 1});
    std::map<ColorVar, int> target;
    for (size_t t = 0; t < factors.size(); ++t)
        for (int k = factors[t].root.j; k <= factors[t].root.i; ++k)
            target[{k, static_cast<int>(t) + 1}] = -factors[t].r[k - factors[t].root.j];

    RatV total;
    for (const auto& expr : pairing_series(x, specs)) total += extract_coefficient(expr, target);
    return total;
}

RatV pair(const ShuffleElement& x, const FPBWDMonomial& m) { return pair_product(x, m.factors); }

std::vector<std::pair<RatV, FWord>> bracket_expand_f(const Decomposition& d) {
    std::vector<std::pair<RatV, FWord>> words{{RatV(1), {{d.root.j, d.r[0]}}}};
    for (int k = d.root.j + 1; k <= d.root.i; ++k) {
        const FWordLetter letter{k, d.r[k - d.root.j]};
        std::vector<std::pair<RatV, FWord>> next;
        next.reserve(words.size() * 2);
        for (const auto& [s, w] : words) {
            FWord right = w;
            right.push_back(letter);
            next.push_back({s, std::move(right)});
            FWord left{letter};
            left.insert(left.end(), w.begin(), w.end());
            next.push_back({-(s * RatV::v_pow(1)), std::move(left)});
        }
        words = std::move(next);
    }
    const RatV pre{LaurentV::v_minus_vinv()};
    for (auto& [s, w] : words) s *= pre;
    return words;
}

RatV pair_via_words_product(const ShuffleElement& x, const std::vector<Decomposition>& factors) {
    std::vector<std::vector<std::pair<RatV, FWord>>> parts;
    parts.reserve(factors.size());
    for (const auto& f : factors) parts.push_back(bracket_expand_f(f));

    RatV total;
    std::vector<size_t> choice(parts.size(), 0);
    while (true) {
        RatV scalar(1);
        FWord word;
        for (size_t p = 0; p < parts.size(); ++p) {
            scalar *= parts[p][choice[p]].first;
            const FWord& w = parts[p][choice[p]].second;
            word.insert(word.end(), w.begin(), w.end());
        }
        const long len = static_cast<long>(word.size());
        std::vector<FSeriesSpec> specs;
        std::map<ColorVar, int> target;
        for (size_t a = 0; a < word.size(); ++a) {
            specs.push_back({word[a].first, word[a].first, static_cast<int>(a) + 1});
            target[{word[a].first, static_cast<int>(a) + 1}] = -word[a].second;
        }
        RatV val;
        for (const auto& expr : pairing_series(x, specs))
            val += extract_coefficient(expr, target);
        total += scalar * RatV(LaurentV(1), LaurentV::v_minus_vinv().pow(len)) * val;

        size_t p = 0;
        while (p < choice.size() && ++choice[p] == parts[p].size()) choice[p++] = 0;
        if (p == choice.size() || parts.empty()) break;
    }
    return total;
}

RatV pair_via_words(const ShuffleElement& x, const FPBWDMonomial& m) {
    return pair_via_words_product(x, m.factors);
}

KeySpecReport key_specialization_check(int rank, const Root& beta,
                                       const std::vector<int>& exponents,
                                       const std::vector<int>& tail_modes, int window) {
    KeySpecReport rep;
    const int j = beta.j, i = beta.i;
    if (static_cast<int>(exponents.size()) != beta.length() ||
        static_cast<int>(tail_modes.size()) != beta.length() - 1) {
        rep.pass = false;
        rep.detail = "arity mismatch";
        return rep;
    }
    for (size_t k = 0; k < tail_modes.size(); ++k)
        if (exponents[k + 1] + tail_modes[k] >= 0) {
            rep.pass = false;
            rep.detail = "precondition violated: a_k + r_k must be negative (position " +
                         std::to_string(k) + ")";
            return rep;
        }

    MultiLaurent p = MultiLaurent::constant(RatV(1));
    for (int k = j; k <= i; ++k) p *= MultiLaurent::variable({k, 1}, exponents[k - j]);
    const ShuffleElement x{rank, beta.degree(rank), p};

    long A = 0, B = 0, suma = 0, wa = 0;
    for (int k = j; k <= i; ++k) {
        suma += exponents[k - j];
        wa += static_cast<long>(k - j) * exponents[k - j];
    }
    for (int k = j + 1; k <= i; ++k) {
        const long rk = tail_modes[k - j - 1];
        A += static_cast<long>(j - k) * (rk - 1 + (k == i ? 1 : 0));
        B += rk - 1;
    }
    const long live = -(B + suma); // the only mode with a nonzero coefficient
    const RatV closed =
        RatV(LaurentV(1), LaurentV::v_minus_vinv().pow(i - j)) * RatV(LaurentV::v_pow(A - wa));

    for (long rho = live - window; rho <= live + window; ++rho) {
        std::vector<int> modes{static_cast<int>(rho)};
        modes.insert(modes.end(), tail_modes.begin(), tail_modes.end());
        const RatV got = pair_product(x, {Decomposition(beta, modes)});
        const RatV expect = rho == live ? closed : RatV();
        if (got != expect) {
            std::ostringstream os;
            os << "mismatch at z-mode " << rho << ": engine " << got.str() << ", closed form "
               << expect.str();
            rep.pass = false;
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

} // namespace qshuffle
