#include "qshuffle/harness.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <climits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "qshuffle/errors.hpp"
#include "qshuffle/textfmt.hpp"

namespace qshuffle {

std::string strategy_name(DecompStrategy s) {
    switch (s) {
        case DecompStrategy::Zero: return "zero";
        case DecompStrategy::Slope: return "slope";
        case DecompStrategy::Custom: return "custom";
    }
    return "?";
}

Decomposition decomposition_for(const WindowConfig& cfg, const Root& beta, int mode) {
    switch (cfg.strategy) {
        case DecompStrategy::Zero: return Decomposition::leading(beta, mode);
        case DecompStrategy::Slope: return Decomposition::slope(beta, mode);
        case DecompStrategy::Custom: {
            auto it = cfg.custom.find({beta, mode});
            if (it == cfg.custom.end())
                throw std::invalid_argument("custom strategy misses a split for " + beta.str() +
                                            "@" + std::to_string(mode));
            return {beta, it->second};
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

/// Mode total reachable by the remaining degree: contributions counted once
/// per power unit, between ceil(T/max_len) and T of them, each in
/// [mode_min, mode_max].
bool mode_reachable(long needed, int remaining_total, const WindowConfig& cfg, int max_len) {
    if (remaining_total == 0) return needed == 0;
    const long cmin = (remaining_total + max_len - 1) / max_len;
    const long cmax = remaining_total;
    const long lo = cfg.mode_min >= 0 ? cmin * cfg.mode_min : cmax * cfg.mode_min;
    const long hi = cfg.mode_max <= 0 ? cmin * cfg.mode_max : cmax * cfg.mode_max;
    return lo <= needed && needed <= hi;
}

struct Axis {
    Root root;
    int mode;
};

void e_dfs(const WindowConfig& cfg, const std::vector<Axis>& axis, size_t idx, DegreeVector& rem,
           long mode_needed, int max_len, std::vector<EPBWDFactor>& cur,
           std::vector<EPBWDMonomial>& out) {
    const int total = rem.total();
    if (total == 0) {
        if (mode_needed == 0) out.push_back({cur});
        return;
    }
    if (idx == axis.size() || !mode_reachable(mode_needed, total, cfg, max_len)) return;
    const Root& beta = axis[idx].root;
    int maxp = INT_MAX;
    for (int k = beta.j; k <= beta.i; ++k) maxp = std::min(maxp, rem.at(k));
    for (int p = 0; p <= maxp; ++p) {
        if (p > 0) {
            for (int k = beta.j; k <= beta.i; ++k) rem.at(k) -= p;
            cur.push_back({beta, axis[idx].mode, p});
        }
        e_dfs(cfg, axis, idx + 1, rem, mode_needed - static_cast<long>(p) * axis[idx].mode,
              max_len, cur, out);
        if (p > 0) {
            cur.pop_back();
            for (int k = beta.j; k <= beta.i; ++k) rem.at(k) += p;
        }
    }
}

void f_dfs(const WindowConfig& cfg, const std::vector<Axis>& axis, size_t idx, DegreeVector& rem,
           long mode_needed, int max_len, std::vector<Decomposition>& cur,
           std::vector<FPBWDMonomial>& out) {
    const int total = rem.total();
    if (total == 0) {
        if (mode_needed == 0) out.push_back({cur});
        return;
    }
    if (idx == axis.size() || !mode_reachable(mode_needed, total, cfg, max_len)) return;
    const Root& beta = axis[idx].root;
    int maxp = INT_MAX;
    for (int k = beta.j; k <= beta.i; ++k) maxp = std::min(maxp, rem.at(k));
    const Decomposition split = decomposition_for(cfg, beta, axis[idx].mode);
    for (int p = 0; p <= maxp; ++p) {
        for (int q = 0; q < p; ++q) cur.push_back(split);
        for (int k = beta.j; k <= beta.i; ++k) rem.at(k) -= p;
        f_dfs(cfg, axis, idx + 1, rem, mode_needed - static_cast<long>(p) * axis[idx].mode,
              max_len, cur, out);
        for (int k = beta.j; k <= beta.i; ++k) rem.at(k) += p;
        for (int q = 0; q < p; ++q) cur.pop_back();
    }
}

std::vector<DegreeVector> degree_vectors(int n, int max_total) {
    std::vector<DegreeVector> out;
    std::vector<int> cur(n - 1, 0);
    // odometer in lexicographic order
    while (true) {
        int total = std::accumulate(cur.begin(), cur.end(), 0);
        if (total >= 1 && total <= max_total) out.push_back(DegreeVector(cur));
        int p = static_cast<int>(cur.size()) - 1;
        while (p >= 0) {
            if (++cur[p] > max_total) {
                cur[p] = 0;
                --p;
            } else
                break;
        }
        if (p < 0) break;
    }
    std::sort(out.begin(), out.end(), [](const DegreeVector& a, const DegreeVector& b) {
        return a.entries() < b.entries();
    });
    return out;
}

long max_numerator_exponent(const ShuffleElement& x) {
    long m = 0;
    for (const auto& [e, c] : x.numerator.terms())
        for (int v : e) m = std::max(m, static_cast<long>(std::abs(v)));
    return m;
}

} // namespace

std::vector<EPBWDMonomial> enumerate_e_monomials(const WindowConfig& cfg,
                                                 const DegreeVector& degree, long total_mode) {
    std::vector<Axis> axis;
    for (const Root& beta : positive_roots(cfg.n))
        for (int r = cfg.mode_min; r <= cfg.mode_max; ++r) axis.push_back({beta, r});
    std::vector<EPBWDMonomial> out;
    std::vector<EPBWDFactor> cur;
    DegreeVector rem = degree;
    e_dfs(cfg, axis, 0, rem, total_mode, cfg.n - 1, cur, out);
    return out;
}

std::vector<FPBWDMonomial> enumerate_f_monomials(const WindowConfig& cfg,
                                                 const DegreeVector& degree, long total_mode) {
    std::vector<Axis> axis;
    auto roots = positive_roots(cfg.n);
    for (auto it = roots.rbegin(); it != roots.rend(); ++it)
        for (int r = cfg.mode_max; r >= cfg.mode_min; --r) axis.push_back({*it, r});
    std::vector<FPBWDMonomial> out;
    std::vector<Decomposition> cur;
    DegreeVector rem = degree;
    f_dfs(cfg, axis, 0, rem, total_mode, cfg.n - 1, cur, out);
    return out;
}

namespace {

struct GramTask {
    size_t block, row, col;
};

void run_tasks(int jobs, size_t count, const std::function<void(size_t)>& work) {
    if (jobs <= 1) {
        for (size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace

GramReport verify_duality(const WindowConfig& cfg, const std::optional<ShuffleElement>& inject) {
    GramReport rep;
    rep.config = cfg;
    ElementCache cache(cfg.n);

    std::optional<long> inject_mode;
    if (inject) {
        if (inject->rank != cfg.n) throw std::invalid_argument("injected element: rank mismatch");
        inject_mode = inject->total_mode();
        if (!inject_mode)
            throw std::invalid_argument("injected element: numerator is not homogeneous");
    }

    std::vector<std::vector<ShuffleElement>> row_elems;
    std::vector<std::vector<FPBWDMonomial>> col_mons;
    for (const DegreeVector& degree : degree_vectors(cfg.n, cfg.max_total_degree)) {
        const long span = degree.total();
        for (long m = span * std::min(cfg.mode_min, 0); m <= span * std::max(cfg.mode_max, 0);
             ++m) {
            auto cols = enumerate_f_monomials(cfg, degree, -m);
            if (cols.empty()) continue;
            auto rows = enumerate_e_monomials(cfg, degree, m);
            GramBlock block;
            block.degree = degree;
            block.total_mode = m;
            std::vector<ShuffleElement> elems;
            if (inject && inject->degree == degree && *inject_mode == m) {
                block.rows.push_back("fixture");
                elems.push_back(*inject);
            }
            for (const auto& mon : rows) {
                block.rows.push_back(format_e_monomial(mon));
                elems.push_back(build_e_pbwd(cfg.n, mon, &cache));
                auto cert = is_good(elems.back());
                if (!cert.good) {
                    ++rep.violations;
                    if (rep.first_violation.empty())
                        rep.first_violation =
                            "basis row " + block.rows.back() + " fails the membership test";
                }
            }
            for (const auto& mon : cols) block.cols.push_back(format_f_monomial(mon));
            if (block.rows.empty()) continue;
            block.entries.assign(block.rows.size(), std::vector<RatV>(block.cols.size()));
            block.verdicts.assign(block.rows.size(),
                                  std::vector<bool>(block.cols.size(), false));
            rep.blocks.push_back(std::move(block));
            row_elems.push_back(std::move(elems));
            col_mons.push_back(cols);
        }
    }

    std::vector<GramTask> tasks;
    for (size_t b = 0; b < rep.blocks.size(); ++b)
        for (size_t r = 0; r < rep.blocks[b].rows.size(); ++r)
            for (size_t c = 0; c < rep.blocks[b].cols.size(); ++c) tasks.push_back({b, r, c});

    run_tasks(cfg.jobs, tasks.size(), [&](size_t i) {
        const GramTask& t = tasks[i];
        rep.blocks[t.block].entries[t.row][t.col] =
            pair(row_elems[t.block][t.row], col_mons[t.block][t.col]);
    });

    for (auto& block : rep.blocks)
        for (size_t r = 0; r < block.rows.size(); ++r)
            for (size_t c = 0; c < block.cols.size(); ++c) {
                ++rep.checked;
                const bool ok = block.entries[r][c].is_laurent_polynomial();
                block.verdicts[r][c] = ok;
                if (!ok) {
                    ++rep.violations;
                    if (rep.first_violation.empty()) {
                        std::ostringstream os;
                        os << "degree " << block.degree.str() << " mode " << block.total_mode
                           << ": phi(" << block.rows[r] << ", " << block.cols[c] << ") = "
                           << block.entries[r][c].str();
                        rep.first_violation = os.str();
                    }
                }
            }
    return rep;
}

namespace {

std::string witness_search(const WindowConfig& cfg, const ShuffleElement& x) {
    const auto xmode = x.total_mode();
    if (!xmode) return {};
    // window monomials first
    for (const auto& mon : enumerate_f_monomials(cfg, x.degree, -*xmode)) {
        RatV val = pair(x, mon);
        if (!val.is_laurent_polynomial())
            return format_f_monomial(mon) + " -> " + val.str();
    }
    // then strongly negative tail splits over every compatible root multiset
    const long kmax = max_numerator_exponent(x) + 5;
    for (const auto& plan : enumerate_plans(x.degree)) {
        std::vector<Root> betas;
        for (const auto& [beta, mult] : plan.d)
            for (int s = 0; s < mult; ++s) betas.push_back(beta);
        std::sort(betas.begin(), betas.end());
        std::reverse(betas.begin(), betas.end());
        for (long K = 1; K <= kmax; ++K) {
            std::vector<Decomposition> factors;
            for (size_t t = 0; t < betas.size(); ++t) {
                std::vector<int> modes(betas[t].length(), static_cast<int>(-K));
                long head = (t == 0 ? -*xmode : 0) + K * (betas[t].length() - 1);
                modes[0] = static_cast<int>(head);
                factors.emplace_back(betas[t], std::move(modes));
            }
            RatV val = pair_product(x, factors);
            if (!val.is_laurent_polynomial())
                return format_f_monomial({factors}) + " -> " + val.str();
        }
    }
    return {};
}

} // namespace

GoodReport verify_good_criterion(const WindowConfig& cfg,
                                 const std::optional<ShuffleElement>& candidate) {
    GoodReport rep;
    ElementCache cache(cfg.n);
    for (const DegreeVector& degree : degree_vectors(cfg.n, cfg.max_total_degree)) {
        const long span = degree.total();
        for (long m = span * std::min(cfg.mode_min, 0); m <= span * std::max(cfg.mode_max, 0);
             ++m)
            for (const auto& mon : enumerate_e_monomials(cfg, degree, m)) {
                ++rep.checked;
                auto el = build_e_pbwd(cfg.n, mon, &cache);
                auto cert = is_good(el);
                if (!cert.good) {
                    rep.pass = false;
                    rep.detail = "basis monomial " + format_e_monomial(mon) +
                                 " fails the membership test";
                    return rep;
                }
            }
    }
    if (candidate) {
        auto cert = is_good(*candidate);
        rep.candidate_certificate = cert;
        if (!cert.good) {
            rep.witness = witness_search(cfg, *candidate);
            if (rep.witness.empty()) {
                rep.pass = false;
                rep.detail = "candidate fails the membership test but no non-polynomial "
                             "pairing was found in the scan";
            } else {
                rep.detail = "candidate is not in the lattice; witness pairing found";
            }
        } else {
            rep.detail = "candidate passes the membership test";
        }
    }
    return rep;
}

namespace {

/// Slope order on (root, mode): smaller mode/length first, ties by shorter
/// root, then smaller right end.
bool slope_less(const std::pair<Root, int>& a, const std::pair<Root, int>& b) {
    const long la = a.first.length(), lb = b.first.length();
    const long lhs = static_cast<long>(a.second) * lb, rhs = static_cast<long>(b.second) * la;
    if (lhs != rhs) return lhs < rhs;
    if (la != lb) return la < lb;
    if (a.first.i != b.first.i) return a.first.i < b.first.i;
    return a.first.j < b.first.j; // tie-break for determinism
}

void multiset_dfs(const std::vector<std::pair<Root, int>>& axis, size_t idx, DegreeVector& rem,
                  long mode_needed, std::vector<std::pair<Root, int>>& cur,
                  std::vector<std::vector<std::pair<Root, int>>>& out) {
    if (rem.total() == 0) {
        if (mode_needed == 0) out.push_back(cur);
        return;
    }
    if (idx == axis.size()) return;
    const Root& beta = axis[idx].first;
    int maxp = INT_MAX;
    for (int k = beta.j; k <= beta.i; ++k) maxp = std::min(maxp, rem.at(k));
    for (int p = 0; p <= maxp; ++p) {
        for (int q = 0; q < p; ++q) cur.push_back(axis[idx]);
        for (int k = beta.j; k <= beta.i; ++k) rem.at(k) -= p;
        multiset_dfs(axis, idx + 1, rem, mode_needed - static_cast<long>(p) * axis[idx].second,
                     cur, out);
        for (int k = beta.j; k <= beta.i; ++k) rem.at(k) += p;
        for (int q = 0; q < p; ++q) cur.pop_back();
    }
}

} // namespace

DualBasisReport verify_dual_bases(const WindowConfig& cfg) {
    DualBasisReport rep;
    const int n = cfg.n;
    const bool assert_structure = (n == 2);
    if (!assert_structure)
        rep.detail = "structure assertions ship for n = 2; higher ranks record only";

    // axis of (root, mode), slope-ordered ascending
    std::vector<std::pair<Root, int>> axis;
    for (const Root& beta : positive_roots(n))
        for (int r = cfg.mode_min; r <= cfg.mode_max; ++r) axis.push_back({beta, r});
    std::sort(axis.begin(), axis.end(), slope_less);

    for (const DegreeVector& degree : degree_vectors(n, cfg.max_total_degree)) {
        for (long m = cfg.mode_min; m <= cfg.mode_max; ++m) {
            std::vector<std::vector<std::pair<Root, int>>> row_sets, col_sets;
            {
                DegreeVector rem = degree;
                std::vector<std::pair<Root, int>> cur;
                multiset_dfs(axis, 0, rem, m, cur, row_sets);
            }
            {
                DegreeVector rem = degree;
                std::vector<std::pair<Root, int>> cur;
                multiset_dfs(axis, 0, rem, -m, cur, col_sets);
            }
            if (row_sets.empty() || col_sets.empty()) continue;
            ++rep.blocks;

            // rows: product of bracket generators, slope-descending factors
            std::vector<ShuffleElement> rows;
            std::vector<std::string> row_labels;
            for (const auto& ms : row_sets) {
                auto factors = ms; // ascending from the DFS
                std::reverse(factors.begin(), factors.end());
                ShuffleElement el = ShuffleElement::unit(n);
                std::string label;
                for (const auto& [beta, r] : factors) {
                    el = star(el, e_tilde(n, decomposition_for(cfg, beta, r)));
                    label += (label.empty() ? "" : "*") + std::string("Et[") +
                             std::to_string(beta.j) + ".." + std::to_string(beta.i) + "]@" +
                             std::to_string(r);
                }
                rows.push_back(std::move(el));
                row_labels.push_back(std::move(label));
            }
            // cols: divided-power monomials, slope-ascending factors
            std::vector<std::vector<Decomposition>> cols;
            std::vector<RatV> col_scalars;
            std::vector<std::string> col_labels;
            for (const auto& ms : col_sets) {
                std::vector<Decomposition> factors;
                RatV scalar(1);
                std::string label;
                for (size_t a = 0; a < ms.size();) {
                    size_t b = a;
                    while (b < ms.size() && ms[b] == ms[a]) ++b;
                    const long mult = static_cast<long>(b - a);
                    for (size_t q = a; q < b; ++q)
                        factors.push_back(decomposition_for(cfg, ms[a].first, ms[a].second));
                    scalar = scalar * RatV(LaurentV(1),
                                           LaurentV::v_minus_vinv().pow(mult) * qfact(mult));
                    label += (label.empty() ? "" : "*") + std::string("Fd[") +
                             std::to_string(ms[a].first.j) + ".." + std::to_string(ms[a].first.i) +
                             "]@" + std::to_string(ms[a].second) +
                             (mult > 1 ? "^" + std::to_string(mult) : "");
                    a = b;
                }
                cols.push_back(std::move(factors));
                col_scalars.push_back(scalar);
                col_labels.push_back(std::move(label));
            }

            std::vector<std::vector<RatV>> entries(rows.size(),
                                                   std::vector<RatV>(cols.size()));
            std::vector<std::pair<size_t, size_t>> tasks;
            for (size_t r = 0; r < rows.size(); ++r)
                for (size_t c = 0; c < cols.size(); ++c) tasks.push_back({r, c});
            run_tasks(cfg.jobs, tasks.size(), [&](size_t i) {
                auto [r, c] = tasks[i];
                entries[r][c] = col_scalars[c] * pair_product(rows[r], cols[c]);
            });

            std::vector<int> row_hits(rows.size(), 0), col_hits(cols.size(), 0);
            for (size_t r = 0; r < rows.size(); ++r)
                for (size_t c = 0; c < cols.size(); ++c) {
                    if (entries[r][c].is_zero()) continue;
                    ++row_hits[r];
                    ++col_hits[c];
                    rep.normalizations.push_back(
                        {degree, m, row_labels[r], col_labels[c], entries[r][c]});
                }
            if (!assert_structure) continue;

            auto fail = [&](const std::string& what) {
                rep.pass = false;
                if (rep.detail.empty())
                    rep.detail = "degree " + degree.str() + " mode " + std::to_string(m) + ": " +
                                 what;
            };
            if (rows.size() != cols.size()) fail("block is not square");
            for (size_t r = 0; r < rows.size(); ++r)
                if (row_hits[r] != 1) fail("row " + row_labels[r] + " has " +
                                           std::to_string(row_hits[r]) + " nonzero entries");
            for (size_t c = 0; c < cols.size(); ++c)
                if (col_hits[c] != 1) fail("col " + col_labels[c] + " has " +
                                           std::to_string(col_hits[c]) + " nonzero entries");
            for (size_t r = 0; r < rows.size(); ++r)
                for (size_t c = 0; c < cols.size(); ++c) {
                    const RatV& e = entries[r][c];
                    if (e.is_zero()) continue;
                    if (!e.is_laurent_polynomial() || !e.num().is_monomial() ||
                        !(abs(e.num().coeff(e.num().min_exp())) == 1))
                        fail("entry phi(" + row_labels[r] + ", " + col_labels[c] +
                             ") = " + e.str() + " is not a signed v-power");
                }
            if (degree.total() == 1) {
                // the mirror entry of every degree-1 row must be exactly 1
                for (size_t r = 0; r < rows.size(); ++r) {
                    const auto& ms = row_sets[r];
                    for (size_t c = 0; c < cols.size(); ++c) {
                        if (entries[r][c].is_zero()) continue;
                        bool mirror = col_sets[c].size() == 1 &&
                                      col_sets[c][0].first == ms[0].first &&
                                      col_sets[c][0].second == -ms[0].second;
                        if (!mirror || !(entries[r][c] == RatV(1)))
                            fail("degree-1 entry is not the unit on the mirror column");
                    }
                }
            }
        }
    }
    return rep;
}

SuiteReport verify_oracle(const WindowConfig& cfg, int max_factors) {
    SuiteReport rep;
    ElementCache cache(cfg.n);

    // degrees realizable by at most max_factors roots
    std::set<std::vector<int>> degrees;
    auto roots = positive_roots(cfg.n);
    std::vector<DegreeVector> stack{DegreeVector::zero(cfg.n)};
    for (int f = 0; f < max_factors; ++f) {
        std::vector<DegreeVector> next;
        for (const auto& d : stack)
            for (const auto& beta : roots) {
                DegreeVector nd = d + beta.degree(cfg.n);
                degrees.insert(nd.entries());
                next.push_back(nd);
            }
        stack = std::move(next);
    }

    for (const auto& dent : degrees) {
        const DegreeVector degree{dent};
        const long span = degree.total();
        for (long m = span * std::min(cfg.mode_min, 0); m <= span * std::max(cfg.mode_max, 0);
             ++m) {
            std::vector<FPBWDMonomial> cols;
            for (auto& mon : enumerate_f_monomials(cfg, degree, m))
                if (static_cast<int>(mon.factors.size()) <= max_factors)
                    cols.push_back(std::move(mon));
            if (cols.empty()) continue;
            auto rows = enumerate_e_monomials(cfg, degree, -m);
            if (rows.empty()) continue;
            std::vector<ShuffleElement> elems;
            elems.reserve(rows.size());
            for (const auto& mon : rows) elems.push_back(build_e_pbwd(cfg.n, mon, &cache));

            std::vector<std::pair<size_t, size_t>> tasks;
            for (size_t r = 0; r < rows.size(); ++r)
                for (size_t c = 0; c < cols.size(); ++c) tasks.push_back({r, c});
            std::mutex fail_mutex;
            run_tasks(cfg.jobs, tasks.size(), [&](size_t i) {
                auto [r, c] = tasks[i];
                RatV a = pair(elems[r], cols[c]);
                RatV b = pair_via_words(elems[r], cols[c]);
                if (!(a == b)) {
                    std::lock_guard<std::mutex> lock(fail_mutex);
                    rep.pass = false;
                    if (rep.detail.empty())
                        rep.detail = "pair(" + format_e_monomial(rows[r]) + ", " +
                                     format_f_monomial(cols[c]) + ") = " + a.str() +
                                     " but the word oracle gives " + b.str();
                }
            });
            rep.checked += static_cast<long>(tasks.size());
            if (!rep.pass) return rep;
        }
    }
    return rep;
}

SuiteReport verify_key_spec(const WindowConfig& cfg) {
    SuiteReport rep;
    auto run = [&](int rank, const Root& beta, const std::vector<int>& a,
                   const std::vector<int>& tails) {
        if (!rep.pass) return;
        auto r = key_specialization_check(rank, beta, a, tails);
        ++rep.checked;
        if (!r.pass) {
            rep.pass = false;
            rep.detail = "rank " + std::to_string(rank) + " root " + beta.str() + ": " + r.detail;
        }
    };
    switch (cfg.n) {
        case 2:
            for (int a = -2; a <= 2; ++a) run(2, {1, 1}, {a}, {});
            break;
        case 3:
            for (int r2 : {-3, -4})
                for (int a1 = 0; a1 <= 2; ++a1)
                    for (int a2 = 0; a2 <= 2; ++a2) run(3, {1, 2}, {a1, a2}, {r2});
            break;
        case 4:
            for (int r2 : {-3, -4})
                for (int r3 : {-3, -4})
                    for (int a1 = 0; a1 <= 2; ++a1)
                        for (int a2 = 0; a2 <= 2; ++a2)
                            for (int a3 = 0; a3 <= 2; ++a3)
                                run(4, {1, 3}, {a1, a2, a3}, {r2, r3});
            break;
        default:
            throw std::invalid_argument("key-spec battery is defined for n in {2,3,4}");
    }
    return rep;
}

SuiteReport verify_relations(const WindowConfig& cfg) {
    auto r = check_relations(cfg.n, cfg.mode_min, cfg.mode_max);
    return {r.pass, r.checked, r.detail};
}

ShuffleElement nongood_fixture() {
    return {3, DegreeVector({1, 1}), MultiLaurent::variable({1, 1}, 1)};
}

} // namespace qshuffle
