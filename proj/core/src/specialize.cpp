#include "qshuffle/specialize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qshuffle {

DegreeVector SpecializationPlan::degree(int rank) const {
    DegreeVector deg = DegreeVector::zero(rank);
    for (const auto& [beta, mult] : d)
        for (int k = beta.j; k <= beta.i; ++k) deg.at(k) += mult;
    return deg;
}

long SpecializationPlan::required_power() const {
    long p = 0;
    for (const auto& [beta, mult] : d) p += static_cast<long>(mult) * (beta.i - beta.j);
    return p;
}

std::string SpecializationPlan::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [beta, mult] : d) {
        if (!first) s += ", ";
        first = false;
        s += beta.str() + ": " + std::to_string(mult);
    }
    return s + "}";
}

namespace {
void plans_dfs(const std::vector<Root>& roots, size_t idx, DegreeVector& rem,
               SpecializationPlan& cur, std::vector<SpecializationPlan>& out) {
    if (idx == roots.size()) {
        if (rem.is_zero()) out.push_back(cur);
        return;
    }
    const Root& beta = roots[idx];
    int maxd = rem.at(beta.j);
    for (int k = beta.j; k <= beta.i; ++k) maxd = std::min(maxd, rem.at(k));
    for (int mult = maxd; mult >= 0; --mult) {
        for (int k = beta.j; k <= beta.i; ++k) rem.at(k) -= mult;
        if (mult > 0) cur.d[beta] = mult;
        plans_dfs(roots, idx + 1, rem, cur, out);
        if (mult > 0) cur.d.erase(beta);
        for (int k = beta.j; k <= beta.i; ++k) rem.at(k) += mult;
    }
}
} // namespace

std::vector<SpecializationPlan> enumerate_plans(const DegreeVector& degree) {
    std::vector<SpecializationPlan> out;
    auto roots = positive_roots(degree.rank());
    DegreeVector rem = degree;
    SpecializationPlan cur;
    plans_dfs(roots, 0, rem, cur, out);
    return out;
}

std::string YVar::str() const {
    return "y_" + std::to_string(beta.j) + "-" + std::to_string(beta.i) + "_" + std::to_string(s);
}

SpecializedPoly::SpecializedPoly(std::vector<YVar> vars) : vars_(std::move(vars)) {
    if (!std::is_sorted(vars_.begin(), vars_.end()))
        throw std::invalid_argument("SpecializedPoly: variables must be sorted");
}

SpecializedPoly& SpecializedPoly::add_term(const std::vector<int>& e, const LaurentV& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("SpecializedPoly: arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

bool SpecializedPoly::symmetric_in_copies() const {
    // swapping adjacent copies of each root generates the full copy group
    for (size_t a = 0; a + 1 < vars_.size(); ++a) {
        if (vars_[a].beta != vars_[a + 1].beta) continue;
        SpecializedPoly swapped(vars_);
        for (const auto& [e, c] : terms_) {
            std::vector<int> ne = e;
            std::swap(ne[a], ne[a + 1]);
            swapped.add_term(ne, c);
        }
        if (!(swapped == *this)) return false;
    }
    return true;
}

std::string SpecializedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i].str();
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

SpecializedPoly specialize_with_splitting(const ShuffleElement& F, const SpecializationPlan& plan,
                                          const std::map<ColorVar, YVar>& assignment) {
    if (!(plan.degree(F.rank) == F.degree))
        throw std::invalid_argument("specialize: plan degree " + plan.degree(F.rank).str() +
                                    " != element degree " + F.degree.str());
    std::vector<YVar> yvars;
    for (const auto& [beta, mult] : plan.d)
        for (int s = 1; s <= mult; ++s) yvars.push_back({beta, s});
    std::sort(yvars.begin(), yvars.end());
    SpecializedPoly out{yvars};

    const auto& xvars = F.numerator.vars();
    std::vector<size_t> ypos(xvars.size());
    std::vector<int> shift(xvars.size());
    for (size_t idx = 0; idx < xvars.size(); ++idx) {
        auto it = assignment.find(xvars[idx]);
        if (it == assignment.end())
            throw std::invalid_argument("specialize: no interval for " + xvars[idx].str());
        if (!it->second.beta.contains(xvars[idx].color))
            throw std::invalid_argument("specialize: color outside interval for " +
                                        xvars[idx].str());
        auto yit = std::lower_bound(yvars.begin(), yvars.end(), it->second);
        ypos[idx] = static_cast<size_t>(yit - yvars.begin());
        shift[idx] = -xvars[idx].color; // x_{k,r} -> v^{-k} y
    }
    for (const auto& [e, coeff] : F.numerator.terms()) {
        std::vector<int> ne(yvars.size(), 0);
        long vshift = 0;
        for (size_t idx = 0; idx < e.size(); ++idx) {
            ne[ypos[idx]] += e[idx];
            vshift += static_cast<long>(shift[idx]) * e[idx];
        }
        out.add_term(ne, coeff.as_laurent().shifted(vshift));
    }
    return out;
}

SpecializedPoly specialize(const ShuffleElement& F, const SpecializationPlan& plan) {
    // canonical splitting: roots in order, copies consecutive, same-color
    // variables consumed by increasing index
    std::map<ColorVar, YVar> assignment;
    std::vector<int> next(F.rank, 1); // next unused index per color
    for (const auto& [beta, mult] : plan.d)
        for (int s = 1; s <= mult; ++s)
            for (int k = beta.j; k <= beta.i; ++k) assignment[{k, next[k]++}] = {beta, s};
    return specialize_with_splitting(F, plan, assignment);
}

GoodCertificate is_good(const ShuffleElement& F) {
    GoodCertificate cert;
    for (const auto& [e, c] : F.numerator.sorted_terms()) {
        if (!c.is_laurent_polynomial()) {
            cert.good = false;
            cert.bad_coefficient = c;
            return cert;
        }
    }
    for (const auto& plan : enumerate_plans(F.degree)) {
        const long required = plan.required_power();
        SpecializedPoly sp = specialize(F, plan);
        for (const auto& [e, c] : sp.terms()) {
            if (!divides_power(c, required)) {
                cert.good = false;
                cert.plan = plan;
                cert.required_power = required;
                cert.failing_coefficient = c;
                return cert;
            }
        }
    }
    return cert;
}

} // namespace qshuffle
