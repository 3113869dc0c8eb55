#include "qshuffle/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qshuffle/errors.hpp"

namespace qshuffle {

DegreeVector::DegreeVector(std::vector<int> k) : k_(std::move(k)) {
    for (int x : k_)
        if (x < 0) throw std::invalid_argument("DegreeVector: negative entry");
}

DegreeVector DegreeVector::unit(int rank, int color) {
    DegreeVector d = zero(rank);
    d.at(color) = 1;
    return d;
}

int DegreeVector::total() const { return std::accumulate(k_.begin(), k_.end(), 0); }

DegreeVector DegreeVector::operator+(const DegreeVector& o) const {
    if (k_.size() != o.k_.size()) throw std::invalid_argument("DegreeVector: rank mismatch");
    std::vector<int> s(k_.size());
    for (size_t i = 0; i < k_.size(); ++i) s[i] = k_[i] + o.k_[i];
    return DegreeVector(std::move(s));
}

std::string DegreeVector::str() const {
    std::string s = "(";
    for (size_t i = 0; i < k_.size(); ++i) s += (i ? "," : "") + std::to_string(k_[i]);
    return s + ")";
}

std::vector<ColorVar> canonical_vars(const DegreeVector& degree) {
    std::vector<ColorVar> vs;
    for (int i = 1; i < degree.rank(); ++i)
        for (int r = 1; r <= degree.at(i); ++r) vs.push_back({i, r});
    return vs;
}

MultiLaurent::MultiLaurent(std::vector<ColorVar> vars) : vars_(std::move(vars)) {
    if (!std::is_sorted(vars_.begin(), vars_.end()) ||
        std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
        throw std::invalid_argument("MultiLaurent: variables must be strictly increasing");
}

MultiLaurent MultiLaurent::constant(const RatV& c) {
    MultiLaurent p;
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

MultiLaurent MultiLaurent::variable(const ColorVar& v, int power, const RatV& scalar) {
    MultiLaurent p(std::vector<ColorVar>{v});
    if (!scalar.is_zero()) p.terms_[{power}] = scalar;
    return p;
}

MultiLaurent MultiLaurent::linear_diff(const ColorVar& a, const ColorVar& b, const RatV& s) {
    if (a == b) throw std::invalid_argument("linear_diff: identical variables");
    std::vector<ColorVar> vs{a, b};
    std::sort(vs.begin(), vs.end());
    MultiLaurent p(vs);
    Exps ea(2, 0), eb(2, 0);
    ea[a < b ? 0 : 1] = 1;
    eb[a < b ? 1 : 0] = 1;
    p.add_term(ea, RatV(1));
    p.add_term(eb, -s);
    return p;
}

bool MultiLaurent::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

RatV MultiLaurent::constant_term() const {
    Exps zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? RatV() : it->second;
}

MultiLaurent& MultiLaurent::add_term(const Exps& e, const RatV& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("add_term: exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

MultiLaurent MultiLaurent::aligned(const std::vector<ColorVar>& to) const {
    if (to == vars_) return *this;
    MultiLaurent r((std::vector<ColorVar>(to)));
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), vars_[i]);
        if (it == to.end() || *it != vars_[i])
            throw std::invalid_argument("aligned: target misses variable " + vars_[i].str());
        pos[i] = static_cast<int>(it - to.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exps ne(to.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_[ne] = c;
    }
    return r;
}

namespace {
std::vector<ColorVar> var_union(const std::vector<ColorVar>& a, const std::vector<ColorVar>& b) {
    std::vector<ColorVar> u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}
} // namespace

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
    auto u = var_union(vars_, o.vars_);
    MultiLaurent r = aligned(u);
    for (const auto& [e, c] : o.aligned(u).terms_) r.add_term(e, c);
    return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const { return *this + (-o); }

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
    auto u = var_union(vars_, o.vars_);
    MultiLaurent a = aligned(u), b = o.aligned(u), r(u);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exps e(u.size());
            for (size_t i = 0; i < u.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool MultiLaurent::operator==(const MultiLaurent& o) const {
    auto u = var_union(vars_, o.vars_);
    return aligned(u).terms_ == o.aligned(u).terms_;
}

MultiLaurent MultiLaurent::scaled(const RatV& c) const {
    MultiLaurent r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_[e] = x * c;
    return r;
}

MultiLaurent MultiLaurent::substitute(const std::map<ColorVar, VarImage>& images) const {
    // collect target variables of variables that actually occur
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    std::vector<ColorVar> tvars;
    std::vector<const VarImage*> img(vars_.size(), nullptr);
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (!used[i]) continue;
        auto it = images.find(vars_[i]);
        if (it == images.end())
            throw std::invalid_argument("substitute: no image for " + vars_[i].str());
        img[i] = &it->second;
        tvars.push_back(it->second.var);
    }
    std::sort(tvars.begin(), tvars.end());
    tvars.erase(std::unique(tvars.begin(), tvars.end()), tvars.end());
    MultiLaurent r(tvars);
    for (const auto& [e, c] : terms_) {
        Exps ne(tvars.size(), 0);
        RatV nc = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const VarImage& im = *img[i];
            nc *= im.scalar.pow(e[i]);
            auto it = std::lower_bound(tvars.begin(), tvars.end(), im.var);
            ne[it - tvars.begin()] += e[i];
        }
        r.add_term(ne, nc);
    }
    return r;
}

MultiLaurent MultiLaurent::symmetrize() const {
    // index positions grouped by color
    std::map<int, std::vector<size_t>> groups;
    for (size_t i = 0; i < vars_.size(); ++i) groups[vars_[i].color].push_back(i);

    std::vector<std::vector<std::vector<size_t>>> all_perms; // per color

    Rational count(1);
    for (auto& [color, idx] : groups) {
        std::vector<size_t> p = idx;
        std::vector<std::vector<size_t>> ps;
        std::sort(p.begin(), p.end());
        do {
            ps.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        count *= Rational(static_cast<long>(ps.size()));
        all_perms.push_back(std::move(ps));
    }

    MultiLaurent acc(vars_);
    std::vector<size_t> choice(all_perms.size(), 0);
    std::vector<size_t> target(vars_.size());
    std::iota(target.begin(), target.end(), 0);
    while (true) {
        // build the combined position map
        size_t g = 0;
        for (auto& [color, idx] : groups) {
            const auto& perm = all_perms[g][choice[g]];
            for (size_t j = 0; j < idx.size(); ++j) target[idx[j]] = perm[j];
            ++g;
        }
        for (const auto& [e, c] : terms_) {
            Exps ne(e.size());
            for (size_t i = 0; i < e.size(); ++i) ne[target[i]] = e[i];
            acc.add_term(ne, c);
        }
        // advance the odometer
        size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == all_perms[pos].size()) choice[pos++] = 0;
        if (pos == choice.size()) break;
    }
    return acc.scaled(RatV(Rational(1) / count));
}

MultiLaurent MultiLaurent::divide_once(const ColorVar& a, const ColorVar& b) const {
    if (is_zero()) return *this;
    auto ia = std::lower_bound(vars_.begin(), vars_.end(), a);
    auto ib = std::lower_bound(vars_.begin(), vars_.end(), b);
    if (ia == vars_.end() || *ia != a || ib == vars_.end() || *ib != b)
        throw NonDivisibleError("exact_divide_linear: factor variable absent (" + a.str() + "," +
                                b.str() + ")");
    const size_t pa = ia - vars_.begin(), pb = ib - vars_.begin();

    // slices by the exponent of x_a, that exponent zeroed in the keys
    std::map<int, MultiLaurent> slices;
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int ea = e[pa];
        if (first || ea < lo) lo = ea;
        if (first || ea > hi) hi = ea;
        first = false;
        Exps ne = e;
        ne[pa] = 0;
        auto [it, inserted] = slices.try_emplace(ea, vars_);
        it->second.add_term(ne, c);
    }
    auto shift_b = [&](const MultiLaurent& p) { // multiply by x_b
        MultiLaurent r(p.vars_);
        for (const auto& [e, c] : p.terms_) {
            Exps ne = e;
            ne[pb] += 1;
            r.terms_[ne] = c;
        }
        return r;
    };
    // synthetic division of sum_{e=lo..hi} c_e x_a^e by (x_a - x_b)
    MultiLaurent carry(vars_), quot(vars_);
    for (int e = hi; e > lo; --e) {
        auto it = slices.find(e);
        MultiLaurent coeff = carry;
        if (it != slices.end()) coeff += it->second;
        // quotient coefficient at x_a^{e-1}
        for (const auto& [ce, cc] : coeff.terms_) {
            Exps ne = ce;
            ne[pa] = e - 1;
            quot.add_term(ne, cc);
        }
        carry = shift_b(coeff);
    }
    auto it = slices.find(lo);
    MultiLaurent rem = carry;
    if (it != slices.end()) rem += it->second;
    if (!rem.is_zero())
        throw NonDivisibleError("exact_divide_linear: remainder nonzero for (" + a.str() + " - " +
                                b.str() + ")");
    return quot;
}

MultiLaurent MultiLaurent::exact_divide_linear(
    const std::vector<std::pair<ColorVar, ColorVar>>& factors) const {
    MultiLaurent r = *this;
    for (const auto& [a, b] : factors) r = r.divide_once(a, b);
    return r;
}

std::optional<long> MultiLaurent::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    std::optional<long> deg;
    for (const auto& [e, c] : terms_) {
        long d = std::accumulate(e.begin(), e.end(), 0L);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

std::vector<std::pair<MultiLaurent::Exps, RatV>> MultiLaurent::sorted_terms() const {
    std::vector<std::pair<Exps, RatV>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
        long dx = std::accumulate(x.first.begin(), x.first.end(), 0L);
        long dy = std::accumulate(y.first.begin(), y.first.end(), 0L);
        if (dx != dy) return dx < dy;
        return x.first < y.first;
    });
    return ts;
}

std::string MultiLaurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
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

} // namespace qshuffle
