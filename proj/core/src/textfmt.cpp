#include "qshuffle/textfmt.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qshuffle {

namespace {

struct Cursor {
    const std::string& s;
    size_t p = 0;
    bool done() const { return p >= s.size(); }
    char peek() const { return done() ? '\0' : s[p]; }
    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument("monomial syntax: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(p) + " in '" + s + "'");
        ++p;
    }
    void expect_str(const std::string& lit) {
        for (char c : lit) expect(c);
    }
    int integer() {
        size_t start = p;
        if (peek() == '-' || peek() == '+') ++p;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start || (p == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("monomial syntax: integer expected at position " +
                                        std::to_string(start) + " in '" + s + "'");
        return std::stoi(s.substr(start, p - start));
    }
};

Root parse_root(Cursor& c) {
    c.expect('[');
    int j = c.integer();
    c.expect_str("..");
    int i = c.integer();
    c.expect(']');
    if (j < 1 || i < j) throw std::invalid_argument("monomial syntax: bad root interval");
    return {j, i};
}

} // namespace

std::string format_e_monomial(const EPBWDMonomial& m) {
    if (m.factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : m.factors) {
        if (!first) os << "*";
        first = false;
        os << "e[" << f.root.j << ".." << f.root.i << "]@" << f.mode;
        if (f.power != 1) os << "^" << f.power;
    }
    return os.str();
}

EPBWDMonomial parse_e_monomial(const std::string& text) {
    EPBWDMonomial m;
    if (text == "1") return m;
    Cursor c{text};
    while (true) {
        c.expect('e');
        Root root = parse_root(c);
        c.expect('@');
        int mode = c.integer();
        long power = 1;
        if (c.peek() == '^') {
            ++c.p;
            power = c.integer();
            if (power < 1) throw std::invalid_argument("e-monomial: power must be >= 1");
        }
        m.factors.push_back({root, mode, power});
        if (c.done()) break;
        c.expect('*');
    }
    if (!m.is_sorted())
        throw std::invalid_argument("e-monomial factors must be strictly increasing in (root, mode)");
    return m;
}

std::string format_f_monomial(const FPBWDMonomial& m) {
    if (m.factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : m.factors) {
        if (!first) os << "*";
        first = false;
        os << "f[" << f.root.j << ".." << f.root.i << "]@(";
        for (size_t k = 0; k < f.r.size(); ++k) os << (k ? "," : "") << f.r[k];
        os << ")";
    }
    return os.str();
}

FPBWDMonomial parse_f_monomial(const std::string& text) {
    FPBWDMonomial m;
    if (text == "1") return m;
    Cursor c{text};
    while (true) {
        c.expect('f');
        Root root = parse_root(c);
        c.expect('@');
        c.expect('(');
        std::vector<int> r;
        r.push_back(c.integer());
        while (c.peek() == ',') {
            ++c.p;
            r.push_back(c.integer());
        }
        c.expect(')');
        m.factors.emplace_back(root, std::move(r));
        if (c.done()) break;
        c.expect('*');
    }
    if (!m.is_opposite_sorted())
        throw std::invalid_argument(
            "f-monomial factors must be non-increasing in (root, total mode)");
    return m;
}

} // namespace qshuffle
