#pragma once

#include <string>

#include "qshuffle/pairing.hpp"

namespace qshuffle {

/// "e[j..i]@r^k" factors joined by "*"; "^1" omitted.
std::string format_e_monomial(const EPBWDMonomial& m);
EPBWDMonomial parse_e_monomial(const std::string& text);

/// "f[j..i]@(r_j,...,r_i)" factors joined by "*".
std::string format_f_monomial(const FPBWDMonomial& m);
FPBWDMonomial parse_f_monomial(const std::string& text);

} // namespace qshuffle
