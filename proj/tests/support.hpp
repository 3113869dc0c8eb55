#pragma once

#include <random>

#include "qshuffle/pairing.hpp"
#include "qshuffle/shuffle.hpp"

namespace qshuffle::testsupport {

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng) {
    Rational r(rand_int(rng, -6, 6), rand_int(rng, 1, 4));
    r.canonicalize();
    return r;
}

inline LaurentV rand_laurent(Rng& rng, int max_terms = 4, int exp_range = 4) {
    LaurentV x;
    const int terms = rand_int(rng, 0, max_terms);
    for (int t = 0; t < terms; ++t)
        x.add_term(rand_int(rng, -exp_range, exp_range), rand_rational(rng));
    return x;
}

inline LaurentV rand_laurent_nonzero(Rng& rng, int max_terms = 4, int exp_range = 4) {
    while (true) {
        LaurentV x = rand_laurent(rng, max_terms, exp_range);
        if (!x.is_zero()) return x;
    }
}

inline RatV rand_ratv(Rng& rng) {
    return RatV(rand_laurent(rng, 3, 3), rand_laurent_nonzero(rng, 2, 2));
}

inline MultiLaurent rand_multilaurent(Rng& rng, const std::vector<ColorVar>& vars,
                                      int max_terms = 4, int exp_range = 2) {
    MultiLaurent p{vars};
    const int terms = rand_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        MultiLaurent::Exps e(vars.size());
        for (auto& x : e) x = rand_int(rng, -exp_range, exp_range);
        p.add_term(e, RatV(rand_rational(rng)));
    }
    return p;
}

/// Random element of the shuffle algebra: a star product of generators with
/// a random rational scale; always satisfies the pole and wheel conditions.
inline ShuffleElement rand_element(Rng& rng, int rank, int total_degree, int mode_lo = -2,
                                   int mode_hi = 2) {
    ShuffleElement el = gen_e(rank, rand_int(rng, 1, rank - 1), rand_int(rng, mode_lo, mode_hi));
    for (int d = 1; d < total_degree; ++d)
        el = star(el, gen_e(rank, rand_int(rng, 1, rank - 1), rand_int(rng, mode_lo, mode_hi)));
    Rational c = rand_rational(rng);
    if (c == 0) c = 1;
    return el.scaled(RatV(c));
}

} // namespace qshuffle::testsupport
