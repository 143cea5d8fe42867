#pragma once

#include "birat/multipoly.hpp"

#include <random>

namespace birat::testkit {

inline GaussianRational random_scalar(std::mt19937_64& rng, int range = 5, bool gaussian = false, int den = 3) {
    std::uniform_int_distribution<int> num(-range, range), d(1, den);
    mpq_class re(num(rng), d(rng));
    re.canonicalize();
    mpq_class im;
    if (gaussian) {
        im = mpq_class(num(rng), d(rng));
        im.canonicalize();
    }
    return GaussianRational(re, im);
}

inline GaussianRational random_nonzero(std::mt19937_64& rng, int range = 5, bool gaussian = false) {
    for (;;) {
        GaussianRational v = random_scalar(rng, range, gaussian);
        if (!v.is_zero()) return v;
    }
}

inline MultiPoly random_poly(std::mt19937_64& rng, const VarList& vars, int max_deg, int nterms, bool gaussian = false) {
    std::vector<Term> terms;
    for (int k = 0; k < nterms; ++k) {
        Exponents ex{0, 0, 0};
        int budget = max_deg;
        for (std::size_t v = 0; v < vars->size(); ++v) {
            ex[v] = unsigned(std::uniform_int_distribution<int>(0, budget)(rng));
            budget -= int(ex[v]);
        }
        terms.push_back({pack(ex), random_scalar(rng, 5, gaussian)});
    }
    return MultiPoly::from_terms(vars, std::move(terms));
}

inline MultiPoly random_homogeneous(std::mt19937_64& rng, int degree, int nterms, bool gaussian = false) {
    std::vector<Term> terms;
    for (int k = 0; k < nterms; ++k) {
        unsigned a = unsigned(std::uniform_int_distribution<int>(0, degree)(rng));
        unsigned b = unsigned(std::uniform_int_distribution<int>(0, degree - int(a))(rng));
        terms.push_back({pack({a, b, unsigned(degree) - a - b}), random_scalar(rng, 5, gaussian)});
    }
    return MultiPoly::from_terms(vars_proj(), std::move(terms));
}

} // namespace birat::testkit
