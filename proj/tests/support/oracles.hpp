#pragma once

// Brute-force oracles shared by the unit and acceptance suites. They enumerate points
// directly and share no code path with the formulas they check.

#include <cstdint>
#include <vector>

#include "configres/arith/matrix.hpp"
#include "configres/arith/poly.hpp"
#include "configres/matroid.hpp"

namespace configres::oracle {

/// Representatives of P^{k-1}(F_q): first nonzero coordinate equal to 1.
inline std::vector<Vector> projective_points(std::size_t k, std::uint64_t q) {
    std::vector<Vector> out;
    std::vector<std::uint64_t> digits(k, 0);
    for (;;) {
        std::size_t lead = 0;
        while (lead < k && digits[lead] == 0) ++lead;
        if (lead < k && digits[lead] == 1) {
            Vector v;
            for (auto d : digits) v.push_back(Scalar::fp(static_cast<std::int64_t>(d), q));
            out.push_back(std::move(v));
        }
        std::size_t i = 0;
        while (i < k && ++digits[i] == q) digits[i++] = 0;
        if (i == k) break;
    }
    return out;
}

/// #{(w, beta) in P^{r-1} x P^{n-1} over F_q : A D_beta A^T w = 0}.
inline std::int64_t count_lambda_points(const Matrix& a, std::uint64_t q) {
    const Matrix aq = a.mod(q);
    const std::size_t r = aq.rows(), n = aq.cols();
    std::int64_t count = 0;
    for (const Vector& w : projective_points(r, q)) {
        Vector v = aq.transpose() * w;
        for (const Vector& beta : projective_points(n, q)) {
            Vector bv(n);
            for (std::size_t i = 0; i < n; ++i) bv[i] = beta[i] * v[i];
            Vector res = aq * bv;
            bool zero = true;
            for (const Scalar& s : res) zero = zero && s.is_zero();
            count += zero;
        }
    }
    return count;
}

/// #{x in P^{n-1}(F_q) : f(x) = 0}.
inline std::int64_t count_hypersurface_points(const MultiPoly& f, std::uint64_t q) {
    const MultiPoly fq = f.mod(q);
    std::int64_t count = 0;
    for (const Vector& x : projective_points(f.nvars(), q)) count += fq.evaluate(x).is_zero();
    return count;
}

/// True when reduction mod q keeps the column matroid.
inline bool matroid_survives_mod(const Matrix& a, std::uint64_t q) {
    try {
        return matroid_from_matrix(a.mod(q)) == matroid_from_matrix(a);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace configres::oracle
