#include "zdg/spectra.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zdg {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Int(0));
}

const Int& IntPolynomial::coeff(int k) const {
    static const Int zero(0);
    if (k < 0 || k > degree()) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

bool IntPolynomial::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == 0;
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::string IntPolynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        Int mag = abs(c);
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (mag != 1 || k == 0) out << mag.get_str();
        if (k > 0) {
            if (mag != 1) out << '*';
            out << var;
            if (k > 1) out << '^' << k;
        }
    }
    return out.str();
}

Int binomial(std::uint64_t a, std::uint64_t b) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
}

// det(lambda*I - M) by the Berkowitz iteration. Principal blocks grow one
// row/column at a time; each step multiplies the coefficient vector by a
// lower-triangular Toeplitz matrix whose first column is
//   [1, -a_kk, -(r.c), -(r.A.c), -(r.A^2.c), ...]
// with A the leading k x k block, r the new row, c the new column.
// Division-free, so every intermediate stays an exact integer.
IntPolynomial charpoly_exact(const IntMatrix& m) {
    if (m.order < 1) throw std::invalid_argument("charpoly_exact: order must be >= 1");
    const int n = m.order;

    std::vector<Int> poly{Int(1), Int(-m.at(0, 0))};  // descending coefficients
    std::vector<Int> items, av, av_next;

    for (int k = 1; k < n; ++k) {
        items.assign(static_cast<std::size_t>(k) + 2, Int(0));
        items[0] = 1;
        items[1] = -m.at(k, k);

        av.assign(static_cast<std::size_t>(k), Int(0));
        for (int i = 0; i < k; ++i) av[i] = m.at(i, k);

        for (int t = 2; t <= k + 1; ++t) {
            Int dot(0);
            for (int j = 0; j < k; ++j) {
                const int e = m.at(k, j);
                if (e == 0) continue;
                if (e == 1)
                    dot += av[j];
                else
                    dot += e * av[j];
            }
            items[t] = -dot;
            if (t == k + 1) break;

            av_next.assign(static_cast<std::size_t>(k), Int(0));
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) {
                    const int e = m.at(i, j);
                    if (e == 0) continue;
                    if (e == 1)
                        av_next[i] += av[j];
                    else
                        av_next[i] += e * av[j];
                }
            }
            std::swap(av, av_next);
        }

        std::vector<Int> next(static_cast<std::size_t>(k) + 2, Int(0));
        for (std::size_t s = 0; s < poly.size(); ++s) {
            if (poly[s] == 0) continue;
            const std::size_t tmax = next.size() - s;
            for (std::size_t t = 0; t < tmax && t < items.size(); ++t) {
                if (items[t] == 0) continue;
                next[s + t] += items[t] * poly[s];
            }
        }
        poly = std::move(next);
    }

    std::vector<Int> ascending(poly.rbegin(), poly.rend());
    return IntPolynomial(std::move(ascending));
}

ClosedFormCoefficients closed_form_coefficients(int n) {
    if (n < 2)
        throw std::invalid_argument("closed_form_coefficients: n must be >= 2, got " +
                                    std::to_string(n));
    ClosedFormCoefficients cf;
    cf.n = n;
    cf.b.reserve(n - 1);
    cf.p.reserve(n - 1);
    cf.s.reserve(n - 1);
    for (int k = 1; k <= n - 1; ++k) {
        const int pk = (n - 1 + k) / 2;
        cf.p.push_back(pk);
        cf.b.push_back(binomial(static_cast<std::uint64_t>(pk),
                                static_cast<std::uint64_t>(k)));
        cf.s.push_back(((k + 1) / 2) % 2 == 0 ? 1 : -1);
    }
    return cf;
}

IntPolynomial closed_form_charpoly(int n) {
    const ClosedFormCoefficients cf = closed_form_coefficients(n);
    std::vector<Int> ascending(static_cast<std::size_t>(n), Int(0));
    ascending[static_cast<std::size_t>(n) - 1] = 1;
    for (int k = 1; k <= n - 1; ++k)
        ascending[static_cast<std::size_t>(n - 1 - k)] = cf.s[k - 1] * cf.b[k - 1];
    return IntPolynomial(std::move(ascending));
}

std::vector<std::vector<Int>> coefficient_triangle(int max_n) {
    if (max_n < 2)
        throw std::invalid_argument("coefficient_triangle: max_n must be >= 2");
    std::vector<std::vector<Int>> rows;
    rows.reserve(max_n - 1);
    for (int n = 2; n <= max_n; ++n) {
        const ClosedFormCoefficients cf = closed_form_coefficients(n);
        std::vector<Int> row;
        row.reserve(static_cast<std::size_t>(n));
        row.push_back(Int(1));
        for (const Int& b : cf.b) row.push_back(b);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string triangle_csv(const std::vector<std::vector<Int>>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i].get_str();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// Exact determinant by rational Gaussian elimination.
Rat det_rational(std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rat inv = Rat(1) / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rat f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace

bool schur_check(int n, const Rat& lambda) {
    if (n < 4) throw std::invalid_argument("schur_check: n must be >= 4");
    if (lambda == 0) throw std::domain_error("schur_check: lambda must be nonzero");

    const IntMatrix m = adjacency_matrix(build_compressed_prime_power(n), true);
    const int order = m.order;  // n - 1
    const int q = order / 2;
    const int r = order - q;

    // Entries (i, j) with i, j <= q satisfy i + j < n, so the top-left
    // q x q block of M is zero and A = M_11 - lambda*I = -lambda*I.
    Rat block_a_det(1);
    for (int i = 0; i < q; ++i) block_a_det *= -lambda;

    // S = (M_22 - lambda*I) - C A^{-1} B = (M_22 - lambda*I) + (1/lambda) C B.
    const Rat inv_lambda = Rat(1) / lambda;
    std::vector<std::vector<Rat>> s(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            long dot = 0;
            for (int k = 0; k < q; ++k) dot += m.at(q + i, k) * m.at(k, q + j);
            Rat v(m.at(q + i, q + j));
            if (i == j) v -= lambda;
            v += inv_lambda * Rat(dot);
            s[i][j] = v;
        }
    }
    const Rat schur_value = block_a_det * det_rational(std::move(s));

    // det(M - lambda*I) = (-1)^order * charpoly(lambda).
    Rat substituted = charpoly_exact(m).eval(lambda);
    if (order % 2 != 0) substituted = -substituted;

    return schur_value == substituted;
}

std::string polynomial_json(const IntPolynomial& p) {
    nlohmann::ordered_json j;
    j["n"] = p.degree() + 1;
    j["degree"] = p.degree();
    auto coeffs = nlohmann::ordered_json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

}  // namespace zdg
