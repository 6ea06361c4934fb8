#include "skein/arith.hpp"

#include <numeric>
#include <stdexcept>

#include "skein/checked.hpp"

namespace skein {

std::string epsilon_name(EpsilonClass e) {
    switch (e) {
        case EpsilonClass::One:
            return "1";
        case EpsilonClass::I:
            return "i";
        case EpsilonClass::MinusOne:
            return "-1";
        case EpsilonClass::MinusI:
            return "-i";
    }
    return "?";
}

RootOrders orders(int n) {
    if (n < 1) throw std::invalid_argument("root order must be positive");
    RootOrders o;
    o.n = n;
    o.n_prime = n / std::gcd(n, 2);
    o.n_big = n / std::gcd(n, 4);
    o.epsilon_exponent = static_cast<int>((static_cast<std::int64_t>(o.n_big) * o.n_big) % n);
    const std::int64_t quarter = 4 * static_cast<std::int64_t>(o.epsilon_exponent);
    if (quarter % n != 0) throw std::logic_error("epsilon is not a fourth root of unity");
    static constexpr EpsilonClass table[] = {EpsilonClass::One, EpsilonClass::I, EpsilonClass::MinusOne,
                                             EpsilonClass::MinusI};
    o.epsilon = table[(quarter / n) % 4];
    return o;
}

IntPoly chebyshev(int k) {
    if (k < 0) throw std::invalid_argument("chebyshev: negative index");
    IntPoly prev{2};
    if (k == 0) return prev;
    IntPoly cur{0, 1};
    for (int i = 2; i <= k; ++i) {
        IntPoly next(cur.size() + 1, 0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] = checked_sub(next[j], prev[j]);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly threading_coeffs(int n) {
    if (n < 1) throw std::invalid_argument("threading_coeffs: N must be positive");
    return chebyshev(n);
}

std::int64_t pi_degree(int g, int m, const RootOrders& xi) {
    if (is_excluded_surface(g, m)) throw std::invalid_argument("excluded surface");
    const int r = 3 * g - 3 + m;
    std::int64_t d = 1;
    for (int i = 0; i < r; ++i) d = checked_mul(d, xi.n_big);
    if (xi.n_prime % 2 == 0)
        for (int i = 0; i < g; ++i) d = checked_mul(d, 2);
    return d;
}

LatticeBasis lambda_hat(const DTDatum& d) {
    const int r = d.curve_count();
    const int nv = d.vertex_count();
    // Vertex-by-curve incidence with multiplicity; parity of each row must vanish.
    IntMatrix inc(nv, r);
    for (int v = 0; v < nv; ++v)
        for (int s = 1; s <= 3; ++s) {
            int c = d.curve_at(v, s);
            if (c >= 0) inc(v, c) += 1;
        }
    IntMatrix nb = congruence_kernel(inc, 2);
    IntMatrix basis(2 * r, 2 * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) basis(i, j) = nb(i, j);
    for (int i = 0; i < r; ++i) basis(r + i, r + i) = 1;
    return LatticeBasis(basis);
}

LatticeBasis kernel_lattice(const LatticeBasis& lattice, const AntisymMatrix& form, std::int64_t modulus) {
    const int n = lattice.ambient_dim();
    if (form.dim() != n) throw std::invalid_argument("kernel_lattice: form dimension differs from lattice");
    if (!lattice.full_rank()) throw std::invalid_argument("kernel_lattice: lattice must be full rank");
    IntMatrix b = lattice.basis();
    IntMatrix q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q(i, j) = form(i, j);
    // Gram matrix of the form on the basis; y is in the kernel iff gram * y = 0 mod modulus.
    IntMatrix gram = b.transpose() * q * b;
    IntMatrix y = congruence_kernel(gram, modulus);
    return LatticeBasis(b * y);
}

LatticeBasis kernel_lattice(const DTDatum& d, std::int64_t modulus) {
    return kernel_lattice(lambda_hat(d), tilde_q(q_matrix(d)), modulus);
}

LatticeBasis even_sublattice(const DTDatum& d) { return kernel_lattice(d, 4); }

bool kostov_generic(const std::vector<std::complex<double>>& w, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("kostov_generic: tolerance must be positive");
    std::vector<std::complex<double>> roots;
    roots.reserve(w.size());
    for (const auto& wi : w) {
        if (std::abs(wi - 2.0) <= tol || std::abs(wi + 2.0) <= tol) return false;
        // z + 1/z = w, so z = (w + sqrt(w^2 - 4)) / 2; the other root is 1/z.
        roots.push_back((wi + std::sqrt(wi * wi - 4.0)) / 2.0);
    }
    const std::size_t m = roots.size();
    if (m >= 8 * sizeof(unsigned long long)) throw std::invalid_argument("kostov_generic: too many values");
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        std::complex<double> p = 1.0;
        for (std::size_t i = 0; i < m; ++i) p *= ((mask >> i) & 1ULL) ? 1.0 / roots[i] : roots[i];
        if (std::abs(p - 1.0) < tol) return false;
    }
    return true;
}

}  // namespace skein
