#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "skein/lattice.hpp"
#include "skein/ring.hpp"
#include "skein/surface.hpp"

namespace skein {

enum class EpsilonClass { One, I, MinusOne, MinusI };

std::string epsilon_name(EpsilonClass e);

// Orders attached to xi = exp(2 pi i / n): ord(xi), ord(xi^2), ord(xi^4), and eps = xi^{N^2}.
struct RootOrders {
    int n = 1;        // N''
    int n_prime = 1;  // N'
    int n_big = 1;    // N
    int epsilon_exponent = 0;
    EpsilonClass epsilon = EpsilonClass::One;
};

RootOrders orders(int n);

IntPoly chebyshev(int k);
IntPoly threading_coeffs(int n);

std::int64_t pi_degree(int g, int m, const RootOrders& xi);

// Z-span of the coordinate monoid: parity-constrained n-block times free t-block.
LatticeBasis lambda_hat(const DTDatum& d);
// {k in lattice : <k, lattice>_{tilde Q} in modulus Z}.
LatticeBasis kernel_lattice(const DTDatum& d, std::int64_t modulus);
LatticeBasis kernel_lattice(const LatticeBasis& lattice, const AntisymMatrix& form, std::int64_t modulus);
// {k in lambda_hat : <k, lambda_hat> in 4Z}.
LatticeBasis even_sublattice(const DTDatum& d);

bool kostov_generic(const std::vector<std::complex<double>>& w, double tol);

}  // namespace skein
