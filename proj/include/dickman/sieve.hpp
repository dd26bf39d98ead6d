#pragma once

#include "dickman/quadrature.hpp"
#include "dickman/xreal.hpp"

#include <cstdint>
#include <iosfwd>

namespace dickman {

struct SieveLimits {
    std::uint64_t max_x = 1000000000; // overridable via DICKMAN_MAX_X in the CLI
};

struct SieveResult {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t count = 0; // Psi(x, y) = #{n <= x : largest prime factor <= y}
    XReal ratio;             // count / x
};

// Exact Psi(x, floor(x^{1/u})) by a segmented factoring sieve (segments of
// 2^22 integers, prime powers divided out per segment). Deterministic;
// progress goes to stderr at segment granularity. Throws ResourceLimit when
// x exceeds limits.max_x and DomainError when y = floor(x^{1/u}) < 2.
SieveResult smooth_count(std::uint64_t x, const XReal& u, const SieveLimits& limits = {});

struct AlmostPrimeResult {
    std::uint64_t x = 0;
    int k = 0;
    std::uint64_t count_omega = 0; // #{n <= x : omega(n) <= k}, distinct primes
    std::uint64_t count_Omega = 0; // #{n <= x : Omega(n) <= k}, with multiplicity
    XReal landau_value;            // (x/log x) sum_{j<k} (log log x)^j / j!
};

// Exact almost-prime counts under both conventions (n = 1 carries
// omega = Omega = 0) plus the Landau comparison value.
AlmostPrimeResult almost_prime_count(std::uint64_t x, int k, const SieveLimits& limits = {});

// 1 + sum_{j=1}^{depth} (-1)^j ramanujan_nested(j, epsilon)
XReal ramanujan_sum(const XReal& epsilon, int depth, const PrecisionConfig& cfg);

struct RamanujanCheck {
    std::uint64_t x = 0;
    XReal epsilon;
    int depth = 0;
    XReal sieve_ratio;
    XReal ramanujan_value;
};

// Compares the sieve density Psi(x, x^epsilon)/x with Ramanujan's truncated
// alternating series at the same epsilon.
RamanujanCheck ramanujan_phi_check(std::uint64_t x, const XReal& epsilon, int depth,
                                   const PrecisionConfig& cfg, const SieveLimits& limits = {});

// CSV row "x,y,count,ratio,rho_u,abs_diff" against a caller-supplied rho(u).
void write_sieve_csv(std::ostream& os, const SieveResult& r, const XReal& rho_u);

} // namespace dickman
