#include "dickman/sieve.hpp"
#include "dickman/errors.hpp"
#include "dickman/iterated.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

namespace dickman {

namespace {

constexpr std::uint64_t kSegment = 1ull << 22;

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = true;
    }
    return primes;
}

// floor(x^{1/u}) with a snap to the nearest integer against roundoff at
// exact powers (x = 100, u = 2 must give y = 10, not 9)
std::uint64_t smooth_bound(std::uint64_t x, const XReal& u) {
    XReal v = exp(log(XReal(static_cast<double>(x))) / u);
    XReal nearest = round_nearest(v);
    if (to_double(abs(v - nearest)) < 1e-12 * std::max(1.0, to_double(v)))
        return static_cast<std::uint64_t>(to_double(nearest));
    return static_cast<std::uint64_t>(to_double(floor(v)));
}

void progress(const char* what, std::uint64_t seg, std::uint64_t total) {
    std::fprintf(stderr, "%s: segment %" PRIu64 "/%" PRIu64 "\n", what, seg, total);
}

} // namespace

SieveResult smooth_count(std::uint64_t x, const XReal& u, const SieveLimits& limits) {
    if (x < 2) throw DomainError("smooth_count needs x >= 2");
    if (!(u >= XReal(1.0))) throw DomainError("smooth_count needs u >= 1");
    if (x > limits.max_x)
        throw ResourceLimit("x = " + std::to_string(x) + " exceeds the sieve limit " +
                            std::to_string(limits.max_x));
    std::uint64_t y = smooth_bound(x, u);
    if (y < 2) throw DomainError("y = floor(x^{1/u}) = " + std::to_string(y) + " must be >= 2");

    std::uint64_t sqrt_x = isqrt_u64(x);
    std::uint64_t limit = std::min(y, sqrt_x);
    std::vector<std::uint32_t> primes = primes_up_to(limit);
    const bool residual_prime = y >= sqrt_x; // leftover factor is a single prime

    std::uint64_t count = 0;
    std::vector<std::uint64_t> rem(static_cast<size_t>(std::min<std::uint64_t>(kSegment, x)));
    std::uint64_t segments = (x + kSegment - 1) / kSegment;
    for (std::uint64_t lo = 1, seg = 1; lo <= x; lo += kSegment, ++seg) {
        std::uint64_t hi = std::min(x + 1, lo + kSegment); // [lo, hi)
        std::uint64_t len = hi - lo;
        for (std::uint64_t i = 0; i < len; ++i) rem[i] = lo + i;
        for (std::uint32_t p : primes) {
            std::uint64_t start = ((lo + p - 1) / p) * p;
            for (std::uint64_t m = start; m < hi; m += p) {
                std::uint64_t& r = rem[m - lo];
                while (r % p == 0) r /= p;
            }
        }
        for (std::uint64_t i = 0; i < len; ++i)
            if (rem[i] == 1 || (residual_prime && rem[i] <= y)) ++count;
        progress("smooth_count", seg, segments);
    }

    SieveResult r;
    r.x = x;
    r.y = y;
    r.count = count;
    r.ratio = XReal(static_cast<double>(count)) / XReal(static_cast<double>(x));
    return r;
}

AlmostPrimeResult almost_prime_count(std::uint64_t x, int k, const SieveLimits& limits) {
    if (x < 3) throw DomainError("almost_prime_count needs x >= 3");
    if (k < 1) throw DomainError("almost_prime_count needs k >= 1");
    if (x > limits.max_x)
        throw ResourceLimit("x = " + std::to_string(x) + " exceeds the sieve limit " +
                            std::to_string(limits.max_x));

    std::uint64_t sqrt_x = isqrt_u64(x);
    std::vector<std::uint32_t> primes = primes_up_to(sqrt_x);

    std::uint64_t c_omega = 0, c_Omega = 0;
    size_t width = static_cast<size_t>(std::min<std::uint64_t>(kSegment, x));
    std::vector<std::uint64_t> rem(width);
    std::vector<std::uint8_t> nom(width), nOm(width);
    std::uint64_t segments = (x + kSegment - 1) / kSegment;
    for (std::uint64_t lo = 1, seg = 1; lo <= x; lo += kSegment, ++seg) {
        std::uint64_t hi = std::min(x + 1, lo + kSegment);
        std::uint64_t len = hi - lo;
        for (std::uint64_t i = 0; i < len; ++i) {
            rem[i] = lo + i;
            nom[i] = 0;
            nOm[i] = 0;
        }
        for (std::uint32_t p : primes) {
            std::uint64_t start = ((lo + p - 1) / p) * p;
            for (std::uint64_t m = start; m < hi; m += p) {
                std::uint64_t idx = m - lo;
                std::uint64_t& r = rem[idx];
                ++nom[idx];
                while (r % p == 0) {
                    r /= p;
                    ++nOm[idx];
                }
            }
        }
        for (std::uint64_t i = 0; i < len; ++i) {
            int om = nom[i], Om = nOm[i];
            if (rem[i] > 1) {
                ++om;
                ++Om;
            }
            if (lo + i == 1) om = Om = 0;
            if (om <= k) ++c_omega;
            if (Om <= k) ++c_Omega;
        }
        progress("almost_prime_count", seg, segments);
    }

    AlmostPrimeResult r;
    r.x = x;
    r.k = k;
    r.count_omega = c_omega;
    r.count_Omega = c_Omega;
    XReal lx = log(XReal(static_cast<double>(x)));
    XReal llx = log(lx);
    XReal sum(0.0);
    XReal term(1.0);
    for (int j = 0; j < k; ++j) {
        if (j > 0) term = term * llx / static_cast<double>(j);
        sum += term;
    }
    r.landau_value = XReal(static_cast<double>(x)) / lx * sum;
    return r;
}

XReal ramanujan_sum(const XReal& epsilon, int depth, const PrecisionConfig& cfg) {
    if (depth < 0) throw DomainError("ramanujan_sum needs depth >= 0");
    XReal acc(1.0);
    for (int j = 1; j <= depth; ++j) {
        XReal term = ramanujan_nested(j, epsilon, cfg);
        acc += (j & 1) ? -term : term;
    }
    return acc;
}

RamanujanCheck ramanujan_phi_check(std::uint64_t x, const XReal& epsilon, int depth,
                                   const PrecisionConfig& cfg, const SieveLimits& limits) {
    if (!(epsilon > XReal(0.0)) || epsilon > XReal(1.0))
        throw DomainError("ramanujan_phi_check needs epsilon in (0, 1]");
    RamanujanCheck c;
    c.x = x;
    c.epsilon = epsilon;
    c.depth = depth;
    c.ramanujan_value = ramanujan_sum(epsilon, depth, cfg);
    if (epsilon == XReal(1.0)) {
        c.sieve_ratio = XReal(1.0); // every n <= x is x-smooth
        return c;
    }
    c.sieve_ratio = smooth_count(x, XReal(1.0) / epsilon, limits).ratio;
    return c;
}

void write_sieve_csv(std::ostream& os, const SieveResult& r, const XReal& rho_u) {
    os << "x,y,count,ratio,rho_u,abs_diff\n";
    os << r.x << ',' << r.y << ',' << r.count << ',' << to_string(r.ratio) << ','
       << to_string(rho_u) << ',' << to_string(abs(r.ratio - rho_u)) << '\n';
}

} // namespace dickman
