#include "pellwall/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace pellwall {

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) throw std::invalid_argument("is_perfect_square: negative argument");
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_perfect_square(const Integer& n, Integer& root) {
    if (!is_perfect_square(n)) return false;
    root = isqrt(n);
    return true;
}

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Pollard rho (Brent cycle finding). n must be odd, composite, > 1.
Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0xb5297a4d);  // fixed seed, deterministic runs
    while (true) {
        Integer x = rng.get_z_range(n - 2) + 1;
        Integer c = rng.get_z_range(n - 1) + 1;
        Integer y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor, retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Integer n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<Integer> factor(Integer n) {
    if (n < 1) throw std::invalid_argument("factor: argument must be >= 1");
    std::vector<Integer> out;
    for (long p : {2L, 3L, 5L}) {
        while (n % p == 0) {
            out.emplace_back(p);
            n /= p;
        }
    }
    // wheel over 6k+-1 up to 10^6
    for (long p = 7; p <= 1000000 && Integer(p) * p <= n; p += 6) {
        for (long q : {p, p + 4}) {
            while (n % q == 0) {
                out.emplace_back(q);
                n /= q;
            }
        }
    }
    if (n > 1) {
        if (is_probable_prime(n)) {
            out.push_back(n);
        } else {
            factor_into(n, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> fs = factor(n);
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    return fs;
}

}  // namespace pellwall
