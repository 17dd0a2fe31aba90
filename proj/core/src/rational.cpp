#include "rigidlab/rational.hpp"

#include <cmath>

#include "rigidlab/errors.hpp"

namespace rigidlab {

Q q_parse(const std::string& text) {
    if (text.empty()) throw UsageError("empty rational literal");
    mpq_class v;
    // mpq_class accepts "a" and "a/b"; reject junk by validating set result.
    if (v.set_str(text, 10) != 0) {
        throw UsageError("malformed rational literal: '" + text + "'");
    }
    if (v.get_den() == 0) {
        throw UsageError("zero denominator in rational literal: '" + text + "'");
    }
    v.canonicalize();
    return v;
}

std::string q_to_string(const Q& v) {
    return v.get_str();
}

Q q_abs(const Q& v) {
    return v < 0 ? Q(-v) : v;
}

Q q_floor(const Q& v) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return Q(f);
}

Q q_pow(const Q& v, unsigned long e) {
    Q r(1);
    Q base = v;
    unsigned long n = e;
    while (n > 0) {
        if (n & 1UL) r *= base;
        base *= base;
        n >>= 1UL;
    }
    return r;
}

double q_to_double(const Q& v) {
    return v.get_d();
}

bool is_integer(const Q& v) {
    return v.get_den() == 1;
}

long perfect_sqrt(long n, bool& exact) {
    if (n < 0) {
        exact = false;
        return -1;
    }
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    exact = (r * r == n);
    return r;
}

int compare(const VecQ& a, const VecQ& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

}  // namespace rigidlab
