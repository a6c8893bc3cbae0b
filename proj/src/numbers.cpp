#include "patsym/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace patsym {

Int binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: the partial product is always divisible
    }
    return result;
}

Int factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace patsym
