#include "blr/kernels.hpp"
#include "blr/config.hpp"

#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blr {

namespace {

Limits g_limits;
int g_threads = 0;  // 0 = hardware default

constexpr long long kNone = std::numeric_limits<long long>::max();

LawViolation decode(const std::string& law, long long code, int n) {
    LawViolation v;
    v.law = law;
    v.c = int(code % n);
    code /= n;
    v.b = int(code % n);
    v.a = int(code / n);
    return v;
}

}  // namespace

Limits& limits() { return g_limits; }

void set_num_threads(int n) {
    g_threads = n < 0 ? 0 : n;
#ifdef _OPENMP
    if (g_threads > 0)
        omp_set_num_threads(g_threads);
    else
        omp_set_num_threads(omp_get_num_procs());
#endif
}

int num_threads() {
#ifdef _OPENMP
    return g_threads > 0 ? g_threads : omp_get_num_procs();
#else
    return 1;
#endif
}

std::string LawViolation::describe() const {
    std::ostringstream os;
    os << law << " fails at (" << a << ", " << b << ", " << c << ")";
    return os.str();
}

std::optional<LawViolation> scan_commutativity(int n, const OpTable& t, const std::string& law) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t[size_t(a) * n + b] != t[size_t(b) * n + a])
                return LawViolation{law, a, b, -1};
    return std::nullopt;
}

std::optional<LawViolation> scan_associativity_serial(int n, const OpTable& t, const std::string& law) {
    const size_t N = size_t(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = t[size_t(a) * N + b];
            for (int c = 0; c < n; ++c)
                if (t[size_t(ab) * N + c] != t[size_t(a) * N + t[size_t(b) * N + c]])
                    return decode(law, (long long(a) * n + b) * n + c, n);
        }
    return std::nullopt;
}

std::optional<LawViolation> scan_associativity_parallel(int n, const OpTable& t, const std::string& law) {
    const long long total = (long long)n * n * n;
    const int* p = t.data();
    long long best = kNone;
#ifdef _OPENMP
#pragma omp parallel for reduction(min : best) schedule(static)
#endif
    for (long long idx = 0; idx < total; ++idx) {
        const int c = int(idx % n);
        const long long r = idx / n;
        const int b = int(r % n);
        const int a = int(r / n);
        if (p[size_t(p[size_t(a) * n + b]) * n + c] != p[size_t(a) * n + p[size_t(b) * n + c]])
            if (idx < best) best = idx;
    }
    if (best == kNone) return std::nullopt;
    return decode(law, best, n);
}

std::optional<LawViolation> scan_distributivity_serial(int n, const OpTable& add, const OpTable& mul) {
    const size_t N = size_t(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = mul[size_t(a) * N + b];
            for (int c = 0; c < n; ++c) {
                const int lhs = mul[size_t(a) * N + add[size_t(b) * N + c]];
                const int rhs = add[size_t(ab) * N + mul[size_t(a) * N + c]];
                if (lhs != rhs)
                    return decode("distributivity", (long long(a) * n + b) * n + c, n);
            }
        }
    return std::nullopt;
}

std::optional<LawViolation> scan_distributivity_parallel(int n, const OpTable& add, const OpTable& mul) {
    const long long total = (long long)n * n * n;
    const int* pa = add.data();
    const int* pm = mul.data();
    long long best = kNone;
#ifdef _OPENMP
#pragma omp parallel for reduction(min : best) schedule(static)
#endif
    for (long long idx = 0; idx < total; ++idx) {
        const int c = int(idx % n);
        const long long r = idx / n;
        const int b = int(r % n);
        const int a = int(r / n);
        const int lhs = pm[size_t(a) * n + pa[size_t(b) * n + c]];
        const int rhs = pa[size_t(pm[size_t(a) * n + b]) * n + pm[size_t(a) * n + c]];
        if (lhs != rhs)
            if (idx < best) best = idx;
    }
    if (best == kNone) return std::nullopt;
    return decode("distributivity", best, n);
}

namespace {
// Forking threads for a ring of order < 64 costs more than the scan.
constexpr int kParallelCutoff = 64;
}

std::optional<LawViolation> scan_associativity(int n, const OpTable& t, const std::string& law) {
    if (n >= kParallelCutoff) return scan_associativity_parallel(n, t, law);
    return scan_associativity_serial(n, t, law);
}

std::optional<LawViolation> scan_distributivity(int n, const OpTable& add, const OpTable& mul) {
    if (n >= kParallelCutoff) return scan_distributivity_parallel(n, add, mul);
    return scan_distributivity_serial(n, add, mul);
}

}  // namespace blr
