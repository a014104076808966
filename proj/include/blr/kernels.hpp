#pragma once

#include <optional>
#include <string>
#include <vector>

namespace blr {

/// Flat row-major n x n operation table over element indices 0..n-1.
using OpTable = std::vector<int>;

struct LawViolation {
    std::string law;
    int a = -1, b = -1, c = -1;
    std::string describe() const;
};

// Exhaustive table scans. Each returns the lexicographically first
// violating tuple, so the serial and parallel variants are
// interchangeable bit-for-bit. The serial variants are the reference
// implementations; the parallel ones carry the same contract and are
// compared against them in the test suite and the benchmark.

std::optional<LawViolation> scan_commutativity(int n, const OpTable& t, const std::string& law);

std::optional<LawViolation> scan_associativity_serial(int n, const OpTable& t, const std::string& law);
std::optional<LawViolation> scan_associativity_parallel(int n, const OpTable& t, const std::string& law);

std::optional<LawViolation> scan_distributivity_serial(int n, const OpTable& add, const OpTable& mul);
std::optional<LawViolation> scan_distributivity_parallel(int n, const OpTable& add, const OpTable& mul);

// Dispatchers used by the constructors: parallel when OpenMP is built in
// and the table is large enough to be worth the fork.
std::optional<LawViolation> scan_associativity(int n, const OpTable& t, const std::string& law);
std::optional<LawViolation> scan_distributivity(int n, const OpTable& add, const OpTable& mul);

}  // namespace blr
