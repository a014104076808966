#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blr/kernels.hpp"

namespace blr {

class IdealLattice;
struct Ideal;

/// A finite commutative ring presented by explicit addition and
/// multiplication tables over element indices 0..order-1.
///
/// Construction is validating: `from_tables` scans every ring axiom
/// exhaustively (abelian group laws for +, associativity and
/// commutativity of *, distributivity) and throws std::invalid_argument
/// with a witness tuple on the first failure. A constructed value is
/// immutable and safe to share across threads.
///
/// Unity is optional; the constructor locates it by scan and
/// cross-checks any declared value.
class FiniteRing {
public:
    static FiniteRing from_tables(std::string label, int n, OpTable add, OpTable mul,
                                  std::optional<int> declared_unity = std::nullopt);

    int order() const { return n_; }
    int add(int a, int b) const { return add_[size_t(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int zero() const { return zero_; }
    std::optional<int> unity() const { return unity_; }
    bool has_unity() const { return unity_.has_value(); }
    const std::string& label() const { return label_; }

    const OpTable& add_table() const { return add_; }
    const OpTable& mul_table() const { return mul_; }

    /// x^k under multiplication, k >= 1.
    int pow(int x, int k) const;

    bool operator==(const FiniteRing& o) const {
        return n_ == o.n_ && add_ == o.add_ && mul_ == o.mul_;
    }

private:
    FiniteRing() = default;

    std::string label_;
    int n_ = 0;
    OpTable add_, mul_;
    std::vector<int> neg_;
    int zero_ = 0;
    std::optional<int> unity_;
};

/// Z_n with addition and multiplication mod n; unity = 1 for n >= 2.
/// The one-element case is the zero ring (its single element doubles as
/// unity). n = 0 is rejected.
FiniteRing make_cyclic(int n);

/// Commutative algebra over Z_p on the free module of rank `dim`,
/// given structure constants c[i][j] = the coefficient vector of
/// basis_i * basis_j. Commutativity and associativity of the induced
/// product are checked exhaustively; violations are rejected with a
/// witness triple. Element index = sum coeff_k * p^k.
FiniteRing make_structure_algebra(int p, int dim,
                                  const std::vector<std::vector<std::vector<int>>>& c,
                                  std::string label = "");

/// F_p[x,y]/(x,y)^2: basis {1, x, y} with x^2 = xy = y^2 = 0.
FiniteRing nil2(int p);

/// F_p[x]/(x^2): basis {1, x} with x^2 = 0.
FiniteRing dual_numbers(int p);

/// Componentwise product; unity present iff both factors have one.
/// Element (i, j) has index i*|S| + j. Rejects results over the order cap.
FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s);

struct QuotientResult {
    FiniteRing ring;
    std::vector<int> projection;  ///< element index of parent -> coset index
};

/// Quotient of R by a verified ideal; the projection is the surjective
/// hom onto additive cosets (canonical representative = least element
/// index). Rejects subsets that fail the ideal closure test.
QuotientResult quotient_ring(const FiniteRing& r, const Ideal& ideal);

/// Checks that `map` preserves add, mul and zero. `require_unital`
/// additionally demands both unities exist and correspond.
bool is_ring_hom(const FiniteRing& src, const FiniteRing& dst, std::span<const int> map,
                 bool require_unital = false);

struct RingFlags {
    bool has_unity = false;
    bool is_reduced = false;                   ///< x^2 = 0 implies x = 0
    bool is_vnr = false;                       ///< for all a exists x: a = a*x*a
    bool is_local = false;                     ///< exactly one maximal ideal
    bool is_generated_by_idempotents = false;  ///< for all x exists e = e^2 with xe = x
    std::vector<int> idempotents;              ///< all e with e^2 = e
};

/// Element-level predicates; is_local needs the ideal lattice and is
/// computed from the supplied one (or an internal enumeration).
RingFlags ring_flags(const FiniteRing& r);
RingFlags ring_flags(const FiniteRing& r, const IdealLattice& lattice);

}  // namespace blr
