#pragma once

#include <span>
#include <vector>

#include "blr/ring.hpp"

namespace blr {

/// An ideal of a finite commutative ring: contains zero, closed under
/// addition, negation and multiplication by every ring element.
/// Identity is by membership; `generators` is a non-canonical witness
/// and excluded from equality. The parent ring must outlive the ideal.
struct Ideal {
    const FiniteRing* ring = nullptr;
    std::vector<bool> mask;       ///< membership over element indices
    std::vector<int> elements;    ///< sorted member list
    std::vector<int> generators;  ///< witness subset

    int size() const { return int(elements.size()); }
    bool contains(int x) const { return mask[x]; }

    bool operator==(const Ideal& o) const { return ring == o.ring && mask == o.mask; }
};

/// Least ideal containing S: worklist closure under addition, negation
/// and multiplication by arbitrary ring elements.
Ideal ideal_generated(const FiniteRing& r, std::span<const int> gens);

Ideal zero_ideal(const FiniteRing& r);
Ideal full_ideal(const FiniteRing& r);

/// Closure test used by construction audits and quotient_ring.
bool is_ideal_set(const FiniteRing& r, const std::vector<bool>& mask);

// Residuated operations on ideals of a common parent (mixed parents are
// rejected). The product re-closes the set of pairwise products under
// addition; the residuum I -> J = {x : x*I subseteq J} is computed
// elementwise and re-verified to be an ideal.
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal residuum(const Ideal& a, const Ideal& b);
Ideal annihilator(const Ideal& a);  ///< residuum(a, 0)

/// Greedy deterministic generating set (ascending element order);
/// used for readable quotient labels.
std::vector<int> minimal_generators(const Ideal& a);

}  // namespace blr
