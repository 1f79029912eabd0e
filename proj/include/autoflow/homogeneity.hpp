#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoflow/autonomous.hpp"

namespace autoflow {

/// Solution (a, b) of a^{k-1} = 1, b^{k-1} = a, generating the sequence
/// h_n = a^{1-n} b^n (so h_0 = a, h_1 = b). For k = 1 the pair is (1, b).
struct HomogeneityPair {
    int k = 1;
    Value a, b;
};

/// h_n = a^{1-n} b^n; negative exponents go through the unit inverse.
Value pair_sequence_term(const Ring &ring, const HomogeneityPair &p, long n);

/// All unit pairs solving the two defining equations. For rings with a free
/// unit part only torsion units can solve them; the C-mode ring (all roots
/// of unity) yields the (k-1)^2 solutions b in mu_{(k-1)^2}, a = b^{k-1}.
/// Deterministic order: by exact angle of a, then of b.
std::vector<HomogeneityPair> solve_hk(const Ring &ring, int k);

struct H1Description {
    bool finite = true;
    std::vector<Value> units; // the h_1 values; for free rank 1 a bounded slice
    std::string symbolic;
};

H1Description h1_describe(const Ring &ring, int bound_m = 2);

struct AbelianGroupStructure {
    BigInt order;
    std::vector<BigInt> invariant_factors; // d_1 | d_2 | ... ascending
    BigInt exponent;
};

/// Structure of the actual finite group the pairs form under the
/// componentwise product; NotClosed when the set is not a group.
AbelianGroupStructure group_structure(const Ring &ring,
                                      const std::vector<HomogeneityPair> &pairs);

/// A(h x)_m = (h_{m-1})^k A(x)_m for m = 1..depth, both sides through the
/// pointwise operator. (Output term m pairs with sequence index m-1.)
bool check_action(const Ring &ring, const HomogeneityPair &p,
                  const CoefficientSequence &x, int depth);

/// h^{(k-1)^2} = e componentwise, and (a^{n-1} b^{-n}) is the inverse.
bool exponent_check(const Ring &ring, const HomogeneityPair &p, int depth = 8);

/// What the source tables assert for this ring and k, when they say
/// anything: the pair list (rendered) and/or an isomorphism type.
struct PaperClaim {
    bool pairs_known = false;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string structure;
};

std::optional<PaperClaim> paper_claim(const Ring &ring, int k);

/// "Z4", "Z2xZ2", ..., or "trivial" for the one-element group.
std::string structure_name(const AbelianGroupStructure &s);

/// Exact angle q in [0,1) with u = e^{2 pi i q}; defined for torsion units.
BigRat unit_angle(const Ring &ring, const Value &u);

} // namespace autoflow
