#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppart/partitions.hpp"
#include "ppart/polynomial.hpp"
#include "ppart/poset.hpp"
#include "ppart/restriction.hpp"

namespace ppart {

// Deterministic generator (splitmix64); identical sequences on every
// platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    int below(int n);           // uniform in [0, n)
    int range(int lo, int hi);  // uniform in [lo, hi]

private:
    std::uint64_t state_;
};

struct VerifyResult {
    bool ok = true;
    long long cases = 0;
    long long violations = 0;
    std::string detail; // counter lines, plus a witness per violation
};

// Every partial order on 1..p (as transitive relation matrices).
std::vector<Poset> all_posets(int p);

// Random order (transitive closure of random relations oriented along a
// random permutation, so always acyclic).
Poset random_poset(Rng& rng, int p);

// Random flag on P: constant per ascending component, weakly increasing
// along the component order.
Restriction random_flag(Rng& rng, const Poset& P);

// Reference enumeration straight from the definition: backtracking with the
// raw bounds, no tightening. Independent of enumerate_partitions.
std::vector<PPartition> enumerate_partitions_naive(const Poset& P, const Restriction& rho);
IntPolynomial generating_polynomial_naive(const Poset& P, const Restriction& rho);

bool is_symmetric(const IntPolynomial& poly);

// Named property suites; also reachable through the CLI.
VerifyResult verify_fundamental(int size, std::uint64_t seed);
VerifyResult verify_positivity(int size, int trials, std::uint64_t seed);
VerifyResult verify_product(int size);
VerifyResult verify_schur(int size);
VerifyResult verify_lemmas(int size, std::uint64_t seed);

VerifyResult run_suite(const std::string& name, int size, std::uint64_t seed);

} // namespace ppart
