#ifndef KEMPE_VERIFY_HPP
#define KEMPE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kempe/constructions.hpp"
#include "kempe/partitioned.hpp"
#include "kempe/reconfig.hpp"

namespace kempe {

/// Aggregated result of checking one claim over many instances.
/// Invariant: passed + failures.size() + skipped.size() == tried.
struct VerificationOutcome {
    std::string claim;
    long long tried = 0;
    long long passed = 0;
    struct Failure {
        std::string instance_json; // GraphDocument, sufficient to reproduce
        std::string detail;
    };
    struct Skip {
        std::string instance_json; // may be empty when no instance applies
        std::string reason;
    };
    std::vector<Failure> failures;
    std::vector<Skip> skipped;
};

// Conjecture hypotheses: k >= 4, ell < C(k,2), chi(G) <= k-1.
bool check_conjecture_hypotheses(const PartitionedGraph& pg, int k);

enum class Claim {
    bm5,        // B+M_l, k >= 4, l < C(k,2)           => Kc(G,k) = 1
    c3e5,       // 3-colorable B+E_l, l <= 5            => Kc(G,4) = 1
    main_thm,   // (k-1)-colorable, shaped components   => Kc(G,k) = 1
    fourcri,    // Kc(G**,4) = 1 for connected G
    bipar,      // bipartite, k >= 2                    => Kc(G,k) = 1
    dege,       // d-degenerate, k > d                  => Kc(G,k) = 1
    fiveedges,  // 3-chromatic, |E| <= 5                => Kc(H,3) = 1
    prop3,      // existence: l = C(k,2),   Kc >= 2
    prop4i,     // existence: l = C(k,2),   Kc >= 2, (k-1)-colorable
    prop4ii,    // existence: l = C(k,2)-1, Kc >= 2, k-chromatic
};

Claim parse_claim(const std::string& name); // throws input_error
std::string claim_name(Claim claim);
bool claim_is_proved_theorem(Claim claim); // a failure means an implementation bug
bool claim_is_randomized(Claim claim);     // requires a seed

struct VerifyParams {
    int k = 0;                 // 0 = claim default
    long long trials = 50;
    uint64_t seed = 0;
    int max_n = 10;
    long long cap = kDefaultStateCap;
    std::optional<AddedShape> shape; // main_thm only; default rotates shapes
    bool extended = false;           // fourcri: include the K_4 base
};

// Desk-scale verification of one claim: sample/enumerate instances
// satisfying its hypotheses and check the claimed Kc exactly.
VerificationOutcome verify_theorem(Claim claim, const VerifyParams& params);

struct ConjectureSearchParams {
    int k = 4;
    int n_s_max = 5, n_t_max = 5;
    long long trials = 200;
    uint64_t seed = 0;
    long long cap = kDefaultStateCap;
};

enum class InstanceVerdict { holds, counterexample, out_of_hypothesis, capacity };

// One conjecture trial on a concrete instance (also the injection point for
// externally supplied instances).
InstanceVerdict evaluate_conjecture_instance(const PartitionedGraph& pg, int k,
                                             long long cap = kDefaultStateCap);

// Random search for a counterexample to the main conjecture: instances
// passing check_conjecture_hypotheses with Kc(G,k) >= 2 are recorded as
// failures (a finding, not a bug).
VerificationOutcome conjecture_search(const ConjectureSearchParams& params);

} // namespace kempe

#endif
