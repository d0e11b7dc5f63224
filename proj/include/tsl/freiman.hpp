#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "tsl/zp_set.hpp"

namespace tsl {

// least representative (smallest value as a bitmask integer) of the orbit of
// A under the affine maps x -> a*x + b, a in Z_p^*, b in Z_p; needs p <= 63
ZpSet affine_canonical(const ZpSet& a);

// smallest n in 1..max(1,(p-1)/2) whose dilate n*A fits in a cyclic interval
// of at most |A| + r residues, together with that covering interval; n and -n
// give equal covering lengths, so the half range decides existence
std::optional<std::pair<long, ZpCover>> check_sz_conclusion(const ZpSet& a, long r);

struct ScanOptions {
    long exhaustive_limit = 0;   // 0: env TSL_EXHAUSTIVE_LIMIT, else per-scan default
    long long budget = 0;        // 0: exhaustive; > 0: number of random instances
    std::uint64_t seed = 0;      // sampled mode only
    int jobs = 1;                // worker threads; output is jobs-independent
};

struct Certificate {
    std::string conjecture;      // "sz" | "pair" | "trio"
    long p = 0;
    std::string mode;            // "exhaustive" | "sampled"
    std::uint64_t seed = 0;      // sampled mode only
    long long budget = 0;        // sampled mode only
    long long orbits_scanned = 0;    // scan units: affine orbits (sz) or instances
    long long instance_total = 0;    // orbit-weighted number of instances covered
    long long admissible = 0;        // instances satisfying every hypothesis
    long long failure_count = 0;     // admissible instances with failing conclusion
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();        // <= 10 listed
    nlohmann::ordered_json witness_sample = nlohmann::ordered_json::array();  // <= 5 listed
    std::string scope_note;
    std::string verdict;         // verified | verified_sampled | counterexample | budget_exhausted

    long long wall_ms = 0;       // excluded from canonical_json

    nlohmann::ordered_json canonical_json() const;  // deterministic, byte-stable
    nlohmann::ordered_json full_json() const;       // canonical + wall_ms
};

// Scan hypotheses, with sizes written m = |A| (or per-set) and r the doubling
// excess. Admissible instance <=> every listed condition holds exactly:
//   sz   : r = |A+A| - 2|A| + 1,  2|A+A| <= p + 2|A| - 4,  r <= |A| - 3;
//          conclusion: some n != 0 with cover(n*A) <= |A| + r.
//   pair : |A| >= |B| >= 1, r = |A+B| - |A| - |B| + 1,
//          2|A+B| <= p + |A| + |B| - 4,  r <= |B| - 3; conclusion: one n with
//          cover(n*A) <= |A|+r, cover(n*B) <= |B|+r, and n*(A+B) containing a
//          run of at least |A| + |B| - 1 consecutive residues.
//   trio : at r = max(0, p - |A1| - |A2| - |A3| + 1): each |Aj| > r + 2 and
//          |A1+A2+A3| < p; conclusion: one n with cover(n*Aj) <= |Aj| + r for
//          all j. (Larger admissible r only weaken the conclusion, so the
//          minimal r decides every admissible r at once.)
// Exhaustive mode enumerates all subsets (sz: one orbit representative per
// affine class, instance counts orbit-weighted), all ordered pairs, or all
// ordered triples. Sampled mode draws uniform random subsets.
Certificate verify_conjecture_sz(long p, const ScanOptions& opts = {});
Certificate verify_conjecture_pair(long p, const ScanOptions& opts = {});
Certificate verify_conjecture_trio(long p, const ScanOptions& opts = {});

// re-derive every failure and witness entry of a certificate from the listed
// sets alone and check them against the recorded counts and verdict
bool recheck_certificate(const nlohmann::ordered_json& cert);

}  // namespace tsl
