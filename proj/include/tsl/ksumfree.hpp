#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsl/circle_set.hpp"
#include "tsl/rational.hpp"
#include "tsl/zp_set.hpp"

namespace tsl {

// a set is k-sum-free when no x, y, z in it solve x + y = k z.  The witness,
// when present, satisfies the equation exactly and lies in the tested set;
// it may be absent on a circle set even when is_ksf is false (the emptiness
// test is always exact, the point picker is best-effort).
struct KsfReport {
    long k = 0;
    bool is_ksf = false;
    std::optional<std::array<Rational, 3>> witness;  // (x, y, z), x + y = kz mod 1
};

struct KsfReportZp {
    long k = 0;
    bool is_ksf = false;
    std::optional<std::array<long, 3>> witness;  // (x, y, z), x + y = kz mod p
};

// emptiness of S ∩ k^{-1}(S+S), cross-checked against (S+S) ∩ k·S; k >= 1
KsfReport is_k_sum_free_T(const SimpleSet& s, long k);

// exact measure of I ∩ k^{-1}(I+I); zero iff the interval is k-sum-free up to
// a null set
Rational ksf_defect(const CircleInterval& iv, long k);

// relative defect delta = defect / mu(I) and the interval-size consequence
// mu(I) <= (1 + k*delta/2) / (k+2); requires mu(I) > 0 and delta < 1
struct IntEstim {
    Rational delta;
    Rational bound;
    bool satisfied;
};
IntEstim check_int_estim(const CircleInterval& iv, long k);

// [2/(k^2-4), k/(k^2-4)), measure 1/(k+2); the construction self-checks the
// exact identity (I+I)^c = k·I before returning; k >= 3
CircleInterval extremal_interval(long k);

// max(1/(3+eps), (1+k*eps)/(k+2)); eps outside [0, 1/10000] still evaluates
// but tags *warning when given; k >= 3
Rational dk_upper_bound(long k, const Rational& eps, std::string* warning = nullptr);

// emptiness of (A+A) ∩ k·A over Z_p; k is reduced mod p and k ≡ 0 is
// rejected; on failure the witness is the first (z, x) in element order
KsfReportZp is_k_sum_free_zp(const ZpSet& a, long k);

// exact maximum k-sum-free size in Z_p with every maximum witness (the
// search runs on sets containing 1 and expands dilation orbits afterwards,
// since x + y = kz is dilation- but not translation-invariant); witnesses
// are sorted by their bitmask value; k >= 3, k not 0 mod p
struct MaxKsf {
    long size = 0;
    std::vector<ZpSet> witnesses;
    long long nodes_expanded = 0;
};
MaxKsf max_ksf_zp(long p, long k, long limit = 31);
// reference scan over all 2^p subsets, no pruning beyond the definition
MaxKsf max_ksf_zp_naive(long p, long k, long limit = 19);

// dichotomy for a k-sum-free S: either mu(S+S) >= (2+eps) mu(S), certified by
// the exact chain 3 mu(S) <= mu(S+S) + mu(k·S) <= 1 (so mu(S) <= 1/(3+eps)),
// or some dilate n·S with n <= ceil(2m / mu(S)) fits in a covering interval
// of measure at most mu(S+S) - mu(S), reported with the interval's defect
struct KsfBound {
    Rational mu;
    Rational mu_sumset;
    Rational mu_dilate;
    Rational cap;  // 1/(3+eps)
};
struct KsfStructure {
    long n = 0;
    CircleInterval interval;
    Rational interval_measure;
    Rational defect;
};
using StructureOrBound = std::variant<KsfBound, KsfStructure>;
StructureOrBound structure_or_bound(const SimpleSet& s, long k, const Rational& eps);

}  // namespace tsl
