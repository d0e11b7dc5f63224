#include "tsl/ksumfree.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mask_bits.hpp"

namespace tsl {
namespace {

using detail::Mask;
using detail::mask_dilate;
using detail::mask_sum;
using detail::mask_translate;

ZpSet set_of(long p, Mask m) { return ZpSet::from_words(p, {m}); }

bool mask_ksf(long p, long kr, Mask m) {
    return (mask_sum(m, m, p) & mask_dilate(m, kr, p)) == 0;
}

long validate_ksf_search(const char* fn, long p, long k, long limit) {
    ZpSet::of(p, {});  // validates that p is prime
    if (p > limit)
        throw std::invalid_argument(std::string(fn) + ": p exceeds the limit " +
                                    std::to_string(limit));
    if (k < 3) throw std::invalid_argument(std::string(fn) + ": k must be at least 3");
    const long kr = k % p;
    if (kr == 0)
        throw std::invalid_argument(std::string(fn) +
                                    ": k ≡ 0 mod p degenerates the equation");
    return kr;
}

// depth-first search over sets containing 1, candidates in a fixed static
// order; `sums` and `dils` carry A+A and k·A incrementally, so feasibility of
// adding v is two mask operations
struct KsfSearch {
    long p = 0;
    long kr = 0;
    std::vector<long> order;
    long best = 0;
    std::vector<Mask> wits;
    long long nodes = 0;

    void dfs(Mask cur, long size, Mask sums, Mask dils, std::size_t idx) {
        ++nodes;
        if (size > best) {
            best = size;
            wits.clear();
        }
        if (size == best) wits.push_back(cur);
        for (std::size_t i = idx; i < order.size(); ++i) {
            if (size + static_cast<long>(order.size() - i) < best) break;
            const long v = order[i];
            const Mask vb = 1ull << v;
            const Mask new_sums = mask_translate(cur | vb, v, p);
            const Mask new_dils = 1ull << ((kr * v) % p);
            if (((sums | new_sums) & (dils | new_dils)) != 0) continue;
            dfs(cur | vb, size + 1, sums | new_sums, dils | new_dils, i + 1);
        }
    }
};

MaxKsf finish_witnesses(long p, long best, const std::vector<Mask>& base,
                        long long nodes) {
    MaxKsf out;
    out.size = best;
    out.nodes_expanded = nodes;
    std::set<Mask> all;
    for (Mask w : base)
        for (long d = 1; d < p; ++d) all.insert(mask_dilate(w, d, p));
    for (Mask m : all) out.witnesses.push_back(set_of(p, m));
    if (out.size > (p + 1) / 3)
        throw std::logic_error("k-sum-free counting bound violated");
    return out;
}

}  // namespace

KsfReport is_k_sum_free_T(const SimpleSet& s, long k) {
    if (k < 1) throw std::invalid_argument("is_k_sum_free_T: k must be positive");
    KsfReport rep;
    rep.k = k;
    if (s.empty()) {
        rep.is_ksf = true;
        return rep;
    }
    const SimpleSet ss = sumset(s, s);
    const SimpleSet e1 = intersect(s, preimage_divide(ss, k));
    const SimpleSet e2 = intersect(ss, dilate(s, k));
    if (e1.empty() != e2.empty())
        throw std::logic_error("is_k_sum_free_T: emptiness cross-check mismatch");
    rep.is_ksf = e1.empty();
    if (rep.is_ksf) return rep;
    if (s.contains(Rational(0))) {
        rep.witness = std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)};
        return rep;
    }
    const Rational z = pick_point(e1);
    const Rational target = (Rational(k) * z).mod1();
    const SimpleSet xs = intersect(s, translate(negate(s), target));
    if (!xs.empty()) {
        const Rational x = pick_point(xs);
        const Rational y = (target - x).mod1();
        if (s.contains(x) && s.contains(y) && s.contains(z) &&
            (x + y - Rational(k) * z).mod1() == Rational(0))
            rep.witness = std::array<Rational, 3>{x, y, z};
    }
    return rep;
}

Rational ksf_defect(const CircleInterval& iv, long k) {
    if (k < 1) throw std::invalid_argument("ksf_defect: k must be positive");
    if (iv.is_empty()) throw std::invalid_argument("ksf_defect: empty interval");
    const SimpleSet s = SimpleSet::interval(iv);
    return intersect(s, preimage_divide(sumset(s, s), k)).measure();
}

IntEstim check_int_estim(const CircleInterval& iv, long k) {
    const Rational mu = SimpleSet::interval(iv).measure();
    if (!(mu > Rational(0)))
        throw std::invalid_argument("check_int_estim: interval measure must be positive");
    const Rational delta = ksf_defect(iv, k) / mu;
    if (delta >= Rational(1))
        throw std::invalid_argument(
            "check_int_estim: relative defect is 1, outside the hypothesis delta < 1");
    IntEstim out;
    out.delta = delta;
    out.bound = (Rational(1) + Rational(k) * delta / Rational(2)) / Rational(k + 2);
    out.satisfied = mu <= out.bound;
    return out;
}

CircleInterval extremal_interval(long k) {
    if (k < 3) throw std::invalid_argument("extremal_interval: k must be at least 3");
    const long den = k * k - 4;
    const CircleInterval iv(rat(2, den), rat(k - 2, den), true, false);
    const SimpleSet s = SimpleSet::interval(iv);
    if (complement(sumset(s, s)) != dilate(s, k))
        throw std::logic_error("extremal_interval: (I+I)^c = k·I self-check failed");
    return iv;
}

Rational dk_upper_bound(long k, const Rational& eps, std::string* warning) {
    if (k < 3) throw std::invalid_argument("dk_upper_bound: k must be at least 3");
    if ((eps < Rational(0) || eps > rat(1, 10000)) && warning != nullptr)
        *warning = "eps outside [0, 1/10000]; the bound's guarantee window is exceeded";
    const Rational left = Rational(1) / (Rational(3) + eps);
    const Rational right = (Rational(1) + Rational(k) * eps) / Rational(k + 2);
    return std::max(left, right);
}

KsfReportZp is_k_sum_free_zp(const ZpSet& a, long k) {
    if (k < 1) throw std::invalid_argument("is_k_sum_free_zp: k must be positive");
    const long p = a.modulus();
    const long kr = k % p;
    if (kr == 0)
        throw std::invalid_argument(
            "is_k_sum_free_zp: k ≡ 0 mod p degenerates the equation");
    KsfReportZp rep;
    rep.k = k;
    if (a.size() == 0) {
        rep.is_ksf = true;
        return rep;
    }
    const ZpSet ss = sumset_zp(a, a);
    const ZpSet ka = dilate_zp(a, kr);
    bool hit = false;
    for (std::size_t i = 0; i < ss.words().size() && !hit; ++i)
        hit = (ss.words()[i] & ka.words()[i]) != 0;
    rep.is_ksf = !hit;
    if (rep.is_ksf) return rep;
    for (long z : a.elements()) {
        const long t = static_cast<long>(static_cast<long long>(kr) * z % p);
        for (long x : a.elements()) {
            long y = (t - x) % p;
            if (y < 0) y += p;
            if (a.test(y)) {
                rep.witness = std::array<long, 3>{x, y, z};
                return rep;
            }
        }
    }
    throw std::logic_error("is_k_sum_free_zp: failed to realize a witness");
}

MaxKsf max_ksf_zp(long p, long k, long limit) {
    const long kr = validate_ksf_search("max_ksf_zp", p, k, std::min(limit, 63L));
    const Mask root = 1ull << 1;
    const Mask root_sums = 1ull << (2 % p);
    const Mask root_dils = 1ull << (kr % p);
    if ((root_sums & root_dils) != 0)  // kr ≡ 2: even singletons fail via 2v = kv
        return finish_witnesses(p, 0, {0}, 0);
    KsfSearch bb;
    bb.p = p;
    bb.kr = kr;
    // static order: least-conflicting candidates first (degree = number of
    // incompatible partners among nonzero residues), ties by value
    std::vector<std::pair<long, long>> ranked;
    for (long v = 2; v < p; ++v) {
        long deg = 0;
        for (long u = 1; u < p; ++u)
            if (u != v && !mask_ksf(p, kr, (1ull << u) | (1ull << v))) ++deg;
        ranked.emplace_back(deg, v);
    }
    std::sort(ranked.begin(), ranked.end());
    for (const auto& [deg, v] : ranked) {
        (void)deg;
        bb.order.push_back(v);
    }
    bb.dfs(root, 1, root_sums, root_dils, 0);
    return finish_witnesses(p, bb.best, bb.wits, bb.nodes);
}

MaxKsf max_ksf_zp_naive(long p, long k, long limit) {
    const long kr = validate_ksf_search("max_ksf_zp_naive", p, k, std::min(limit, 63L));
    long best = 0;
    std::vector<Mask> wits;
    for (Mask m = 0; m < (1ull << p); ++m) {
        if (std::popcount(m) < best) continue;
        if (!mask_ksf(p, kr, m)) continue;
        if (std::popcount(m) > best) {
            best = std::popcount(m);
            wits.clear();
        }
        wits.push_back(m);
    }
    MaxKsf out;
    out.size = best;
    out.nodes_expanded = 1ll << p;
    for (Mask m : wits) out.witnesses.push_back(set_of(p, m));
    if (out.size > (p + 1) / 3)
        throw std::logic_error("k-sum-free counting bound violated");
    return out;
}

StructureOrBound structure_or_bound(const SimpleSet& s, long k, const Rational& eps) {
    if (k < 3) throw std::invalid_argument("structure_or_bound: k must be at least 3");
    if (eps < Rational(0) || eps > rat(1, 10000))
        throw std::invalid_argument("structure_or_bound: eps outside [0, 1/10000]");
    if (s.empty()) throw std::invalid_argument("structure_or_bound: empty set");
    if (!is_k_sum_free_T(s, k).is_ksf)
        throw std::invalid_argument("structure_or_bound: the set is not k-sum-free");
    const Rational mu = s.measure();
    const SimpleSet ss = sumset(s, s);
    const Rational mu_ss = ss.measure();
    if (mu_ss >= (Rational(2) + eps) * mu) {
        const SimpleSet ks = dilate(s, k);
        const Rational mu_ks = ks.measure();
        if (!intersect(ss, ks).empty())
            throw std::logic_error("structure_or_bound: disjointness certificate failed");
        if (!(Rational(3) * mu <= mu_ss + mu_ks && mu_ss + mu_ks <= Rational(1)))
            throw std::logic_error("structure_or_bound: measure certificate failed");
        KsfBound out;
        out.mu = mu;
        out.mu_sumset = mu_ss;
        out.mu_dilate = mu_ks;
        out.cap = Rational(1) / (Rational(3) + eps);
        if (!(mu <= out.cap))
            throw std::logic_error("structure_or_bound: cap certificate failed");
        return out;
    }
    const long m = static_cast<long>(s.components().size());
    const long n_hi = static_cast<long>((rat(2 * m) / mu).ceil().get_si());
    const Rational target = mu_ss - mu;
    for (long n = 1; n <= n_hi; ++n) {
        const CoveringInterval c = covering_interval(dilate(s, n));
        if (c.full_circle || c.measure > target) continue;
        KsfStructure out;
        out.n = n;
        out.interval = c.interval;
        out.interval_measure = c.measure;
        out.defect = ksf_defect(c.interval, k);
        return out;
    }
    throw std::runtime_error(
        "structure_or_bound: no dilate up to n = " + std::to_string(n_hi) +
        " fits a covering interval of measure mu(S+S) - mu(S)");
}

}  // namespace tsl
