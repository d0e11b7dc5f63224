#include "tsl/freiman.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mask_bits.hpp"

namespace tsl {
namespace {

using detail::Mask;
using detail::full_mask;
using detail::mask_dilate;
using detail::mask_sum;
using detail::mask_translate;
using ordered_json = nlohmann::ordered_json;

constexpr long kSzDefaultLimit = 23;
constexpr long kPairDefaultLimit = 11;
constexpr long kTrioDefaultLimit = 7;
constexpr long kSzHardLimit = 28;    // visited bitmap holds 2^p bits
constexpr long kPairHardLimit = 13;  // 4^p ordered pairs
constexpr long kTrioHardLimit = 9;   // 8^p ordered triples
constexpr long kMaskLimit = 63;      // scans work on single-word masks
constexpr int kStrata = 64;          // sampled draws split into fixed strata
constexpr int kMaxJobs = 8;
constexpr std::size_t kMaxFailures = 10;
constexpr std::size_t kMaxWitnesses = 5;

long resolve_limit(const ScanOptions& opts, long fallback, long hard) {
    long lim = opts.exhaustive_limit;
    if (lim <= 0) {
        if (const char* env = std::getenv("TSL_EXHAUSTIVE_LIMIT")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != nullptr && *end == '\0' && v > 0) lim = v;
        }
    }
    if (lim <= 0) lim = fallback;
    return std::min(lim, hard);
}

ZpSet set_of(long p, Mask m) { return ZpSet::from_words(p, {m}); }

long primitive_root(long p) {
    if (p == 2) return 1;
    const long n = p - 1;
    std::vector<long> fac;
    long t = n;
    for (long q = 2; q * q <= t; ++q)
        if (t % q == 0) {
            fac.push_back(q);
            while (t % q == 0) t /= q;
        }
    if (t > 1) fac.push_back(t);
    auto pow_mod = [p](long b, long e) {
        long r = 1 % p;
        b %= p;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : fac)
            if (pow_mod(g, n / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: search failed");
}

long cover_len(const ZpCover& c, long p) { return c.full ? p : c.len; }

ordered_json cover_json(const ZpCover& c, long p) {
    ordered_json j;
    j["start"] = c.full ? 0 : c.start;
    j["len"] = cover_len(c, p);
    return j;
}

struct Partial {
    long long units = 0;      // orbits (sz exhaustive) or raw instances
    long long instances = 0;  // orbit-weighted instance count
    long long admissible = 0;
    long long failures = 0;
    ordered_json fail_list = ordered_json::array();
    ordered_json wit_list = ordered_json::array();
};

Partial merge_parts(std::vector<Partial>& parts) {
    Partial m;
    for (auto& pt : parts) {
        m.units += pt.units;
        m.instances += pt.instances;
        m.admissible += pt.admissible;
        m.failures += pt.failures;
        for (auto& f : pt.fail_list)
            if (m.fail_list.size() < kMaxFailures) m.fail_list.push_back(std::move(f));
        for (auto& w : pt.wit_list)
            if (m.wit_list.size() < kMaxWitnesses) m.wit_list.push_back(std::move(w));
    }
    return m;
}

// ---- instance evaluation --------------------------------------------------

void sz_eval(long p, Mask m, long long weight, Partial& out) {
    const long size_a = std::popcount(m);
    if (size_a < 3) return;
    const long size_aa = std::popcount(mask_sum(m, m, p));
    const long r = size_aa - 2 * size_a + 1;
    if (r < 0 || 2 * size_aa > p + 2 * size_a - 4 || r > size_a - 3) return;
    out.admissible += weight;
    const ZpSet a = set_of(p, m);
    auto res = check_sz_conclusion(a, r);
    if (res) {
        if (out.wit_list.size() < kMaxWitnesses) {
            ordered_json w;
            w["set"] = to_text(a);
            w["r"] = r;
            w["n"] = res->first;
            w["interval"] = cover_json(res->second, p);
            out.wit_list.push_back(std::move(w));
        }
    } else {
        out.failures += weight;
        if (out.fail_list.size() < kMaxFailures) {
            ordered_json f;
            f["set"] = to_text(a);
            f["r"] = r;
            out.fail_list.push_back(std::move(f));
        }
    }
}

struct PairWitness {
    long n;
    ZpCover ca, cb;
    long run;
};

std::optional<PairWitness> check_pair_conclusion(const ZpSet& a, const ZpSet& b,
                                                 const ZpSet& ab, long r) {
    const long p = a.modulus();
    const long need_run = a.size() + b.size() - 1;
    const long n_hi = std::max<long>(1, (p - 1) / 2);
    for (long n = 1; n <= n_hi; ++n) {
        ZpCover ca = min_covering_interval_zp(dilate_zp(a, n));
        if (cover_len(ca, p) > a.size() + r) continue;
        ZpCover cb = min_covering_interval_zp(dilate_zp(b, n));
        if (cover_len(cb, p) > b.size() + r) continue;
        const long run = max_cyclic_run(dilate_zp(ab, n));
        if (run < need_run) continue;
        return PairWitness{n, ca, cb, run};
    }
    return std::nullopt;
}

void pair_eval(long p, Mask ma, Mask mb, long long weight, Partial& out) {
    const long sa = std::popcount(ma);
    const long sb = std::popcount(mb);
    if (sb < 3 || sa < sb) return;
    const Mask ms = mask_sum(ma, mb, p);
    const long sab = std::popcount(ms);
    const long r = sab - sa - sb + 1;
    if (r < 0 || 2 * sab > p + sa + sb - 4 || r > sb - 3) return;
    out.admissible += weight;
    const ZpSet a = set_of(p, ma), b = set_of(p, mb), ab = set_of(p, ms);
    auto res = check_pair_conclusion(a, b, ab, r);
    if (res) {
        if (out.wit_list.size() < kMaxWitnesses) {
            ordered_json w;
            w["a"] = to_text(a);
            w["b"] = to_text(b);
            w["r"] = r;
            w["n"] = res->n;
            w["interval_a"] = cover_json(res->ca, p);
            w["interval_b"] = cover_json(res->cb, p);
            w["run_len"] = res->run;
            out.wit_list.push_back(std::move(w));
        }
    } else {
        out.failures += weight;
        if (out.fail_list.size() < kMaxFailures) {
            ordered_json f;
            f["a"] = to_text(a);
            f["b"] = to_text(b);
            f["r"] = r;
            out.fail_list.push_back(std::move(f));
        }
    }
}

struct TrioWitness {
    long n;
    ZpCover c1, c2, c3;
};

std::optional<TrioWitness> check_trio_conclusion(const ZpSet& a1, const ZpSet& a2,
                                                 const ZpSet& a3, long r) {
    const long p = a1.modulus();
    const long n_hi = std::max<long>(1, (p - 1) / 2);
    for (long n = 1; n <= n_hi; ++n) {
        ZpCover c1 = min_covering_interval_zp(dilate_zp(a1, n));
        if (cover_len(c1, p) > a1.size() + r) continue;
        ZpCover c2 = min_covering_interval_zp(dilate_zp(a2, n));
        if (cover_len(c2, p) > a2.size() + r) continue;
        ZpCover c3 = min_covering_interval_zp(dilate_zp(a3, n));
        if (cover_len(c3, p) > a3.size() + r) continue;
        return TrioWitness{n, c1, c2, c3};
    }
    return std::nullopt;
}

// trio admissibility is decided at the minimal feasible excess
// r = max(0, p - |A1| - |A2| - |A3| + 1): covering bounds only relax as r
// grows, so the minimal r settles every admissible r at once
void trio_eval(long p, Mask m1, Mask m2, Mask m3, Mask sum12, long long weight,
               Partial& out) {
    const long s1 = std::popcount(m1);
    const long s2 = std::popcount(m2);
    const long s3 = std::popcount(m3);
    const long r = std::max<long>(0, p - (s1 + s2 + s3) + 1);
    if (std::min({s1, s2, s3}) <= r + 2) return;
    const Mask msum = mask_sum(sum12, m3, p);
    if (std::popcount(msum) >= p) return;
    out.admissible += weight;
    const ZpSet a1 = set_of(p, m1), a2 = set_of(p, m2), a3 = set_of(p, m3);
    auto res = check_trio_conclusion(a1, a2, a3, r);
    if (res) {
        if (out.wit_list.size() < kMaxWitnesses) {
            ordered_json w;
            w["a1"] = to_text(a1);
            w["a2"] = to_text(a2);
            w["a3"] = to_text(a3);
            w["r"] = r;
            w["n"] = res->n;
            w["interval_1"] = cover_json(res->c1, p);
            w["interval_2"] = cover_json(res->c2, p);
            w["interval_3"] = cover_json(res->c3, p);
            out.wit_list.push_back(std::move(w));
        }
    } else {
        out.failures += weight;
        if (out.fail_list.size() < kMaxFailures) {
            ordered_json f;
            f["a1"] = to_text(a1);
            f["a2"] = to_text(a2);
            f["a3"] = to_text(a3);
            f["r"] = r;
            out.fail_list.push_back(std::move(f));
        }
    }
}

// ---- scan drivers ----------------------------------------------------------

std::vector<std::pair<Mask, Mask>> chunk_ranges(Mask space, int jobs) {
    const Mask k = static_cast<Mask>(std::clamp(jobs, 1, kMaxJobs));
    std::vector<std::pair<Mask, Mask>> out;
    Mask lo = 0;
    for (Mask i = 0; i < k; ++i) {
        Mask hi = lo + space / k + (i < space % k ? 1 : 0);
        out.emplace_back(lo, hi);
        lo = hi;
    }
    return out;
}

template <class Fn>
void run_workers(int jobs, std::size_t tasks, Fn fn) {
    std::vector<std::exception_ptr> errs(tasks);
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks) break;
            try {
                fn(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    const int nthreads = std::clamp<int>(jobs, 1, kMaxJobs);
    if (nthreads <= 1 || tasks <= 1) {
        loop();
    } else {
        std::vector<std::thread> pool;
        const int spawn = std::min<int>(nthreads, static_cast<int>(tasks));
        pool.reserve(spawn);
        for (int i = 0; i < spawn; ++i) pool.emplace_back(loop);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

// enumerate affine orbits inside [lo, hi): the first unvisited mask while
// scanning upward is the least element of its orbit; orbits whose least
// element falls in an earlier chunk are marked but not counted here, which
// keeps the merged output independent of the chunking
void sz_chunk(long p, Mask lo, Mask hi, long g, Partial& out) {
    const Mask space = 1ull << p;
    std::vector<std::uint64_t> visited((space + 63) / 64, 0);
    auto seen = [&](Mask m) { return ((visited[m >> 6] >> (m & 63)) & 1u) != 0; };
    auto mark = [&](Mask m) { visited[m >> 6] |= 1ull << (m & 63); };
    std::vector<Mask> stack;
    for (Mask m = lo; m < hi; ++m) {
        if (seen(m)) continue;
        Mask least = m;
        long long size = 0;
        stack.clear();
        stack.push_back(m);
        mark(m);
        while (!stack.empty()) {
            const Mask cur = stack.back();
            stack.pop_back();
            ++size;
            least = std::min(least, cur);
            const Mask t = mask_translate(cur, 1, p);
            if (!seen(t)) {
                mark(t);
                stack.push_back(t);
            }
            const Mask d = mask_dilate(cur, g, p);
            if (!seen(d)) {
                mark(d);
                stack.push_back(d);
            }
        }
        if (least < lo) continue;
        if (least != m) throw std::logic_error("sz scan: non-minimal orbit representative");
        ++out.units;
        out.instances += size;
        sz_eval(p, m, size, out);
    }
}

void pair_chunk(long p, Mask lo, Mask hi, Partial& out) {
    const Mask space = 1ull << p;
    for (Mask a = lo; a < hi; ++a) {
        out.units += space;
        out.instances += space;
        const long sa = std::popcount(a);
        if (sa < 3) continue;  // no b passes |B| >= 3 and |A| >= |B|... |B| <= |A|
        for (Mask b = 0; b < space; ++b) pair_eval(p, a, b, 1, out);
    }
}

void trio_chunk(long p, Mask lo, Mask hi, Partial& out) {
    const Mask space = 1ull << p;
    for (Mask a = lo; a < hi; ++a) {
        const long sa = std::popcount(a);
        if (sa < 3) {  // min size <= 2 can never exceed r + 2 >= 2
            out.units += space * space;
            out.instances += space * space;
            continue;
        }
        for (Mask b = 0; b < space; ++b) {
            out.units += space;
            out.instances += space;
            if (std::popcount(b) < 3) continue;
            const Mask sum12 = mask_sum(a, b, p);
            for (Mask c = 0; c < space; ++c) trio_eval(p, a, b, c, sum12, 1, out);
        }
    }
}

template <class Draw>
std::vector<Partial> sampled_scan(const ScanOptions& opts, Draw draw) {
    std::vector<Partial> parts(kStrata);
    run_workers(opts.jobs, kStrata, [&](std::size_t i) {
        std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ull * (std::uint64_t(i) + 1)));
        const long long n =
            opts.budget / kStrata + (static_cast<long long>(i) < opts.budget % kStrata ? 1 : 0);
        for (long long k = 0; k < n; ++k) {
            ++parts[i].units;
            ++parts[i].instances;
            draw(rng, parts[i]);
        }
    });
    return parts;
}

Certificate finish(const char* name, long p, bool sampled, const ScanOptions& opts,
                   Partial&& m, const char* scope,
                   std::chrono::steady_clock::time_point t0) {
    Certificate c;
    c.conjecture = name;
    c.p = p;
    c.mode = sampled ? "sampled" : "exhaustive";
    if (sampled) {
        c.seed = opts.seed;
        c.budget = opts.budget;
    }
    c.orbits_scanned = m.units;
    c.instance_total = m.instances;
    c.admissible = m.admissible;
    c.failure_count = m.failures;
    c.failures = std::move(m.fail_list);
    c.witness_sample = std::move(m.wit_list);
    c.scope_note = scope;
    if (c.failure_count > 0)
        c.verdict = "counterexample";
    else if (!sampled)
        c.verdict = "verified";
    else
        c.verdict = (c.admissible == 0) ? "budget_exhausted" : "verified_sampled";
    c.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return c;
}

void require_scannable(const char* fn, long p, bool sampled, long limit) {
    ZpSet::of(p, {});  // validates that p is prime
    if (p > kMaskLimit)
        throw std::invalid_argument(std::string(fn) + ": p exceeds the word-size limit 63");
    if (!sampled && p > limit)
        throw std::invalid_argument(std::string(fn) + ": p exceeds the exhaustive limit " +
                                    std::to_string(limit) +
                                    "; raise TSL_EXHAUSTIVE_LIMIT or set a sampling budget");
}

}  // namespace

ZpSet affine_canonical(const ZpSet& a) {
    const long p = a.modulus();
    if (p > kMaskLimit)
        throw std::invalid_argument("affine_canonical: p exceeds the word-size limit 63");
    const Mask m = a.words()[0];
    Mask best = m;
    for (long sc = 1; sc < p; ++sc) {
        const Mask d = mask_dilate(m, sc, p);
        for (long t = 0; t < p; ++t) best = std::min(best, mask_translate(d, t, p));
    }
    return set_of(p, best);
}

std::optional<std::pair<long, ZpCover>> check_sz_conclusion(const ZpSet& a, long r) {
    if (a.size() == 0) throw std::invalid_argument("check_sz_conclusion: empty set");
    const long p = a.modulus();
    const long n_hi = std::max<long>(1, (p - 1) / 2);
    for (long n = 1; n <= n_hi; ++n) {
        ZpCover c = min_covering_interval_zp(dilate_zp(a, n));
        if (cover_len(c, p) <= a.size() + r) return std::make_pair(n, c);
    }
    return std::nullopt;
}

Certificate verify_conjecture_sz(long p, const ScanOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool sampled = opts.budget > 0;
    const long limit = resolve_limit(opts, kSzDefaultLimit, kSzHardLimit);
    require_scannable("verify_conjecture_sz", p, sampled, limit);
    std::vector<Partial> parts;
    if (sampled) {
        parts = sampled_scan(opts, [p](std::mt19937_64& rng, Partial& out) {
            sz_eval(p, rng() & full_mask(p), 1, out);
        });
        return finish("sz", p, true, opts, merge_parts(parts),
                      "uniform random subsets of Z_p; verdict covers the sampled "
                      "instances only",
                      t0);
    }
    const long g = primitive_root(p);
    const auto ranges = chunk_ranges(1ull << p, opts.jobs);
    parts.resize(ranges.size());
    run_workers(opts.jobs, ranges.size(), [&](std::size_t i) {
        sz_chunk(p, ranges[i].first, ranges[i].second, g, parts[i]);
    });
    Partial m = merge_parts(parts);
    if (m.instances != (1ll << p))
        throw std::logic_error("verify_conjecture_sz: orbit accounting mismatch");
    return finish("sz", p, false, opts, std::move(m),
                  "all subsets of Z_p scanned, one representative per orbit of the "
                  "affine maps x -> a*x + b; counts are orbit-weighted",
                  t0);
}

Certificate verify_conjecture_pair(long p, const ScanOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool sampled = opts.budget > 0;
    const long limit = resolve_limit(opts, kPairDefaultLimit, kPairHardLimit);
    require_scannable("verify_conjecture_pair", p, sampled, limit);
    std::vector<Partial> parts;
    if (sampled) {
        parts = sampled_scan(opts, [p](std::mt19937_64& rng, Partial& out) {
            const Mask a = rng() & full_mask(p);
            const Mask b = rng() & full_mask(p);
            pair_eval(p, a, b, 1, out);
        });
        return finish("pair", p, true, opts, merge_parts(parts),
                      "uniform random ordered pairs of subsets of Z_p; verdict covers "
                      "the sampled instances only",
                      t0);
    }
    const auto ranges = chunk_ranges(1ull << p, opts.jobs);
    parts.resize(ranges.size());
    run_workers(opts.jobs, ranges.size(), [&](std::size_t i) {
        pair_chunk(p, ranges[i].first, ranges[i].second, parts[i]);
    });
    Partial m = merge_parts(parts);
    if (m.instances != (1ll << (2 * p)))
        throw std::logic_error("verify_conjecture_pair: pair accounting mismatch");
    return finish("pair", p, false, opts, std::move(m),
                  "all ordered pairs of subsets of Z_p scanned; the first set of an "
                  "admissible pair is the larger one",
                  t0);
}

Certificate verify_conjecture_trio(long p, const ScanOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool sampled = opts.budget > 0;
    const long limit = resolve_limit(opts, kTrioDefaultLimit, kTrioHardLimit);
    require_scannable("verify_conjecture_trio", p, sampled, limit);
    std::vector<Partial> parts;
    if (sampled) {
        parts = sampled_scan(opts, [p](std::mt19937_64& rng, Partial& out) {
            const Mask a = rng() & full_mask(p);
            const Mask b = rng() & full_mask(p);
            const Mask c = rng() & full_mask(p);
            trio_eval(p, a, b, c, mask_sum(a, b, p), 1, out);
        });
        return finish("trio", p, true, opts, merge_parts(parts),
                      "uniform random ordered triples of subsets of Z_p; verdict "
                      "covers the sampled instances only",
                      t0);
    }
    const auto ranges = chunk_ranges(1ull << p, opts.jobs);
    parts.resize(ranges.size());
    run_workers(opts.jobs, ranges.size(), [&](std::size_t i) {
        trio_chunk(p, ranges[i].first, ranges[i].second, parts[i]);
    });
    Partial m = merge_parts(parts);
    if (m.instances != (1ll << (3 * p)))
        throw std::logic_error("verify_conjecture_trio: triple accounting mismatch");
    return finish("trio", p, false, opts, std::move(m),
                  "all ordered triples of subsets of Z_p scanned; admissibility and "
                  "the covering bounds are taken at the minimal feasible excess r",
                  t0);
}

ordered_json Certificate::canonical_json() const {
    ordered_json j;
    j["conjecture"] = conjecture;
    j["p"] = p;
    j["mode"] = mode;
    if (mode == "sampled") {
        j["seed"] = seed;
        j["budget"] = budget;
    }
    j["orbits_scanned"] = orbits_scanned;
    j["instance_total"] = instance_total;
    j["admissible"] = admissible;
    j["failure_count"] = failure_count;
    j["failures"] = failures;
    j["witness_sample"] = witness_sample;
    j["scope_note"] = scope_note;
    j["verdict"] = verdict;
    return j;
}

ordered_json Certificate::full_json() const {
    ordered_json j = canonical_json();
    j["wall_ms"] = wall_ms;
    return j;
}

namespace {

bool cover_matches(const ordered_json& iv, const ZpCover& c, long p) {
    return iv.at("start").get<long>() == (c.full ? 0 : c.start) &&
           iv.at("len").get<long>() == cover_len(c, p);
}

bool recheck_sz_entry(long p, const ordered_json& e, bool expect_ok) {
    const ZpSet a = parse_zp_set(e.at("set").get<std::string>());
    if (a.modulus() != p) return false;
    const long saa = sumset_zp(a, a).size();
    const long r = saa - 2 * a.size() + 1;
    if (r != e.at("r").get<long>()) return false;
    if (r < 0 || 2 * saa > p + 2 * a.size() - 4 || r > a.size() - 3) return false;
    const auto res = check_sz_conclusion(a, r);
    if (res.has_value() != expect_ok) return false;
    if (!expect_ok) return true;
    return res->first == e.at("n").get<long>() &&
           cover_matches(e.at("interval"), res->second, p);
}

bool recheck_pair_entry(long p, const ordered_json& e, bool expect_ok) {
    const ZpSet a = parse_zp_set(e.at("a").get<std::string>());
    const ZpSet b = parse_zp_set(e.at("b").get<std::string>());
    if (a.modulus() != p || b.modulus() != p) return false;
    if (b.size() < 3 || a.size() < b.size()) return false;
    const ZpSet ab = sumset_zp(a, b);
    const long r = ab.size() - a.size() - b.size() + 1;
    if (r != e.at("r").get<long>()) return false;
    if (r < 0 || 2 * ab.size() > p + a.size() + b.size() - 4 || r > b.size() - 3)
        return false;
    const auto res = check_pair_conclusion(a, b, ab, r);
    if (res.has_value() != expect_ok) return false;
    if (!expect_ok) return true;
    return res->n == e.at("n").get<long>() &&
           cover_matches(e.at("interval_a"), res->ca, p) &&
           cover_matches(e.at("interval_b"), res->cb, p) &&
           res->run == e.at("run_len").get<long>();
}

bool recheck_trio_entry(long p, const ordered_json& e, bool expect_ok) {
    const ZpSet a1 = parse_zp_set(e.at("a1").get<std::string>());
    const ZpSet a2 = parse_zp_set(e.at("a2").get<std::string>());
    const ZpSet a3 = parse_zp_set(e.at("a3").get<std::string>());
    if (a1.modulus() != p || a2.modulus() != p || a3.modulus() != p) return false;
    const long r = std::max<long>(0, p - (a1.size() + a2.size() + a3.size()) + 1);
    if (r != e.at("r").get<long>()) return false;
    if (std::min({a1.size(), a2.size(), a3.size()}) <= r + 2) return false;
    if (sumset_zp(sumset_zp(a1, a2), a3).size() >= p) return false;
    const auto res = check_trio_conclusion(a1, a2, a3, r);
    if (res.has_value() != expect_ok) return false;
    if (!expect_ok) return true;
    return res->n == e.at("n").get<long>() &&
           cover_matches(e.at("interval_1"), res->c1, p) &&
           cover_matches(e.at("interval_2"), res->c2, p) &&
           cover_matches(e.at("interval_3"), res->c3, p);
}

}  // namespace

bool recheck_certificate(const ordered_json& cert) {
    try {
        const std::string conj = cert.at("conjecture").get<std::string>();
        const long p = cert.at("p").get<long>();
        const std::string verdict = cert.at("verdict").get<std::string>();
        const long long failure_count = cert.at("failure_count").get<long long>();
        const auto& failures = cert.at("failures");
        const auto& wits = cert.at("witness_sample");
        if (!failures.is_array() || !wits.is_array()) return false;
        if (failure_count < 0) return false;
        if ((failure_count > 0) != (verdict == "counterexample")) return false;
        if (failure_count == 0 && !failures.empty()) return false;
        if (failure_count > 0 && failures.empty()) return false;
        if (std::cmp_greater(failures.size(),
                             std::min<long long>(failure_count, kMaxFailures)))
            return false;
        if (wits.size() > kMaxWitnesses) return false;
        auto entry_ok = [&](const ordered_json& e, bool expect_ok) {
            if (conj == "sz") return recheck_sz_entry(p, e, expect_ok);
            if (conj == "pair") return recheck_pair_entry(p, e, expect_ok);
            if (conj == "trio") return recheck_trio_entry(p, e, expect_ok);
            return false;
        };
        for (const auto& f : failures)
            if (!entry_ok(f, false)) return false;
        for (const auto& w : wits)
            if (!entry_ok(w, true)) return false;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace tsl
