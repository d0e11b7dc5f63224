#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsl/zp_set.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

using namespace tsl;

namespace {

std::mt19937_64 rng(20260825);

ZpSet random_zp(long p, double density) {
    std::bernoulli_distribution bit(density);
    ZpSet s(p);
    for (long j = 0; j < p; ++j)
        if (bit(rng)) s.set(j);
    return s;
}

ZpSet random_interval_union(long p, int m) {
    std::uniform_int_distribution<long> at(0, p - 1);
    std::uniform_int_distribution<long> len(1, std::max<long>(1, p / (3 * m)));
    ZpSet s(p);
    for (int i = 0; i < m; ++i) {
        long a = at(rng), t = len(rng);
        for (long j = 0; j < t; ++j) s.set(a + j);
    }
    return s;
}

// definition-chasing sumset, O(|A||B|)
ZpSet sumset_naive(const ZpSet& a, const ZpSet& b) {
    ZpSet out(a.modulus());
    for (long x : a.elements())
        for (long y : b.elements()) out.set(x + y);
    return out;
}

// direct complex summation of the transform, no closed form
double fourier_direct(const ZpSet& b, long s) {
    const long p = b.modulus();
    const double pi = std::numbers::pi;
    double re = 0, im = 0;
    for (long j : b.elements()) {
        long arg = ((s % (2 * p)) * ((2 * j) % (2 * p))) % (2 * p);  // 2sj mod 2p
        re += std::cos(pi * static_cast<double>(arg) / static_cast<double>(p));
        im += std::sin(pi * static_cast<double>(arg) / static_cast<double>(p));
    }
    return std::hypot(re, im) / static_cast<double>(p);
}

std::uint32_t rotl_mask(std::uint32_t m, long a, long p) {
    std::uint32_t field = (p == 32) ? ~0u : ((1u << p) - 1);
    if (a == 0) return m & field;
    return ((m << a) | (m >> (p - a))) & field;
}

std::uint32_t mask_sumset(std::uint32_t a, std::uint32_t b, long p) {
    std::uint32_t out = 0;
    for (long j = 0; j < p; ++j)
        if ((a >> j) & 1) out |= rotl_mask(b, j, p);
    return out;
}

ZpSet from_mask(long p, std::uint32_t m) {
    ZpSet s(p);
    for (long j = 0; j < p; ++j)
        if ((m >> j) & 1) s.set(j);
    return s;
}

}  // namespace

TEST_CASE("construction and primality") {
    CHECK_THROWS_AS(ZpSet(6), std::invalid_argument);
    CHECK_THROWS_AS(ZpSet(1), std::invalid_argument);
    CHECK_NOTHROW(ZpSet(2));
    CHECK_NOTHROW(ZpSet(1000003));
    auto s = ZpSet::of(7, {0, 2, 3});
    CHECK(s.size() == 3);
    CHECK(s.test(2));
    CHECK(s.test(9));  // reduced mod 7
    CHECK_FALSE(s.test(1));
    CHECK(ZpSet::full(7).size() == 7);
    CHECK(ZpSet::full(127).is_full());
}

TEST_CASE("cyclic runs and interval count") {
    CHECK(ZpSet(7).interval_count() == 0);
    CHECK(ZpSet::full(7).interval_count() == 1);
    auto wrap = ZpSet::of(7, {6, 0, 1});
    auto r = wrap.runs();
    REQUIRE(r.size() == 1);
    CHECK(r[0] == std::pair<long, long>(6, 3));
    auto two = ZpSet::of(7, {0, 3});
    CHECK(two.interval_count() == 2);
    auto alt = ZpSet::of(13, {0, 2, 4, 6, 8, 10});
    CHECK(alt.interval_count() == 6);
}

TEST_CASE("sumset examples") {
    CHECK(sumset_zp(ZpSet::of(5, {0, 1}), ZpSet::of(5, {0, 1})) == ZpSet::of(5, {0, 1, 2}));
    CHECK(sumset_zp(ZpSet::of(7, {0, 2, 4}), ZpSet::of(7, {0, 1})) ==
          ZpSet::of(7, {0, 1, 2, 3, 4, 5}));
    CHECK(sumset_zp(ZpSet::full(5), ZpSet::of(5, {0})) == ZpSet::full(5));
    CHECK(sumset_zp(ZpSet(11), ZpSet::of(11, {3})).empty());
    CHECK_THROWS_AS(sumset_zp(ZpSet(5), ZpSet(7)), std::invalid_argument);
}

TEST_CASE("Cauchy-Davenport, exhaustive over small moduli") {
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        std::uint32_t top = 1u << p;
        for (std::uint32_t a = 1; a < top; ++a) {
            for (std::uint32_t b = 1; b < top; ++b) {
                int lhs = std::popcount(mask_sumset(a, b, p));
                int rhs = std::min<int>(p, std::popcount(a) + std::popcount(b) - 1);
                if (lhs < rhs) {  // CHECK in the hot loop would be slow
                    CAPTURE(p);
                    CAPTURE(a);
                    CAPTURE(b);
                    REQUIRE(lhs >= rhs);
                }
            }
        }
    }
    CHECK(true);  // reached: no violation
}

TEST_CASE("library sumset agrees with oracles") {
    // against the mask model, exhaustive on a sparse subsample of Z_11 pairs
    std::uniform_int_distribution<std::uint32_t> mask11(0, (1u << 11) - 1);
    for (int it = 0; it < 3000; ++it) {
        std::uint32_t a = mask11(rng), b = mask11(rng);
        auto lib = sumset_zp(from_mask(11, a), from_mask(11, b));
        CHECK(lib == from_mask(11, mask_sumset(a, b, 11)));
    }
    // against the definition, across sizes and moduli
    for (long p : {5L, 31L, 101L, 1009L}) {
        for (int it = 0; it < 20; ++it) {
            auto a = random_zp(p, 0.2);
            auto b = random_zp(p, 0.05);
            CHECK(sumset_zp(a, b) == sumset_naive(a, b));
        }
    }
}

TEST_CASE("shift and FFT sumset paths agree") {
    for (long p : {127L, 1009L}) {
        for (double da : {0.03, 0.3, 0.7}) {
            for (int it = 0; it < 8; ++it) {
                auto a = random_zp(p, da);
                auto b = random_zp(p, 0.4);
                CHECK(sumset_zp_shift(a, b) == sumset_zp_fft(a, b));
            }
        }
        CHECK(sumset_zp_fft(ZpSet(p), random_zp(p, 0.5)).empty());
        auto f = ZpSet::full(p);
        CHECK(sumset_zp_fft(f, ZpSet::of(p, {1})) == f);
    }
}

TEST_CASE("sumset at large modulus") {
    const long p = 100003;
    auto a = random_zp(p, 0.01);
    auto b = random_zp(p, 0.01);
    auto s = sumset_zp(a, b);
    CHECK(s.size() >= std::min(p, a.size() + b.size() - 1));
    auto ea = a.elements(), eb = b.elements();
    std::uniform_int_distribution<std::size_t> ia(0, ea.size() - 1), ib(0, eb.size() - 1);
    for (int it = 0; it < 200; ++it) CHECK(s.test(ea[ia(rng)] + eb[ib(rng)]));
}

TEST_CASE("dilation") {
    CHECK(dilate_zp(ZpSet::of(7, {0, 1, 2}), 3) == ZpSet::of(7, {0, 3, 6}));
    CHECK(dilate_zp(ZpSet::of(7, {0, 3}), 5) == ZpSet::of(7, {0, 1}));
    auto a = random_zp(101, 0.3);
    CHECK(dilate_zp(a, 1) == a);
    CHECK_THROWS_AS(dilate_zp(a, 0), std::invalid_argument);
    CHECK_THROWS_AS(dilate_zp(a, 101), std::invalid_argument);
    for (long n = 1; n < 101; n += 7) CHECK(dilate_zp(a, n).size() == a.size());
    // inverse dilation undoes it: 3 * 34 = 102 = 1 mod 101
    CHECK(dilate_zp(dilate_zp(a, 3), 34) == a);
}

TEST_CASE("translate, negate, complement") {
    auto a = ZpSet::of(7, {0, 2, 3});
    CHECK(translate_zp(a, 4) == ZpSet::of(7, {4, 6, 0}));
    CHECK(negate_zp(a) == ZpSet::of(7, {0, 5, 4}));
    CHECK(complement_zp(a) == ZpSet::of(7, {1, 4, 5, 6}));
    CHECK(complement_zp(complement_zp(a)) == a);
}

TEST_CASE("absolute value of residues") {
    CHECK(abs_p(5, 7) == 2);
    CHECK(abs_p(3, 7) == 3);
    CHECK(abs_p(0, 101) == 0);
    CHECK(abs_p(-1, 7) == 1);
    CHECK(abs_p(50, 101) == 50);
    CHECK(abs_p(51, 101) == 50);
}

TEST_CASE("minimal covering interval") {
    auto c = min_covering_interval_zp(ZpSet::of(7, {6, 0, 1}));
    CHECK_FALSE(c.full);
    CHECK(c.start == 6);
    CHECK(c.len == 3);
    auto c2 = min_covering_interval_zp(ZpSet::of(7, {0, 3}));
    CHECK(c2.start == 0);
    CHECK(c2.len == 4);
    auto c3 = min_covering_interval_zp(ZpSet::of(7, {4}));
    CHECK(c3.start == 4);
    CHECK(c3.len == 1);
    CHECK(min_covering_interval_zp(ZpSet::full(7)).full);
    CHECK_THROWS_AS(min_covering_interval_zp(ZpSet(7)), std::domain_error);
    // tie between two gaps of equal size: smallest interval start wins
    auto c4 = min_covering_interval_zp(ZpSet::of(13, {0, 1, 6, 7}));
    CHECK(c4.start == 0);
    CHECK(c4.len == 8);
}

TEST_CASE("n-diameter") {
    auto b = ZpSet::of(7, {0, 3});
    CHECK(n_diameter_zp(b, 1) == Rational(4, 7));
    CHECK(n_diameter_zp(b, 5) == Rational(2, 7));
    CHECK(n_diameter_zp(ZpSet::full(11), 3) == Rational(1));
    for (long p : {13L, 101L}) {
        auto s = random_zp(p, 0.3);
        if (s.empty()) continue;
        for (long n = 1; n < p; n += 5) CHECK(n_diameter_zp(s, n) == n_diameter_zp(s, p - n));
    }
}

TEST_CASE("fourier magnitude: closed form against direct summation") {
    auto b = ZpSet::of(7, {0, 1, 2});
    CHECK(fourier_mag(b, 0) == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
    double expect = std::sin(3 * std::numbers::pi / 7) / (7 * std::sin(std::numbers::pi / 7));
    CHECK(fourier_mag(b, 1) == doctest::Approx(expect).epsilon(1e-13));
    for (long s = 1; s < 7; ++s) CHECK(std::abs(fourier_mag(ZpSet::full(7), s)) < 1e-12);

    for (long p : {13L, 97L, 1009L}) {
        for (int it = 0; it < 10; ++it) {
            auto r = random_zp(p, 0.25);
            for (long s = 0; s < std::min<long>(p, 40); ++s)
                CHECK(std::abs(fourier_mag(r, s) - fourier_direct(r, s)) <= 1e-12);
        }
    }
}

TEST_CASE("fourier decay bound") {
    auto reports = check_fourier_decay(ZpSet::of(7, {0, 1, 2}));
    REQUIRE(reports.size() == 6);
    CHECK(reports[2].s == 3);
    CHECK(reports[2].magnitude == doctest::Approx(0.11456).epsilon(1e-4));
    CHECK(reports[2].bound == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    for (const auto& r : reports) CHECK(r.satisfied);

    CHECK(fourier_decay_ok(ZpSet(11)));  // empty: everything is 0
    for (long p : {97L, 997L}) {
        for (int m : {1, 3, 20}) {
            for (int it = 0; it < 5; ++it) CHECK(fourier_decay_ok(random_interval_union(p, m)));
        }
    }
}

TEST_CASE("Parseval") {
    for (long p : {11L, 101L, 997L}) {
        for (int it = 0; it < 5; ++it) {
            auto b = random_zp(p, 0.35);
            double sum = 0;
            for (long s = 0; s < p; ++s) {
                double v = fourier_mag(b, s);
                sum += v * v;
            }
            CHECK(std::abs(sum - static_cast<double>(b.size()) / static_cast<double>(p)) <= 1e-9);
        }
    }
}

TEST_CASE("fourier lower bound") {
    auto r = check_fourier_lower(ZpSet::of(7, {0, 1, 2}), 1);
    CHECK(r.cover_len == 3);
    CHECK(r.rhs == doctest::Approx((3.0 - (1.0 - 2.0 / std::numbers::pi) * 3.0) / 7.0).epsilon(1e-12));
    CHECK(r.lhs == doctest::Approx(0.321).epsilon(1e-3));
    CHECK(r.satisfied);

    auto single = check_fourier_lower(ZpSet::of(101, {0}), 1);
    CHECK(single.lhs == doctest::Approx(1.0 / 101.0).epsilon(1e-12));
    CHECK(single.rhs == doctest::Approx((2.0 / std::numbers::pi) / 101.0).epsilon(1e-12));
    CHECK(single.satisfied);

    // an interval of length >= p/2 is outside the lemma's regime
    long p = 101, t = (7 * p + 9) / 10;
    ZpSet wide(p);
    for (long j = 0; j < t; ++j) wide.set(j);
    CHECK_THROWS_AS(check_fourier_lower(wide, 1), std::domain_error);

    // randomized sweep: sets whose dilation by n lands in a short interval
    for (int it = 0; it < 50; ++it) {
        std::uniform_int_distribution<long> nd(1, 100);
        long n = nd(rng);
        ZpSet seed(101);
        std::uniform_int_distribution<long> jd(0, 40);  // cover below p/2
        for (int k = 0; k < 12; ++k) seed.set(jd(rng));
        long ninv = 1;
        while ((ninv * n) % 101 != 1) ++ninv;
        auto b = dilate_zp(seed, ninv);  // n * b = seed sits in {0..40}
        auto res = check_fourier_lower(b, n);
        CHECK(res.satisfied);
    }
}

TEST_CASE("dilation frequency bound") {
    long p = 101, t = 20;
    ZpSet interval(p);
    for (long j = 0; j < t; ++j) interval.set(j);
    auto r = check_dilation_freq_bound(interval, 1);
    CHECK(r.lhs == 1);
    double beta = static_cast<double>(t) / p;
    CHECK(r.rhs == doctest::Approx(std::numbers::pi / (4 * beta)).epsilon(1e-12));
    CHECK(r.satisfied);

    auto alt = ZpSet::of(13, {0, 2, 4, 6, 8, 10});  // 2 * {0..5}
    auto r2 = check_dilation_freq_bound(alt, 7);    // 7 = inverse of 2 mod 13
    CHECK(r2.lhs == 6);
    CHECK(r2.dn == Rational(6, 13));
    CHECK(r2.satisfied);

    ZpSet wide(101);
    for (long j = 0; j < 85; ++j) wide.set(j);  // beta = 85/101 > pi/4
    CHECK_THROWS_AS(check_dilation_freq_bound(wide, 1), std::domain_error);
}

TEST_CASE("discretize") {
    auto s = parse_circle_set("(3/16,1/2]");
    CHECK(discretize(s, 7) == ZpSet::of(7, {2, 3}));
    CHECK(discretize(SimpleSet::full(), 11) == ZpSet::full(11));
    CHECK(discretize(parse_circle_set("[0,2/7)"), 7) == ZpSet::of(7, {0, 1}));
    // closure decides membership exactly at grid points
    CHECK(discretize(parse_circle_set("[1/7,2/7]"), 7) == ZpSet::of(7, {1, 2}));
    CHECK(discretize(parse_circle_set("(1/7,2/7)"), 7).empty());
    // wrap component
    CHECK(discretize(parse_circle_set("[5/7,1/7]"), 7) == ZpSet::of(7, {5, 6, 0, 1}));
}

TEST_CASE("discretize: cardinality and embedding") {
    std::uniform_int_distribution<long> num(0, 23);
    std::uniform_int_distribution<long> len(1, 8);
    std::uniform_int_distribution<int> coin(0, 1);
    for (long p : {101L, 1009L}) {
        for (int it = 0; it < 40; ++it) {
            std::vector<CircleInterval> atoms_a, atoms_b;
            for (int i = 0; i < 3; ++i) {
                atoms_a.emplace_back(Rational(num(rng), 24), Rational(len(rng), 24), coin(rng),
                                     coin(rng));
                atoms_b.emplace_back(Rational(num(rng), 24), Rational(len(rng), 24), coin(rng),
                                     coin(rng));
            }
            auto A = SimpleSet::of(atoms_a), B = SimpleSet::of(atoms_b);
            auto Ap = discretize(A, p), Bp = discretize(B, p);
            // |A_p| within m of p*mu(A)
            Rational drift = Rational(Ap.size()) - Rational(p) * A.measure();
            CHECK(drift.abs() <= Rational(static_cast<long>(A.component_count())));
            // discrete sums embed into the discretized sumset
            auto lhs = sumset_zp(Ap, Bp);
            auto rhs = discretize(sumset(A, B), p);
            bool contained = true;
            for (long e : lhs.elements())
                if (!rhs.test(e)) contained = false;
            CHECK(contained);
        }
    }
}

TEST_CASE("text forms") {
    auto s = ZpSet::of(7, {0, 2, 3});
    CHECK(to_text(s) == "7:{0,2,3}");
    CHECK(parse_zp_set("7:{0,2,3}") == s);
    CHECK(to_hex_text(s) == "7:#d");
    CHECK(parse_zp_set("7:#d") == s);
    CHECK(parse_zp_set(to_hex_text(ZpSet::full(127))) == ZpSet::full(127));
    CHECK(parse_zp_set("11:{}").empty());
    CHECK(to_text(ZpSet(11)) == "11:{}");
    CHECK(parse_zp_set("13:#0").empty());
    for (long p : {13L, 997L}) {
        for (int it = 0; it < 20; ++it) {
            auto r = random_zp(p, 0.4);
            CHECK(parse_zp_set(to_text(r)) == r);
            CHECK(parse_zp_set(to_hex_text(r)) == r);
        }
    }
    CHECK_THROWS_AS(parse_zp_set("8:{1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zp_set("7:{9}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zp_set("7:#zz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zp_set("7:[1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zp_set("{1,2}"), std::invalid_argument);
}
