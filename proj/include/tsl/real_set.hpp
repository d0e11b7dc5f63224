#pragma once
// Simple sets on the real line: finite unions of rational-endpoint intervals
// with closure flags. Exact Minkowski sums (no wrap), projection to the
// circle, the wrap-overlap measure sigma2, the doubling<4 structure finder,
// and the constructive dense-interval finder for sets of doubling < 4.

#include "tsl/circle_set.hpp"
#include "tsl/rational.hpp"

#include <string>
#include <vector>

namespace tsl {

struct RealInterval {
    Rational lo, hi;
    bool left_closed = false, right_closed = false;

    RealInterval() = default;  // empty
    RealInterval(Rational lo_, Rational hi_, bool lc, bool rc);

    static RealInterval point(const Rational& x) { return RealInterval(x, x, true, true); }

    bool is_empty() const { return lo == hi && !left_closed; }
    bool is_point() const { return lo == hi && left_closed; }
    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const;

    bool operator==(const RealInterval& o) const {
        return lo == o.lo && hi == o.hi && left_closed == o.left_closed &&
               right_closed == o.right_closed;
    }
    bool operator!=(const RealInterval& o) const { return !(*this == o); }
};

// canonical form: components sorted, disjoint, not mergeable
class RealSimpleSet {
  public:
    RealSimpleSet() = default;  // empty set

    static RealSimpleSet of(std::vector<RealInterval> atoms);
    static RealSimpleSet interval(const RealInterval& iv) { return of({iv}); }
    static RealSimpleSet point(const Rational& x) { return of({RealInterval::point(x)}); }

    const std::vector<RealInterval>& components() const { return comps_; }
    std::size_t component_count() const { return comps_.size(); }
    bool empty() const { return comps_.empty(); }
    Rational measure() const;
    bool contains(const Rational& x) const;
    Rational inf() const;       // throws on empty
    Rational sup() const;       // throws on empty
    Rational diameter() const;  // sup - inf

    bool operator==(const RealSimpleSet& o) const { return comps_ == o.comps_; }
    bool operator!=(const RealSimpleSet& o) const { return !(*this == o); }

  private:
    std::vector<RealInterval> comps_;
};

RealSimpleSet unite_R(const RealSimpleSet& a, const RealSimpleSet& b);
RealSimpleSet intersect_R(const RealSimpleSet& a, const RealSimpleSet& b);
RealSimpleSet translate_R(const RealSimpleSet& s, const Rational& t);
RealSimpleSet scale_R(const RealSimpleSet& s, const Rational& c);  // c > 0
RealSimpleSet sumset_R(const RealSimpleSet& a, const RealSimpleSet& b);

// reduction mod 1 onto the circle (components of length >= 1 cover it)
SimpleSet project_mod1(const RealSimpleSet& s);

// measure of {x in [0,1) : x and x+1 both lie in S+S}, for S within [0,1].
// For closed S containing 0 and 1 this is exactly
// lambda(S+S) - mu(project_mod1(S) + project_mod1(S)).
Rational sigma2(const RealSimpleSet& s);

// structure of a normalized closed set with lambda(S+S) <= (3+eps)lambda(S):
// some n <= (1+eps)/(1-eps) maps S mod 1 into a short interval, and S itself
// splits into n+1 translated pieces drawn from one short window.
struct DoublingDecomposition {
    long n = 0;
    CircleInterval interval;   // covers n * (S mod 1)
    Rational interval_measure; // <= (1+eps) * lambda(S)
    std::vector<RealSimpleSet> pieces;  // A_0 ... A_n, S = union of (i/n + A_i)
    std::vector<Rational> alphas;       // measures of the pieces
    Rational d0, dn;                    // diameters of the end pieces
    Rational j_lo, j_hi;                // the common window [j_lo, j_hi] around 0
};

// requires: S non-empty, all components closed, inf = 0, sup = 1;
// 0 < lambda(S) < 1/(2(1+eps)); lambda(S+S) <= (3+eps) lambda(S); eps in [0, 1/10000]
DoublingDecomposition doubling_structure(const RealSimpleSet& s, const Rational& eps);

// dense-interval finder: under lambda(S+S) <= 4 lambda(S) - delta,
// lambda(S) < diam(S)/4 + delta/2, delta > lambda(S)(1-eps), produces an
// interval I with lambda(I) >= min(delta/4, delta^2) whose density in S is
// at least 1/2 + delta/4. Both guarantees re-verified exactly before return.
struct EgmResult {
    RealInterval interval;
    Rational length;
    Rational density;     // achieved lambda(S cap I) / lambda(I)
    std::string branch;   // which case of the argument produced the interval
};

EgmResult egm_interval(const RealSimpleSet& s, const Rational& delta, const Rational& eps);

// literal grammar: interval (';' interval)* | 'empty', endpoints any rationals
RealSimpleSet parse_real_set(const std::string& text);
std::string to_literal(const RealInterval& iv);
std::string to_literal(const RealSimpleSet& s);

}  // namespace tsl
