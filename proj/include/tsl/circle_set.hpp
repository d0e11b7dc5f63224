// Interval unions on the circle T = R/Z with exact rational endpoints and
// explicit closure flags. All operations are exact; no floating point.
#pragma once

#include "tsl/rational.hpp"

#include <string>
#include <vector>

namespace tsl {

// One arc: start in [0,1), length in [0,1]. Wrap-around is implicit where
// start + length > 1. Normal forms enforced by the constructor:
//   length == 1  -> the full circle, both flags closed;
//   length == 0  -> a one-point set iff both flags closed, else empty.
struct CircleInterval {
    Rational start;
    Rational length;
    bool left_closed = true;
    bool right_closed = true;

    CircleInterval() : length(0), left_closed(false), right_closed(false) {}  // empty
    CircleInterval(const Rational& s, const Rational& len, bool lc = true, bool rc = true);

    static CircleInterval point(const Rational& x) { return {x, Rational(0), true, true}; }
    static CircleInterval full() { return {Rational(0), Rational(1), true, true}; }

    Rational end() const { return (start + length).mod1(); }  // as a point of T
    bool is_empty() const { return length == Rational(0) && !(left_closed && right_closed); }
    bool is_full() const { return length == Rational(1); }
    bool is_point() const { return length == Rational(0) && left_closed && right_closed; }
    bool wraps() const { return start + length > Rational(1); }

    bool contains(const Rational& x) const;        // x taken mod 1
    bool contains_interior(const Rational& x) const;

    bool operator==(const CircleInterval& o) const;
};

// Canonical finite union of circle intervals: components sorted by start,
// pairwise disjoint, not mergeable (no shared endpoint with compatible flags).
class SimpleSet {
public:
    SimpleSet() = default;  // empty set

    static SimpleSet of(const std::vector<CircleInterval>& parts);  // canonicalizes
    static SimpleSet interval(const CircleInterval& iv) { return of({iv}); }
    static SimpleSet point(const Rational& x) { return of({CircleInterval::point(x)}); }
    static SimpleSet full();

    const std::vector<CircleInterval>& components() const { return comps_; }
    std::size_t component_count() const { return comps_.size(); }
    bool empty() const { return comps_.empty(); }
    bool is_full() const { return comps_.size() == 1 && comps_[0].is_full(); }
    Rational measure() const;
    bool contains(const Rational& x) const;

    bool operator==(const SimpleSet& o) const;
    bool operator!=(const SimpleSet& o) const { return !(*this == o); }

private:
    std::vector<CircleInterval> comps_;
};

SimpleSet unite(const SimpleSet& a, const SimpleSet& b);
SimpleSet intersect(const SimpleSet& a, const SimpleSet& b);
SimpleSet complement(const SimpleSet& s);
SimpleSet translate(const SimpleSet& s, const Rational& t);
SimpleSet negate(const SimpleSet& s);  // x -> -x mod 1

// Minkowski sum; endpoint of a pairwise sum is attained iff both contributing
// endpoints are attained.
SimpleSet sumset(const SimpleSet& a, const SimpleSet& b);

SimpleSet dilate(const SimpleSet& s, long n);           // image of x -> n x, n >= 1
SimpleSet preimage_divide(const SimpleSet& s, long k);  // k^{-1} S: union of k shrunk copies

struct CoveringInterval {
    bool full_circle = false;  // no open gap in the complement
    CircleInterval interval;   // closed; meaningful iff !full_circle
    Rational measure;          // 1 when full_circle
};

// Smallest closed interval containing S (complement of the largest open gap;
// ties broken by the smallest gap start). Errors on the empty set.
CoveringInterval covering_interval(const SimpleSet& s);

// D_n(S): measure of the covering interval of the n-fold dilate (1 if no gap).
Rational n_diameter(const SimpleSet& s, long n);

// A point of S that is attained exactly (component start/end if closed, else
// the component midpoint). Errors on the empty set.
Rational pick_point(const CircleInterval& iv);
Rational pick_point(const SimpleSet& s);

// Literal grammar (round-trips canonical forms):
//   set      := 'T' | 'empty' | interval (';' interval)*
//   interval := ('['|'(') rational ',' rational (']'|')')
//   rational := integer ('/' positive-integer)?
// Endpoints are reduced mod 1 (a note is appended to `warnings` when that
// changes a value). After reduction: second endpoint strictly below the first
// wraps; equal endpoints give a one-point set for "[a,a]" and empty otherwise.
SimpleSet parse_circle_set(const std::string& text, std::vector<std::string>* warnings = nullptr);
std::string to_literal(const CircleInterval& iv);
std::string to_literal(const SimpleSet& s);

}  // namespace tsl
