#include "tsl/circle_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsl {

CircleInterval::CircleInterval(const Rational& s, const Rational& len, bool lc, bool rc)
    : start(s.mod1()), length(len), left_closed(lc), right_closed(rc) {
    if (length < Rational(0) || length > Rational(1))
        throw std::invalid_argument("circle interval: length outside [0,1]");
    if (length == Rational(1)) {
        // full circle: a length-1 arc missing at most one endpoint is
        // normalized to the closed full circle (the one measure-zero collapse
        // this representation performs).
        start = Rational(0);
        left_closed = right_closed = true;
    } else if (length == Rational(0) && !(left_closed && right_closed)) {
        left_closed = right_closed = false;  // canonical empty
    }
}

bool CircleInterval::contains(const Rational& xin) const {
    if (is_empty()) return false;
    if (is_full()) return true;
    Rational d = (xin.mod1() - start).mod1();
    if (d == Rational(0)) return left_closed;
    if (d == length) return right_closed;
    return d < length;
}

bool CircleInterval::contains_interior(const Rational& xin) const {
    if (is_empty()) return false;
    if (is_full()) return true;
    Rational d = (xin.mod1() - start).mod1();
    return d > Rational(0) && d < length;
}

bool CircleInterval::operator==(const CircleInterval& o) const {
    if (is_empty() || o.is_empty()) return is_empty() && o.is_empty();
    return start == o.start && length == o.length &&
           left_closed == o.left_closed && right_closed == o.right_closed;
}

namespace {

// --- elementary decomposition ---------------------------------------------
// The circle is cut at every endpoint of every participating interval; the
// resulting pieces (boundary points and the open arcs between consecutive
// ones) are each wholly inside or wholly outside every operand, so boolean
// structure is decided piecewise and reassembled into maximal runs.

struct Piece {
    bool is_point;
    Rational at;       // the point, or the arc's left boundary
    Rational probe;    // a point inside the piece (== at for points)
};

std::vector<Rational> boundary_points(const std::vector<const std::vector<CircleInterval>*>& groups) {
    std::vector<Rational> q;
    for (const auto* g : groups)
        for (const auto& iv : *g) {
            if (iv.is_empty() || iv.is_full()) continue;
            q.push_back(iv.start);
            q.push_back(iv.end());
        }
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
}

std::vector<Piece> make_pieces(const std::vector<Rational>& q) {
    std::vector<Piece> p;
    p.reserve(2 * q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        const Rational& u = q[i];
        const Rational& v = q[(i + 1) % q.size()];
        p.push_back({true, u, u});
        Rational mid = (u < v) ? (u + v) / Rational(2) : ((u + v + Rational(1)) / Rational(2)).mod1();
        p.push_back({false, u, mid});
    }
    return p;
}

// Rebuild a canonical component list from piecewise membership. Returns
// nullopt standing for "full circle".
struct Rebuilt {
    bool full = false;
    std::vector<CircleInterval> comps;
};

Rebuilt reassemble(const std::vector<Piece>& pieces, const std::vector<Rational>& q,
                   const std::vector<char>& in) {
    Rebuilt out;
    std::size_t n = pieces.size();
    std::size_t first_out = n;
    for (std::size_t i = 0; i < n; ++i)
        if (!in[i]) { first_out = i; break; }
    if (first_out == n) {
        out.full = true;
        return out;
    }

    std::vector<std::size_t> run;
    auto flush = [&]() {
        if (run.empty()) return;
        const Piece& f = pieces[run.front()];
        const Piece& l = pieces[run.back()];
        bool lc = f.is_point;
        bool rc = l.is_point;
        Rational a = f.at;
        // an arc piece (u,v) ends at the next boundary point
        Rational b = l.is_point ? l.at : q[( (run.back() / 2) + 1 ) % q.size()];
        Rational len = (b - a).mod1();
        if (len == Rational(0)) {
            if (run.size() == 1 && f.is_point) {
                out.comps.push_back(CircleInterval::point(a));
            } else {
                // run wraps the whole circle save at most one point: full
                out.full = true;
            }
        } else {
            out.comps.emplace_back(a, len, lc, rc);
        }
        run.clear();
    };

    for (std::size_t step = 1; step <= n; ++step) {
        std::size_t i = (first_out + step) % n;
        if (in[i]) run.push_back(i);
        else flush();
    }
    flush();
    if (out.full) out.comps.clear();
    std::sort(out.comps.begin(), out.comps.end(),
              [](const CircleInterval& x, const CircleInterval& y) { return x.start < y.start; });
    return out;
}

SimpleSet from_rebuilt(const Rebuilt& r);

// union of an arbitrary interval list (not necessarily disjoint)
Rebuilt rebuild_union(const std::vector<CircleInterval>& atoms) {
    Rebuilt out;
    std::vector<CircleInterval> live;
    for (const auto& iv : atoms) {
        if (iv.is_empty()) continue;
        if (iv.is_full()) { out.full = true; return out; }
        live.push_back(iv);
    }
    if (live.empty()) return out;
    auto q = boundary_points({&live});
    auto pieces = make_pieces(q);
    std::vector<char> in(pieces.size(), 0);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (const auto& iv : live)
            if (iv.contains(pieces[i].probe)) { in[i] = 1; break; }
    return reassemble(pieces, q, in);
}

}  // namespace

SimpleSet SimpleSet::full() {
    SimpleSet s;
    s.comps_.push_back(CircleInterval::full());
    return s;
}

namespace {
SimpleSet from_rebuilt(const Rebuilt& r) {
    if (r.full) return SimpleSet::full();
    return SimpleSet::of(r.comps);  // comps are canonical; of() is idempotent on them
}
}  // namespace

SimpleSet SimpleSet::of(const std::vector<CircleInterval>& parts) {
    Rebuilt r = rebuild_union(parts);
    SimpleSet s;
    if (r.full) {
        s.comps_.push_back(CircleInterval::full());
    } else {
        s.comps_ = std::move(r.comps);
    }
    return s;
}

Rational SimpleSet::measure() const {
    Rational m(0);
    for (const auto& c : comps_) m += c.length;
    return m;
}

bool SimpleSet::contains(const Rational& x) const {
    for (const auto& c : comps_)
        if (c.contains(x)) return true;
    return false;
}

bool SimpleSet::operator==(const SimpleSet& o) const {
    if (comps_.size() != o.comps_.size()) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (!(comps_[i] == o.comps_[i])) return false;
    return true;
}

namespace {
template <typename F>
SimpleSet boolean_op(const SimpleSet& a, const SimpleSet& b, F f) {
    auto q = boundary_points({&a.components(), &b.components()});
    if (q.empty()) {
        bool v = f(a.contains(Rational(0)), b.contains(Rational(0)));
        return v ? SimpleSet::full() : SimpleSet();
    }
    auto pieces = make_pieces(q);
    std::vector<char> in(pieces.size(), 0);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        in[i] = f(a.contains(pieces[i].probe), b.contains(pieces[i].probe)) ? 1 : 0;
    return from_rebuilt(reassemble(pieces, q, in));
}
}  // namespace

SimpleSet unite(const SimpleSet& a, const SimpleSet& b) {
    return boolean_op(a, b, [](bool x, bool y) { return x || y; });
}

SimpleSet intersect(const SimpleSet& a, const SimpleSet& b) {
    return boolean_op(a, b, [](bool x, bool y) { return x && y; });
}

SimpleSet complement(const SimpleSet& s) {
    return boolean_op(s, SimpleSet(), [](bool x, bool) { return !x; });
}

SimpleSet translate(const SimpleSet& s, const Rational& t) {
    std::vector<CircleInterval> atoms;
    for (const auto& c : s.components())
        atoms.emplace_back(c.start + t, c.length, c.left_closed, c.right_closed);
    return SimpleSet::of(atoms);
}

SimpleSet negate(const SimpleSet& s) {
    std::vector<CircleInterval> atoms;
    for (const auto& c : s.components())
        atoms.emplace_back(-(c.start + c.length), c.length, c.right_closed, c.left_closed);
    return SimpleSet::of(atoms);
}

SimpleSet sumset(const SimpleSet& a, const SimpleSet& b) {
    if (a.empty() || b.empty()) return SimpleSet();
    if (a.is_full() || b.is_full()) return SimpleSet::full();
    std::vector<CircleInterval> atoms;
    for (const auto& x : a.components())
        for (const auto& y : b.components()) {
            Rational len = x.length + y.length;
            if (len >= Rational(1)) return SimpleSet::full();
            atoms.emplace_back(x.start + y.start, len,
                               x.left_closed && y.left_closed,
                               x.right_closed && y.right_closed);
        }
    return SimpleSet::of(atoms);
}

SimpleSet dilate(const SimpleSet& s, long n) {
    if (n < 1) throw std::invalid_argument("dilate: n must be >= 1");
    if (s.empty()) return SimpleSet();
    Rational nr(n);
    std::vector<CircleInterval> atoms;
    for (const auto& c : s.components()) {
        Rational len = nr * c.length;
        if (len >= Rational(1)) return SimpleSet::full();
        atoms.emplace_back(nr * c.start, len, c.left_closed, c.right_closed);
    }
    return SimpleSet::of(atoms);
}

SimpleSet preimage_divide(const SimpleSet& s, long k) {
    if (k < 1) throw std::invalid_argument("preimage_divide: k must be >= 1");
    if (s.empty()) return SimpleSet();
    if (s.is_full()) return SimpleSet::full();
    Rational kr(k);
    std::vector<CircleInterval> atoms;
    for (const auto& c : s.components())
        for (long i = 0; i < k; ++i)
            atoms.emplace_back((c.start + Rational(i)) / kr, c.length / kr,
                               c.left_closed, c.right_closed);
    return SimpleSet::of(atoms);
}

CoveringInterval covering_interval(const SimpleSet& s) {
    if (s.empty()) throw std::domain_error("covering_interval: empty set");
    CoveringInterval out;
    if (s.is_full()) {
        out.full_circle = true;
        out.measure = Rational(1);
        return out;
    }
    const auto& c = s.components();
    std::size_t m = c.size();
    bool found = false;
    Rational best_len(0), best_start(0);
    std::size_t best_next = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Rational gap_start = c[i].end();
        Rational gap_len = (c[(i + 1) % m].start - gap_start).mod1();
        if (m == 1) gap_len = Rational(1) - c[0].length;
        if (gap_len == Rational(0)) continue;  // shared endpoint, no interior
        if (!found || gap_len > best_len || (gap_len == best_len && gap_start < best_start)) {
            found = true;
            best_len = gap_len;
            best_start = gap_start;
            best_next = (i + 1) % m;
        }
    }
    if (!found) {  // complement has no interior
        out.full_circle = true;
        out.measure = Rational(1);
        return out;
    }
    out.interval = CircleInterval(c[best_next].start, Rational(1) - best_len, true, true);
    out.measure = out.interval.length;
    return out;
}

Rational n_diameter(const SimpleSet& s, long n) {
    return covering_interval(dilate(s, n)).measure;
}

Rational pick_point(const CircleInterval& iv) {
    if (iv.is_empty()) throw std::domain_error("pick_point: empty interval");
    if (iv.left_closed) return iv.start;
    if (iv.right_closed) return iv.end();
    return (iv.start + iv.length / Rational(2)).mod1();
}

Rational pick_point(const SimpleSet& s) {
    if (s.empty()) throw std::domain_error("pick_point: empty set");
    return pick_point(s.components().front());
}

namespace {
std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}
}  // namespace

SimpleSet parse_circle_set(const std::string& text, std::vector<std::string>* warnings) {
    std::string body = trim(text);
    if (body == "T") return SimpleSet::full();
    if (body == "empty") return SimpleSet();
    if (body.empty()) throw std::invalid_argument("set literal: empty input");

    std::vector<CircleInterval> atoms;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t semi = body.find(';', pos);
        std::string tok = trim(semi == std::string::npos ? body.substr(pos)
                                                         : body.substr(pos, semi - pos));
        pos = (semi == std::string::npos) ? body.size() + 1 : semi + 1;
        if (tok.empty()) throw std::invalid_argument("set literal: empty interval token");
        if (tok.size() < 5 || (tok.front() != '[' && tok.front() != '(') ||
            (tok.back() != ']' && tok.back() != ')'))
            throw std::invalid_argument("set literal: malformed interval '" + tok + "'");
        bool lc = tok.front() == '[';
        bool rc = tok.back() == ']';
        std::string inner = tok.substr(1, tok.size() - 2);
        std::size_t comma = inner.find(',');
        if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
            throw std::invalid_argument("set literal: expected one comma in '" + tok + "'");
        Rational raw_a = Rational::parse(inner.substr(0, comma));
        Rational raw_b = Rational::parse(inner.substr(comma + 1));

        if (warnings) {
            if (raw_a < Rational(0) || raw_a >= Rational(1))
                warnings->push_back("endpoint " + raw_a.str() + " reduced mod 1 to " + raw_a.mod1().str());
            if (raw_b < Rational(0) || raw_b > Rational(1))
                warnings->push_back("endpoint " + raw_b.str() + " reduced mod 1 to " + raw_b.mod1().str());
        }

        Rational diff = raw_b - raw_a;
        if (diff >= Rational(1)) {  // covers the whole circle
            atoms.push_back(CircleInterval::full());
            continue;
        }
        if (raw_a == raw_b) {
            if (lc && rc) atoms.push_back(CircleInterval::point(raw_a));
            continue;  // degenerate open interval: empty
        }
        Rational a = raw_a.mod1(), b = raw_b.mod1();
        Rational len = (b > a) ? b - a : b + Rational(1) - a;
        atoms.emplace_back(a, len, lc, rc);
    }
    return SimpleSet::of(atoms);
}

std::string to_literal(const CircleInterval& iv) {
    if (iv.is_empty()) return "empty";
    if (iv.is_full()) return "T";
    Rational b = iv.start + iv.length;
    if (b > Rational(1)) b -= Rational(1);
    std::string s;
    s += iv.left_closed ? '[' : '(';
    s += iv.start.str();
    s += ',';
    s += b.str();
    s += iv.right_closed ? ']' : ')';
    return s;
}

std::string to_literal(const SimpleSet& s) {
    if (s.empty()) return "empty";
    if (s.is_full()) return "T";
    std::string out;
    for (std::size_t i = 0; i < s.components().size(); ++i) {
        if (i) out += ';';
        out += to_literal(s.components()[i]);
    }
    return out;
}

}  // namespace tsl
