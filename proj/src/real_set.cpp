#include "tsl/real_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tsl {

RealInterval::RealInterval(Rational lo_, Rational hi_, bool lc, bool rc)
    : lo(std::move(lo_)), hi(std::move(hi_)), left_closed(lc), right_closed(rc) {
    if (lo > hi) throw std::invalid_argument("real interval endpoints out of order");
    if (lo == hi && !(left_closed && right_closed)) *this = RealInterval();  // empty
}

bool RealInterval::contains(const Rational& x) const {
    if (is_empty()) return false;
    if (x < lo || (x == lo && !left_closed)) return false;
    if (x > hi || (x == hi && !right_closed)) return false;
    return true;
}

RealSimpleSet RealSimpleSet::of(std::vector<RealInterval> atoms) {
    std::erase_if(atoms, [](const RealInterval& iv) { return iv.is_empty(); });
    std::sort(atoms.begin(), atoms.end(), [](const RealInterval& a, const RealInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        if (a.left_closed != b.left_closed) return a.left_closed;  // closed first
        return a.hi < b.hi;
    });
    RealSimpleSet out;
    for (const auto& x : atoms) {
        if (!out.comps_.empty()) {
            RealInterval& c = out.comps_.back();
            bool joins = x.lo < c.hi || (x.lo == c.hi && (c.right_closed || x.left_closed));
            if (joins) {
                if (x.hi > c.hi) {
                    c.hi = x.hi;
                    c.right_closed = x.right_closed;
                } else if (x.hi == c.hi) {
                    c.right_closed = c.right_closed || x.right_closed;
                }
                continue;
            }
        }
        out.comps_.push_back(x);
    }
    return out;
}

Rational RealSimpleSet::measure() const {
    Rational m(0);
    for (const auto& c : comps_) m += c.length();
    return m;
}

bool RealSimpleSet::contains(const Rational& x) const {
    for (const auto& c : comps_) {
        if (x < c.lo) return false;
        if (c.contains(x)) return true;
    }
    return false;
}

Rational RealSimpleSet::inf() const {
    if (comps_.empty()) throw std::domain_error("inf of empty set");
    return comps_.front().lo;
}

Rational RealSimpleSet::sup() const {
    if (comps_.empty()) throw std::domain_error("sup of empty set");
    return comps_.back().hi;
}

Rational RealSimpleSet::diameter() const { return sup() - inf(); }

RealSimpleSet unite_R(const RealSimpleSet& a, const RealSimpleSet& b) {
    std::vector<RealInterval> atoms = a.components();
    atoms.insert(atoms.end(), b.components().begin(), b.components().end());
    return RealSimpleSet::of(std::move(atoms));
}

RealSimpleSet intersect_R(const RealSimpleSet& a, const RealSimpleSet& b) {
    std::vector<RealInterval> atoms;
    for (const auto& x : a.components()) {
        for (const auto& y : b.components()) {
            if (x.hi < y.lo || y.hi < x.lo) continue;
            Rational lo = std::max(x.lo, y.lo);
            Rational hi = std::min(x.hi, y.hi);
            if (lo > hi) continue;
            bool lc = (x.lo == y.lo)   ? (x.left_closed && y.left_closed)
                      : (lo == x.lo)   ? x.left_closed
                                       : y.left_closed;
            bool rc = (x.hi == y.hi)   ? (x.right_closed && y.right_closed)
                      : (hi == x.hi)   ? x.right_closed
                                       : y.right_closed;
            if (lo == hi && !(lc && rc)) continue;
            atoms.emplace_back(lo, hi, lc, rc);
        }
    }
    return RealSimpleSet::of(std::move(atoms));
}

RealSimpleSet translate_R(const RealSimpleSet& s, const Rational& t) {
    std::vector<RealInterval> atoms;
    for (const auto& c : s.components())
        atoms.emplace_back(c.lo + t, c.hi + t, c.left_closed, c.right_closed);
    return RealSimpleSet::of(std::move(atoms));
}

RealSimpleSet scale_R(const RealSimpleSet& s, const Rational& c) {
    if (c.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<RealInterval> atoms;
    for (const auto& iv : s.components())
        atoms.emplace_back(c * iv.lo, c * iv.hi, iv.left_closed, iv.right_closed);
    return RealSimpleSet::of(std::move(atoms));
}

RealSimpleSet sumset_R(const RealSimpleSet& a, const RealSimpleSet& b) {
    std::vector<RealInterval> atoms;
    for (const auto& x : a.components())
        for (const auto& y : b.components())
            atoms.emplace_back(x.lo + y.lo, x.hi + y.hi, x.left_closed && y.left_closed,
                               x.right_closed && y.right_closed);
    return RealSimpleSet::of(std::move(atoms));
}

SimpleSet project_mod1(const RealSimpleSet& s) {
    std::vector<CircleInterval> atoms;
    for (const auto& c : s.components()) {
        if (c.length() >= rat(1)) return SimpleSet::full();
        atoms.emplace_back(c.lo.mod1(), c.length(), c.left_closed, c.right_closed);
    }
    return SimpleSet::of(std::move(atoms));
}

Rational sigma2(const RealSimpleSet& s) {
    if (!s.empty() && (s.inf() < rat(0) || s.sup() > rat(1)))
        throw std::domain_error("sigma2 expects a subset of [0,1]");
    auto t2 = sumset_R(s, s);
    return intersect_R(t2, translate_R(t2, rat(-1))).measure();
}

namespace {

bool all_closed(const RealSimpleSet& s) {
    for (const auto& c : s.components())
        if (!c.left_closed || !c.right_closed) return false;
    return true;
}

const Rational kEpsWindow(1, 10000);

}  // namespace

DoublingDecomposition doubling_structure(const RealSimpleSet& s, const Rational& eps) {
    if (eps < rat(0) || eps > kEpsWindow)
        throw std::invalid_argument("doubling_structure: eps outside validity window [0, 1/10000]");
    if (s.empty() || !all_closed(s))
        throw std::invalid_argument("doubling_structure: set must be non-empty with closed components");
    if (s.inf() != rat(0) || s.sup() != rat(1))
        throw std::invalid_argument("doubling_structure: set must be normalized to inf 0, sup 1");
    Rational alpha = s.measure();
    if (!(alpha > rat(0) && Rational(2) * (rat(1) + eps) * alpha < rat(1)))
        throw std::invalid_argument("doubling_structure: measure must lie in (0, 1/(2(1+eps)))");
    Rational ss = sumset_R(s, s).measure();
    if (ss > (Rational(3) + eps) * alpha)
        throw std::invalid_argument("doubling_structure: doubling exceeds 3+eps");

    SimpleSet tilde = project_mod1(s);
    long n_max = static_cast<long>(((rat(1) + eps) / (rat(1) - eps)).floor().get_si());
    std::ostringstream scan;
    for (long n = 1; n <= n_max; ++n) {
        auto cov = covering_interval(dilate(tilde, n));
        if (cov.full_circle) {
            scan << " n=" << n << ":full";
            continue;
        }
        if (cov.measure > (rat(1) + eps) * alpha) {
            scan << " n=" << n << ":" << cov.measure.str();
            continue;
        }

        DoublingDecomposition out;
        out.n = n;
        out.interval = cov.interval;
        out.interval_measure = cov.measure;

        // window around 0: the branch of the n-fold preimage of I that
        // contains 0 (0 lies in S, hence in every preimage), lifted to R
        Rational piece_len = cov.measure / Rational(n);
        bool found = false;
        for (long i = 0; i < n && !found; ++i) {
            Rational bs = ((cov.interval.start + Rational(i)) / Rational(n)).mod1();
            CircleInterval branch(bs, piece_len, true, true);
            if (!branch.contains(rat(0))) continue;
            out.j_lo = (bs == rat(0)) ? rat(0) : bs - rat(1);
            out.j_hi = out.j_lo + piece_len;
            found = true;
        }
        if (!found) throw std::logic_error("doubling_structure: no preimage branch contains 0");

        RealSimpleSet reassembled;
        for (long i = 0; i <= n; ++i) {
            Rational shift(-i, n);
            Rational lo = (i == 0) ? rat(0) : out.j_lo;
            Rational hi = (i == n) ? rat(0) : out.j_hi;
            auto window = RealSimpleSet::interval(RealInterval(lo, hi, true, true));
            auto piece = intersect_R(translate_R(s, shift), window);
            out.alphas.push_back(piece.measure());
            reassembled = unite_R(reassembled, translate_R(piece, -shift));
            out.pieces.push_back(std::move(piece));
        }
        if (reassembled != s)
            throw std::logic_error("doubling_structure: decomposition does not reassemble the set");
        if (out.alphas.front() + out.alphas.back() > (rat(1) + eps) * alpha / Rational(n))
            throw std::logic_error("doubling_structure: end-piece accounting violated");
        out.d0 = out.pieces.front().empty() ? rat(0) : out.pieces.front().diameter();
        out.dn = out.pieces.back().empty() ? rat(0) : out.pieces.back().diameter();
        return out;
    }
    throw std::runtime_error("doubling_structure: no n admitted a short covering interval;" +
                             scan.str());
}

namespace {

struct EgmPick {
    RealInterval interval;  // in normalized coordinates
    std::string branch;
};

// the delta > alpha case: S mod 1 must fit in a closed interval of measure
// exactly alpha; split that interval at the 0/1 seam and keep the longer part
EgmPick egm_large_delta(const RealSimpleSet& s, const Rational& alpha) {
    auto cov = covering_interval(project_mod1(s));
    if (cov.full_circle) {
        if (alpha == rat(1)) return {RealInterval(rat(0), rat(1), true, true), "single-cover"};
        throw std::logic_error("egm_interval: branch exhaustion (projection admits no short cover)");
    }
    if (cov.measure > alpha)
        throw std::logic_error("egm_interval: branch exhaustion (cover exceeds the set measure)");
    const CircleInterval& it = cov.interval;
    Rational end = it.start + cov.measure;
    if (it.start == rat(0) && end <= rat(1))
        return {RealInterval(rat(0), end, true, true), "single-cover"};
    // the cover passes through the 0/1 seam: pieces [0, end-1] and [start, 1]
    Rational left_len = end - rat(1);
    Rational right_len = rat(1) - it.start;
    if (left_len >= right_len)
        return {RealInterval(rat(0), left_len, true, true), "split-cover"};
    return {RealInterval(it.start, rat(1), true, true), "split-cover"};
}

// the delta <= alpha case: decompose via the doubling structure and locate a
// dense piece, handling the end-piece pair specially
EgmPick egm_small_delta(const RealSimpleSet& s, const Rational& delta, const Rational& alpha) {
    Rational eps_prime = rat(1) - delta / alpha;
    auto dec = doubling_structure(s, eps_prime);
    long n = dec.n;
    Rational target = alpha / Rational(n);

    long pick = -1;
    for (long i = 0; i < n; ++i) {
        Rational tilde_measure = (i == 0) ? dec.alphas.front() + dec.alphas.back() : dec.alphas[i];
        if (tilde_measure >= target) {
            pick = i;
            break;
        }
    }
    if (pick < 0) throw std::logic_error("egm_interval: no piece carries measure alpha/n");

    if (pick != 0) {
        const auto& piece = dec.pieces[pick];
        Rational shift(pick, n);
        return {RealInterval(shift + piece.inf(), shift + piece.sup(), true, true), "dense-piece"};
    }

    // end-piece pair: A_0 near 0, A_n near 1
    Rational a0 = dec.alphas.front(), an = dec.alphas.back();
    Rational half_plus = rat(1, 2) + delta / Rational(2);
    bool dense0 = a0 >= half_plus * dec.d0;
    bool densen = an >= half_plus * dec.dn;
    if (dense0 && densen) {
        if (dec.d0 >= dec.dn) return {RealInterval(rat(0), dec.d0, true, true), "end-piece-left"};
        return {RealInterval(rat(1) - dec.dn, rat(1), true, true), "end-piece-right"};
    }
    if (!densen) return {RealInterval(rat(0), dec.d0, true, true), "end-piece-left"};
    return {RealInterval(rat(1) - dec.dn, rat(1), true, true), "end-piece-right"};
}

}  // namespace

EgmResult egm_interval(const RealSimpleSet& s, const Rational& delta, const Rational& eps) {
    if (eps < rat(0) || eps > kEpsWindow)
        throw std::invalid_argument("egm_interval: eps outside validity window [0, 1/10000]");
    if (s.empty() || !all_closed(s))
        throw std::invalid_argument("egm_interval: set must be non-empty with closed components");
    if (delta <= rat(0)) throw std::invalid_argument("egm_interval: delta must be positive");
    Rational diam = s.diameter();
    if (diam == rat(0)) throw std::invalid_argument("egm_interval: set has zero diameter");
    if (diam > rat(1)) throw std::invalid_argument("egm_interval: diameter exceeds 1");
    Rational alpha = s.measure();
    Rational ss = sumset_R(s, s).measure();
    if (ss > Rational(4) * alpha - delta)
        throw std::invalid_argument("egm_interval: doubling bound 4*lambda(S)-delta violated");
    if (!(alpha < diam / Rational(4) + delta / Rational(2)))
        throw std::invalid_argument("egm_interval: measure bound diam/4 + delta/2 violated");
    if (!(delta > alpha * (rat(1) - eps)))
        throw std::invalid_argument("egm_interval: delta must exceed lambda(S)(1-eps)");

    // normalize to inf 0, sup 1
    Rational base = s.inf();
    RealSimpleSet norm = scale_R(translate_R(s, -base), rat(1) / diam);
    Rational d_norm = delta / diam;
    Rational a_norm = norm.measure();

    EgmPick pick = (d_norm > a_norm) ? egm_large_delta(norm, a_norm)
                                     : egm_small_delta(norm, d_norm, a_norm);

    EgmResult out;
    out.interval = RealInterval(base + diam * pick.interval.lo, base + diam * pick.interval.hi,
                                true, true);
    out.branch = pick.branch;
    out.length = out.interval.length();
    Rational inside = intersect_R(s, RealSimpleSet::interval(out.interval)).measure();

    Rational len_floor = std::min(delta / Rational(4), delta * delta);
    if (out.length < len_floor || inside < (rat(1, 2) + delta / Rational(4)) * out.length)
        throw std::logic_error("egm_interval: branch exhaustion (guarantees failed on re-check)");
    out.density = inside / out.length;
    return out;
}

RealSimpleSet parse_real_set(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty real-set literal");
    if (t == "empty") return RealSimpleSet();
    std::vector<RealInterval> atoms;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t close = t.find_first_of("])", pos);
        if (close == std::string::npos) throw std::invalid_argument("unterminated interval literal");
        std::string part = t.substr(pos, close - pos + 1);
        char open = part.front();
        if (open != '[' && open != '(')
            throw std::invalid_argument("interval literal must start with [ or (");
        std::size_t comma = part.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("interval literal needs a comma");
        Rational lo = Rational::parse(part.substr(1, comma - 1));
        Rational hi = Rational::parse(part.substr(comma + 1, part.size() - comma - 2));
        if (lo > hi) throw std::invalid_argument("real interval endpoints out of order");
        atoms.emplace_back(lo, hi, open == '[', part.back() == ']');
        pos = close + 1;
        if (pos < t.size()) {
            if (t[pos] != ';') throw std::invalid_argument("intervals must be separated by ';'");
            ++pos;
        }
    }
    return RealSimpleSet::of(std::move(atoms));
}

std::string to_literal(const RealInterval& iv) {
    std::string out;
    out += iv.left_closed ? '[' : '(';
    out += iv.lo.str();
    out += ',';
    out += iv.hi.str();
    out += iv.right_closed ? ']' : ')';
    return out;
}

std::string to_literal(const RealSimpleSet& s) {
    if (s.empty()) return "empty";
    std::string out;
    for (std::size_t i = 0; i < s.component_count(); ++i) {
        if (i) out += ';';
        out += to_literal(s.components()[i]);
    }
    return out;
}

}  // namespace tsl
