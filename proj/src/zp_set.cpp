#include "tsl/zp_set.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tsl {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

long words_for(long p) { return (p + 63) / 64; }

long reduce(long j, long p) {
    long r = j % p;
    return r < 0 ? r + p : r;
}

void clear_tail(std::vector<std::uint64_t>& w, long p) {
    long tail = p % 64;
    if (tail) w.back() &= (~std::uint64_t{0}) >> (64 - tail);
}

}  // namespace

ZpSet::ZpSet(long p) : p_(p), words_(words_for(p), 0) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
}

ZpSet ZpSet::of(long p, const std::vector<long>& elems) {
    ZpSet s(p);
    for (long e : elems) s.set(e);
    return s;
}

ZpSet ZpSet::full(long p) {
    ZpSet s(p);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    clear_tail(s.words_, p);
    return s;
}

long ZpSet::size() const {
    long n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

bool ZpSet::test(long j) const {
    j = reduce(j, p_);
    return (words_[j >> 6] >> (j & 63)) & 1;
}

void ZpSet::set(long j) {
    j = reduce(j, p_);
    words_[j >> 6] |= std::uint64_t{1} << (j & 63);
}

void ZpSet::reset(long j) {
    j = reduce(j, p_);
    words_[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
}

std::vector<long> ZpSet::elements() const {
    std::vector<long> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(static_cast<long>(w) * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<long, long>> ZpSet::runs() const {
    std::vector<std::pair<long, long>> out;
    if (empty()) return out;
    if (is_full()) {
        out.emplace_back(0, p_);
        return out;
    }
    // start each run just after a clear bit, scanning cyclically
    long anchor = 0;
    while (test(anchor)) ++anchor;  // exists, set is not full
    long run_start = -1, run_len = 0;
    for (long k = 1; k <= p_; ++k) {
        long j = (anchor + k) % p_;
        if (test(j)) {
            if (run_len == 0) run_start = j;
            ++run_len;
        } else if (run_len) {
            out.emplace_back(run_start, run_len);
            run_len = 0;
        }
    }
    if (run_len) out.emplace_back(run_start, run_len);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// OR of `src` rotated left by `a` (i.e. +a mod p on elements) into `dst`
void or_rotated(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, long a,
                long p) {
    const long W = static_cast<long>(src.size());
    // bit j of the result comes from bit (j - a) mod p of src: shift linearly
    // by a, then fold everything at positions >= p back down by p
    std::vector<std::uint64_t> buf(2 * W + 2, 0);
    long q = a >> 6, r = a & 63;
    for (long i = 0; i < W; ++i) {
        buf[i + q] |= r ? (src[i] << r) : src[i];
        if (r) buf[i + q + 1] |= src[i] >> (64 - r);
    }
    // fold bits at positions >= p down by p
    long qp = p >> 6, rp = p & 63;
    for (long i = 0; i < W; ++i) {
        std::uint64_t low = buf[i];
        std::uint64_t high = rp ? (buf[i + qp] >> rp) | (buf[i + qp + 1] << (64 - rp))
                                : buf[i + qp];
        dst[i] |= low | high;
    }
    clear_tail(dst, p);
}

}  // namespace

ZpSet ZpSet::from_words(long p, std::vector<std::uint64_t> w) {
    ZpSet s(p);
    if (w.size() != s.words_.size()) throw std::invalid_argument("word vector size mismatch");
    s.words_ = std::move(w);
    clear_tail(s.words_, p);
    return s;
}

ZpSet sumset_zp_shift(const ZpSet& a, const ZpSet& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
    const long p = a.modulus();
    const ZpSet& small = a.size() <= b.size() ? a : b;
    const ZpSet& big = a.size() <= b.size() ? b : a;
    if (small.empty()) return ZpSet(p);
    std::vector<std::uint64_t> acc(big.words().size(), 0);
    for (long e : small.elements()) or_rotated(acc, big.words(), e, p);
    return ZpSet::from_words(p, std::move(acc));
}

ZpSet sumset_zp_fft(const ZpSet& a, const ZpSet& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
    const long p = a.modulus();
    ZpSet out(p);
    if (a.empty() || b.empty()) return out;
    long n = 1;
    while (n < 2 * p) n <<= 1;
    double* fa = fftw_alloc_real(n);
    double* fb = fftw_alloc_real(n);
    fftw_complex* ca = fftw_alloc_complex(n / 2 + 1);
    fftw_complex* cb = fftw_alloc_complex(n / 2 + 1);
    std::fill(fa, fa + n, 0.0);
    std::fill(fb, fb + n, 0.0);
    for (long e : a.elements()) fa[e] = 1.0;
    for (long e : b.elements()) fb[e] = 1.0;
    fftw_plan pa = fftw_plan_dft_r2c_1d(static_cast<int>(n), fa, ca, FFTW_ESTIMATE);
    fftw_plan pb = fftw_plan_dft_r2c_1d(static_cast<int>(n), fb, cb, FFTW_ESTIMATE);
    fftw_execute(pa);
    fftw_execute(pb);
    for (long i = 0; i <= n / 2; ++i) {
        double re = ca[i][0] * cb[i][0] - ca[i][1] * cb[i][1];
        double im = ca[i][0] * cb[i][1] + ca[i][1] * cb[i][0];
        ca[i][0] = re;
        ca[i][1] = im;
    }
    fftw_plan pc = fftw_plan_dft_c2r_1d(static_cast<int>(n), ca, fa, FFTW_ESTIMATE);
    fftw_execute(pc);
    // counts are integers; anything above 1/2 after rescaling is a hit
    for (long i = 0; i < 2 * p - 1; ++i) {
        if (fa[i] / n > 0.5) out.set(i >= p ? i - p : i);
    }
    fftw_destroy_plan(pa);
    fftw_destroy_plan(pb);
    fftw_destroy_plan(pc);
    fftw_free(fa);
    fftw_free(fb);
    fftw_free(ca);
    fftw_free(cb);
    return out;
}

ZpSet sumset_zp(const ZpSet& a, const ZpSet& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
    const long p = a.modulus();
    double threshold = 2.0 * std::log2(static_cast<double>(p)) * std::sqrt(static_cast<double>(p));
    if (static_cast<double>(std::min(a.size(), b.size())) > threshold)
        return sumset_zp_fft(a, b);
    return sumset_zp_shift(a, b);
}

ZpSet dilate_zp(const ZpSet& a, long n) {
    const long p = a.modulus();
    long r = reduce(n, p);
    if (r == 0) throw std::invalid_argument("dilation factor divisible by the modulus");
    ZpSet out(p);
    for (long e : a.elements()) out.set((e * r) % p);
    return out;
}

ZpSet negate_zp(const ZpSet& a) {
    ZpSet out(a.modulus());
    for (long e : a.elements()) out.set(e == 0 ? 0 : a.modulus() - e);
    return out;
}

ZpSet complement_zp(const ZpSet& a) {
    ZpSet out = ZpSet::full(a.modulus());
    for (long e : a.elements()) out.reset(e);
    return out;
}

ZpSet translate_zp(const ZpSet& a, long t) {
    ZpSet out(a.modulus());
    for (long e : a.elements()) out.set(e + t);
    return out;
}

long abs_p(long s, long p) {
    long r = reduce(s, p);
    return std::min(r, p - r);
}

ZpCover min_covering_interval_zp(const ZpSet& b) {
    if (b.empty()) throw std::domain_error("covering interval of the empty set");
    if (b.is_full()) return {true, 0, 0};
    auto elems = b.elements();
    const long p = b.modulus();
    long best_gap = -1, best_start = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        long cur = elems[i];
        long next = (i + 1 < elems.size()) ? elems[i + 1] : elems[0] + p;
        long gap = next - cur - 1;
        long start = next % p;  // interval begins just after the gap
        if (gap > best_gap || (gap == best_gap && start < best_start)) {
            best_gap = gap;
            best_start = start;
        }
    }
    return {false, best_start, p - best_gap};
}

Rational n_diameter_zp(const ZpSet& b, long n) {
    auto cover = min_covering_interval_zp(dilate_zp(b, n));
    if (cover.full) return Rational(1);
    return Rational(cover.len, b.modulus());
}

long max_cyclic_run(const ZpSet& b) {
    if (b.is_full()) return b.modulus();
    long best = 0;
    for (const auto& [start, len] : b.runs()) {
        (void)start;
        best = std::max(best, len);
    }
    return best;
}

double fourier_mag(const ZpSet& b, long s) {
    const long p = b.modulus();
    long sr = reduce(s, p);
    if (b.empty()) return 0.0;
    if (sr == 0) return static_cast<double>(b.size()) / static_cast<double>(p);
    if (b.is_full()) return 0.0;
    const double pi = std::numbers::pi;
    double den = std::sin(pi * static_cast<double>(sr) / static_cast<double>(p));
    double re = 0.0, im = 0.0;
    for (auto [a, t] : b.runs()) {
        // sum over the run = e^{i pi s(2a+t-1)/p} * sin(pi s t / p) / sin(pi s / p)
        long mag_arg = (sr * (t % (2 * p))) % (2 * p);
        long ang_arg = (sr % (2 * p)) * ((2 * a + t - 1) % (2 * p)) % (2 * p);
        double amp = std::sin(pi * static_cast<double>(mag_arg) / static_cast<double>(p)) / den;
        double ang = pi * static_cast<double>(ang_arg) / static_cast<double>(p);
        re += amp * std::cos(ang);
        im += amp * std::sin(ang);
    }
    return std::hypot(re, im) / static_cast<double>(p);
}

std::vector<FourierReport> check_fourier_decay(const ZpSet& b) {
    const long p = b.modulus();
    const long m = b.interval_count();
    std::vector<FourierReport> out;
    out.reserve(p - 1);
    for (long s = 1; s < p; ++s) {
        FourierReport r;
        r.s = s;
        // magnitudes at s and p-s agree (conjugate frequencies)
        r.magnitude = (2 * s > p) ? out[p - s - 1].magnitude : fourier_mag(b, s);
        r.bound = static_cast<double>(m) / (2.0 * static_cast<double>(abs_p(s, p)));
        r.satisfied = r.magnitude <= r.bound + 1e-9;
        out.push_back(r);
    }
    return out;
}

bool fourier_decay_ok(const ZpSet& b) {
    for (const auto& r : check_fourier_decay(b))
        if (!r.satisfied) return false;
    return true;
}

FourierLower check_fourier_lower(const ZpSet& b, long n) {
    const long p = b.modulus();
    if (b.empty()) throw std::domain_error("lower bound needs a non-empty set");
    auto cover = min_covering_interval_zp(dilate_zp(b, n));
    long len = cover.full ? p : cover.len;
    if (2 * len >= p)
        throw std::domain_error("covering interval of n*B fills half of Z_p or more");
    FourierLower out;
    out.cover_len = len;
    out.lhs = fourier_mag(b, n);
    out.rhs = (static_cast<double>(b.size()) -
               (1.0 - 2.0 / std::numbers::pi) * static_cast<double>(len)) /
              static_cast<double>(p);
    out.satisfied = out.lhs > out.rhs - 1e-9;
    return out;
}

DilationFreqBound check_dilation_freq_bound(const ZpSet& b, long n) {
    const long p = b.modulus();
    if (b.empty()) throw std::domain_error("dilation-frequency bound needs a non-empty set");
    DilationFreqBound out;
    out.dn = n_diameter_zp(b, n);
    double beta = static_cast<double>(b.size()) / static_cast<double>(p);
    double dn = out.dn.to_double();
    double c = 1.0 - 2.0 / std::numbers::pi;
    if (!(dn < 0.5 && dn < beta / c))
        throw std::domain_error("D_n(B) outside the regime min(1/2, beta/(1-2/pi))");
    out.lhs = abs_p(n, p);
    out.rhs = static_cast<double>(b.interval_count()) / (2.0 * (beta - c * dn));
    out.satisfied = static_cast<double>(out.lhs) <= out.rhs + 1e-9;
    return out;
}

ZpSet discretize(const SimpleSet& s, long p) {
    ZpSet out(p);
    if (s.is_full()) return ZpSet::full(p);
    Rational pr(p);
    for (const auto& c : s.components()) {
        Rational lo = pr * c.start;
        Rational hi = pr * (c.start + c.length);
        BigInt jlo = lo.ceil();
        if (!c.left_closed && Rational(jlo, 1) == lo) jlo += 1;
        BigInt jhi = hi.floor();
        if (!c.right_closed && Rational(jhi, 1) == hi) jhi -= 1;
        for (long j = static_cast<long>(jlo.get_si()); j <= static_cast<long>(jhi.get_si()); ++j)
            out.set(j % p);
    }
    return out;
}

ZpSet parse_zp_set(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    auto colon = t.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("expected 'p:{...}' or 'p:#hex'");
    long p = 0;
    try {
        p = std::stol(t.substr(0, colon));
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid modulus in set literal");
    }
    ZpSet out(p);
    std::string body = t.substr(colon + 1);
    if (body.empty()) throw std::invalid_argument("empty set body");
    if (body.front() == '{') {
        if (body.back() != '}') throw std::invalid_argument("unterminated element list");
        std::string inner = body.substr(1, body.size() - 2);
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("empty element in set literal");
            long v = 0;
            try {
                v = std::stol(item);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid element in set literal");
            }
            if (v < 0 || v >= p) throw std::invalid_argument("element outside [0, p)");
            out.set(v);
        }
        return out;
    }
    if (body.front() == '#') {
        std::string hex = body.substr(1);
        if (hex.empty()) throw std::invalid_argument("empty hex mask");
        long bit = 0;
        for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
            char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
            int v = (ch >= '0' && ch <= '9')   ? ch - '0'
                    : (ch >= 'a' && ch <= 'f') ? ch - 'a' + 10
                                               : -1;
            if (v < 0) throw std::invalid_argument("invalid hex digit in set literal");
            for (int k = 0; k < 4; ++k) {
                if (!((v >> k) & 1)) continue;
                if (bit + k >= p) throw std::invalid_argument("hex mask wider than the modulus");
                out.set(bit + k);
            }
        }
        return out;
    }
    throw std::invalid_argument("set body must start with '{' or '#'");
}

std::string to_text(const ZpSet& s) {
    std::string out = std::to_string(s.modulus()) + ":{";
    bool first = true;
    for (long e : s.elements()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

std::string to_hex_text(const ZpSet& s) {
    static const char* digits = "0123456789abcdef";
    std::string hex;
    bool leading = true;
    for (long i = static_cast<long>(s.words().size()) - 1; i >= 0; --i) {
        for (int nib = 15; nib >= 0; --nib) {
            int v = static_cast<int>((s.words()[i] >> (4 * nib)) & 0xF);
            if (leading && v == 0) continue;
            leading = false;
            hex += digits[v];
        }
    }
    if (hex.empty()) hex = "0";
    return std::to_string(s.modulus()) + ":#" + hex;
}

}  // namespace tsl
