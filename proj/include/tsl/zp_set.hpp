#pragma once
// Subsets of Z_p (p prime) as packed bitsets: exact sumsets (shift-OR for
// sparse operands, FFT boolean convolution for dense ones), dilations, cyclic
// covering intervals, Fourier-coefficient magnitudes with their interval-count
// decay bounds, and discretization of circle sets onto the 1/p grid.

#include "tsl/circle_set.hpp"
#include "tsl/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tsl {

bool is_prime(long n);

class ZpSet {
  public:
    explicit ZpSet(long p);  // empty set mod p; validates primality
    static ZpSet of(long p, const std::vector<long>& elems);
    static ZpSet full(long p);
    static ZpSet from_words(long p, std::vector<std::uint64_t> w);

    long modulus() const { return p_; }
    long size() const;
    bool empty() const { return size() == 0; }
    bool is_full() const { return size() == p_; }
    bool test(long j) const;
    void set(long j);
    void reset(long j);
    std::vector<long> elements() const;
    // maximal cyclic runs of set bits as (start, length); 0 for the empty set,
    // 1 for all of Z_p
    std::vector<std::pair<long, long>> runs() const;
    long interval_count() const { return static_cast<long>(runs().size()); }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const ZpSet& o) const { return p_ == o.p_ && words_ == o.words_; }
    bool operator!=(const ZpSet& o) const { return !(*this == o); }

  private:
    long p_;
    std::vector<std::uint64_t> words_;
};

// exact {a+b mod p}; picks shift-OR or FFT convolution by operand size
ZpSet sumset_zp(const ZpSet& a, const ZpSet& b);
ZpSet sumset_zp_shift(const ZpSet& a, const ZpSet& b);  // always shift-OR
ZpSet sumset_zp_fft(const ZpSet& a, const ZpSet& b);    // always convolution

ZpSet dilate_zp(const ZpSet& a, long n);  // n not divisible by p
ZpSet negate_zp(const ZpSet& a);
ZpSet complement_zp(const ZpSet& a);
ZpSet translate_zp(const ZpSet& a, long t);

// absolute value of the representative of s in (-p/2, p/2)
long abs_p(long s, long p);

struct ZpCover {
    bool full = false;
    long start = 0;
    long len = 0;
};

// smallest cyclic interval of consecutive residues containing B (complement
// of the largest cyclic gap; ties broken by smallest interval start)
ZpCover min_covering_interval_zp(const ZpSet& b);

// len(min cover of n*B)/p, or 1 when n*B is all of Z_p
Rational n_diameter_zp(const ZpSet& b, long n);

// length of the longest cyclic run of consecutive residues in B (p when full)
long max_cyclic_run(const ZpSet& b);

// |(1/p) sum_{j in B} e^{2 pi i s j / p}|, evaluated per cyclic run via the
// geometric-series closed form (all angles reduced exactly mod 2p first)
double fourier_mag(const ZpSet& b, long s);

struct FourierReport {
    long s = 0;
    double magnitude = 0.0;
    double bound = 0.0;  // m / (2 |s|_p)
    bool satisfied = true;
};

// evaluates the decay bound |1^_B(s)| <= m/(2|s|_p) for every s != 0
std::vector<FourierReport> check_fourier_decay(const ZpSet& b);
bool fourier_decay_ok(const ZpSet& b);

struct FourierLower {
    double lhs = 0.0;  // |1^_B(n)|
    double rhs = 0.0;  // (|B| - (1-2/pi)|I|)/p with I the minimal cover of n*B
    bool satisfied = false;
    long cover_len = 0;
};

// lower bound for the n-th coefficient when n*B fits in a short interval;
// requires |I| < p/2 (the bound can genuinely fail outside that regime)
FourierLower check_fourier_lower(const ZpSet& b, long n);

struct DilationFreqBound {
    long lhs = 0;      // |n|_p
    double rhs = 0.0;  // m / (2 (beta - (1-2/pi) D_n))
    bool satisfied = false;
    Rational dn;       // D_n(B)
};

// bound on the dilation frequency: |n|_p <= m/(2(beta - (1-2/pi) D_n(B)))
// under D_n(B) < min(1/2, beta/(1-2/pi)), beta = |B|/p
DilationFreqBound check_dilation_freq_bound(const ZpSet& b, long n);

// bit j set iff j/p lies in S (exact membership, closure-aware)
ZpSet discretize(const SimpleSet& s, long p);

// text forms "p:{j1,j2,...}" and "p:#hex" (bitset as a hex integer)
ZpSet parse_zp_set(const std::string& text);
std::string to_text(const ZpSet& s);
std::string to_hex_text(const ZpSet& s);

}  // namespace tsl
