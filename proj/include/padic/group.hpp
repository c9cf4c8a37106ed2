#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padic {

using cplx = std::complex<double>;

/**
 * Parameters of one construction instance on the additive group of Q_p.
 *
 *   p : prime order of every quotient G_n / G_{n+1}
 *   N : support level, supp(phi) lies in G_{-N}
 *   M : constancy level, phi is constant on cosets of G_M
 *
 * The tree algorithm additionally requires M == N; that is enforced by the
 * tree builder, not here.
 */
struct GroupParams {
    int p;
    int N;
    int M;

    GroupParams(int p_, int N_, int M_);

    /// Number of tree levels above the root, H = M + N + 1.
    int height() const { return M + N + 1; }
};

bool is_prime(int n);

/**
 * A finite word of base-p digits attached to integer indices.
 *
 * Used both for group elements g = sum a_n g_n (digit a_n at index n) and for
 * characters chi = prod r_j^{alpha_j} (exponent alpha_j at index j).  Only
 * finitely supported words are representable; every object of the
 * construction (H_0, coset representatives, tree words) is such a word.
 *
 * Canonical form: entries sorted by ascending index, no zero digits.
 */
class Word {
public:
    Word() = default;

    /// Build from (index, digit) pairs; digits are taken mod nothing and
    /// must lie in [0, p) for the p in use (validated by callers).
    static Word of(std::vector<std::pair<int, int>> entries);

    /// Single-entry word: digit a at index n (a == 0 gives the empty word).
    static Word single(int n, int a);

    const std::vector<std::pair<int, int>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    int digit(int index) const;
    int lowest_index() const;   // requires non-empty
    int highest_index() const;  // requires non-empty

    /// True when all digits sit at indices >= n (membership in G_n for
    /// group elements).
    bool supported_at_or_above(int n) const;

    /// Keep only digits with index < n (reduction mod G_n for elements).
    Word truncate_above(int n) const;
    /// Keep only digits with index >= n (reduction mod G_n^bot for words).
    Word truncate_below(int n) const;

    /// Shift all indices by k (A^{-k} on elements, A^k on characters).
    Word shifted(int k) const;

    bool operator==(const Word& o) const { return entries_ == o.entries_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

private:
    std::vector<std::pair<int, int>> entries_;
};

using GroupElement = Word;   // g = sum a_n g_n
using CharacterWord = Word;  // chi = prod r_j^{alpha_j}

/// Monna order for group elements: lambda(a) < lambda(b).
/// lambda(g) = sum a_n p^{-n-1}, so the lowest index dominates.
bool monna_less(const GroupElement& a, const GroupElement& b);

/// Monna order for characters: lambda'(a) < lambda'(b).
/// lambda'(chi) = sum alpha_j p^j, so the highest index dominates.
bool monna_dual_less(const CharacterWord& a, const CharacterWord& b);

/// Exact value of a Monna map as num / p^exp (num >= 0, exp >= 0).
struct PadicFraction {
    long long num;
    int exp;

    double approx(int p) const;
};

/// lambda(g) = sum a_n p^{-n-1}.
PadicFraction monna(int p, const GroupElement& a);

/// lambda'(chi) = sum alpha_j p^j.
PadicFraction monna_dual(int p, const CharacterWord& w);

/// Digitwise addition with carry propagation toward increasing index
/// (p * g_n = g_{n+1}).
GroupElement add(int p, const GroupElement& a, const GroupElement& b);

/**
 * a - b in Q_p, with digits computed exactly at all indices < floor.
 *
 * Negation of a finite word has an infinite upward tail of (p-1)-digits; all
 * consumers evaluate step functions that are constant on G_floor cosets, so
 * the tail is cut at `floor`.
 */
GroupElement subtract(int p, const GroupElement& a, const GroupElement& b, int floor);

/// Character product: exponentwise addition with carries toward decreasing
/// index, since (r_j, g_n)^p = (r_{j-1}, g_n) for all n, i.e. r_j^p = r_{j-1}.
CharacterWord char_mul(int p, const CharacterWord& a, const CharacterWord& b);

/// A^k x: every digit index drops by k.  A is additive because p g_n = g_{n+1}.
GroupElement dilate_element(const GroupElement& a, int k);

/// chi A^k: every exponent index rises by k  (r_n A = r_{n+1}).
CharacterWord dilate_character(const CharacterWord& w, int k);

/**
 * The pairing (chi, g) for finite words, from (r_j, g_n) = e^{2 pi i / p^{j-n+1}}.
 *
 * The phase is accumulated as an exact integer numerator over p^K before a
 * single exp(2 pi i k / p^K) evaluation, keeping unit roots consistent.
 */
cplx pair_char(int p, const CharacterWord& w, const GroupElement& a);

/// All p^s elements of H_0^{(s)} = {a_{-1} g_{-1} + ... + a_{-s} g_{-s}},
/// in increasing Monna order (lambda = 0, 1, ..., p^s - 1).
std::vector<GroupElement> enumerate_h0(int p, int s);

/// The i-th element of H_0 in Monna order (digits of i base p at indices
/// -1, -2, ...).
GroupElement h0_element(int p, long long i);

/**
 * A coset G_level + rep of the time-side chain.  rep is reduced: digits at
 * indices >= level are absent.  Haar measure is p^{-level}.
 */
struct TimeCoset {
    int level;
    GroupElement rep;

    static TimeCoset reduce(int level, const GroupElement& g);
    bool operator==(const TimeCoset& o) const { return level == o.level && rep == o.rep; }
};

/**
 * A coset G_level^bot * rep of the dual chain.  rep is reduced: exponents at
 * indices < level are absent (r_k lies in G_level^bot for k < level).
 * Measure is p^{level}.
 */
struct DualCoset {
    int level;
    CharacterWord rep;

    static DualCoset reduce(int level, const CharacterWord& w);
    bool operator==(const DualCoset& o) const { return level == o.level && rep == o.rep; }
};

/// r_k lies in G_level^bot iff k < level.
bool rademacher_in_annihilator(int k, int level);

}  // namespace padic
