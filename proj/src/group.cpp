#include "padic/group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padic {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

GroupParams::GroupParams(int p_, int N_, int M_) : p(p_), N(N_), M(M_) {
    if (!is_prime(p)) throw std::invalid_argument("GroupParams: p = " + std::to_string(p) + " is not prime");
    if (N < 1) throw std::invalid_argument("GroupParams: N must be >= 1");
    if (M < 1) throw std::invalid_argument("GroupParams: M must be >= 1");
}

Word Word::of(std::vector<std::pair<int, int>> entries) {
    std::sort(entries.begin(), entries.end());
    Word w;
    for (auto& [idx, d] : entries) {
        if (d == 0) continue;
        if (!w.entries_.empty() && w.entries_.back().first == idx)
            throw std::invalid_argument("Word::of: duplicate index " + std::to_string(idx));
        w.entries_.emplace_back(idx, d);
    }
    return w;
}

Word Word::single(int n, int a) {
    Word w;
    if (a != 0) w.entries_.emplace_back(n, a);
    return w;
}

int Word::digit(int index) const {
    for (auto& [idx, d] : entries_)
        if (idx == index) return d;
    return 0;
}

int Word::lowest_index() const {
    if (entries_.empty()) throw std::logic_error("Word::lowest_index on empty word");
    return entries_.front().first;
}

int Word::highest_index() const {
    if (entries_.empty()) throw std::logic_error("Word::highest_index on empty word");
    return entries_.back().first;
}

bool Word::supported_at_or_above(int n) const {
    return entries_.empty() || entries_.front().first >= n;
}

Word Word::truncate_above(int n) const {
    Word w;
    for (auto& e : entries_)
        if (e.first < n) w.entries_.push_back(e);
    return w;
}

Word Word::truncate_below(int n) const {
    Word w;
    for (auto& e : entries_)
        if (e.first >= n) w.entries_.push_back(e);
    return w;
}

Word Word::shifted(int k) const {
    Word w;
    w.entries_ = entries_;
    for (auto& e : w.entries_) e.first += k;
    return w;
}

bool monna_less(const GroupElement& a, const GroupElement& b) {
    // Merge-scan ascending; the first differing index decides and the lower
    // index dominates lambda.
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        int na = (ia != ea) ? ia->first : std::numeric_limits<int>::max();
        int nb = (ib != eb) ? ib->first : std::numeric_limits<int>::max();
        if (na < nb) return false;  // a has an extra low digit -> larger
        if (nb < na) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

bool monna_dual_less(const CharacterWord& a, const CharacterWord& b) {
    auto ia = a.entries().rbegin(), ea = a.entries().rend();
    auto ib = b.entries().rbegin(), eb = b.entries().rend();
    while (ia != ea || ib != eb) {
        int na = (ia != ea) ? ia->first : std::numeric_limits<int>::min();
        int nb = (ib != eb) ? ib->first : std::numeric_limits<int>::min();
        if (na > nb) return false;  // a has an extra high exponent -> larger
        if (nb > na) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

double PadicFraction::approx(int p) const {
    return static_cast<double>(num) / std::pow(static_cast<double>(p), exp);
}

PadicFraction monna(int p, const GroupElement& a) {
    // lambda(g) = sum a_n p^{-n-1} = num / p^exp with exp = max(0, max_n + 1).
    int e = 0;
    for (auto& [n, d] : a.entries()) e = std::max(e, n + 1);
    long long num = 0;
    for (auto& [n, d] : a.entries()) {
        long long pw = 1;
        for (int k = 0; k < e - n - 1; ++k) pw *= p;
        num += d * pw;
    }
    return {num, e};
}

PadicFraction monna_dual(int p, const CharacterWord& w) {
    int e = 0;
    for (auto& [j, d] : w.entries()) e = std::max(e, -j);
    long long num = 0;
    for (auto& [j, d] : w.entries()) {
        long long pw = 1;
        for (int k = 0; k < j + e; ++k) pw *= p;
        num += d * pw;
    }
    return {num, e};
}

GroupElement add(int p, const GroupElement& a, const GroupElement& b) {
    std::vector<std::pair<int, int>> out;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    int carry = 0;
    int pos = std::numeric_limits<int>::min();
    while (ia != ea || ib != eb || carry != 0) {
        int next = std::numeric_limits<int>::max();
        if (ia != ea) next = std::min(next, ia->first);
        if (ib != eb) next = std::min(next, ib->first);
        if (carry != 0) next = std::min(next, pos);
        if (next == std::numeric_limits<int>::max()) break;
        int s = (carry != 0 && pos == next) ? carry : 0;
        if (ia != ea && ia->first == next) s += (ia++)->second;
        if (ib != eb && ib->first == next) s += (ib++)->second;
        carry = s / p;
        pos = next + 1;
        if (s % p != 0) out.emplace_back(next, s % p);
    }
    return Word::of(std::move(out));
}

GroupElement subtract(int p, const GroupElement& a, const GroupElement& b, int floor) {
    std::vector<std::pair<int, int>> out;
    int lo = floor;
    if (!a.empty()) lo = std::min(lo, a.lowest_index());
    if (!b.empty()) lo = std::min(lo, b.lowest_index());
    int borrow = 0;
    for (int n = lo; n < floor; ++n) {
        int s = a.digit(n) - b.digit(n) - borrow;
        borrow = 0;
        if (s < 0) {
            s += p;
            borrow = 1;
        }
        if (s != 0) out.emplace_back(n, s);
    }
    return Word::of(std::move(out));
}

CharacterWord char_mul(int p, const CharacterWord& a, const CharacterWord& b) {
    std::vector<std::pair<int, int>> out;
    auto ia = a.entries().rbegin(), ea = a.entries().rend();
    auto ib = b.entries().rbegin(), eb = b.entries().rend();
    int carry = 0;
    int pos = std::numeric_limits<int>::max();
    while (ia != ea || ib != eb || carry != 0) {
        int next = std::numeric_limits<int>::min();
        if (ia != ea) next = std::max(next, ia->first);
        if (ib != eb) next = std::max(next, ib->first);
        if (carry != 0) next = std::max(next, pos);
        if (next == std::numeric_limits<int>::min()) break;
        int s = (carry != 0 && pos == next) ? carry : 0;
        if (ia != ea && ia->first == next) s += (ia++)->second;
        if (ib != eb && ib->first == next) s += (ib++)->second;
        carry = s / p;
        pos = next - 1;
        if (s % p != 0) out.emplace_back(next, s % p);
    }
    return Word::of(std::move(out));
}

GroupElement dilate_element(const GroupElement& a, int k) { return a.shifted(-k); }

CharacterWord dilate_character(const CharacterWord& w, int k) { return w.shifted(k); }

cplx pair_char(int p, const CharacterWord& w, const GroupElement& a) {
    if (w.empty() || a.empty()) return cplx(1.0, 0.0);
    // Factor (r_j, g_n)^{alpha d} = exp(2 pi i alpha d / p^{j-n+1}) is 1 when
    // j - n + 1 <= 0.  Accumulate num / p^K exactly, num mod p^K.
    int K = 0;
    for (auto& [j, alpha] : w.entries())
        for (auto& [n, d] : a.entries()) K = std::max(K, j - n + 1);
    if (K <= 0) return cplx(1.0, 0.0);
    long long pK = 1;
    for (int i = 0; i < K; ++i) pK *= p;
    long long num = 0;
    for (auto& [j, alpha] : w.entries()) {
        for (auto& [n, d] : a.entries()) {
            int e = j - n + 1;
            if (e <= 0) continue;
            long long pw = 1;
            for (int i = 0; i < K - e; ++i) pw *= p;
            num = (num + (__int128)alpha * d % pK * pw) % pK;
        }
    }
    long double theta = 2.0L * 3.14159265358979323846264338327950288L * (long double)num / (long double)pK;
    return cplx((double)cosl(theta), (double)sinl(theta));
}

std::vector<GroupElement> enumerate_h0(int p, int s) {
    if (s < 1) throw std::invalid_argument("enumerate_h0: s must be >= 1");
    long long count = 1;
    for (int i = 0; i < s; ++i) count *= p;
    std::vector<GroupElement> out;
    out.reserve(count);
    for (long long i = 0; i < count; ++i) out.push_back(h0_element(p, i));
    return out;
}

GroupElement h0_element(int p, long long i) {
    std::vector<std::pair<int, int>> entries;
    int idx = -1;
    while (i > 0) {
        int d = static_cast<int>(i % p);
        if (d != 0) entries.emplace_back(idx, d);
        i /= p;
        --idx;
    }
    return Word::of(std::move(entries));
}

TimeCoset TimeCoset::reduce(int level, const GroupElement& g) {
    return TimeCoset{level, g.truncate_above(level)};
}

DualCoset DualCoset::reduce(int level, const CharacterWord& w) {
    return DualCoset{level, w.truncate_below(level)};
}

bool rademacher_in_annihilator(int k, int level) { return k < level; }

}  // namespace padic
